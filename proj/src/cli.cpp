#include "rzr/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "rzr/numeric_verify.hpp"

namespace rzr::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json rat_json(const Rat& r) { return to_string(r); }

json poly_json(const ModPoly& p) {
  json coeffs = json::array();
  for (const Rat& c : p.coeffs()) coeffs.push_back(rat_json(c));
  return coeffs;
}

json entry_json(const ModPoly& p) {
  if (p.is_constant()) return rat_json(p.coeff(0));
  return json{{"k2_coeffs", poly_json(p)}};
}

std::string kind_name(SeriesKind k) { return to_string(k); }

std::string finish(const json& j) { return j.dump(2) + "\n"; }

// ---- basis ----

RunResult cmd_basis(const RunConfig& c) {
  const RelationBasis basis = relation_space(c.m);
  const bool pattern = zero_pattern_check(basis);
  RunResult r;
  if (c.format == OutputFormat::Json) {
    json vectors = json::array(), relations = json::array();
    for (const auto& v : basis.vectors) {
      json row = json::array();
      for (const Int& x : v.t) row.push_back(to_string(x));
      vectors.push_back(row);
      relations.push_back(format_relation(v, c.style));
    }
    r.document = finish({{"m", c.m},
                         {"dim", basis.dim()},
                         {"vectors", vectors},
                         {"relations", relations},
                         {"zero_pattern_ok", pattern}});
  } else {
    std::ostringstream os;
    if (c.format == OutputFormat::Text)
      os << "m = " << c.m << ", dim = " << basis.dim()
         << ", zero pattern " << (pattern ? "ok" : "FAILED") << "\n";
    for (const auto& v : basis.vectors)
      os << (c.format == OutputFormat::Latex ? format_relation_latex(v, c.style)
                                             : format_relation(v, c.style))
         << "\n";
    r.document = os.str();
  }
  r.exit_code = pattern ? 0 : 1;
  return r;
}

// ---- matrix dump ----

RunResult cmd_matrix(const RunConfig& c) {
  if (c.subcommand != "dump") throw UsageError("matrix: expected `dump`");
  const SymbolicTables t = build_tables(c.m);
  const AssembledMatrix a = assemble(c.m, t.aux, t.wt, t.trig);
  RunResult r;
  if (c.format == OutputFormat::Json) {
    json blocks = json::array();
    for (const auto& row : a.blocks) {
      json jr = json::array();
      for (const auto& e : row) jr.push_back(entry_json(e));
      blocks.push_back(jr);
    }
    json doc{{"m", c.m}, {"block_rows", a.block_rows()}, {"cols", a.cols()}, {"blocks", blocks}};
    if (c.scalar) {
      json rows = json::array();
      for (std::size_t i = 0; i < a.scalar_form.rows(); ++i) {
        json jr = json::array();
        for (std::size_t j = 0; j < a.scalar_form.cols(); ++j) jr.push_back(rat_json(a.scalar_form(i, j)));
        rows.push_back(jr);
      }
      doc["scalar"] = {{"labels", a.scalar_row_labels}, {"rows", rows}};
    }
    r.document = finish(doc);
    return r;
  }
  std::ostringstream os;
  os << "block form, " << a.block_rows() << " x " << a.cols() << "\n";
  for (std::size_t i = 0; i < a.block_rows(); ++i) {
    os << "row " << i + 1 << ":";
    for (const auto& e : a.blocks[i]) os << " [" << e.to_string() << "]";
    os << "\n";
  }
  if (c.scalar) {
    os << "scalar form, " << a.scalar_form.rows() << " x " << a.scalar_form.cols() << "\n";
    for (std::size_t i = 0; i < a.scalar_form.rows(); ++i) {
      os << a.scalar_row_labels[i] << ":";
      for (std::size_t j = 0; j < a.scalar_form.cols(); ++j) os << " " << to_string(a.scalar_form(i, j));
      os << "\n";
    }
  }
  r.document = os.str();
  return r;
}

// ---- series / aux tables ----

RunResult cmd_series(const RunConfig& c) {
  const int n = c.m;
  const LaurentCoeffTable lt = build_laurent_table(n);
  const TrigCoeffTable tt = build_trig_table(n);
  RunResult r;
  if (c.format == OutputFormat::Json) {
    json doc{{"max_j", n}};
    for (const char* name : {"c", "d", "e", "f"}) {
      json col = json::array();
      for (int j = 1; j <= n; ++j) {
        const ModPoly& p = name[0] == 'c' ? lt.c(j) : name[0] == 'd' ? lt.d(j) : name[0] == 'e' ? lt.e(j) : lt.f(j);
        col.push_back(poly_json(p));
      }
      doc[name] = col;
    }
    json a = json::array(), b = json::array();
    for (int j = 0; j <= n; ++j) {
      a.push_back(rat_json(tt.a(j)));
      b.push_back(rat_json(tt.b(j)));
    }
    doc["a"] = a;
    doc["b"] = b;
    r.document = finish(doc);
    return r;
  }
  std::ostringstream os;
  for (int j = 1; j <= n; ++j) {
    os << "c_" << j << " = " << lt.c(j).to_string() << "\n";
    os << "d_" << j << " = " << lt.d(j).to_string() << "\n";
    os << "e_" << j << " = " << lt.e(j).to_string() << "\n";
    os << "f_" << j << " = " << lt.f(j).to_string() << "\n";
  }
  for (int j = 0; j <= n; ++j)
    os << "a_" << j << " = " << to_string(tt.a(j)) << ", b_" << j << " = " << to_string(tt.b(j)) << "\n";
  r.document = os.str();
  return r;
}

RunResult cmd_aux(const RunConfig& c) {
  const int n = c.m;
  const AuxPolySet aux = build_aux(build_laurent_table(n));
  RunResult r;
  if (c.format == OutputFormat::Json) {
    json rows = json::array();
    for (int j = 1; j <= n; ++j) {
      json kernel = json::array();
      for (const Int& x : xi_kernel(aux, j)) kernel.push_back(to_string(x));
      rows.push_back({{"j", j},
                      {"theta_minus", poly_json(aux.theta_minus(j))},
                      {"theta_plus", poly_json(aux.theta_plus(j))},
                      {"lambda_minus", poly_json(aux.lambda_minus(j))},
                      {"lambda_plus", poly_json(aux.lambda_plus(j))},
                      {"xi_kernel", kernel}});
    }
    r.document = finish({{"max_j", n}, {"aux", rows}});
    return r;
  }
  std::ostringstream os;
  for (int j = 1; j <= n; ++j) {
    os << "Theta-_" << j << " = " << aux.theta_minus(j).to_string() << "\n";
    os << "Theta+_" << j << " = " << aux.theta_plus(j).to_string() << "\n";
    os << "Lambda-_" << j << " = " << aux.lambda_minus(j).to_string() << "\n";
    os << "Lambda+_" << j << " = " << aux.lambda_plus(j).to_string() << "\n";
    os << "kernel_" << j << " = (";
    const IntVector k = xi_kernel(aux, j);
    for (std::size_t i = 0; i < k.size(); ++i) os << (i ? ", " : "") << to_string(k[i]);
    os << ")\n";
  }
  r.document = os.str();
  return r;
}

// ---- numeric ----

std::string sci(const Real& x) { return x.is_zero() ? "0" : x.to_string(6); }

RunResult cmd_verify(const RunConfig& c) {
  const SequenceSpec spec = SequenceSpec::parse(c.sequence);
  const RelationBasis basis = relation_space(c.m);
  const auto residuals = relation_residuals(basis, spec, c.precision);
  const long g = guard_digits(sum_series(spec, 1, SeriesKind::Phi, c.precision).terms_used);
  const mpfr_prec_t prec = bits_for_digits(c.precision + g);
  const Real tol = pow10(-c.precision + g, prec);
  bool ok = true;
  json rows = json::array();
  std::ostringstream os;
  os << "sequence " << spec.name << ", m = " << c.m << ", precision " << c.precision
     << ", tolerance 1e" << (-c.precision + g) << "\n";
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    const bool pass = residuals[i].absolute < tol;
    ok = ok && pass;
    const RelationVector v{c.m, residuals[i].t};
    rows.push_back({{"relation", format_relation(v, c.style)},
                    {"residual", sci(residuals[i].absolute)},
                    {"normalized_residual", sci(residuals[i].normalized)},
                    {"pass", pass}});
    os << (pass ? "PASS " : "FAIL ") << sci(residuals[i].absolute) << "  " << format_relation(v, c.style)
       << "\n";
  }
  os << (ok ? "all residuals pass" : "some residuals FAIL") << "\n";
  RunResult r;
  r.exit_code = ok ? 0 : 1;
  r.document = c.format == OutputFormat::Json
                   ? finish({{"m", c.m},
                             {"sequence", spec.name},
                             {"precision", c.precision},
                             {"tolerance_exponent", -c.precision + g},
                             {"residuals", rows},
                             {"pass", ok}})
                   : os.str();
  return r;
}

RunResult cmd_check(const RunConfig& c) {
  const long p = c.precision;
  const long g = guard_digits(100);
  const mpfr_prec_t prec = bits_for_digits(p + g);
  const Real tol = pow10(-p + g, prec);
  json rows = json::array();
  std::ostringstream os;
  bool ok = true;
  auto record = [&](const std::string& label, const Real& residual) {
    const bool pass = residual < tol;
    ok = ok && pass;
    rows.push_back({{"case", label}, {"residual", sci(residual)}, {"pass", pass}});
    os << (pass ? "PASS " : "FAIL ") << sci(residual) << "  " << label << "\n";
  };

  if (c.subcommand == "lemma54") {
    record("k2=0 z=0.7", check_lemma54(Complex(Real("0.7", prec)), Real(0L, prec), p));
    record("k2=1/2 z=0.3+0.2i",
           check_lemma54(Complex(Real("0.3", prec), Real("0.2", prec)), Real(Rat(1, 2), prec), p));
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> re(100, 1000), im(-300, 300), kk(0, 900);
    auto milli = [](int v) {
      const int a = v < 0 ? -v : v;
      return std::string(v < 0 ? "-" : "") + std::to_string(a / 1000) + "." +
             std::to_string(1000 + a % 1000).substr(1);
    };
    for (int i = 0; i < 18; ++i) {
      const int x = re(rng), y = im(rng), k2 = i == 0 ? 0 : kk(rng);
      record("k2=" + milli(k2) + " z=" + milli(x) + (y < 0 ? "" : "+") + milli(y) + "i",
             check_lemma54(Complex(Real(make_rat(x, 1000), prec), Real(make_rat(y, 1000), prec)),
                           Real(make_rat(k2, 1000), prec), p));
    }
  } else if (c.subcommand == "fib8") {
    record("sum 1/F_n^8 identity", check_fib8(p));
  } else if (c.subcommand == "closedforms") {
    const SequenceSpec spec = SequenceSpec::parse(c.sequence);
    const SymbolicTables tables = build_tables(c.m);
    const EllipticContext ctx = elliptic_for(spec, p);
    record("nome round trip", ctx.roundtrip_residual);
    const auto sums = sum_all_series(spec, c.m, p);
    const auto via_forms = eval_via_linear_forms(c.m, ctx, tables);
    for (int s = 1; s <= c.m; ++s)
      for (SeriesKind k : kAllSeriesKinds) {
        const std::size_t i = static_cast<std::size_t>(4 * (s - 1) + static_cast<int>(k));
        const Real closed = eval_closed_form(s, k, ctx, tables);
        record(kind_name(k) + "_" + std::to_string(2 * s) + " closed form vs sum", abs(closed - sums[i].value));
        record(kind_name(k) + "_" + std::to_string(2 * s) + " matrix columns vs closed form",
               abs(via_forms[i] - closed));
      }
  } else {
    throw UsageError("check: expected lemma54, fib8 or closedforms");
  }
  os << (ok ? "all checks pass" : "some checks FAIL") << "\n";
  RunResult r;
  r.exit_code = ok ? 0 : 1;
  r.document = c.format == OutputFormat::Json
                   ? finish({{"check", c.subcommand},
                             {"precision", p},
                             {"tolerance_exponent", -p + g},
                             {"cases", rows},
                             {"pass", ok}})
                   : os.str();
  return r;
}

}  // namespace

RunResult run(const RunConfig& config) {
  if (config.m < 1) return {2, "", "m must be a positive integer\n"};
  if (config.precision < 10) return {2, "", "precision must be at least 10 digits\n"};
  try {
    switch (config.command) {
      case Command::Basis: return cmd_basis(config);
      case Command::Matrix: return cmd_matrix(config);
      case Command::Series: return cmd_series(config);
      case Command::Aux: return cmd_aux(config);
      case Command::Verify: return cmd_verify(config);
      case Command::Check: return cmd_check(config);
    }
  } catch (const UsageError& e) {
    return {2, "", std::string(e.what()) + "\n"};
  } catch (const std::invalid_argument& e) {
    return {2, "", std::string(e.what()) + "\n"};
  } catch (const std::logic_error& e) {
    return {1, "", std::string(e.what()) + "\n"};
  }
  return {2, "", "unknown command\n"};
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Rational relations among reciprocal sums of recurrence sequences"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "text", style = "phi-psi";

  auto common = [&](CLI::App* sub, bool numeric) {
    sub->add_option("-m", config.m, "Number of groups (or table depth)");
    sub->add_option("--format", format, "json, text or latex")
        ->check(CLI::IsMember({"json", "text", "latex"}));
    sub->add_option("--out", config.out_path, "Write the document to this file");
    if (numeric) {
      sub->add_option("--precision", config.precision, "Decimal digits");
      sub->add_option("--sequence", config.sequence, "fibonacci, pell, trace=<int> or beta=<decimal>");
    }
    sub->add_option("--style", style, "phi-psi or zeta-fibonacci")
        ->check(CLI::IsMember({"phi-psi", "zeta-fibonacci"}));
  };

  auto* basis = app.add_subcommand("basis", "Canonical basis of the relation space");
  common(basis, false);
  auto* matrix = app.add_subcommand("matrix", "Relation matrix");
  matrix->add_option("action", config.subcommand, "dump")->required()->check(CLI::IsMember({"dump"}));
  matrix->add_flag("--scalar", config.scalar, "Also emit the k^2-coefficient expansion");
  common(matrix, false);
  auto* series = app.add_subcommand("series", "Laurent and trigonometric coefficient tables");
  common(series, false);
  auto* aux = app.add_subcommand("aux", "Auxiliary polynomials and their relation kernels");
  common(aux, false);
  auto* verify = app.add_subcommand("verify", "Numeric residuals of the basis relations");
  common(verify, true);
  auto* check = app.add_subcommand("check", "Numeric certifications");
  check->add_option("which", config.subcommand, "lemma54, fib8 or closedforms")
      ->required()
      ->check(CLI::IsMember({"lemma54", "fib8", "closedforms"}));
  common(check, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*basis) config.command = Command::Basis;
  else if (*matrix) config.command = Command::Matrix;
  else if (*series) config.command = Command::Series;
  else if (*aux) config.command = Command::Aux;
  else if (*verify) config.command = Command::Verify;
  else config.command = Command::Check;
  config.format = format == "json" ? OutputFormat::Json : format == "latex" ? OutputFormat::Latex : OutputFormat::Text;
  config.style = style == "zeta-fibonacci" ? RelationStyle::ZetaFibonacci : RelationStyle::PhiPsi;

  const RunResult r = run(config);
  if (!r.diagnostics.empty()) std::cerr << r.diagnostics;
  if (config.out_path.empty()) {
    std::cout << r.document;
  } else {
    std::ofstream out(config.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open " << config.out_path << "\n";
      return 2;
    }
    out << r.document;
  }
  return r.exit_code;
}

}  // namespace rzr::cli
