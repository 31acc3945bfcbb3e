#include "rzr/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace rzr {

namespace {

std::mutex memo_mutex;
std::vector<Rat> memo{Rat(1), make_rat(-1, 2)};  // B_0, B_1

// Extends memo through index n using sum_{k=0}^{n} C(n+1, k) B_k = 0.
void extend_to(int n) {
  Int binom;
  for (int i = static_cast<int>(memo.size()); i <= n; ++i) {
    if (i % 2 == 1) {
      memo.emplace_back(0);
      continue;
    }
    Rat acc = 0;
    for (int k = 0; k < i; ++k) {
      if (k > 1 && k % 2 == 1) continue;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(i + 1), static_cast<unsigned long>(k));
      acc += Rat(binom) * memo[static_cast<std::size_t>(k)];
    }
    memo.push_back(-acc / (i + 1));
  }
}

}  // namespace

Rat bernoulli(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("bernoulli: index must be even and >= 2, got " + std::to_string(n));
  std::lock_guard lock(memo_mutex);
  extend_to(n);
  return memo[static_cast<std::size_t>(n)];
}

}  // namespace rzr
