#pragma once

#include "rzr/rational.hpp"

namespace rzr {

/// Bernoulli number B_n for even n >= 2 (B_2 = 1/6, B_4 = -1/30, ...).
/// Values are memoized in a process-wide table guarded by a mutex.
/// Throws std::invalid_argument for odd or nonpositive n.
Rat bernoulli(int n);

}  // namespace rzr
