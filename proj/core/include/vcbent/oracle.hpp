#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

#include "vcbent/mvfunction.hpp"

namespace vcbent {

/// Exhaustive scans are limited to p^(p^n) <= 2^20 functions.
inline constexpr std::size_t kOracleFunctionLimit = std::size_t{1} << 20;

/// Every bent f over all p^(p^n) value vectors, sorted.
std::vector<MvFunction> all_bent(int p = 3, int n = 2, int jobs = 1);

/// Bent ternary functions of one variable (|S(w)|^2 = 3 everywhere).
std::vector<MvFunction> all_bent_1place();

struct CertifyReport {
  std::vector<MvFunction> only_generated;
  std::vector<MvFunction> only_reference;
  bool pass() const noexcept { return only_generated.empty() && only_reference.empty(); }
  std::size_t difference() const noexcept { return only_generated.size() + only_reference.size(); }
};

CertifyReport certify(const std::set<MvFunction>& generated, const std::set<MvFunction>& reference);

}  // namespace vcbent
