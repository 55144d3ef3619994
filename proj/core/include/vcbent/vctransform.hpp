#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "vcbent/cyclotomic.hpp"
#include "vcbent/expected.hpp"
#include "vcbent/matrix.hpp"
#include "vcbent/mvfunction.hpp"

namespace vcbent {

/// Default guard on p^n (3^10).
inline constexpr std::size_t kDefaultSizeLimit = 59049;

class SizeLimitExceeded : public std::length_error {
 public:
  SizeLimitExceeded(std::size_t size, std::size_t limit);
};

/// Throws SizeLimitExceeded when p^n > limit; returns p^n otherwise.
std::size_t guarded_size(int p, int n, std::size_t limit = kDefaultSizeLimit);

/// C(n) = C(1)^(x)n with C(1)_{jk} = xi^(jk mod p).
Matrix<CycInt> build_c(int p, int n, std::size_t limit = kDefaultSizeLimit);

/// Digitwise scalar product <a.b> mod p.
int digit_dot(std::size_t a, std::size_t b, int p, int n);

/// S = C*(n) F by the defining double sum. Quadratic; the reference oracle.
Spectrum forward(int p, int n, const std::vector<CycInt>& v, std::size_t limit = kDefaultSizeLimit);
Spectrum forward(const SignVector& f, std::size_t limit = kDefaultSizeLimit);

/// C(n) v (conjugate = false) or C*(n) v (conjugate = true) by radix-p
/// butterflies, O(n p^(n+1)) rotations and additions.
std::vector<CycInt> apply_c_fast(int p, int n, const std::vector<CycInt>& v, bool conjugate,
                                 std::size_t limit = kDefaultSizeLimit);

/// Same result as forward, computed with apply_c_fast.
Spectrum forward_fast(int p, int n, const std::vector<CycInt>& v, std::size_t limit = kDefaultSizeLimit);
Spectrum forward_fast(const SignVector& f, std::size_t limit = kDefaultSizeLimit);

struct InverseNotDivisible {
  std::size_t index = 0;
  NotDivisible cause;
};
/// F = p^-n C(n) S, exact; fails when some coordinate is not divisible.
Expected<std::vector<CycInt>, InverseNotDivisible> inverse(const Spectrum& s, std::size_t limit = kDefaultSizeLimit);

/// |S(w)|^2 == p^n for every w.
bool is_flat(const Spectrum& s);

}  // namespace vcbent
