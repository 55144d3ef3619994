#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in the cyclotomic integers Z[xi_p], p in {3,4,5,6}.
 *
 * Elements are stored in the power basis {1, xi, ..., xi^(d-1)} reduced modulo
 * the p-th cyclotomic polynomial, d = deg(Phi_p):
 *
 *   Phi_3 = x^2 + x + 1          d = 2
 *   Phi_4 = x^2 + 1              d = 2
 *   Phi_5 = x^4 + x^3 + x^2 + x + 1   d = 4
 *   Phi_6 = x^2 - x + 1          d = 2
 *
 * The reduced form is unique, so equality is coefficient equality. All
 * arithmetic is overflow-checked 64-bit; an overflow throws rather than
 * silently wrapping.
 */

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vcbent/expected.hpp"

namespace vcbent {

/// Thrown when two operands belong to different rings.
class RadixMismatch : public std::invalid_argument {
 public:
  RadixMismatch(int a, int b);
};

/// Thrown when an exact result does not fit in 64-bit coefficients.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

bool is_supported_radix(int p) noexcept;
/// deg(Phi_p); throws std::invalid_argument for unsupported p.
int cyclotomic_degree(int p);

class CycInt;

/// +-xi^exponent, the only scalars a generalized permutation may carry.
struct RootScalar {
  int sign = 1;      // +1 or -1
  int exponent = 0;  // in [0, p)

  CycInt to_cyc(int p) const;
  friend bool operator==(const RootScalar&, const RootScalar&) = default;
};

/// Product of two root scalars in radix p. For even p a -1 is folded into the
/// exponent so the result is canonical.
RootScalar multiply(const RootScalar& a, const RootScalar& b, int p);
/// Canonical form: exponent reduced mod p, and for even p sign folded in.
RootScalar canonical(RootScalar s, int p);

class CycInt {
 public:
  static constexpr int kMaxDegree = 4;
  using Coeffs = std::array<std::int64_t, kMaxDegree>;

  /// Zero of Z[xi_p].
  explicit CycInt(int p = 3);
  /// Rational integer `value` in Z[xi_p].
  CycInt(int p, std::int64_t value);

  /// Builds from power-basis coordinates; `coeffs.size()` may exceed the
  /// degree, higher powers are reduced.
  static CycInt from_coeffs(int p, std::initializer_list<std::int64_t> coeffs);
  /// xi^k for any integer k.
  static CycInt root(int p, long long k);

  int radix() const noexcept { return p_; }
  int degree() const noexcept;
  std::int64_t coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }
  const Coeffs& coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept;
  /// True iff the element is a rational integer; sets *out when given.
  bool is_rational(std::int64_t* out = nullptr) const noexcept;

  CycInt operator+(const CycInt& b) const;
  CycInt operator-(const CycInt& b) const;
  CycInt operator-() const;
  CycInt operator*(const CycInt& b) const;
  CycInt operator*(std::int64_t k) const;
  CycInt& operator+=(const CycInt& b);
  CycInt& operator-=(const CycInt& b);
  CycInt& operator*=(const CycInt& b);

  /// Multiplies by xi^k; a coefficient shuffle, much cheaper than operator*.
  CycInt rotated(long long k) const;

  /// Complex conjugate (xi -> xi^(p-1)).
  CycInt conj() const;

  friend bool operator==(const CycInt&, const CycInt&) = default;
  /// Total order on (p, coeffs) so values can key ordered containers.
  friend auto operator<=>(const CycInt&, const CycInt&) = default;

 private:
  int p_;
  Coeffs c_{};

  friend CycInt reduce_product(int p, const std::array<std::int64_t, 2 * kMaxDegree>& raw);
};

inline CycInt add(const CycInt& a, const CycInt& b) { return a + b; }
inline CycInt mul(const CycInt& a, const CycInt& b) { return a * b; }
inline CycInt conj(const CycInt& a) { return a.conj(); }

/// a * conj(a), the squared modulus; real, and rational for p in {3, 4, 6}.
CycInt abs_squared(const CycInt& a);

struct NotAUnitRoot {
  CycInt value;
};
/// (sign, k) iff a == sign * xi^k exactly. Prefers sign +1 when both forms
/// exist (even p).
Expected<RootScalar, NotAUnitRoot> as_root_scalar(const CycInt& a);

struct NotDivisible {
  CycInt value;
  std::int64_t divisor = 0;
};
/// a / d when every coefficient is divisible by d.
Expected<CycInt, NotDivisible> div_exact_int(const CycInt& a, std::int64_t d);

/// Canonical text: "3", "3x", "-1-1x", "2+1x^2", "0". `x` stands for xi.
std::string to_string(const CycInt& a);
/// Parses to_string's format (also accepts spaces, a bare "x", "x^k" with
/// k >= degree, and `w` as an alias for `x`). Throws std::invalid_argument.
CycInt parse_cyc(std::string_view text, int p);

/// Root-style rendering when a == m * xi^k for a rational m ("3w^2", "-3w",
/// "9"); falls back to to_string. `xi_symbol` is "w" or "ξ".
std::string to_root_string(const CycInt& a, std::string_view xi_symbol = "w");

}  // namespace vcbent

template <>
struct std::hash<vcbent::CycInt> {
  std::size_t operator()(const vcbent::CycInt& a) const noexcept {
    std::size_t h = static_cast<std::size_t>(a.radix());
    for (auto c : a.coeffs()) h = h * 1000003u ^ std::hash<std::int64_t>{}(c);
    return h;
  }
};
