#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vcbent/cyclotomic.hpp"
#include "vcbent/expected.hpp"
#include "vcbent/matrix.hpp"

namespace vcbent {

/// p^n with overflow and domain checks.
std::size_t checked_pow(int p, int n);

/// Base-p digits of index, most significant first (x1 leads).
std::vector<int> digits_of(std::size_t index, int p, int n);

/// A p-valued function of n variables as its value vector. Index
/// x = x1*p^(n-1) + ... + xn, so x1 is the most significant digit.
class MvFunction {
 public:
  MvFunction() = default;
  /// Throws std::invalid_argument on wrong length or out-of-range values.
  MvFunction(int p, int n, std::vector<std::uint8_t> values);

  /// "000012021" style digits.
  static MvFunction from_digits(int p, int n, std::string_view digits);
  static MvFunction constant(int p, int n, int c);

  int radix() const noexcept { return p_; }
  int arity() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }
  int operator[](std::size_t x) const { return values_[x]; }
  const std::vector<std::uint8_t>& values() const noexcept { return values_; }

  std::string digits() const;

  friend bool operator==(const MvFunction&, const MvFunction&) = default;
  friend auto operator<=>(const MvFunction&, const MvFunction&) = default;

 private:
  int p_ = 3;
  int n_ = 0;
  std::vector<std::uint8_t> values_{0};
};

/// `p n digits`, e.g. "3 2 000012021".
std::string to_line(const MvFunction& f);
MvFunction parse_line(std::string_view line);

/// F = xi^f, entrywise.
struct SignVector {
  int p = 3;
  int n = 0;
  std::vector<CycInt> entries;
  friend bool operator==(const SignVector&, const SignVector&) = default;
};

/// Circular spectrum or any candidate spectrum; same index convention.
struct Spectrum {
  int p = 3;
  int n = 0;
  std::vector<CycInt> entries;
  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

SignVector sign_of(const MvFunction& f);

struct NotASign {
  std::size_t index = 0;
  CycInt value;
};
/// Inverse of sign_of: succeeds iff every entry is +xi^k.
Expected<MvFunction, NotASign> try_from_sign(int p, int n, const std::vector<CycInt>& v);
inline Expected<MvFunction, NotASign> try_from_sign(const SignVector& v) {
  return try_from_sign(v.p, v.n, v.entries);
}

/// (f(x) + c) mod p.
MvFunction add_constant(const MvFunction& f, int c);

/// (f1 (+) f2)(x, y) = f1(x) + f2(y) mod p, x on the high digits.
MvFunction tensor_sum(const MvFunction& f1, const MvFunction& f2);

/// Sum of monomials over Z_p, e.g. "2*x1*x2^2 + x2 + 1".
class Polynomial {
 public:
  struct Term {
    int coeff = 1;
    std::vector<int> exponents;  // exponents[i] is the power of x(i+1)
  };

  /// Throws std::invalid_argument on malformed text, coefficient >= p or
  /// exponent >= p.
  static Polynomial parse(std::string_view text, int p = 3);

  int radix() const noexcept { return p_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  /// Highest variable index referenced (0 for a constant).
  int max_variable() const noexcept;
  int evaluate(const std::vector<int>& x) const;

 private:
  int p_ = 3;
  std::vector<Term> terms_;
};

/// Value vector over all p^n points.
MvFunction eval_polynomial(const Polynomial& poly, int n);

}  // namespace vcbent
