#include "vcbent/cyclotomic.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace vcbent {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("CycInt: coefficient overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("CycInt: coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("CycInt: coefficient overflow");
  return r;
}

// Low coefficients of Phi_p (monic leading term omitted): x^d = -sum phi_i x^i.
struct RingTraits {
  int degree;
  std::array<std::int64_t, CycInt::kMaxDegree> phi;
};

const RingTraits& traits(int p) {
  static const RingTraits t3{2, {1, 1, 0, 0}};
  static const RingTraits t4{2, {1, 0, 0, 0}};
  static const RingTraits t5{4, {1, 1, 1, 1}};
  static const RingTraits t6{2, {1, -1, 0, 0}};
  switch (p) {
    case 3: return t3;
    case 4: return t4;
    case 5: return t5;
    case 6: return t6;
    default: throw std::invalid_argument("unsupported radix " + std::to_string(p) + " (expected 3, 4, 5 or 6)");
  }
}

// Reduced power-basis coordinates of xi^j, j in [0, p).
using PowerTable = std::array<CycInt::Coeffs, 6>;

PowerTable make_powers(int p) {
  const auto& t = traits(p);
  PowerTable table{};
  CycInt::Coeffs cur{};
  cur[0] = 1;
  for (int j = 0; j < p; ++j) {
    table[static_cast<std::size_t>(j)] = cur;
    // multiply cur by x
    std::int64_t top = cur[static_cast<std::size_t>(t.degree - 1)];
    for (int i = t.degree - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    cur[0] = 0;
    for (int i = 0; i < t.degree; ++i) cur[static_cast<std::size_t>(i)] -= top * t.phi[static_cast<std::size_t>(i)];
  }
  return table;
}

const PowerTable& powers(int p) {
  static const PowerTable p3 = make_powers(3);
  static const PowerTable p4 = make_powers(4);
  static const PowerTable p5 = make_powers(5);
  static const PowerTable p6 = make_powers(6);
  switch (p) {
    case 3: return p3;
    case 4: return p4;
    case 5: return p5;
    default: return p6;
  }
}

int mod_p(long long k, int p) {
  long long r = k % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

void require_same(const CycInt& a, const CycInt& b) {
  if (a.radix() != b.radix()) throw RadixMismatch(a.radix(), b.radix());
}

}  // namespace

RadixMismatch::RadixMismatch(int a, int b)
    : std::invalid_argument("radix mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}

bool is_supported_radix(int p) noexcept { return p >= 3 && p <= 6; }

int cyclotomic_degree(int p) { return traits(p).degree; }

CycInt RootScalar::to_cyc(int p) const {
  CycInt r = CycInt::root(p, exponent);
  return sign < 0 ? -r : r;
}

RootScalar canonical(RootScalar s, int p) {
  s.exponent = mod_p(s.exponent, p);
  if (s.sign < 0 && p % 2 == 0) {
    s.sign = 1;
    s.exponent = mod_p(s.exponent + p / 2, p);
  }
  s.sign = s.sign < 0 ? -1 : 1;
  return s;
}

RootScalar multiply(const RootScalar& a, const RootScalar& b, int p) {
  return canonical({a.sign * b.sign, a.exponent + b.exponent}, p);
}

CycInt::CycInt(int p) : p_(p) { (void)traits(p); }

CycInt::CycInt(int p, std::int64_t value) : CycInt(p) { c_[0] = value; }

int CycInt::degree() const noexcept { return traits(p_).degree; }

CycInt reduce_product(int p, const std::array<std::int64_t, 2 * CycInt::kMaxDegree>& raw_in) {
  const auto& t = traits(p);
  auto raw = raw_in;
  for (int k = 2 * t.degree - 2; k >= t.degree; --k) {
    std::int64_t r = raw[static_cast<std::size_t>(k)];
    if (r == 0) continue;
    raw[static_cast<std::size_t>(k)] = 0;
    for (int i = 0; i < t.degree; ++i) {
      auto& dst = raw[static_cast<std::size_t>(k - t.degree + i)];
      dst = checked_sub(dst, checked_mul(r, t.phi[static_cast<std::size_t>(i)]));
    }
  }
  CycInt out(p);
  for (int i = 0; i < t.degree; ++i) out.c_[static_cast<std::size_t>(i)] = raw[static_cast<std::size_t>(i)];
  return out;
}

CycInt CycInt::from_coeffs(int p, std::initializer_list<std::int64_t> coeffs) {
  CycInt out(p);
  const auto& pw = powers(p);
  int j = 0;
  for (std::int64_t c : coeffs) {
    const auto& basis = pw[static_cast<std::size_t>(mod_p(j, p))];
    for (int i = 0; i < out.degree(); ++i)
      out.c_[static_cast<std::size_t>(i)] =
          checked_add(out.c_[static_cast<std::size_t>(i)], checked_mul(c, basis[static_cast<std::size_t>(i)]));
    ++j;
  }
  return out;
}

CycInt CycInt::root(int p, long long k) {
  CycInt out(p);
  out.c_ = powers(p)[static_cast<std::size_t>(mod_p(k, p))];
  return out;
}

bool CycInt::is_zero() const noexcept {
  for (auto c : c_)
    if (c != 0) return false;
  return true;
}

bool CycInt::is_rational(std::int64_t* out) const noexcept {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  if (out) *out = c_[0];
  return true;
}

CycInt CycInt::operator+(const CycInt& b) const {
  require_same(*this, b);
  CycInt r(p_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = checked_add(c_[i], b.c_[i]);
  return r;
}

CycInt CycInt::operator-(const CycInt& b) const {
  require_same(*this, b);
  CycInt r(p_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = checked_sub(c_[i], b.c_[i]);
  return r;
}

CycInt CycInt::operator-() const {
  CycInt r(p_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = checked_sub(0, c_[i]);
  return r;
}

CycInt CycInt::operator*(const CycInt& b) const {
  require_same(*this, b);
  const int d = degree();
  std::array<std::int64_t, 2 * kMaxDegree> raw{};
  for (int i = 0; i < d; ++i) {
    if (c_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < d; ++j) {
      auto& dst = raw[static_cast<std::size_t>(i + j)];
      dst = checked_add(dst, checked_mul(c_[static_cast<std::size_t>(i)], b.c_[static_cast<std::size_t>(j)]));
    }
  }
  return reduce_product(p_, raw);
}

CycInt CycInt::operator*(std::int64_t k) const {
  CycInt r(p_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = checked_mul(c_[i], k);
  return r;
}

CycInt& CycInt::operator+=(const CycInt& b) { return *this = *this + b; }
CycInt& CycInt::operator-=(const CycInt& b) { return *this = *this - b; }
CycInt& CycInt::operator*=(const CycInt& b) { return *this = *this * b; }

CycInt CycInt::rotated(long long k) const {
  const int s = mod_p(k, p_);
  if (s == 0) return *this;
  if (p_ == 3) {
    // xi(a + b xi) = -b + (a - b) xi
    std::int64_t a = c_[0], b = c_[1];
    CycInt r(3);
    if (s == 1) {
      r.c_[0] = checked_sub(0, b);
      r.c_[1] = checked_sub(a, b);
    } else {
      // xi^2(a + b xi) = (b - a) - a xi
      r.c_[0] = checked_sub(b, a);
      r.c_[1] = checked_sub(0, a);
    }
    return r;
  }
  const auto& pw = powers(p_);
  const int d = degree();
  CycInt r(p_);
  for (int i = 0; i < d; ++i) {
    std::int64_t ci = c_[static_cast<std::size_t>(i)];
    if (ci == 0) continue;
    const auto& basis = pw[static_cast<std::size_t>(mod_p(i + s, p_))];
    for (int j = 0; j < d; ++j)
      r.c_[static_cast<std::size_t>(j)] =
          checked_add(r.c_[static_cast<std::size_t>(j)], checked_mul(ci, basis[static_cast<std::size_t>(j)]));
  }
  return r;
}

CycInt CycInt::conj() const {
  const auto& pw = powers(p_);
  const int d = degree();
  CycInt r(p_);
  for (int i = 0; i < d; ++i) {
    std::int64_t ci = c_[static_cast<std::size_t>(i)];
    if (ci == 0) continue;
    const auto& basis = pw[static_cast<std::size_t>(mod_p(-i, p_))];
    for (int j = 0; j < d; ++j)
      r.c_[static_cast<std::size_t>(j)] =
          checked_add(r.c_[static_cast<std::size_t>(j)], checked_mul(ci, basis[static_cast<std::size_t>(j)]));
  }
  return r;
}

CycInt abs_squared(const CycInt& a) { return a * a.conj(); }

Expected<RootScalar, NotAUnitRoot> as_root_scalar(const CycInt& a) {
  const int p = a.radix();
  for (int k = 0; k < p; ++k)
    if (a == CycInt::root(p, k)) return RootScalar{1, k};
  const CycInt neg = -a;
  for (int k = 0; k < p; ++k)
    if (neg == CycInt::root(p, k)) return RootScalar{-1, k};
  return NotAUnitRoot{a};
}

Expected<CycInt, NotDivisible> div_exact_int(const CycInt& a, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("div_exact_int: division by zero");
  CycInt out(a.radix());
  for (int i = 0; i < a.degree(); ++i) {
    if (a.coeff(i) % d != 0) return NotDivisible{a, d};
  }
  out = CycInt::from_coeffs(a.radix(), {});
  std::array<std::int64_t, 2 * CycInt::kMaxDegree> raw{};
  for (int i = 0; i < a.degree(); ++i) raw[static_cast<std::size_t>(i)] = a.coeff(i) / d;
  return reduce_product(a.radix(), raw);
}

std::string to_string(const CycInt& a) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < a.degree(); ++i) {
    std::int64_t c = a.coeff(i);
    if (c == 0) continue;
    if (!first && c > 0) os << '+';
    os << c;
    if (i == 1) os << 'x';
    if (i > 1) os << "x^" << i;
    first = false;
  }
  return first ? "0" : os.str();
}

CycInt parse_cyc(std::string_view text, int p) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty cyclotomic literal");

  auto fail = [&](const char* why) {
    throw std::invalid_argument(std::string("bad cyclotomic literal '") + std::string(text) + "': " + why);
  };

  CycInt acc(p);
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail("expected '+' or '-' between terms");
    }
    bool have_digits = false;
    std::int64_t coef = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coef = checked_add(checked_mul(coef, 10), s[i] - '0');
      have_digits = true;
      ++i;
    }
    if (i < s.size() && s[i] == '*') {
      if (!have_digits) fail("'*' without coefficient");
      ++i;
    }
    long long power = 0;
    if (i < s.size() && (s[i] == 'x' || s[i] == 'w')) {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("missing exponent");
        power = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          power = power * 10 + (s[i] - '0');
          if (power > 1'000'000) fail("exponent too large");
          ++i;
        }
      }
      if (!have_digits) coef = 1;
    } else if (!have_digits) {
      fail("expected a term");
    }
    acc += CycInt::root(p, power) * (sign * coef);
  }
  return acc;
}

std::string to_root_string(const CycInt& a, std::string_view xi_symbol) {
  if (a.is_zero()) return "0";
  const int p = a.radix();
  std::optional<std::pair<std::int64_t, int>> best;
  for (int k = 0; k < p; ++k) {
    std::int64_t m;
    if (a.rotated(-k).is_rational(&m)) {
      if (!best || (best->first < 0 && m > 0)) best = std::pair{m, k};
    }
  }
  if (!best) return to_string(a);
  auto [m, k] = *best;
  std::string out;
  if (k == 0) return std::to_string(m);
  if (m == -1) out = "-";
  else if (m != 1) out = std::to_string(m);
  out += xi_symbol;
  if (k > 1) out += "^" + std::to_string(k);
  return out;
}

}  // namespace vcbent
