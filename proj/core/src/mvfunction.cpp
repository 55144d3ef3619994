#include "vcbent/mvfunction.hpp"

#include <cctype>
#include <sstream>

namespace vcbent {

std::size_t checked_pow(int p, int n) {
  if (p < 1 || n < 0) throw std::invalid_argument("checked_pow: bad arguments");
  std::size_t r = 1;
  for (int i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(r, static_cast<std::size_t>(p), &r))
      throw std::overflow_error("checked_pow: p^n overflows");
  }
  return r;
}

std::vector<int> digits_of(std::size_t index, int p, int n) {
  std::vector<int> d(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    d[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(p));
    index /= static_cast<std::size_t>(p);
  }
  return d;
}

MvFunction::MvFunction(int p, int n, std::vector<std::uint8_t> values) : p_(p), n_(n), values_(std::move(values)) {
  if (!is_supported_radix(p)) throw std::invalid_argument("MvFunction: unsupported radix " + std::to_string(p));
  if (n < 0) throw std::invalid_argument("MvFunction: negative arity");
  if (values_.size() != checked_pow(p, n))
    throw std::invalid_argument("MvFunction: expected " + std::to_string(checked_pow(p, n)) + " values, got " +
                                std::to_string(values_.size()));
  for (auto v : values_)
    if (v >= p) throw std::invalid_argument("MvFunction: value " + std::to_string(v) + " not in Z_" + std::to_string(p));
}

MvFunction MvFunction::from_digits(int p, int n, std::string_view digits) {
  std::vector<std::uint8_t> v;
  v.reserve(digits.size());
  for (char ch : digits) {
    if (ch == ' ' || ch == '_') continue;
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("MvFunction: bad digit '" + std::string(1, ch) + "'");
    v.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return MvFunction(p, n, std::move(v));
}

MvFunction MvFunction::constant(int p, int n, int c) {
  return MvFunction(p, n, std::vector<std::uint8_t>(checked_pow(p, n), static_cast<std::uint8_t>(c)));
}

std::string MvFunction::digits() const {
  std::string s;
  s.reserve(values_.size());
  for (auto v : values_) s.push_back(static_cast<char>('0' + v));
  return s;
}

std::string to_line(const MvFunction& f) {
  return std::to_string(f.radix()) + " " + std::to_string(f.arity()) + " " + f.digits();
}

MvFunction parse_line(std::string_view line) {
  std::istringstream in{std::string(line)};
  int p = 0, n = 0;
  std::string digits;
  if (!(in >> p >> n >> digits)) throw std::invalid_argument("function line must be 'p n digits'");
  std::string extra;
  if (in >> extra) throw std::invalid_argument("trailing text in function line");
  return MvFunction::from_digits(p, n, digits);
}

SignVector sign_of(const MvFunction& f) {
  SignVector s{f.radix(), f.arity(), {}};
  s.entries.reserve(f.size());
  for (auto v : f.values()) s.entries.push_back(CycInt::root(f.radix(), v));
  return s;
}

Expected<MvFunction, NotASign> try_from_sign(int p, int n, const std::vector<CycInt>& v) {
  std::vector<std::uint8_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto r = as_root_scalar(v[i]);
    if (!r || r->sign != 1) return NotASign{i, v[i]};
    out[i] = static_cast<std::uint8_t>(r->exponent);
  }
  return MvFunction(p, n, std::move(out));
}

MvFunction add_constant(const MvFunction& f, int c) {
  const int p = f.radix();
  const int s = ((c % p) + p) % p;
  std::vector<std::uint8_t> v(f.values());
  for (auto& x : v) x = static_cast<std::uint8_t>((x + s) % p);
  return MvFunction(p, f.arity(), std::move(v));
}

MvFunction tensor_sum(const MvFunction& f1, const MvFunction& f2) {
  if (f1.radix() != f2.radix()) throw RadixMismatch(f1.radix(), f2.radix());
  const int p = f1.radix();
  std::vector<std::uint8_t> v;
  v.reserve(f1.size() * f2.size());
  for (auto a : f1.values())
    for (auto b : f2.values()) v.push_back(static_cast<std::uint8_t>((a + b) % p));
  return MvFunction(p, f1.arity() + f2.arity(), std::move(v));
}

namespace {

struct PolyCursor {
  std::string s;
  std::size_t i = 0;
  std::string_view original;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad polynomial '" + std::string(original) + "': " + why);
  }
  bool done() const { return i >= s.size(); }
  char peek() const { return done() ? '\0' : s[i]; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++i;
    return true;
  }
  int number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    int v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s[i++] - '0');
      if (v > 1000) fail("number too large");
    }
    return v;
  }
};

std::string normalize(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char ch = static_cast<unsigned char>(text[i]);
    if (std::isspace(ch)) continue;
    // U+2295 CIRCLED PLUS
    if (ch == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x8A &&
        static_cast<unsigned char>(text[i + 2]) == 0x95) {
      out.push_back('+');
      i += 2;
      continue;
    }
    out.push_back(static_cast<char>(ch));
  }
  return out;
}

}  // namespace

Polynomial Polynomial::parse(std::string_view text, int p) {
  if (!is_supported_radix(p)) throw std::invalid_argument("Polynomial: unsupported radix");
  PolyCursor c{normalize(text), 0, text};
  if (c.s.empty()) c.fail("empty");
  Polynomial poly;
  poly.p_ = p;
  do {
    Term t;
    t.coeff = 1;
    bool any = false;
    do {
      if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        int k = c.number();
        if (k >= p) c.fail("coefficient " + std::to_string(k) + " not in Z_" + std::to_string(p));
        t.coeff = (t.coeff * k) % p;
        any = true;
        continue;
      }
      bool paren = c.eat('(');
      if (!c.eat('x')) c.fail("expected coefficient or variable");
      int var = c.number();
      if (var < 1) c.fail("variables are numbered from 1");
      if (paren && !c.eat(')')) c.fail("missing ')'");
      int e = 1;
      if (c.eat('^')) e = c.number();
      if (e >= p) c.fail("exponent " + std::to_string(e) + " must be below " + std::to_string(p));
      if (t.exponents.size() < static_cast<std::size_t>(var)) t.exponents.resize(static_cast<std::size_t>(var), 0);
      t.exponents[static_cast<std::size_t>(var - 1)] += e;
      if (t.exponents[static_cast<std::size_t>(var - 1)] >= p) c.fail("combined exponent must be below p");
      any = true;
    } while (c.eat('*') || c.peek() == 'x' || c.peek() == '(');
    if (!any) c.fail("empty term");
    poly.terms_.push_back(std::move(t));
  } while (c.eat('+'));
  if (!c.done()) c.fail(std::string("unexpected '") + c.peek() + "'");
  return poly;
}

int Polynomial::max_variable() const noexcept {
  int m = 0;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      if (t.exponents[i] != 0 && static_cast<int>(i) + 1 > m) m = static_cast<int>(i) + 1;
  return m;
}

int Polynomial::evaluate(const std::vector<int>& x) const {
  int acc = 0;
  for (const auto& t : terms_) {
    int v = t.coeff;
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      for (int e = 0; e < t.exponents[i]; ++e) v = (v * x.at(i)) % p_;
    acc = (acc + v) % p_;
  }
  return acc;
}

MvFunction eval_polynomial(const Polynomial& poly, int n) {
  if (poly.max_variable() > n)
    throw std::invalid_argument("polynomial references x" + std::to_string(poly.max_variable()) + " but n = " +
                                std::to_string(n));
  const std::size_t size = checked_pow(poly.radix(), n);
  std::vector<std::uint8_t> v(size);
  for (std::size_t x = 0; x < size; ++x)
    v[x] = static_cast<std::uint8_t>(poly.evaluate(digits_of(x, poly.radix(), n)));
  return MvFunction(poly.radix(), n, std::move(v));
}

}  // namespace vcbent
