#include "vcbent/genperm.hpp"

#include <algorithm>
#include <sstream>

#include "vcbent/vctransform.hpp"

namespace vcbent {

GenPerm::GenPerm(int p, std::vector<GenEntry> rows) : p_(p), rows_(std::move(rows)) {
  if (!is_supported_radix(p)) throw std::invalid_argument("GenPerm: unsupported radix");
  std::vector<bool> seen(rows_.size(), false);
  for (auto& r : rows_) {
    if (r.col >= rows_.size() || seen[r.col]) throw std::invalid_argument("GenPerm: columns do not form a permutation");
    seen[r.col] = true;
    r.scalar = canonical(r.scalar, p);
  }
}

GenPerm GenPerm::identity(int p, std::size_t size) {
  std::vector<GenEntry> rows(size);
  for (std::size_t i = 0; i < size; ++i) rows[i] = {i, {}};
  return GenPerm(p, std::move(rows));
}

GenPerm GenPerm::from_columns(int p, const std::vector<std::size_t>& cols) {
  std::vector<GenEntry> rows;
  rows.reserve(cols.size());
  for (auto c : cols) rows.push_back({c, {}});
  return GenPerm(p, std::move(rows));
}

bool GenPerm::is_straight() const noexcept {
  return std::all_of(rows_.begin(), rows_.end(), [](const GenEntry& e) { return e.scalar == RootScalar{}; });
}

bool GenPerm::is_diagonal() const noexcept {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].col != i) return false;
  return true;
}

UnknownPermutation::UnknownPermutation(std::string_view name)
    : std::invalid_argument("unknown permutation '" + std::string(name) + "' (expected I, P01, P12, N, X, XT)") {}

const std::array<std::string_view, 6>& gamma_names() {
  static const std::array<std::string_view, 6> names{"I", "P01", "P12", "N", "X", "XT"};
  return names;
}

GenPerm gamma(std::string_view name) {
  if (name == "I") return GenPerm::from_columns(3, {0, 1, 2});
  if (name == "P01") return GenPerm::from_columns(3, {1, 0, 2});
  if (name == "P12") return GenPerm::from_columns(3, {0, 2, 1});
  if (name == "N") return GenPerm::from_columns(3, {2, 1, 0});
  if (name == "X") return GenPerm::from_columns(3, {2, 0, 1});
  if (name == "XT") return GenPerm::from_columns(3, {1, 2, 0});
  throw UnknownPermutation(name);
}

GenPerm pauli_z(int p, bool conjugated) {
  std::vector<GenEntry> rows(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) rows[static_cast<std::size_t>(k)] = {static_cast<std::size_t>(k), {1, conjugated ? -k : k}};
  return GenPerm(p, std::move(rows));
}

GenPerm kron(const GenPerm& a, const GenPerm& b) {
  if (a.radix() != b.radix()) throw RadixMismatch(a.radix(), b.radix());
  const int p = a.radix();
  std::vector<GenEntry> rows;
  rows.reserve(a.size() * b.size());
  for (const auto& ra : a.rows())
    for (const auto& rb : b.rows()) rows.push_back({ra.col * b.size() + rb.col, multiply(ra.scalar, rb.scalar, p)});
  return GenPerm(p, std::move(rows));
}

GenPerm compose(const GenPerm& a, const GenPerm& b) {
  if (a.radix() != b.radix()) throw RadixMismatch(a.radix(), b.radix());
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<GenEntry> rows;
  rows.reserve(a.size());
  for (const auto& ra : a.rows()) {
    const auto& rb = b.rows()[ra.col];
    rows.push_back({rb.col, multiply(ra.scalar, rb.scalar, a.radix())});
  }
  return GenPerm(a.radix(), std::move(rows));
}

GenPerm scale(const GenPerm& a, RootScalar s) {
  std::vector<GenEntry> rows(a.rows());
  for (auto& r : rows) r.scalar = multiply(r.scalar, s, a.radix());
  return GenPerm(a.radix(), std::move(rows));
}

GenPerm block_diag(const std::vector<GenPerm>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("block_diag: no blocks");
  const int p = blocks.front().radix();
  std::vector<GenEntry> rows;
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    if (b.radix() != p) throw RadixMismatch(p, b.radix());
    for (const auto& r : b.rows()) rows.push_back({r.col + offset, r.scalar});
    offset += b.size();
  }
  return GenPerm(p, std::move(rows));
}

Expected<GenPerm, NotFlat> diag_from_flat_spectrum(const Spectrum& s) {
  if (s.n % 2 != 0) throw std::invalid_argument("diag_from_flat_spectrum: n must be even");
  const auto root = static_cast<std::int64_t>(checked_pow(s.p, s.n / 2));
  std::vector<GenEntry> rows(s.entries.size());
  for (std::size_t w = 0; w < s.entries.size(); ++w) {
    auto q = div_exact_int(s.entries[w], root);
    if (!q) return NotFlat{w, s.entries[w]};
    auto r = as_root_scalar(*q);
    if (!r) return NotFlat{w, s.entries[w]};
    rows[w] = {w, *r};
  }
  return GenPerm(s.p, std::move(rows));
}

std::vector<CycInt> apply(const GenPerm& P, const std::vector<CycInt>& v) {
  if (v.size() != P.size()) throw std::invalid_argument("apply: size mismatch");
  std::vector<CycInt> out;
  out.reserve(v.size());
  for (const auto& r : P.rows()) {
    CycInt x = v[r.col].rotated(r.scalar.exponent);
    out.push_back(r.scalar.sign < 0 ? -x : x);
  }
  return out;
}

Spectrum apply(const GenPerm& P, const Spectrum& s) { return Spectrum{s.p, s.n, apply(P, s.entries)}; }

SignVector apply(const GenPerm& P, const SignVector& s) { return SignVector{s.p, s.n, apply(P, s.entries)}; }

CycMatrix to_dense(const GenPerm& P) {
  CycMatrix m(P.size(), P.size(), CycInt(P.radix()));
  for (std::size_t i = 0; i < P.size(); ++i) m(i, P.rows()[i].col) = P.rows()[i].scalar.to_cyc(P.radix());
  return m;
}

std::optional<GenPerm> to_genperm(const CycMatrix& m) {
  if (!m.square() || m.rows() == 0) return std::nullopt;
  const int p = m(0, 0).radix();
  std::vector<GenEntry> rows(m.rows());
  std::vector<bool> used(m.cols(), false);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      if (found || used[j]) return std::nullopt;
      auto r = as_root_scalar(m(i, j));
      if (!r) return std::nullopt;
      rows[i] = {j, *r};
      used[j] = true;
      found = true;
    }
    if (!found) return std::nullopt;
  }
  return GenPerm(p, std::move(rows));
}

bool is_generalized_permutation(const CycMatrix& m) { return to_genperm(m).has_value(); }

CycMatrix multiply(const CycMatrix& a, const CycMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  const int p = a.rows() ? a(0, 0).radix() : 3;
  CycMatrix out(a.rows(), b.cols(), CycInt(p));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

CycMatrix kron(const CycMatrix& a, const CycMatrix& b) {
  const int p = a.rows() ? a(0, 0).radix() : 3;
  CycMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), CycInt(p));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

CycMatrix conj(const CycMatrix& a) {
  CycMatrix out(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).conj();
  return out;
}

CycMatrix identity_matrix(int p, std::size_t size) {
  CycMatrix m(size, size, CycInt(p));
  for (std::size_t i = 0; i < size; ++i) m(i, i) = CycInt(p, 1);
  return m;
}

int log_radix(std::size_t size, int p) {
  int n = 0;
  std::size_t s = 1;
  while (s < size) {
    s *= static_cast<std::size_t>(p);
    ++n;
  }
  if (s != size) throw std::invalid_argument("size " + std::to_string(size) + " is not a power of " + std::to_string(p));
  return n;
}

namespace {

// Column j of p^n W is C (P (C* e_j)); `apply_p` supplies the middle factor.
template <class ApplyP>
ScaledMatrix conjugate_columns(int p, std::size_t size, std::size_t limit, ApplyP apply_p) {
  if (size > limit) throw SizeLimitExceeded(size, limit);
  const int n = log_radix(size, p);
  CycMatrix w(size, size, CycInt(p));
  std::vector<CycInt> e(size, CycInt(p));
  for (std::size_t j = 0; j < size; ++j) {
    std::fill(e.begin(), e.end(), CycInt(p));
    e[j] = CycInt(p, 1);
    auto col = apply_c_fast(p, n, apply_p(apply_c_fast(p, n, e, true, limit)), false, limit);
    for (std::size_t i = 0; i < size; ++i) w(i, j) = col[i];
  }
  return normalize({std::move(w), static_cast<std::int64_t>(size)});
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

}  // namespace

ScaledMatrix normalize(ScaledMatrix m) {
  if (m.denominator == 0) throw std::invalid_argument("ScaledMatrix: zero denominator");
  if (m.denominator < 0) {
    m.denominator = -m.denominator;
    for (std::size_t i = 0; i < m.numerators.rows(); ++i)
      for (std::size_t j = 0; j < m.numerators.cols(); ++j) m.numerators(i, j) = -m.numerators(i, j);
  }
  std::int64_t g = m.denominator;
  for (const auto& e : m.numerators.data())
    for (auto c : e.coeffs()) g = gcd64(g, c);
  if (g > 1) {
    m.denominator /= g;
    for (std::size_t i = 0; i < m.numerators.rows(); ++i)
      for (std::size_t j = 0; j < m.numerators.cols(); ++j) m.numerators(i, j) = *div_exact_int(m.numerators(i, j), g);
  }
  return m;
}

ScaledMatrix kron(const ScaledMatrix& a, const ScaledMatrix& b) {
  return normalize({kron(a.numerators, b.numerators), a.denominator * b.denominator});
}

ScaledMatrix multiply(const ScaledMatrix& a, const ScaledMatrix& b) {
  return normalize({multiply(a.numerators, b.numerators), a.denominator * b.denominator});
}

std::optional<std::vector<CycInt>> apply(const ScaledMatrix& m, const std::vector<CycInt>& v) {
  if (v.size() != m.numerators.cols()) throw std::invalid_argument("apply: size mismatch");
  const int p = v.empty() ? 3 : v.front().radix();
  std::vector<CycInt> out(m.numerators.rows(), CycInt(p));
  for (std::size_t i = 0; i < m.numerators.rows(); ++i) {
    for (std::size_t j = 0; j < m.numerators.cols(); ++j)
      if (!m.numerators(i, j).is_zero()) out[i] += m.numerators(i, j) * v[j];
    auto q = div_exact_int(out[i], m.denominator);
    if (!q) return std::nullopt;
    out[i] = *q;
  }
  return out;
}

bool is_generalized_permutation(const ScaledMatrix& m) {
  const ScaledMatrix n = normalize(m);
  return n.denominator == 1 && is_generalized_permutation(n.numerators);
}

WMatrix classify(ScaledMatrix m) {
  m = normalize(std::move(m));
  if (m.denominator == 1)
    if (auto g = to_genperm(m.numerators)) return *g;
  return m;
}

WMatrix conjugate_by_c(const GenPerm& P, std::size_t limit) {
  return classify(conjugate_columns(P.radix(), P.size(), limit, [&](const std::vector<CycInt>& v) { return apply(P, v); }));
}

WMatrix conjugate_by_c(const CycMatrix& P, int p, std::size_t limit) {
  if (!P.square()) throw std::invalid_argument("conjugate_by_c: matrix is not square");
  return classify(conjugate_columns(p, P.rows(), limit, [&](const std::vector<CycInt>& v) {
    std::vector<CycInt> out(v.size(), CycInt(p));
    for (std::size_t i = 0; i < P.rows(); ++i)
      for (std::size_t k = 0; k < P.cols(); ++k)
        if (!P(i, k).is_zero()) out[i] += P(i, k) * v[k];
    return out;
  }));
}

ScaledMatrix as_dense(const WMatrix& w) {
  if (const auto* g = std::get_if<GenPerm>(&w)) return {to_dense(*g), 1};
  return std::get<ScaledMatrix>(w);
}

GenPerm conjugate_table(std::string_view name) {
  if (name == "I") return gamma("I");
  if (name == "N") return compose(pauli_z(3, true), gamma("P12"));
  if (name == "P12") return gamma("P12");
  if (name == "P01") return compose(pauli_z(3, false), gamma("P12"));
  if (name == "X") return pauli_z(3, false);
  if (name == "XT") return pauli_z(3, true);
  throw UnknownPermutation(name);
}

CycMatrix selector_component(int p, int i) {
  CycMatrix m(static_cast<std::size_t>(p), static_cast<std::size_t>(p), CycInt(p));
  for (int j = 0; j < p; ++j)
    for (int k = 0; k < p; ++k) m(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) = CycInt::root(p, i * (j - k));
  return m;
}

ScaledMatrix conjugate_blockdiag(const std::vector<GenPerm>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("conjugate_blockdiag: no blocks");
  const int p = blocks.front().radix();
  if (blocks.size() != static_cast<std::size_t>(p))
    throw std::invalid_argument("conjugate_blockdiag: expected " + std::to_string(p) + " blocks");
  const std::size_t bs = blocks.front().size();
  for (const auto& b : blocks)
    if (b.radix() != p || b.size() != bs) throw std::invalid_argument("conjugate_blockdiag: blocks differ in shape");
  CycMatrix sum(bs * static_cast<std::size_t>(p), bs * static_cast<std::size_t>(p), CycInt(p));
  std::int64_t denom = 1;
  for (int i = 0; i < p; ++i) {
    const ScaledMatrix wb = as_dense(conjugate_by_c(blocks[static_cast<std::size_t>(i)]));
    CycMatrix term = kron(selector_component(p, i), wb.numerators);
    // bring every term to the common denominator p * lcm of block denominators
    const std::int64_t d = wb.denominator;
    if (denom % d != 0) {
      const std::int64_t f = d;
      for (std::size_t r = 0; r < sum.rows(); ++r)
        for (std::size_t c = 0; c < sum.cols(); ++c) sum(r, c) = sum(r, c) * f;
      denom *= f;
    }
    const std::int64_t up = denom / d;
    for (std::size_t r = 0; r < sum.rows(); ++r)
      for (std::size_t c = 0; c < sum.cols(); ++c) sum(r, c) += term(r, c) * up;
  }
  return normalize({std::move(sum), denom * p});
}

namespace {

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

}  // namespace

std::string render(const CycMatrix& m, std::string_view xi_symbol) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const auto& e : m.data()) {
    cells.push_back(to_root_string(e, xi_symbol));
    width = std::max(width, display_width(cells.back()));
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& c = cells[i * m.cols() + j];
      if (j) os << ' ';
      os << std::string(width - display_width(c), ' ') << c;
    }
    os << '\n';
  }
  return os.str();
}

std::string render(const ScaledMatrix& m, std::string_view xi_symbol) {
  std::string body = render(m.numerators, xi_symbol);
  if (m.denominator == 1) return body;
  return "(1/" + std::to_string(m.denominator) + ") *\n" + body;
}

std::string render_rows(const GenPerm& P, std::string_view xi_symbol) {
  std::ostringstream os;
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (i) os << ' ';
    os << i << "->" << P.rows()[i].col << ':' << to_root_string(P.rows()[i].scalar.to_cyc(P.radix()), xi_symbol);
  }
  return os.str();
}

}  // namespace vcbent
