#include "vcbent/vctransform.hpp"

#include <string>

namespace vcbent {

SizeLimitExceeded::SizeLimitExceeded(std::size_t size, std::size_t limit)
    : std::length_error("transform size " + std::to_string(size) + " exceeds limit " + std::to_string(limit)) {}

std::size_t guarded_size(int p, int n, std::size_t limit) {
  if (!is_supported_radix(p)) throw std::invalid_argument("unsupported radix " + std::to_string(p));
  const std::size_t size = checked_pow(p, n);
  if (size > limit) throw SizeLimitExceeded(size, limit);
  return size;
}

int digit_dot(std::size_t a, std::size_t b, int p, int n) {
  const auto up = static_cast<std::size_t>(p);
  std::size_t acc = 0;
  for (int i = 0; i < n; ++i) {
    acc += (a % up) * (b % up);
    a /= up;
    b /= up;
  }
  return static_cast<int>(acc % up);
}

Matrix<CycInt> build_c(int p, int n, std::size_t limit) {
  const std::size_t size = guarded_size(p, n, limit);
  Matrix<CycInt> c(1, 1, CycInt(p, 1));
  for (int level = 0; level < n; ++level) {
    const std::size_t m = c.rows();
    Matrix<CycInt> next(m * static_cast<std::size_t>(p), m * static_cast<std::size_t>(p), CycInt(p));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (int a = 0; a < p; ++a)
          for (int b = 0; b < p; ++b)
            next(i * static_cast<std::size_t>(p) + static_cast<std::size_t>(a),
                 j * static_cast<std::size_t>(p) + static_cast<std::size_t>(b)) = c(i, j).rotated(a * b);
    c = std::move(next);
  }
  (void)size;
  return c;
}

Spectrum forward(int p, int n, const std::vector<CycInt>& v, std::size_t limit) {
  const std::size_t size = guarded_size(p, n, limit);
  if (v.size() != size) throw std::invalid_argument("forward: vector length does not match p^n");
  Spectrum s{p, n, std::vector<CycInt>(size, CycInt(p))};
  for (std::size_t w = 0; w < size; ++w) {
    CycInt acc(p);
    for (std::size_t x = 0; x < size; ++x) acc += v[x].rotated(-digit_dot(w, x, p, n));
    s.entries[w] = acc;
  }
  return s;
}

Spectrum forward(const SignVector& f, std::size_t limit) { return forward(f.p, f.n, f.entries, limit); }

std::vector<CycInt> apply_c_fast(int p, int n, const std::vector<CycInt>& v, bool conjugate, std::size_t limit) {
  const std::size_t size = guarded_size(p, n, limit);
  if (v.size() != size) throw std::invalid_argument("apply_c_fast: vector length does not match p^n");
  const auto up = static_cast<std::size_t>(p);
  const int sign = conjugate ? -1 : 1;
  std::vector<CycInt> cur(v);
  std::vector<CycInt> scratch(size, CycInt(p));
  std::vector<CycInt> in(up, CycInt(p));
  // stride runs over the digit positions, least significant first
  for (std::size_t stride = 1; stride < size; stride *= up) {
    const std::size_t block = stride * up;
    for (std::size_t base = 0; base < size; base += block) {
      for (std::size_t off = 0; off < stride; ++off) {
        for (std::size_t k = 0; k < up; ++k) in[k] = cur[base + off + k * stride];
        for (std::size_t j = 0; j < up; ++j) {
          CycInt acc = in[0];
          for (std::size_t k = 1; k < up; ++k)
            acc += in[k].rotated(sign * static_cast<long long>((j * k) % up));
          scratch[base + off + j * stride] = acc;
        }
      }
    }
    cur.swap(scratch);
  }
  return cur;
}

Spectrum forward_fast(int p, int n, const std::vector<CycInt>& v, std::size_t limit) {
  return Spectrum{p, n, apply_c_fast(p, n, v, true, limit)};
}

Spectrum forward_fast(const SignVector& f, std::size_t limit) { return forward_fast(f.p, f.n, f.entries, limit); }

Expected<std::vector<CycInt>, InverseNotDivisible> inverse(const Spectrum& s, std::size_t limit) {
  auto raw = apply_c_fast(s.p, s.n, s.entries, false, limit);
  const auto scale = static_cast<std::int64_t>(checked_pow(s.p, s.n));
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto q = div_exact_int(raw[i], scale);
    if (!q) return InverseNotDivisible{i, q.error()};
    raw[i] = *q;
  }
  return raw;
}

bool is_flat(const Spectrum& s) {
  const CycInt target(s.p, static_cast<std::int64_t>(checked_pow(s.p, s.n)));
  for (const auto& e : s.entries)
    if (abs_squared(e) != target) return false;
  return true;
}

}  // namespace vcbent
