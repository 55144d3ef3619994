#include "vcbent/oracle.hpp"

#include <algorithm>
#include <iterator>

#include "parallel.hpp"
#include "vcbent/bentlab.hpp"
#include "vcbent/vctransform.hpp"

namespace vcbent {

std::vector<MvFunction> all_bent(int p, int n, int jobs) {
  const std::size_t points = checked_pow(p, n);
  std::size_t total = 1;
  for (std::size_t i = 0; i < points; ++i) {
    total *= static_cast<std::size_t>(p);
    if (total > kOracleFunctionLimit) throw SizeLimitExceeded(total, kOracleFunctionLimit);
  }
  constexpr std::size_t kChunk = 1024;
  const std::size_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<std::vector<MvFunction>> found(chunks);
  detail::parallel_for(chunks, jobs, [&](std::size_t c) {
    const std::size_t end = std::min(total, (c + 1) * kChunk);
    for (std::size_t code = c * kChunk; code < end; ++code) {
      std::vector<std::uint8_t> v(points);
      std::size_t x = code;
      for (std::size_t i = points; i-- > 0;) {
        v[i] = static_cast<std::uint8_t>(x % static_cast<std::size_t>(p));
        x /= static_cast<std::size_t>(p);
      }
      MvFunction f(p, n, std::move(v));
      if (is_flat(forward(sign_of(f)))) found[c].push_back(std::move(f));
    }
  });
  std::vector<MvFunction> out;
  for (auto& part : found) std::move(part.begin(), part.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MvFunction> all_bent_1place() { return all_bent(3, 1, 1); }

CertifyReport certify(const std::set<MvFunction>& generated, const std::set<MvFunction>& reference) {
  CertifyReport r;
  std::set_difference(generated.begin(), generated.end(), reference.begin(), reference.end(),
                      std::back_inserter(r.only_generated));
  std::set_difference(reference.begin(), reference.end(), generated.begin(), generated.end(),
                      std::back_inserter(r.only_reference));
  return r;
}

}  // namespace vcbent
