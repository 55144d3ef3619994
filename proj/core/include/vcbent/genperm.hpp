#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vcbent/cyclotomic.hpp"
#include "vcbent/expected.hpp"
#include "vcbent/matrix.hpp"
#include "vcbent/mvfunction.hpp"

namespace vcbent {

using CycMatrix = Matrix<CycInt>;

/// Dense conjugation is quadratic in memory; refuse beyond 3^6 rows.
inline constexpr std::size_t kDenseSizeLimit = 729;

/// The single nonzero of a row: scalar at column col.
struct GenEntry {
  std::size_t col = 0;
  RootScalar scalar;
  friend bool operator==(const GenEntry&, const GenEntry&) = default;
};

/// Generalized permutation matrix, row-sparse. Equality is structural.
class GenPerm {
 public:
  /// Throws std::invalid_argument unless the columns form a permutation.
  GenPerm(int p, std::vector<GenEntry> rows);

  static GenPerm identity(int p, std::size_t size);
  /// Straight permutation: row i has +1 at column cols[i].
  static GenPerm from_columns(int p, const std::vector<std::size_t>& cols);

  int radix() const noexcept { return p_; }
  std::size_t size() const noexcept { return rows_.size(); }
  const std::vector<GenEntry>& rows() const noexcept { return rows_; }
  const GenEntry& row(std::size_t i) const { return rows_.at(i); }
  bool is_straight() const noexcept;
  bool is_diagonal() const noexcept;

  friend bool operator==(const GenPerm&, const GenPerm&) = default;

 private:
  int p_;
  std::vector<GenEntry> rows_;
};

class UnknownPermutation : public std::invalid_argument {
 public:
  explicit UnknownPermutation(std::string_view name);
};

/// I, P01, P12, N, X, XT in the canonical order used throughout.
const std::array<std::string_view, 6>& gamma_names();
/// One of the six elementary 3x3 straight permutations.
GenPerm gamma(std::string_view name);

/// diag(1, xi, ..., xi^(p-1)), or its conjugate.
GenPerm pauli_z(int p, bool conjugated = false);

GenPerm kron(const GenPerm& a, const GenPerm& b);
/// Matrix product a * b.
GenPerm compose(const GenPerm& a, const GenPerm& b);
GenPerm scale(const GenPerm& a, RootScalar s);
GenPerm block_diag(const std::vector<GenPerm>& blocks);

struct NotFlat {
  std::size_t index = 0;
  CycInt value;
};
/// p^(-n/2) diag(S); requires n even.
Expected<GenPerm, NotFlat> diag_from_flat_spectrum(const Spectrum& s);

std::vector<CycInt> apply(const GenPerm& P, const std::vector<CycInt>& v);
Spectrum apply(const GenPerm& P, const Spectrum& s);
SignVector apply(const GenPerm& P, const SignVector& s);

CycMatrix to_dense(const GenPerm& P);
std::optional<GenPerm> to_genperm(const CycMatrix& m);
bool is_generalized_permutation(const CycMatrix& m);

CycMatrix multiply(const CycMatrix& a, const CycMatrix& b);
CycMatrix kron(const CycMatrix& a, const CycMatrix& b);
CycMatrix conj(const CycMatrix& a);
CycMatrix identity_matrix(int p, std::size_t size);

/// numerators / denominator, kept in lowest terms (gcd of the denominator
/// and every coefficient is 1, denominator > 0).
struct ScaledMatrix {
  CycMatrix numerators;
  std::int64_t denominator = 1;
  friend bool operator==(const ScaledMatrix&, const ScaledMatrix&) = default;
};
ScaledMatrix normalize(ScaledMatrix m);
ScaledMatrix kron(const ScaledMatrix& a, const ScaledMatrix& b);
ScaledMatrix multiply(const ScaledMatrix& a, const ScaledMatrix& b);
/// m v when the result lies in Z[xi]; nullopt otherwise.
std::optional<std::vector<CycInt>> apply(const ScaledMatrix& m, const std::vector<CycInt>& v);
/// A generalized permutation iff the denominator is 1 and the numerators are.
bool is_generalized_permutation(const ScaledMatrix& m);

/// W(n) = p^-n C(n) P C*(n); typed GenPerm when the result is one.
using WMatrix = std::variant<GenPerm, ScaledMatrix>;
WMatrix conjugate_by_c(const GenPerm& P, std::size_t limit = kDenseSizeLimit);
WMatrix conjugate_by_c(const CycMatrix& P, int p, std::size_t limit = kDenseSizeLimit);
ScaledMatrix as_dense(const WMatrix& w);
WMatrix classify(ScaledMatrix m);

/// Tabulated W-images of the six elementary permutations.
GenPerm conjugate_table(std::string_view name);

/// C(1) diag(e_i) C*(1), without the 1/p factor.
CycMatrix selector_component(int p, int i);

/// W of blockdiag(B_0, ..., B_(p-1)) as sum_i W(diag e_i) (x) W(B_i).
ScaledMatrix conjugate_blockdiag(const std::vector<GenPerm>& blocks);

/// Human rendering, one row per line, entries padded to a common width.
std::string render(const CycMatrix& m, std::string_view xi_symbol = "w");
/// As above, preceded by a "(1/d) *" line when the denominator is not 1.
std::string render(const ScaledMatrix& m, std::string_view xi_symbol = "w");
/// Compact row listing, "0->2:w 1->0:1 ...".
std::string render_rows(const GenPerm& P, std::string_view xi_symbol = "w");

/// n with p^n == size; throws std::invalid_argument otherwise.
int log_radix(std::size_t size, int p);

}  // namespace vcbent
