#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "vcbent/genperm.hpp"

namespace vcbent {

/// Syntax tree of the permutation mini-language:
///
///   expr  := [-]w[^k]*expr | atom | kron(expr, expr, ...)
///          | blockdiag(expr, ...) | compose(expr, expr, ...) | diag(entry, ...)
///   atom  := I | P01 | P12 | N | X | XT | Z | Zc
///   entry := [-]1 | [-]w[^k]
struct PermExpr {
  enum class Kind { Atom, Rotate, Kron, BlockDiag, Compose, Diag };

  Kind kind = Kind::Atom;
  std::string atom;                         // Atom
  RootScalar rotation;                      // Rotate
  std::vector<std::shared_ptr<const PermExpr>> args;  // Rotate (one), Kron, BlockDiag, Compose
  std::vector<RootScalar> diag;             // Diag

  friend bool operator==(const PermExpr& a, const PermExpr& b);
};

using PermExprPtr = std::shared_ptr<const PermExpr>;

/// Throws std::invalid_argument with the offending position.
PermExprPtr parse_perm_expr(std::string_view text, int p = 3);

/// Canonical text; parse(render(e)) == e.
std::string render(const PermExpr& e);

GenPerm evaluate(const PermExpr& e, int p = 3);

/// W by the factor-wise route: tabulated images for atoms, Kronecker and
/// product laws for composites, the dense route only for diag/blockdiag
/// leaves.
WMatrix conjugate_via_table(const PermExpr& e, int p = 3);

}  // namespace vcbent
