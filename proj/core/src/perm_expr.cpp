#include "vcbent/perm_expr.hpp"

#include <algorithm>
#include <cctype>

namespace vcbent {

bool operator==(const PermExpr& a, const PermExpr& b) {
  if (a.kind != b.kind || a.atom != b.atom || !(a.rotation == b.rotation) || a.diag != b.diag ||
      a.args.size() != b.args.size())
    return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!(*a.args[i] == *b.args[i])) return false;
  return true;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int p) : text_(text), p_(p) {}

  PermExprPtr parse() {
    auto e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing text");
    return e;
  }

 private:
  std::string_view text_;
  int p_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad permutation expression at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string ident() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  int number() {
    skip();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a number");
    int v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1000) fail("number too large");
    }
    return v;
  }

  // [-]1 | [-]w[^k]
  RootScalar scalar() {
    RootScalar s;
    if (peek() == '-') {
      ++pos_;
      s.sign = -1;
    }
    char c = peek();
    if (c == '1') {
      ++pos_;
      return s;
    }
    if (c != 'w') fail("expected 1 or w^k");
    ++pos_;
    s.exponent = 1;
    if (peek() == '^') {
      ++pos_;
      s.exponent = number() % p_;
    }
    return s;
  }

  std::vector<PermExprPtr> arglist() {
    expect('(');
    std::vector<PermExprPtr> out{expr()};
    while (peek() == ',') {
      ++pos_;
      out.push_back(expr());
    }
    expect(')');
    return out;
  }

  PermExprPtr expr() {
    char c = peek();
    if (c == '-' || (c == 'w' && (pos_ + 1 >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_ + 1]))))) {
      auto e = std::make_shared<PermExpr>();
      e->kind = PermExpr::Kind::Rotate;
      e->rotation = scalar();
      expect('*');
      e->args.push_back(expr());
      return e;
    }
    const std::size_t at = pos_;
    std::string name = ident();
    if (name.empty()) fail("expected an expression");
    auto e = std::make_shared<PermExpr>();
    if (name == "kron" || name == "compose" || name == "blockdiag") {
      e->kind = name == "kron" ? PermExpr::Kind::Kron
                : name == "compose" ? PermExpr::Kind::Compose
                                    : PermExpr::Kind::BlockDiag;
      e->args = arglist();
      if (e->kind != PermExpr::Kind::BlockDiag && e->args.size() < 2) fail(name + " needs at least two operands");
      return e;
    }
    if (name == "diag") {
      e->kind = PermExpr::Kind::Diag;
      expect('(');
      e->diag.push_back(scalar());
      while (peek() == ',') {
        ++pos_;
        e->diag.push_back(scalar());
      }
      expect(')');
      return e;
    }
    static const char* atoms[] = {"I", "P01", "P12", "N", "X", "XT", "Z", "Zc"};
    for (const char* a : atoms)
      if (name == a) {
        e->kind = PermExpr::Kind::Atom;
        e->atom = name;
        return e;
      }
    pos_ = at;
    fail("unknown atom '" + name + "'");
  }
};

std::string render_scalar(const RootScalar& s) {
  std::string out = s.sign < 0 ? "-" : "";
  if (s.exponent == 0) return out + "1";
  return out + "w^" + std::to_string(s.exponent);
}

std::string render_args(const char* head, const std::vector<PermExprPtr>& args) {
  std::string out = std::string(head) + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ",";
    out += render(*args[i]);
  }
  return out + ")";
}

GenPerm atom_perm(const std::string& name, int p) {
  if (name == "Z") return pauli_z(p, false);
  if (name == "Zc") return pauli_z(p, true);
  if (p != 3) throw std::invalid_argument("atom " + name + " is only defined for p = 3");
  return gamma(name);
}

// W(Z) shifts row j to column j+1; W(Z*) to j-1.
GenPerm atom_image(const std::string& name, int p) {
  if (name == "Z" || name == "Zc") {
    std::vector<std::size_t> cols(static_cast<std::size_t>(p));
    const int step = name == "Z" ? 1 : p - 1;
    for (int j = 0; j < p; ++j) cols[static_cast<std::size_t>(j)] = static_cast<std::size_t>((j + step) % p);
    return GenPerm::from_columns(p, cols);
  }
  if (p != 3) throw std::invalid_argument("atom " + name + " is only defined for p = 3");
  return conjugate_table(name);
}

}  // namespace

PermExprPtr parse_perm_expr(std::string_view text, int p) {
  if (!is_supported_radix(p)) throw std::invalid_argument("unsupported radix");
  return Parser(text, p).parse();
}

std::string render(const PermExpr& e) {
  switch (e.kind) {
    case PermExpr::Kind::Atom: return e.atom;
    case PermExpr::Kind::Rotate: return render_scalar(e.rotation) + "*" + render(*e.args.front());
    case PermExpr::Kind::Kron: return render_args("kron", e.args);
    case PermExpr::Kind::Compose: return render_args("compose", e.args);
    case PermExpr::Kind::BlockDiag: return render_args("blockdiag", e.args);
    case PermExpr::Kind::Diag: {
      std::string out = "diag(";
      for (std::size_t i = 0; i < e.diag.size(); ++i) {
        if (i) out += ",";
        out += render_scalar(e.diag[i]);
      }
      return out + ")";
    }
  }
  return {};
}

GenPerm evaluate(const PermExpr& e, int p) {
  switch (e.kind) {
    case PermExpr::Kind::Atom: return atom_perm(e.atom, p);
    case PermExpr::Kind::Rotate: return scale(evaluate(*e.args.front(), p), e.rotation);
    case PermExpr::Kind::Kron: {
      GenPerm acc = evaluate(*e.args.front(), p);
      for (std::size_t i = 1; i < e.args.size(); ++i) acc = kron(acc, evaluate(*e.args[i], p));
      return acc;
    }
    case PermExpr::Kind::Compose: {
      GenPerm acc = evaluate(*e.args.front(), p);
      for (std::size_t i = 1; i < e.args.size(); ++i) acc = compose(acc, evaluate(*e.args[i], p));
      return acc;
    }
    case PermExpr::Kind::BlockDiag: {
      std::vector<GenPerm> blocks;
      for (const auto& a : e.args) blocks.push_back(evaluate(*a, p));
      return block_diag(blocks);
    }
    case PermExpr::Kind::Diag: {
      std::vector<GenEntry> rows;
      for (std::size_t i = 0; i < e.diag.size(); ++i) rows.push_back({i, e.diag[i]});
      return GenPerm(p, std::move(rows));
    }
  }
  throw std::logic_error("evaluate: bad node");
}

WMatrix conjugate_via_table(const PermExpr& e, int p) {
  switch (e.kind) {
    case PermExpr::Kind::Atom: return atom_image(e.atom, p);
    case PermExpr::Kind::Rotate: {
      WMatrix inner = conjugate_via_table(*e.args.front(), p);
      if (auto* g = std::get_if<GenPerm>(&inner)) return scale(*g, e.rotation);
      ScaledMatrix m = std::get<ScaledMatrix>(inner);
      const CycInt s = e.rotation.to_cyc(p);
      for (auto& x : m.numerators.data()) x = x * s;
      return m;
    }
    case PermExpr::Kind::Kron:
    case PermExpr::Kind::Compose: {
      const bool is_kron = e.kind == PermExpr::Kind::Kron;
      WMatrix acc = conjugate_via_table(*e.args.front(), p);
      for (std::size_t i = 1; i < e.args.size(); ++i) {
        WMatrix next = conjugate_via_table(*e.args[i], p);
        const auto* ga = std::get_if<GenPerm>(&acc);
        const auto* gb = std::get_if<GenPerm>(&next);
        if (ga && gb) {
          acc = is_kron ? kron(*ga, *gb) : compose(*ga, *gb);
        } else {
          const ScaledMatrix a = as_dense(acc), b = as_dense(next);
          acc = classify(is_kron ? kron(a, b) : multiply(a, b));
        }
      }
      return acc;
    }
    case PermExpr::Kind::BlockDiag: {
      std::vector<GenPerm> blocks;
      for (const auto& a : e.args) blocks.push_back(evaluate(*a, p));
      const bool uniform = blocks.size() == static_cast<std::size_t>(p) &&
                           std::all_of(blocks.begin(), blocks.end(),
                                       [&](const GenPerm& b) { return b.size() == blocks.front().size(); });
      if (uniform) return classify(conjugate_blockdiag(blocks));
      return conjugate_by_c(block_diag(blocks));
    }
    case PermExpr::Kind::Diag: return conjugate_by_c(evaluate(e, p));
  }
  throw std::logic_error("conjugate_via_table: bad node");
}

}  // namespace vcbent
