#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vcbent/appendix.hpp"
#include "vcbent/bentlab.hpp"
#include "vcbent/generator.hpp"
#include "vcbent/genperm.hpp"
#include "vcbent/oracle.hpp"
#include "vcbent/perm_expr.hpp"
#include "vcbent/vctransform.hpp"

namespace vcbent::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t size_limit() {
  if (const char* env = std::getenv("BENT_SIZE_LIMIT")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw UsageError("BENT_SIZE_LIMIT must be a positive integer");
    }
  }
  return kDefaultSizeLimit;
}

MvFunction function_from_digits(int p, int n, const std::string& digits) {
  if (n < 0) {
    n = 0;
    std::size_t size = 1;
    while (size < digits.size()) {
      size *= static_cast<std::size_t>(p);
      ++n;
    }
  }
  return MvFunction::from_digits(p, n, digits);
}

std::string symbol(bool pretty) { return pretty ? "ξ" : "w"; }

std::string entries_line(const std::vector<CycInt>& v, bool pretty) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += to_root_string(v[i], symbol(pretty));
  }
  return out;
}

std::string spectrum_summary(const Spectrum& s, bool pretty) {
  if (auto form = strict_exponents(s)) {
    const std::string scale = std::to_string(checked_pow(s.p, s.n / 2));
    return (form->sign < 0 ? "-" : "") + scale + "*" + symbol(pretty) + "^[" + exponent_digits({1, form->t}) + "]";
  }
  return entries_line(s.entries, pretty);
}

Spectrum read_spectrum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open spectrum file " + path);
  std::string line;
  int p = 0, n = -1;
  std::vector<CycInt> entries;
  while (std::getline(in, line)) {
    line.erase(0, line.find_first_not_of(" \t\r"));
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (n < 0) {
      std::istringstream hdr(line);
      if (!(hdr >> p >> n)) throw UsageError("spectrum file must start with 'p n'");
      continue;
    }
    bool neg = line.rfind("-exp:", 0) == 0;
    if (neg || line.rfind("exp:", 0) == 0) {
      if (n % 2) throw UsageError("exp: form needs even n");
      const auto scale = static_cast<std::int64_t>(checked_pow(p, n / 2)) * (neg ? -1 : 1);
      for (char c : line.substr(line.find(':') + 1)) {
        if (c == ' ') continue;
        if (c < '0' || c >= '0' + p) throw UsageError("bad exponent digit in spectrum file");
        entries.push_back(CycInt::root(p, c - '0') * scale);
      }
      continue;
    }
    entries.push_back(parse_cyc(line, p));
  }
  if (n < 0) throw UsageError("empty spectrum file");
  if (entries.size() != checked_pow(p, n))
    throw UsageError("spectrum file has " + std::to_string(entries.size()) + " entries, expected " +
                     std::to_string(checked_pow(p, n)));
  return Spectrum{p, n, std::move(entries)};
}

std::ostream& open_out(const std::string& path, std::ofstream& file, std::ostream& fallback) {
  if (path.empty() || path == "-") return fallback;
  file.open(path);
  if (!file) throw UsageError("cannot write " + path);
  return file;
}

struct Globals {
  int jobs = 1;
  bool pretty = false;
};

int cmd_spectrum(int p, int n, const std::string& values, bool fast, const Globals& g, std::ostream& out) {
  const MvFunction f = function_from_digits(p, n, values);
  const std::size_t limit = size_limit();
  const Spectrum s = fast ? forward_fast(sign_of(f), limit) : forward(sign_of(f), limit);
  out << s.p << ' ' << s.n << '\n';
  for (const auto& e : s.entries) out << (g.pretty ? to_root_string(e, "ξ") : to_string(e)) << '\n';
  if (auto form = strict_exponents(s)) out << "strict-exponents: " << exponent_digits(*form) << '\n';
  return 0;
}

int cmd_check(int p, int n, const std::string& values, const Globals& g, std::ostream& out) {
  const MvFunction f = function_from_digits(p, n, values);
  const BentVerdict v = is_bent(f, size_limit());
  out << to_json(v, g.pretty) << '\n';
  return v.is_bent ? 0 : 1;
}

int cmd_permute(const std::string& expr_text, const std::string& spectrum_path, const std::string& function_digits,
                int p, const std::string& via, bool as_w, const Globals& g, std::ostream& out) {
  const PermExprPtr expr = parse_perm_expr(expr_text, p);
  const GenPerm P = evaluate(*expr, p);
  const std::size_t limit = size_limit();
  const std::string sym = symbol(g.pretty);

  std::optional<MvFunction> f;
  Spectrum s;
  if (!function_digits.empty()) {
    f = function_from_digits(p, -1, function_digits);
    s = circular_spectrum(*f, limit);
  } else {
    s = read_spectrum_file(spectrum_path);
    if (s.p != p) throw UsageError("spectrum radix differs from --p");
  }
  if (P.size() != s.entries.size())
    throw UsageError("expression has size " + std::to_string(P.size()) + " but the spectrum has " +
                     std::to_string(s.entries.size()) + " entries");

  out << "expr: " << render(*expr) << '\n';
  if (f) out << "f: " << f->digits() << '\n';
  out << "S_f: " << spectrum_summary(s, g.pretty) << '\n';

  if (as_w) {
    if (!f) throw UsageError("--as-w needs --function");
    const SignVector G = apply(P, sign_of(*f));
    out << "W: " << render_rows(P, sym) << '\n';
    out << "G = W F: " << entries_line(G.entries, g.pretty) << '\n';
    auto gf = try_from_sign(G);
    if (!gf) {
      out << "not-a-sign: index " << gf.error().index << " value " << to_root_string(gf.error().value, sym) << '\n';
      return 1;
    }
    out << "S_g: " << spectrum_summary(circular_spectrum(*gf, limit), g.pretty) << '\n';
    out << "g: " << gf->digits() << '\n';
    return 0;
  }

  const Spectrum sg = apply(P, s);
  out << "S_g = P S_f: " << spectrum_summary(sg, g.pretty) << '\n';
  out << "flat: " << (is_flat(sg) ? "yes" : "no") << '\n';

  if (P.size() <= kDenseSizeLimit) {
    const WMatrix w = via == "table" ? conjugate_via_table(*expr, p) : conjugate_by_c(P);
    const WMatrix other = via == "table" ? conjugate_by_c(P) : conjugate_via_table(*expr, p);
    const ScaledMatrix wd = as_dense(w);
    out << "W via " << via << ": " << (std::holds_alternative<GenPerm>(w) ? "generalized permutation" : "dense")
        << '\n';
    if (wd.numerators.rows() <= 9) out << render(wd, sym) << '\n';
    const bool agree = wd == as_dense(other);
    out << "routes agree: " << (agree ? "yes" : "no") << '\n';
    if (!agree) return 1;
    if (f) {
      const auto G = vcbent::apply(wd, sign_of(*f).entries);
      out << "G = W F: " << (G ? entries_line(*G, g.pretty) : std::string("not in Z[w]")) << '\n';
    }
  }

  auto gf = spectrum_is_bent(sg, limit);
  if (!gf) {
    out << "not-bent: " << to_string(gf.error().stage) << " at index " << gf.error().witness.index << " value "
        << to_root_string(gf.error().witness.value, sym) << '\n';
    return 1;
  }
  out << "g: " << gf->digits() << '\n';
  return 0;
}

int cmd_enumerate(int class_id, bool all, bool rotations, const std::string& out_path, const Globals& g,
                  std::ostream& out) {
  std::ofstream file;
  std::ostream& os = open_out(out_path, file, out);
  if (all) {
    for (const auto& f : generate_all(g.jobs)) os << f.digits() << '\n';
    return 0;
  }
  if (class_id < 1 || class_id > 9) throw UsageError("--class must be in 1..9 (or use --all)");
  auto rec = generate_class(class_seed(class_id), class_id);
  if (!rec) throw std::logic_error("class seed is degenerate");
  if (rotations) {
    for (const auto& f : expand_rotations(*rec)) os << f.digits() << '\n';
    return 0;
  }
  os << to_json(*rec, g.pretty) << '\n';
  return 0;
}

int cmd_verify_appendix(const std::string& path, std::ostream& out) {
  const Fixture fx = load_appendix_file(path);
  for (const auto& e : fx.errors) out << "line " << e.line << ": malformed row: " << e.message << '\n';
  std::size_t passed = 0;
  const auto checks = verify_appendix(fx.rows);
  for (const auto& c : checks) {
    out << (c.pass() ? "PASS" : "FAIL") << " class " << c.row.class_id << " row " << c.row.row << " g "
        << c.row.g.digits() << " P " << (c.used_label.empty() ? "-" : c.used_label);
    if (!c.note.empty()) out << "  (" << c.note << ")";
    out << '\n';
    if (c.pass()) ++passed;
  }
  out << "summary: " << passed << "/" << checks.size() << " rows pass, " << fx.errors.size() << " malformed\n";
  return passed == checks.size() && fx.errors.empty() ? 0 : 1;
}

int cmd_maiorana(int m, const std::string& q, const std::string& v, bool enumerate, const Globals& g,
                 std::ostream& out) {
  auto checked = [](const MvFunction& f) {
    if (!is_bent(f).is_bent) throw std::logic_error("maiorana produced a non-bent function " + f.digits());
    return f;
  };
  if (enumerate) {
    const auto set = maiorana_enumerate(m, g.jobs);
    for (const auto& f : set) out << checked(f).digits() << '\n';
    out << "count " << set.size() << '\n';
    return 0;
  }
  if (q.empty() || v.empty()) throw UsageError("maiorana needs --q and --v, or --enumerate");
  if (m != 1) throw UsageError("only --m 1 has a Q catalog");
  const MvFunction f = maiorana({m, gamma(q), MvFunction::from_digits(3, m, v)});
  out << checked(f).digits() << '\n';
  return 0;
}

int cmd_oracle(const std::string& emit, int n, const Globals& g, std::ostream& out) {
  const auto bent = all_bent(3, n, g.jobs);
  if (emit == "json") {
    nlohmann::ordered_json j;
    j["p"] = 3;
    j["n"] = n;
    j["count"] = bent.size();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& f : bent) arr.push_back(f.digits());
    j["functions"] = arr;
    out << (g.pretty ? j.dump(2) : j.dump()) << '\n';
  } else {
    for (const auto& f : bent) out << f.digits() << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vilenkin-Chrestenson spectra and ternary bent functions", "bentlab"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--jobs", g.jobs, "Worker threads for enumeration commands")->check(CLI::PositiveNumber);
  app.add_flag("--pretty", g.pretty, "Human-oriented output (ξ, indented JSON)");

  int p = 3, n = -1;
  std::string values;
  bool fast = false;
  auto* spectrum = app.add_subcommand("spectrum", "Circular spectrum of a function");
  spectrum->add_option("--p", p, "Radix")->check(CLI::Range(3, 6));
  spectrum->add_option("--n", n, "Number of variables (default: from the digit count)");
  spectrum->add_option("--values", values, "Value vector digits")->required();
  spectrum->add_flag("--fast", fast, "Use the butterfly transform");

  auto* check = app.add_subcommand("check", "Bent verdict as JSON");
  check->add_option("--p", p, "Radix")->check(CLI::Range(3, 6));
  check->add_option("--n", n, "Number of variables");
  check->add_option("--values", values, "Value vector digits")->required();

  std::string expr, spectrum_path, function_digits, via = "dense";
  bool as_w = false;
  auto* permute = app.add_subcommand("permute", "Apply a generalized permutation to a spectrum");
  permute->add_option("--expr", expr, "Permutation expression")->required();
  auto* spec_opt = permute->add_option("--spectrum", spectrum_path, "Spectrum file");
  auto* fn_opt = permute->add_option("--function", function_digits, "Function value vector");
  spec_opt->excludes(fn_opt);
  permute->add_option("--p", p, "Radix")->check(CLI::Range(3, 6));
  permute->add_option("--via", via, "Conjugation route")->check(CLI::IsMember({"dense", "table"}));
  permute->add_flag("--as-w", as_w, "Treat the expression as W and apply it to F");

  int class_id = 0;
  bool all = false, rotations = false;
  std::string out_path;
  auto* enumerate = app.add_subcommand("enumerate", "Class records or the generated set");
  auto* class_opt = enumerate->add_option("--class", class_id, "Class 1..9");
  enumerate->add_flag("--all", all, "All generated functions")->excludes(class_opt);
  enumerate->add_flag("--rotations", rotations, "Emit the 54 rotations of the class");
  enumerate->add_option("--out", out_path, "Output file");

  std::string fixture;
  auto* verify = app.add_subcommand("verify-appendix", "Check appendix fixture rows");
  verify->add_option("fixture", fixture, "Fixture TSV")->required();

  int m = 1;
  std::string q, v;
  bool enum_maiorana = false;
  auto* mai = app.add_subcommand("maiorana", "Maiorana construction");
  mai->add_option("--m", m, "Half the number of variables");
  mai->add_option("--q", q, "Straight permutation name (I, P01, P12, N, X, XT)");
  mai->add_option("--v", v, "Row vector digits");
  mai->add_flag("--enumerate", enum_maiorana, "Enumerate all (Q, v)");

  DemoOptions demo_opt;
  auto* demo = app.add_subcommand("demo", "Replay a worked example");
  demo->add_option("--case", demo_opt.which, "1, 2, 3, 4 or theorem4")
      ->required()
      ->check(CLI::IsMember({"1", "2", "3", "4", "theorem4"}));
  demo->add_option("--p", demo_opt.p, "Radix for theorem4")->check(CLI::Range(3, 6));

  std::string emit = "tsv";
  int oracle_n = 2;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive bent scan");
  oracle->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  oracle->add_option("--n", oracle_n, "Number of variables")->check(CLI::Range(1, 2));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*spectrum) return cmd_spectrum(p, n, values, fast, g, out);
    if (*check) return cmd_check(p, n, values, g, out);
    if (*permute) {
      if (spectrum_path.empty() && function_digits.empty()) throw UsageError("permute needs --spectrum or --function");
      return cmd_permute(expr, spectrum_path, function_digits, p, via, as_w, g, out);
    }
    if (*enumerate) {
      if (!all && class_id == 0) throw UsageError("enumerate needs --class K or --all");
      return cmd_enumerate(class_id, all, rotations, out_path, g, out);
    }
    if (*verify) return cmd_verify_appendix(fixture, out);
    if (*mai) return cmd_maiorana(m, q, v, enum_maiorana, g, out);
    if (*demo) {
      demo_opt.pretty = g.pretty;
      return run_demo(demo_opt, out);
    }
    if (*oracle) return cmd_oracle(emit, oracle_n, g, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace vcbent::cli
