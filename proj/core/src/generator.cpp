#include "vcbent/generator.hpp"

#include <map>
#include <mutex>

#include "json.hpp"
#include "parallel.hpp"
#include "vcbent/vctransform.hpp"

namespace vcbent {

const std::vector<CatalogEntry>& kron_perm_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> out;
    for (auto a : gamma_names())
      for (auto b : gamma_names()) {
        if (a == "I" && b == "I") continue;
        out.push_back({std::string(a), std::string(b), kron(gamma(a), gamma(b))});
      }
    return out;
  }();
  return catalog;
}

const std::array<std::string_view, 9>& seed_digits() {
  static const std::array<std::string_view, 9> seeds{"000012021", "001010022", "210000012", "100010220", "200110020",
                                                     "102000012", "000201021", "000021120", "020011002"};
  return seeds;
}

MvFunction class_seed(int class_id) {
  if (class_id < 1 || class_id > 9) throw std::out_of_range("class id must be in 1..9");
  return MvFunction::from_digits(3, 2, seed_digits()[static_cast<std::size_t>(class_id - 1)]);
}

Expected<ClassRecord, DegenerateSeed> generate_class(const MvFunction& seed, int class_id) {
  if (seed.radix() != 3 || seed.arity() != 2) throw std::invalid_argument("generate_class: seed must have p = 3, n = 2");
  const Spectrum s = circular_spectrum(seed);
  std::map<MvFunction, std::vector<const CatalogEntry*>> found;
  for (const auto& entry : kron_perm_catalog()) {
    auto g = spectrum_is_bent(apply(entry.perm, s));
    if (!g) return DegenerateSeed{found.size(), entry.label()};
    found[*g].push_back(&entry);
  }
  std::size_t distinct = found.size() + (found.count(seed) ? 0 : 1);
  if (distinct != 18) return DegenerateSeed{distinct, std::nullopt};

  auto make_row = [](const MvFunction& g, const std::string& a, const std::string& b) {
    ClassRow row;
    row.g = g;
    row.alpha = a;
    row.beta = b;
    auto form = strict_exponents(circular_spectrum(g));
    if (!form) throw std::logic_error("generate_class: primitive is not strict bent");
    row.spectrum_exponents = form->t;
    return row;
  };

  ClassRecord rec;
  rec.class_id = class_id;
  rec.seed = seed;
  rec.rows.push_back(make_row(seed, "I", "I"));
  rec.rows.back().producers.push_back("I,I");
  if (auto it = found.find(seed); it != found.end())
    for (const auto* e : it->second) rec.rows.back().producers.push_back(e->label());
  for (const auto& [g, producers] : found) {
    if (g == seed) continue;
    rec.rows.push_back(make_row(g, producers.front()->alpha, producers.front()->beta));
    for (const auto* e : producers) rec.rows.back().producers.push_back(e->label());
  }
  for (std::size_t i = 0; i < rec.rows.size(); ++i) rec.rows[i].index = static_cast<int>(i) + 1;
  return rec;
}

std::vector<MvFunction> expand_rotations(const ClassRecord& c) {
  std::vector<MvFunction> out;
  out.reserve(c.rows.size() * 3);
  for (int k = 0; k < 3; ++k)
    for (const auto& row : c.rows) out.push_back(add_constant(row.g, k));
  return out;
}

std::set<MvFunction> generate_all(int jobs) {
  std::vector<std::vector<MvFunction>> parts(9);
  detail::parallel_for(9, jobs, [&](std::size_t i) {
    const int id = static_cast<int>(i) + 1;
    auto rec = generate_class(class_seed(id), id);
    if (!rec) throw std::logic_error("generate_all: class " + std::to_string(id) + " seed is degenerate");
    parts[i] = expand_rotations(*rec);
  });
  std::set<MvFunction> all;
  for (const auto& part : parts) all.insert(part.begin(), part.end());
  return all;
}

MvFunction maiorana(const MaioranaSpec& spec) {
  const int m = spec.m;
  const std::size_t side = checked_pow(3, m);
  if (spec.q.radix() != 3 || spec.q.size() != side || !spec.q.is_straight())
    throw std::invalid_argument("maiorana: Q must be a straight permutation of size 3^m");
  if (spec.v.radix() != 3 || spec.v.arity() != m) throw std::invalid_argument("maiorana: v must be a ternary function of m variables");
  std::vector<std::size_t> q_inv(side);
  for (std::size_t k = 0; k < side; ++k) q_inv[spec.q.rows()[k].col] = k;
  Matrix<int> a(side, side, 0);
  for (std::size_t i = 0; i < side; ++i)
    for (std::size_t j = 0; j < side; ++j) a(i, j) = (digit_dot(i, q_inv[j], 3, m) + spec.v[j]) % 3;
  const auto flat = vec_columns(a);
  return MvFunction(3, 2 * m, std::vector<std::uint8_t>(flat.begin(), flat.end()));
}

std::set<MvFunction> maiorana_enumerate(int m, int jobs) {
  if (m != 1) throw SizeLimitExceeded(checked_pow(3, 2 * m), checked_pow(3, 2));
  std::vector<std::vector<MvFunction>> parts(gamma_names().size());
  detail::parallel_for(parts.size(), jobs, [&](std::size_t qi) {
    const GenPerm q = gamma(gamma_names()[qi]);
    for (std::size_t code = 0; code < 27; ++code) {
      std::vector<std::uint8_t> v(3);
      for (int i = 0; i < 3; ++i) v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(digits_of(code, 3, 3)[static_cast<std::size_t>(i)]);
      parts[qi].push_back(maiorana({1, q, MvFunction(3, 1, std::move(v))}));
    }
  });
  std::set<MvFunction> out;
  for (const auto& part : parts) out.insert(part.begin(), part.end());
  return out;
}

Spectrum kron(const Spectrum& a, const Spectrum& b) {
  if (a.p != b.p) throw RadixMismatch(a.p, b.p);
  Spectrum out{a.p, a.n + b.n, {}};
  out.entries.reserve(a.entries.size() * b.entries.size());
  for (const auto& x : a.entries)
    for (const auto& y : b.entries) out.entries.push_back(x * y);
  return out;
}

TensorSumLaw tensor_sum_spectrum_law(const MvFunction& f1, const MvFunction& f2) {
  if (!is_bent(f1).is_bent || !is_bent(f2).is_bent) throw std::invalid_argument("tensor_sum_spectrum_law: inputs must be bent");
  TensorSumLaw law{tensor_sum(f1, f2), {}, false};
  law.spectrum = circular_spectrum(law.f3);
  law.law_holds = law.spectrum == kron(circular_spectrum(f1), circular_spectrum(f2));
  return law;
}

bool commuting_identity(const GenPerm& p1, const GenPerm& p2, const Spectrum& s1, const Spectrum& s2) {
  return apply(kron(p1, p2), kron(s1, s2)) == kron(apply(p1, s1), apply(p2, s2));
}

std::set<MvFunction> tensor_sum_set(const std::vector<MvFunction>& a, const std::vector<MvFunction>& b) {
  std::set<MvFunction> out;
  for (const auto& x : a)
    for (const auto& y : b) out.insert(tensor_sum(x, y));
  return out;
}

BlockdiagSurvey blockdiag_survey(const MvFunction& seed) {
  if (seed.radix() != 3 || seed.arity() != 2) throw std::invalid_argument("blockdiag_survey: seed must have p = 3, n = 2");
  const Spectrum s = circular_spectrum(seed);
  BlockdiagSurvey survey;
  std::set<MvFunction> distinct;
  for (auto a : gamma_names())
    for (auto b : gamma_names())
      for (auto c : gamma_names()) {
        BlockdiagOutcome o;
        o.blocks = {std::string(a), std::string(b), std::string(c)};
        const Spectrum t = apply(block_diag({gamma(a), gamma(b), gamma(c)}), s);
        if (auto form = strict_exponents(t)) o.exponents = form->t;
        auto g = spectrum_is_bent(t);
        if (g) {
          o.bent = true;
          o.g = *g;
          distinct.insert(*g);
          ++survey.bent;
        } else {
          o.stage = g.error().stage;
          if (is_flat(t)) ++survey.flat_not_bent;
        }
        survey.outcomes.push_back(std::move(o));
      }
  survey.triples = survey.outcomes.size();
  survey.distinct_bent = distinct.size();
  return survey;
}

std::string to_json(const ClassRecord& c, bool pretty) {
  nlohmann::ordered_json j;
  j["class"] = c.class_id;
  j["seed"] = c.seed.digits();
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : c.rows) {
    std::string exps;
    for (int t : r.spectrum_exponents) exps.push_back(static_cast<char>('0' + t));
    rows.push_back({{"row", r.index},
                    {"g", r.g.digits()},
                    {"alpha", r.alpha},
                    {"beta", r.beta},
                    {"spectrum_exponents", exps},
                    {"producers", r.producers}});
  }
  j["rows"] = rows;
  return pretty ? j.dump(2) : j.dump();
}

}  // namespace vcbent
