#include "doctest.h"
#include "json.hpp"

#include <algorithm>
#include <random>

#include "vcbent/bentlab.hpp"
#include "vcbent/generator.hpp"

using namespace vcbent;

namespace {

MvFunction fn(std::string_view digits) { return MvFunction::from_digits(3, 2, digits); }

std::string exps(const std::vector<int>& t) {
  std::string s;
  for (int e : t) s += static_cast<char>('0' + e);
  return s;
}

const ClassRow* find_label(const ClassRecord& c, std::string_view label) {
  for (const auto& r : c.rows)
    if (std::find(r.producers.begin(), r.producers.end(), label) != r.producers.end()) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("catalog") {
  const auto& cat = kron_perm_catalog();
  CHECK(cat.size() == 35);
  CHECK(cat.front().label() == "I,P01");
  CHECK(cat.front().perm == kron(gamma("I"), gamma("P01")));
  CHECK(cat.back().label() == "XT,XT");
  bool has_xi = false, has_pp = false;
  for (const auto& e : cat) {
    CHECK(e.label() != "I,I");
    CHECK(e.perm.is_straight());
    has_xi |= e.label() == "X,I";
    has_pp |= e.label() == "P01,P01";
  }
  CHECK(has_xi);
  CHECK(has_pp);
}

TEST_CASE("seeds") {
  CHECK(seed_digits().size() == 9);
  CHECK(class_seed(1).digits() == "000012021");
  CHECK(class_seed(6).digits() == "102000012");
  for (int k = 1; k <= 9; ++k) CHECK(is_bent(class_seed(k)).is_bent);
  CHECK_THROWS(class_seed(0));
  CHECK_THROWS(class_seed(10));
}

TEST_CASE("seed expressions match the value vectors") {
  CHECK(eval_polynomial(Polynomial::parse("x1*x2", 3), 2).digits() == "000012021");
  CHECK(eval_polynomial(Polynomial::parse("x1x2 + 2x2 + 2x1^2 + 1", 3), 2).digits() == "102000012");
}

TEST_CASE("every class has 18 distinct bent primitives") {
  for (int k = 1; k <= 9; ++k) {
    const auto rec = generate_class(class_seed(k), k);
    REQUIRE(rec);
    CHECK(rec->rows.size() == 18);
    CHECK(rec->rows.front().g == class_seed(k));
    CHECK(rec->rows.front().alpha == "I");
    std::set<MvFunction> gs;
    std::size_t producers = 0;
    for (const auto& r : rec->rows) {
      gs.insert(r.g);
      producers += r.producers.size();
      const auto t = strict_exponents(circular_spectrum(r.g));
      REQUIRE(t);
      CHECK(t->t == r.spectrum_exponents);
    }
    CHECK(gs.size() == 18);
    CHECK(producers == 36);
  }
}

TEST_CASE("catalog permutations never leave the bent set") {
  for (int k = 1; k <= 9; ++k) {
    const Spectrum s = circular_spectrum(class_seed(k));
    for (const auto& e : kron_perm_catalog()) CHECK(spectrum_is_bent(vcbent::apply(e.perm, s)));
  }
}

TEST_CASE("class rows") {
  const auto c1 = generate_class(class_seed(1), 1);
  REQUIRE(c1);
  const ClassRow* r = find_label(*c1, "P12,I");
  REQUIRE(r);
  CHECK(r->g.digits() == "000021012");
  CHECK(exps(r->spectrum_exponents) == "000012021");

  const auto c4 = generate_class(class_seed(4), 4);
  REQUIRE(c4);
  const ClassRow* r4 = find_label(*c4, "P12,P12");
  REQUIRE(r4);
  CHECK(r4->g.digits() == "100202001");

  const auto c6 = generate_class(class_seed(6), 6);
  REQUIRE(c6);
  const ClassRow* a = find_label(*c6, "X,I");
  const ClassRow* b = find_label(*c6, "P01,P01");
  REQUIRE(a);
  REQUIRE(b);
  CHECK(a == b);
  CHECK(exps(a->spectrum_exponents) == "121001211");
}

TEST_CASE("degenerate seeds are rejected") {
  const auto d = generate_class(MvFunction::constant(3, 2, 0));
  REQUIRE_FALSE(d);
  REQUIRE(d.error().failing_label);
}

TEST_CASE("rotations") {
  const auto c = generate_class(class_seed(1), 1);
  REQUIRE(c);
  const auto all = expand_rotations(*c);
  CHECK(all.size() == 54);
  CHECK(std::set<MvFunction>(all.begin(), all.end()).size() == 54);
  CHECK(std::find(all.begin(), all.end(), add_constant(class_seed(1), 1)) != all.end());
  for (const auto& f : all) CHECK(is_bent(f).is_bent);
}

TEST_CASE("generate_all") {
  const auto all = generate_all(2);
  // the nine seeds reach one sign class only, and pairs of seeds share a rotation orbit
  CHECK(all.size() == 270);
  CHECK(all.count(fn("102012222")) == 1);
  CHECK(generate_all(1) == all);
  for (const auto& f : all) {
    const auto t = strict_exponents(circular_spectrum(f));
    REQUIRE(t);
    CHECK(t->sign == 1);
  }
}

TEST_CASE("maiorana") {
  const MvFunction zero3 = MvFunction::constant(3, 1, 0);
  CHECK(maiorana({1, gamma("I"), zero3}).digits() == "000012021");
  CHECK(maiorana({1, gamma("I"), MvFunction::constant(3, 1, 1)}).digits() == "111120102");
  for (auto q : gamma_names())
    for (int v = 0; v < 27; ++v) {
      const MvFunction vf(3, 1, {static_cast<std::uint8_t>(v / 9), static_cast<std::uint8_t>(v / 3 % 3),
                                 static_cast<std::uint8_t>(v % 3)});
      const MvFunction f = maiorana({1, gamma(q), vf});
      CHECK(is_bent(f).is_strict_bent);
    }
  CHECK_THROWS(maiorana({1, scale(gamma("I"), {1, 1}), zero3}));
  CHECK_THROWS(maiorana({1, GenPerm::identity(3, 9), zero3}));
}

TEST_CASE("maiorana enumeration") {
  const auto m = maiorana_enumerate(1, 2);
  CHECK(m.size() == 162);
  CHECK(maiorana_enumerate(1, 1) == m);
  CHECK(m.count(fn("000012021")) == 1);
  CHECK_THROWS_AS(maiorana_enumerate(2), SizeLimitExceeded);
}

TEST_CASE("maiorana at m = 2 is bent") {
  std::vector<std::size_t> cols(9);
  for (std::size_t i = 0; i < 9; ++i) cols[i] = (i * 4 + 1) % 9;
  std::mt19937 rng(11);
  std::vector<std::uint8_t> v(9);
  for (auto& x : v) x = static_cast<std::uint8_t>(rng() % 3);
  const MvFunction f = maiorana({2, GenPerm::from_columns(3, cols), MvFunction(3, 2, v)});
  CHECK(f.arity() == 4);
  CHECK(is_bent(f).is_strict_bent);
}

TEST_CASE("tensor sum law") {
  const MvFunction x = fn("000012021");
  const auto law = tensor_sum_spectrum_law(x, x);
  CHECK(law.law_holds);
  CHECK(law.f3.arity() == 4);
  const Spectrum s = circular_spectrum(x);
  CHECK(law.spectrum == kron(s, s));
  CHECK(law.spectrum.entries.size() == 81);
  for (const auto& e : law.spectrum.entries) CHECK(abs_squared(e) == CycInt(3, 81));
  const auto g3 = spectrum_is_bent(vcbent::apply(kron(kron(gamma("P12"), gamma("I")), kron(gamma("N"), gamma("I"))), law.spectrum));
  REQUIRE(g3);
  CHECK(is_bent(*g3).is_bent);
  CHECK(commuting_identity(kron(gamma("P12"), gamma("I")), kron(gamma("N"), gamma("I")), s, s));
  CHECK_THROWS_AS(tensor_sum_spectrum_law(x, MvFunction::constant(3, 2, 0)), std::invalid_argument);
}

TEST_CASE("tensor sum set") {
  const std::vector<MvFunction> a{MvFunction::from_digits(3, 1, "001"), MvFunction::from_digits(3, 1, "011")};
  const auto s = tensor_sum_set(a, a);
  CHECK(s.size() == 4);
  CHECK(s.count(MvFunction::from_digits(3, 2, "001001112")) == 1);
}

TEST_CASE("blockdiag survey") {
  const auto s = blockdiag_survey(class_seed(1));
  CHECK(s.triples == 216);
  CHECK(s.outcomes.size() == 216);
  CHECK(s.bent + s.flat_not_bent == 216);
  CHECK(s.prose_count == 815);
  auto find = [&](const char* a, const char* b, const char* c) -> const BlockdiagOutcome& {
    for (const auto& o : s.outcomes)
      if (o.blocks == std::array<std::string, 3>{a, b, c}) return o;
    FAIL("missing triple");
    return s.outcomes.front();
  };
  const auto& iix = find("I", "I", "X");
  CHECK(iix.bent);
  CHECK(exps(iix.exponents) == "000021201");
  const auto& iip = find("I", "I", "P12");
  CHECK_FALSE(iip.bent);
  CHECK(exps(iip.exponents) == "000021021");
  REQUIRE(iip.stage);
  for (auto a : gamma_names()) {
    const auto& o = find(std::string(a).c_str(), "I", "X");
    REQUIRE(o.g);
    CHECK(*o.g == *iix.g);
  }
}

TEST_CASE("class JSON") {
  const auto c = generate_class(class_seed(1), 1);
  REQUIRE(c);
  const auto j = nlohmann::json::parse(to_json(*c));
  CHECK(j["class"] == 1);
  CHECK(j["seed"] == "000012021");
  CHECK(j["rows"].size() == 18);
  CHECK(j["rows"][0]["g"] == "000012021");
}
