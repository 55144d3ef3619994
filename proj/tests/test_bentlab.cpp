#include "doctest.h"
#include "json.hpp"

#include <random>

#include "vcbent/bentlab.hpp"
#include "vcbent/genperm.hpp"
#include "vcbent/vctransform.hpp"

using namespace vcbent;

namespace {

CycInt w(int k, int p = 3) { return CycInt::root(p, k); }
MvFunction fn(std::string_view digits) { return MvFunction::from_digits(3, 2, digits); }

Spectrum from_exponents(std::string_view exps) {
  std::vector<CycInt> e;
  for (char c : exps) e.push_back(w(c - '0') * 3);
  return Spectrum{3, 2, e};
}

std::string exps_of(const MvFunction& f) {
  const auto t = strict_exponents(circular_spectrum(f));
  REQUIRE(t);
  return exponent_digits(*t);
}

}  // namespace

TEST_CASE("circular spectrum") {
  CHECK(circular_spectrum(fn("000012021")) == from_exponents("000021012"));
  CHECK(exps_of(fn("200110020")) == "012021222");
  std::vector<CycInt> dc(9, CycInt(3));
  dc[0] = CycInt(3, 9);
  CHECK(circular_spectrum(MvFunction::constant(3, 2, 0)).entries == dc);
}

TEST_CASE("is_bent verdicts") {
  const auto v = is_bent(fn("000012021"));
  CHECK(v.is_flat);
  CHECK(v.is_bent);
  CHECK(v.is_strict_bent);
  CHECK_FALSE(v.failure_witness);
  CHECK(is_bent(fn("022202112")).is_bent);
  const auto c = is_bent(MvFunction::constant(3, 2, 0));
  CHECK_FALSE(c.is_flat);
  CHECK_FALSE(c.is_bent);
  CHECK_FALSE(c.is_strict_bent);
  REQUIRE(c.failure_witness);
  CHECK(c.failure_witness->index == 0);
  CHECK(c.failure_witness->value == CycInt(3, 9));
}

TEST_CASE("spectrum_is_bent") {
  const Spectrum sg = vcbent::apply(kron(gamma("N"), gamma("N")), circular_spectrum(fn("000012021")));
  const auto g = spectrum_is_bent(sg);
  REQUIRE(g);
  CHECK(g->digits() == "021222120");
  CHECK(circular_spectrum(*g) == sg);

  const Spectrum trap = from_exponents("120201012");
  CHECK(is_flat(trap));
  const auto t = spectrum_is_bent(trap);
  REQUIRE_FALSE(t);
  CHECK(t.error().stage == NotBentSpectrum::Stage::NotASign);
  CHECK(t.error().witness.index == 0);
  CHECK(t.error().witness.value.is_zero());
  std::vector<CycInt> expect(9, CycInt(3));
  expect[8] = w(1) * 3;
  const auto inv = inverse(trap);
  REQUIRE(inv);
  CHECK(*inv == expect);

  const auto nb = spectrum_is_bent(from_exponents("000021021"));
  REQUIRE_FALSE(nb);
  CHECK(nb.error().stage != NotBentSpectrum::Stage::NotFlat);

  std::vector<CycInt> dc(9, CycInt(3));
  dc[0] = CycInt(3, 9);
  const auto nf = spectrum_is_bent(Spectrum{3, 2, dc});
  REQUIRE_FALSE(nf);
  CHECK(nf.error().stage == NotBentSpectrum::Stage::NotFlat);
  CHECK(std::string(to_string(nf.error().stage)) == "not-flat");
  CHECK(std::string(to_string(NotBentSpectrum::Stage::NotDivisible)) == "not-divisible");
  CHECK(std::string(to_string(NotBentSpectrum::Stage::NotASign)) == "not-a-sign");
}

TEST_CASE("spectrum_is_bent inverts circular_spectrum for every function") {
  std::size_t checked = 0;
  for (std::uint32_t code = 0; code < 19683; code += 7) {
    std::vector<std::uint8_t> v(9);
    std::uint32_t c = code;
    for (int i = 8; i >= 0; --i, c /= 3) v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(c % 3);
    const MvFunction f(3, 2, v);
    const Spectrum s = circular_spectrum(f);
    if (!is_flat(s)) continue;
    const auto g = spectrum_is_bent(s);
    REQUIRE(g);
    CHECK(*g == f);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("rotation law") {
  for (const char* d : {"000012021", "200110020", "021222120"}) {
    const MvFunction f = fn(d);
    const Spectrum s = circular_spectrum(f);
    for (int c = 1; c < 3; ++c) {
      const Spectrum r = circular_spectrum(add_constant(f, c));
      for (std::size_t i = 0; i < 9; ++i) CHECK(r.entries[i] == s.entries[i] * w(c));
    }
  }
}

TEST_CASE("strict exponents") {
  const auto t = strict_exponents(circular_spectrum(fn("000012021")));
  REQUIRE(t);
  CHECK(t->sign == 1);
  CHECK(t->t == std::vector<int>{0, 0, 0, 0, 2, 1, 0, 1, 2});
  CHECK(exps_of(fn("020011002")) == "000012210");
  std::vector<CycInt> dc(9, CycInt(3));
  dc[0] = CycInt(3, 9);
  const auto ns = strict_exponents(Spectrum{3, 2, dc});
  REQUIRE_FALSE(ns);
  REQUIRE(ns.error().witness);
  CHECK(ns.error().witness->index == 0);
  const auto odd = strict_exponents(circular_spectrum(MvFunction::from_digits(3, 1, "012")));
  REQUIRE_FALSE(odd);
  CHECK_FALSE(odd.error().witness);
  // one global sign: mixing +3 and -3 w^k is not strict
  std::vector<CycInt> mixed(9, CycInt(3, 3));
  mixed[4] = CycInt(3, -3);
  CHECK_FALSE(strict_exponents(Spectrum{3, 2, mixed}));
  std::vector<CycInt> neg(9, CycInt(3, -3));
  const auto n = strict_exponents(Spectrum{3, 2, neg});
  REQUIRE(n);
  CHECK(n->sign == -1);
  CHECK(exponent_digits(*n) == "-000000000");
}

TEST_CASE("dual") {
  const MvFunction d = dual(fn("000012021"));
  CHECK(d.digits() == "000021012");
  CHECK(is_bent(d).is_bent);
  const MvFunction dd = dual(d);
  CHECK(is_bent(dd).is_bent);
  CHECK(dual(fn("200110020")).digits() == "012021222");
  CHECK_THROWS_AS(dual(MvFunction::constant(3, 2, 0)), std::invalid_argument);
}

TEST_CASE("negate_classify") {
  const auto r3 = negate_classify(fn("000012021"));
  REQUIRE_FALSE(r3);
  CHECK(r3.error().witness.index == 0);
  CHECK(r3.error().witness.value == -w(0));

  const auto r4 = negate_classify(MvFunction::from_digits(4, 1, "0123"));
  REQUIRE(r4);
  CHECK(r4->digits() == "2301");

  std::mt19937 rng(7);
  for (int p : {4, 6}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::uint8_t> v(static_cast<std::size_t>(p * p));
      for (auto& x : v) x = static_cast<std::uint8_t>(rng() % static_cast<unsigned>(p));
      const MvFunction f(p, 2, v);
      const auto g = negate_classify(f);
      REQUIRE(g);
      for (std::size_t i = 0; i < v.size(); ++i) CHECK((*g)[i] == (v[i] + p / 2) % p);
      const auto F = sign_of(f).entries;
      const auto G = sign_of(*g).entries;
      for (std::size_t i = 0; i < v.size(); ++i) CHECK(G[i] == -F[i]);
    }
  }
  const auto r5 = negate_classify(MvFunction::from_digits(5, 1, "31402"));
  REQUIRE_FALSE(r5);
  CHECK(r5.error().witness.value == -w(3, 5));
}

TEST_CASE("verdict JSON") {
  const auto j = nlohmann::json::parse(to_json(is_bent(fn("000012021"))));
  CHECK(j["flat"] == true);
  CHECK(j["bent"] == true);
  CHECK(j["strict"] == true);
  CHECK(j["witness"].is_null());
  const auto k = nlohmann::json::parse(to_json(is_bent(MvFunction::constant(3, 2, 0))));
  CHECK(k["bent"] == false);
  CHECK(k["witness"]["index"] == 0);
  CHECK(k["witness"]["value"] == "9");
  CHECK(to_json(is_bent(fn("000012021")), true).find('\n') != std::string::npos);
}
