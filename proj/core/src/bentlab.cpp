#include "vcbent/bentlab.hpp"

#include "json.hpp"

namespace vcbent {

Spectrum circular_spectrum(const MvFunction& f, std::size_t limit) { return forward_fast(sign_of(f), limit); }

BentVerdict is_bent(const MvFunction& f, std::size_t limit) {
  BentVerdict v;
  const Spectrum s = circular_spectrum(f, limit);
  const CycInt target(s.p, static_cast<std::int64_t>(checked_pow(s.p, s.n)));
  for (std::size_t w = 0; w < s.entries.size(); ++w) {
    if (abs_squared(s.entries[w]) != target) {
      v.failure_witness = Witness{w, s.entries[w]};
      return v;
    }
  }
  v.is_flat = true;
  v.is_bent = true;
  auto strict = strict_exponents(s);
  v.is_strict_bent = strict.has_value();
  if (!strict && strict.error().witness) v.failure_witness = strict.error().witness;
  return v;
}

const char* to_string(NotBentSpectrum::Stage s) {
  switch (s) {
    case NotBentSpectrum::Stage::NotFlat: return "not-flat";
    case NotBentSpectrum::Stage::NotDivisible: return "not-divisible";
    case NotBentSpectrum::Stage::NotASign: return "not-a-sign";
  }
  return "?";
}

Expected<MvFunction, NotBentSpectrum> spectrum_is_bent(const Spectrum& s, std::size_t limit) {
  const CycInt target(s.p, static_cast<std::int64_t>(checked_pow(s.p, s.n)));
  for (std::size_t w = 0; w < s.entries.size(); ++w)
    if (abs_squared(s.entries[w]) != target)
      return NotBentSpectrum{NotBentSpectrum::Stage::NotFlat, {w, s.entries[w]}};
  auto f = inverse(s, limit);
  if (!f) {
    std::vector<CycInt> raw = apply_c_fast(s.p, s.n, s.entries, false, limit);
    return NotBentSpectrum{NotBentSpectrum::Stage::NotDivisible, {f.error().index, raw[f.error().index]}};
  }
  auto g = try_from_sign(s.p, s.n, *f);
  if (!g) return NotBentSpectrum{NotBentSpectrum::Stage::NotASign, {g.error().index, g.error().value}};
  return *g;
}

Expected<StrictForm, NotStrict> strict_exponents(const Spectrum& s) {
  if (s.n % 2 != 0) return NotStrict{};
  const auto root = static_cast<std::int64_t>(checked_pow(s.p, s.n / 2));
  StrictForm form;
  form.t.reserve(s.entries.size());
  for (std::size_t w = 0; w < s.entries.size(); ++w) {
    auto q = div_exact_int(s.entries[w], root);
    if (!q) return NotStrict{Witness{w, s.entries[w]}};
    auto r = as_root_scalar(*q);
    if (!r) return NotStrict{Witness{w, s.entries[w]}};
    if (w == 0) form.sign = r->sign;
    if (r->sign != form.sign) return NotStrict{Witness{w, s.entries[w]}};
    form.t.push_back(r->exponent);
  }
  return form;
}

MvFunction dual(const MvFunction& f) {
  auto form = strict_exponents(circular_spectrum(f));
  if (!form) throw std::invalid_argument("dual: function is not strict bent");
  std::vector<std::uint8_t> v(form->t.begin(), form->t.end());
  return MvFunction(f.radix(), f.arity(), std::move(v));
}

Expected<MvFunction, NotAFunction> negate_classify(const MvFunction& f) {
  const int p = f.radix();
  SignVector neg = sign_of(f);
  for (auto& e : neg.entries) e = -e;
  if (p % 2 != 0) return NotAFunction{Witness{0, neg.entries.front()}};
  MvFunction g = add_constant(f, p / 2);
  if (!(sign_of(g) == neg)) throw std::logic_error("negate_classify: shifted function does not match -F");
  return g;
}

std::string to_json(const BentVerdict& v, bool pretty) {
  nlohmann::ordered_json j;
  j["flat"] = v.is_flat;
  j["bent"] = v.is_bent;
  j["strict"] = v.is_strict_bent;
  if (v.failure_witness)
    j["witness"] = {{"index", v.failure_witness->index}, {"value", to_root_string(v.failure_witness->value)}};
  else
    j["witness"] = nullptr;
  return pretty ? j.dump(2) : j.dump();
}

std::string exponent_digits(const StrictForm& s) {
  std::string out = s.sign < 0 ? "-" : "";
  for (int t : s.t) out.push_back(static_cast<char>('0' + t));
  return out;
}

}  // namespace vcbent
