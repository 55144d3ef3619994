#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vcbent/cyclotomic.hpp"
#include "vcbent/expected.hpp"
#include "vcbent/mvfunction.hpp"
#include "vcbent/vctransform.hpp"

namespace vcbent {

struct Witness {
  std::size_t index = 0;
  CycInt value;
};

struct BentVerdict {
  bool is_flat = false;
  bool is_bent = false;
  bool is_strict_bent = false;
  std::optional<Witness> failure_witness;
};

/// forward_fast(sign_of(f)).
Spectrum circular_spectrum(const MvFunction& f, std::size_t limit = kDefaultSizeLimit);

BentVerdict is_bent(const MvFunction& f, std::size_t limit = kDefaultSizeLimit);

struct NotBentSpectrum {
  enum class Stage { NotFlat, NotDivisible, NotASign };
  Stage stage = Stage::NotFlat;
  Witness witness;
};
const char* to_string(NotBentSpectrum::Stage s);

/// Recovers g with circular_spectrum(g) == S, checking flat, divisible and
/// sign in that order.
Expected<MvFunction, NotBentSpectrum> spectrum_is_bent(const Spectrum& s, std::size_t limit = kDefaultSizeLimit);

/// S(w) = sign * p^(n/2) * xi^t(w) with one global sign.
struct StrictForm {
  int sign = 1;
  std::vector<int> t;
};
struct NotStrict {
  std::optional<Witness> witness;  // empty when n is odd
};
Expected<StrictForm, NotStrict> strict_exponents(const Spectrum& s);

/// t of the strict form as a function. Throws std::invalid_argument when f is
/// not strict bent.
MvFunction dual(const MvFunction& f);

struct NotAFunction {
  Witness witness;
};
/// The function whose sign vector is -sign_of(f): f + p/2 for even p; no
/// such function exists for odd p.
Expected<MvFunction, NotAFunction> negate_classify(const MvFunction& f);

/// {"flat":..,"bent":..,"strict":..,"witness":{"index":i,"value":"..."}|null}
std::string to_json(const BentVerdict& v, bool pretty = false);

/// Strict exponents as digits, e.g. "000021012"; sign -1 is prefixed "-".
std::string exponent_digits(const StrictForm& s);

}  // namespace vcbent
