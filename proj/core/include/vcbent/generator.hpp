#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "vcbent/bentlab.hpp"
#include "vcbent/expected.hpp"
#include "vcbent/genperm.hpp"
#include "vcbent/mvfunction.hpp"

namespace vcbent {

/// alpha (x) beta with alpha, beta in Gamma.
struct CatalogEntry {
  std::string alpha;
  std::string beta;
  GenPerm perm;
  std::string label() const { return alpha + "," + beta; }
};

/// The 35 products alpha (x) beta other than I (x) I, alpha-major in Gamma
/// order.
const std::vector<CatalogEntry>& kron_perm_catalog();

/// Reference functions of the nine classes, as value-vector digits.
const std::array<std::string_view, 9>& seed_digits();
MvFunction class_seed(int class_id);

struct ClassRow {
  int index = 0;
  MvFunction g;
  std::string alpha;
  std::string beta;
  std::vector<int> spectrum_exponents;
  /// Every catalog label producing this g, in catalog order.
  std::vector<std::string> producers;
};

struct ClassRecord {
  int class_id = 0;
  MvFunction seed;
  std::vector<ClassRow> rows;
};

struct DegenerateSeed {
  std::size_t distinct = 0;
  std::optional<std::string> failing_label;  // set when a permuted spectrum is not bent
};

/// The seed row first (label I,I), the other 17 sorted by g.
Expected<ClassRecord, DegenerateSeed> generate_class(const MvFunction& seed, int class_id = 0);

/// Rows plus their +1 and +2 shifts, 54 functions.
std::vector<MvFunction> expand_rotations(const ClassRecord& c);

/// Union of expand_rotations over the nine classes.
std::set<MvFunction> generate_all(int jobs = 1);

struct MaioranaSpec {
  int m = 1;
  GenPerm q;
  MvFunction v;
};

/// vec( M Q + 1 (x) v^T ) with M(i,j) = <i.j> mod 3, all mod 3.
MvFunction maiorana(const MaioranaSpec& spec);

/// All straight Q of size 3 and all 27 v; m = 1 only.
std::set<MvFunction> maiorana_enumerate(int m, int jobs = 1);

/// Kronecker product of spectra.
Spectrum kron(const Spectrum& a, const Spectrum& b);

struct TensorSumLaw {
  MvFunction f3;
  Spectrum spectrum;  // circular_spectrum(f3)
  bool law_holds = false;  // spectrum == S_f1 (x) S_f2
};
/// Throws std::invalid_argument unless both inputs are bent.
TensorSumLaw tensor_sum_spectrum_law(const MvFunction& f1, const MvFunction& f2);

/// (P1 (x) P2)(S1 (x) S2) == (P1 S1) (x) (P2 S2).
bool commuting_identity(const GenPerm& p1, const GenPerm& p2, const Spectrum& s1, const Spectrum& s2);

/// {a (+) b : a in A, b in B}.
std::set<MvFunction> tensor_sum_set(const std::vector<MvFunction>& a, const std::vector<MvFunction>& b);

struct BlockdiagOutcome {
  std::array<std::string, 3> blocks;
  std::vector<int> exponents;  // exponents of the permuted spectrum over 3
  bool bent = false;
  std::optional<MvFunction> g;
  std::optional<NotBentSpectrum::Stage> stage;
};

struct BlockdiagSurvey {
  std::size_t triples = 0;
  std::size_t bent = 0;
  std::size_t flat_not_bent = 0;
  std::size_t distinct_bent = 0;
  /// 120*3! + 30*3 + 5; reported for comparison, never asserted.
  std::size_t prose_count = 815;
  std::vector<BlockdiagOutcome> outcomes;
};

/// blockdiag(a, b, c) for all a, b, c in Gamma applied to S_seed.
BlockdiagSurvey blockdiag_survey(const MvFunction& seed);

std::string to_json(const ClassRecord& c, bool pretty = false);

}  // namespace vcbent
