#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "vcbent/mvfunction.hpp"

namespace vcbent {

/// class<TAB>row<TAB>g<TAB>alpha,beta<TAB>spectrum_exponents
struct AppendixRow {
  std::size_t line = 0;
  int class_id = 0;
  int row = 0;
  MvFunction g;
  std::string alpha;
  std::string beta;
  std::vector<int> exponents;
};

struct FixtureError {
  std::size_t line = 0;
  std::string message;
};

struct Fixture {
  std::vector<AppendixRow> rows;
  std::vector<FixtureError> errors;
};

/// Lines starting with '#' and blank lines are skipped.
Fixture load_appendix(std::istream& in);
Fixture load_appendix_file(const std::string& path);

struct RowCheck {
  AppendixRow row;
  bool exponents_ok = false;  // exponents of S_g match the fixture
  bool member_ok = false;     // g is one of the computed primitives of its class
  bool label_ok = false;      // the fixture's alpha (x) beta maps S_seed to S_g
  bool w_route_ok = false;    // W(2) F_seed == sign_of(g) for the permutation used
  std::string used_label;     // fixture label, or a catalog label when the fixture's fails
  std::string note;
  bool pass() const noexcept { return exponents_ok && member_ok && w_route_ok && !used_label.empty(); }
};

/// Seeds are the class reference functions; labels are advisory.
std::vector<RowCheck> verify_appendix(const std::vector<AppendixRow>& rows);

}  // namespace vcbent
