#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vcbent::cli {

/// Exit codes: 0 success or affirmative verdict, 1 negative verdict,
/// 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct DemoOptions {
  std::string which;
  int p = 0;  // 0: all of 3, 4, 5, 6 for theorem4
  bool pretty = false;
};
int run_demo(const DemoOptions& opt, std::ostream& out);

}  // namespace vcbent::cli
