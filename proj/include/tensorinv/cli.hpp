#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tensorinv/arc_diagram.hpp"

namespace tensorinv::cli {

/// One printed reference value together with the table slice it came from.
struct ReferenceEntry {
  std::string table;  // table1 .. table4
  Group group;
  int n;               // 0 stands for the stable (n -> infinity) row
  int m;               // tensor order; for GL/SL p + q
  int p;               // GL/SL only
  int q;
  long expected;
  std::string provenance;
};

/// Every embedded reference value, in table order.
const std::vector<ReferenceEntry>& reference_entries();

/// Runs one command line (without the program name). Exit codes: 2 on a usage
/// error, 1 if any check reports FAIL, 0 otherwise.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tensorinv::cli
