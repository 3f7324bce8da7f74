#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "blockfunctor/multiplicity.hpp"

namespace blockfunctor {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitDomain = 3,
  kExitInternal = 4,
};

// One line of a multiplicity report, in output column order.
struct TableRow {
  std::size_t class_id = 0;
  std::size_t l_order = 0;
  std::size_t u_order = 0;
  std::size_t out_order = 0;
  std::size_t irr_index = 0;
  std::size_t irr_degree = 0;
  std::size_t multiplicity = 0;
};

std::vector<TableRow> table_rows(const MultiplicityTable& table, const DDeltaRegistry& registry);

inline constexpr const char* kReportSchema = "blockfunctor.report/1";

// Printed when kG is not certified to be a single block.
inline constexpr const char* kSingleBlockNote =
    "single-block regime not certified: O_p(G) is not self-centralizing, so the table covers all blocks of kG "
    "together";

// Runs the command line `args` (without the program name). Reports go to
// `out`, diagnostics to `err`; the return value is an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blockfunctor
