#pragma once

namespace commgraph::cli {

  // Exit codes: 0 success or verified, 1 refuted (a claim checked by the
  // command does not hold), 2 usage error.
  int run(int argc, char** argv);

}  // namespace commgraph::cli
