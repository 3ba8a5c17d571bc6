#ifndef STG_CLI_HPP
#define STG_CLI_HPP

#include <iosfwd>

namespace stg::cli {

// exit code 0: success/feasible, 1: refuted/infeasible, 2: usage or data error
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace stg::cli

#endif
