#ifndef CYCLODET_CLI_HPP
#define CYCLODET_CLI_HPP

namespace cyclodet::cli {

// Full command-line front end; returns the process exit code.
// 0 = success / no failed record, 1 = some verification failed,
// 2 = usage or environment error.
int run(int argc, const char* const* argv);

}  // namespace cyclodet::cli

#endif
