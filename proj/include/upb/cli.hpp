#ifndef UPB_CLI_HPP
#define UPB_CLI_HPP

namespace upb {

// Entry point for the upb-lab command-line tool.  Exit codes:
//   0  success, all checked claims hold
//   1  a checked claim failed
//   2  usage error
//   3  search budget exceeded (rerun with --force)
int run_cli(int argc, char** argv);

} // namespace upb

#endif
