#ifndef MDIM_CLI_HPP
#define MDIM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mdim {

/// Runs the mdim command line: subcommands gen, reduce, solve-md, solve-ds,
/// rbds, verify. Decision runs exit 0 for yes, 1 for no, 2 for usage or
/// internal errors; identical flags and seed give byte-identical outputs.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

}  // namespace mdim

#endif
