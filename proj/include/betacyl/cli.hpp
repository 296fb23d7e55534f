#ifndef BETACYL_CLI_HPP
#define BETACYL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace betacyl {

// Command-line driver; args are the tokens after the program name.  Returns
// the process exit code: 0 on success, 2 on usage or precondition errors,
// 3 when certified precision ran out.  Identical invocations write
// byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace betacyl

#endif
