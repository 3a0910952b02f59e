#ifndef AMC_CLI_HPP
#define AMC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace amc::cli {

enum Exit : int {
  kOk = 0,
  kInvalid = 2,   // input fails validation, or a supplied diagonal fails verification
  kMismatch = 3,  // two computations of the same object disagree
  kIoError = 4,   // unreadable input, malformed JSON, bad arguments
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace amc::cli

#endif  // AMC_CLI_HPP
