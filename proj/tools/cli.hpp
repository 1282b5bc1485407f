#ifndef TORICODE_TOOLS_CLI_HPP
#define TORICODE_TOOLS_CLI_HPP

#include <iosfwd>
#include <stdexcept>
#include <string_view>

#include "toricode/min_distance.hpp"
#include "toricode/polytope.hpp"

namespace toricode::cli {

/// Malformed input file; the message names the source and position.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kInexact = 3 };

/// {"n": 2, "vertices": [[1, 0], [0, 3], [3, 1]]}
LatticePolytope parse_polytope_json(std::string_view text, std::string_view source = "<input>");

/// {"steps": [{"segment": 1}, {"pyramid_scale": 2}]}
ConstructionRecipe parse_recipe_json(std::string_view text, std::string_view source = "<input>");

LatticePolytope bundled_triangle();
LatticePolytope bundled_ex4();

/// Recomputes the worked examples and prints one line each; returns kOk only
/// if all of them match.
int run_examples(const SearchOptions& options, std::ostream& out, std::ostream& err);

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace toricode::cli

#endif  // TORICODE_TOOLS_CLI_HPP
