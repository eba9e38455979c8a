#pragma once

namespace polycell {

// Full command-line front end. Returns the process exit code:
//   0  the requested property holds / output written
//   1  a verified property is false or a counterexample was found
//   2  invalid input (bad arguments, parse errors, violated preconditions)
//   3  search budget exceeded
int run_cli(int argc, const char* const* argv);

}  // namespace polycell
