#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "derange/counting.hpp"

namespace derange::cli {

/// Runs the command line given args (without the program name), writing
/// regular output to out and diagnostics to err. Returns the process exit
/// code: 0 success, 1 verification mismatch, 2 usage or parse error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// OEIS b-file rendering: one "n a(n)" line per value, newline-terminated,
/// no header.
std::string render_bfile(const SequenceTable& table);

/// Parses b-file text: consecutive ascending indices, big-integer values;
/// '#' comment lines and blank lines are skipped. Returns the start index
/// and the values; throws std::invalid_argument on malformed input.
std::pair<int, std::vector<BigInt>> parse_bfile(std::istream& in);

}  // namespace derange::cli
