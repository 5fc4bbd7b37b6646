#pragma once

#include "rgl/dyckmodel.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace rgl::cli {

enum ExitCode { Ok = 0, VerificationFailed = 1, UsageError = 2 };

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Sign grid of one labelled path; paths larger than 40 get a one-line summary.
std::string render_path(const LabeledDyckPath& d);
std::string render_tuple(const DyckTuple& t, const std::vector<Rational>& offsets);

/// Strictly decreasing positive rationals written as integers or p/q, comma separated.
std::vector<Rational> parse_offsets(const std::string& text);

}  // namespace rgl::cli
