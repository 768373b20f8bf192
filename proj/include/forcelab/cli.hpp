#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace forcelab {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when a verification finds a counterexample, 2 on usage or input errors.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Decimal digits for dilatations: FORCELAB_PRECISION, default 30.
int precision_from_env();

}  // namespace forcelab
