#pragma once

#include <string>

namespace newtres {

/// Shortest decimal that round-trips to the same double (std::to_chars).
/// Used everywhere text output must be byte-reproducible.
std::string format_double(double v);

}  // namespace newtres
