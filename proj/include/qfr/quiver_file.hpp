#ifndef QFR_QUIVER_FILE_HPP
#define QFR_QUIVER_FILE_HPP

#include <string>

#include "qfr/quiver.hpp"

namespace qfr {

/// Parses the line-oriented quiver format:
///
///     # comment
///     vertices 3
///     arrow a 1 -> 2
///     arrow b 2 -> 3
///
/// Throws ParseError carrying the 1-based line of the first problem.
Quiver parse_quiver(const std::string& text);

/// Inverse of parse_quiver up to whitespace and comments.
std::string serialize_quiver(const Quiver& q);

} // namespace qfr

#endif
