#ifndef QFR_ERRORS_HPP
#define QFR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qfr {

// Shape/size mismatches between operands.
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// A documented operation precondition does not hold for the given input.
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Upper-triangular input whose diagonal has a repeated entry where pairwise
// distinct eigenvalues are required.
struct NotRegularSemisimpleError : PreconditionError {
    explicit NotRegularSemisimpleError(const std::string& what) : PreconditionError(what) {}
};

// A condition the library itself guarantees failed; indicates a bug, not bad input.
struct InternalInvariantError : std::logic_error {
    explicit InternalInvariantError(const std::string& what) : std::logic_error(what) {}
};

// Text-format errors, tagged with the 1-based source line.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

} // namespace qfr

#endif
