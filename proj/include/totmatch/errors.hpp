#ifndef TOTMATCH_ERRORS_HPP
#define TOTMATCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace totmatch {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Thrown when an exhaustive routine is asked to exceed its configured size
// bound (element count for enumeration, dimension for hull computations).
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace totmatch

#endif
