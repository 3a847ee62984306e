#pragma once

#include <stdexcept>
#include <string>

namespace spindle {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define SPINDLE_ERROR(Name)                                                    \
    struct Name : Error {                                                      \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}   \
    }

SPINDLE_ERROR(ZeroDivision);
SPINDLE_ERROR(RadicandOutsideField);
SPINDLE_ERROR(CapExceeded);
SPINDLE_ERROR(OrderMismatch);
SPINDLE_ERROR(NotNonCrossing);
SPINDLE_ERROR(OddOrder);
SPINDLE_ERROR(PrecedenceViolation);
SPINDLE_ERROR(NotAdjacent);
SPINDLE_ERROR(InvalidSplitIndex);
SPINDLE_ERROR(SequenceTooShort);
SPINDLE_ERROR(GroupTooLarge);
SPINDLE_ERROR(NotEven);
SPINDLE_ERROR(NotConnected);
SPINDLE_ERROR(DegreeMismatch);
SPINDLE_ERROR(NotFree);
SPINDLE_ERROR(NotReduced);
SPINDLE_ERROR(UnsupportedTangleShape);
SPINDLE_ERROR(NegativeBooleanCumulant);
SPINDLE_ERROR(NotClosedUnderConcatenation);

#undef SPINDLE_ERROR

// Parse failure with a source location, used by the expression DSL and the
// text readers.
struct SyntaxError : Error {
    int line;
    int col;
    std::string expected;
    SyntaxError(int line_, int col_, const std::string& expected_)
        : Error("SyntaxError: line " + std::to_string(line_) + ", col " +
                std::to_string(col_) + ": expected " + expected_),
          line(line_), col(col_), expected(expected_) {}
};

}  // namespace spindle
