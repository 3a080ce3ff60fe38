#pragma once

#include <stdexcept>
#include <string>

namespace nullsolve {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ivpoly
struct NonIntegralResult : Error { using Error::Error; };

// covering
struct EmptySet : Error { using Error::Error; };
struct NotAResidueSystem : Error { using Error::Error; };
struct CoversZero : Error { using Error::Error; };
struct ZeroMissing : Error { using Error::Error; };
struct NotDistinctModP : Error { using Error::Error; };
struct ZeroInSet : Error { using Error::Error; };
struct RangeViolation : Error { using Error::Error; };

// lift
struct DegreeBoundViolated : Error { using Error::Error; };
struct ZeroUnitViolated : Error { using Error::Error; };
struct FullCoefficientZero : Error { using Error::Error; };

// olson / graphs
struct CapExceeded : Error { using Error::Error; };
struct EngineUnsupported : Error { using Error::Error; };
struct ColumnSumNotDivisible : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };

// ppa
struct MalformedNode : Error { using Error::Error; };
struct NotIncident : Error { using Error::Error; };
struct InvalidInstance : Error { using Error::Error; };
struct StepCapExceeded : CapExceeded { using CapExceeded::CapExceeded; };

/// Parse failure with 1-based source position.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error("parse error at line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ": " + msg),
          line(line_), column(column_) {}
};

} // namespace nullsolve
