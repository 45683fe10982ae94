#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pvg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define PVG_DEFINE_ERROR(Name)                    \
    class Name : public Error {                   \
    public:                                       \
        using Error::Error;                       \
    };

PVG_DEFINE_ERROR(DivisionByZero)
PVG_DEFINE_ERROR(DimensionMismatch)
PVG_DEFINE_ERROR(SingularMatrix)
PVG_DEFINE_ERROR(PoleAtEvaluationPoint)
PVG_DEFINE_ERROR(NeedsUserBound)
PVG_DEFINE_ERROR(Inconclusive)
PVG_DEFINE_ERROR(NonRationalResidueOrPole)
PVG_DEFINE_ERROR(UnmappedGenerator)
PVG_DEFINE_ERROR(InvalidGenerator)
PVG_DEFINE_ERROR(NotConstant)
PVG_DEFINE_ERROR(NotRational)
PVG_DEFINE_ERROR(NonUnitDeterminant)
PVG_DEFINE_ERROR(SourceTargetMismatch)
PVG_DEFINE_ERROR(IntertwiningFails)
PVG_DEFINE_ERROR(InconsistentRowLength)
PVG_DEFINE_ERROR(InputError)

#undef PVG_DEFINE_ERROR

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace pvg
