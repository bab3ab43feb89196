#pragma once

#include <stdexcept>
#include <string>

namespace maclab {

// Base of every error raised by the library. The `kind` string is stable and
// is what the CLI prints in machine-readable reports.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define MACLAB_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
    }

MACLAB_DEFINE_ERROR(DenominatorNotUnit);
MACLAB_DEFINE_ERROR(DivisionByZero);
MACLAB_DEFINE_ERROR(NotDivisible);
MACLAB_DEFINE_ERROR(RingMismatch);
MACLAB_DEFINE_ERROR(UnknownVariable);
MACLAB_DEFINE_ERROR(NonConvergent);
MACLAB_DEFINE_ERROR(NotATableau);
MACLAB_DEFINE_ERROR(DenominatorSurvives);
MACLAB_DEFINE_ERROR(EigenvalueCollision);
MACLAB_DEFINE_ERROR(TerminationFailure);
MACLAB_DEFINE_ERROR(InvalidArgument);
MACLAB_DEFINE_ERROR(ParseError);
MACLAB_DEFINE_ERROR(CacheError);

#undef MACLAB_DEFINE_ERROR

}  // namespace maclab
