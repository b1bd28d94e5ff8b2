#ifndef KLAB_ERROR_HPP
#define KLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace klab {

/// Base of every error raised by the library. `kind()` is a stable name
/// used in reports and by the CLI exit-code mapping.
class Error : public std::runtime_error {
   public:
    Error(std::string kind, const std::string& what) : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

   private:
    std::string kind_;
};

#define KLAB_DEFINE_ERROR(Name)                                          \
    class Name : public Error {                                          \
       public:                                                           \
        explicit Name(const std::string& what) : Error(#Name, what) {}   \
    };

// exact linear algebra
KLAB_DEFINE_ERROR(DimensionMismatch)
KLAB_DEFINE_ERROR(NoSolution)
KLAB_DEFINE_ERROR(CompositionNotZero)
KLAB_DEFINE_ERROR(NotPrime)

// algebra / module axioms
KLAB_DEFINE_ERROR(MalformedDescription)
KLAB_DEFINE_ERROR(DifferentialSquareViolation)
KLAB_DEFINE_ERROR(UnitViolation)
KLAB_DEFINE_ERROR(AssociativityViolation)
KLAB_DEFINE_ERROR(GradedCommutativityViolation)
KLAB_DEFINE_ERROR(LeibnizViolation)
KLAB_DEFINE_ERROR(AugmentationViolation)
KLAB_DEFINE_ERROR(DegreeViolation)
KLAB_DEFINE_ERROR(NotASubmodule)
KLAB_DEFINE_ERROR(NotAMorphism)

// constructors
KLAB_DEFINE_ERROR(ParameterOutOfRange)
KLAB_DEFINE_ERROR(RepresentativeDependence)
KLAB_DEFINE_ERROR(NonMonomialInput)
KLAB_DEFINE_ERROR(InvalidRing)

// derived functors
KLAB_DEFINE_ERROR(BudgetExceeded)
KLAB_DEFINE_ERROR(PreconditionViolation)

// classification
KLAB_DEFINE_ERROR(OutOfScope)
KLAB_DEFINE_ERROR(Unrecognized)

#undef KLAB_DEFINE_ERROR

/// Parse failure with a 1-based column inside the offending string.
class ParseError : public Error {
   public:
    ParseError(const std::string& what, std::size_t column)
        : Error("ParseError", what + " (column " + std::to_string(column) + ")"), column_(column) {}
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t column_;
};

}  // namespace klab

#endif
