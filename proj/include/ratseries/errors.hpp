#pragma once

#include <stdexcept>
#include <string>

namespace ratseries {

// Base class for all analysis-level errors raised by this library.
// Precondition misuse (bad windows, negative sizes, ...) throws
// std::invalid_argument instead.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual const char* type_name() const { return "Error"; }
};

#define RATSERIES_DEFINE_ERROR(Name)                                  \
    struct Name : Error {                                             \
        explicit Name(const std::string& what) : Error(what) {}       \
        const char* type_name() const override { return #Name; }      \
    }

RATSERIES_DEFINE_ERROR(TruncationTooShort);
RATSERIES_DEFINE_ERROR(NonUnitConstantTerm);
RATSERIES_DEFINE_ERROR(ZeroDenominator);
RATSERIES_DEFINE_ERROR(NoRationalFit);
RATSERIES_DEFINE_ERROR(TooFewPoints);
RATSERIES_DEFINE_ERROR(DuplicateNodes);
RATSERIES_DEFINE_ERROR(BadAngles);
RATSERIES_DEFINE_ERROR(BadRadii);
RATSERIES_DEFINE_ERROR(NoCertificate);
RATSERIES_DEFINE_ERROR(QuadratureDivergence);
RATSERIES_DEFINE_ERROR(NoM0);
RATSERIES_DEFINE_ERROR(DegenerateEquation);
RATSERIES_DEFINE_ERROR(SingularIndex);
RATSERIES_DEFINE_ERROR(NonIntegerCoefficient);
RATSERIES_DEFINE_ERROR(StepFailure);
RATSERIES_DEFINE_ERROR(PathOutsideDomain);
RATSERIES_DEFINE_ERROR(LeadingCoeffVanishes);
RATSERIES_DEFINE_ERROR(InconsistentCertificate);

#undef RATSERIES_DEFINE_ERROR

}  // namespace ratseries
