#pragma once

#include <stdexcept>
#include <string>

namespace tilingforge {

// Root of every exception thrown by the library. The CLI maps these to a
// nonzero exit code and prints name() together with the stage that failed.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* name() const noexcept { return "Error"; }
};

#define TILINGFORGE_DEFINE_ERROR(Type)                                   \
    class Type : public Error {                                          \
    public:                                                              \
        using Error::Error;                                              \
        const char* name() const noexcept override { return #Type; }   \
    }

// core
TILINGFORGE_DEFINE_ERROR(ParseError);
TILINGFORGE_DEFINE_ERROR(MalformedError);
TILINGFORGE_DEFINE_ERROR(GenusError);
TILINGFORGE_DEFINE_ERROR(FaceMismatchError);
TILINGFORGE_DEFINE_ERROR(DisconnectedError);
TILINGFORGE_DEFINE_ERROR(PreconditionError);

// kasteleyn
TILINGFORGE_DEFINE_ERROR(NoSolutionError);
TILINGFORGE_DEFINE_ERROR(DimensionError);
TILINGFORGE_DEFINE_ERROR(ZeroPolynomialError);
TILINGFORGE_DEFINE_ERROR(NoMatchingError);
TILINGFORGE_DEFINE_ERROR(ArityError);

// mutation
TILINGFORGE_DEFINE_ERROR(NotDualizableError);
TILINGFORGE_DEFINE_ERROR(ToricViolationError);
TILINGFORGE_DEFINE_ERROR(MultiVisitError);
TILINGFORGE_DEFINE_ERROR(SpliceError);

// geometry
TILINGFORGE_DEFINE_ERROR(InfeasibleError);
TILINGFORGE_DEFINE_ERROR(ConvergenceError);
TILINGFORGE_DEFINE_ERROR(ConsistencyError);
TILINGFORGE_DEFINE_ERROR(PrecisionError);

// dessin
TILINGFORGE_DEFINE_ERROR(NonIntegerGenusError);

// plethystics
TILINGFORGE_DEFINE_ERROR(DivisionByZeroConstantError);
TILINGFORGE_DEFINE_ERROR(UnitConstantError);

// amoeba
TILINGFORGE_DEFINE_ERROR(DegenerateError);

#undef TILINGFORGE_DEFINE_ERROR

}  // namespace tilingforge
