#ifndef MTZ_ERRORS_HPP
#define MTZ_ERRORS_HPP

#include "mtz/singular_set.hpp"

#include <stdexcept>
#include <string>

namespace mtz {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleAtOne : Error {
    PoleAtOne() : Error("zeta pole: s = 1") {}
};

struct OutOfRegion : Error {
    using Error::Error;
};

struct OutsideHolomorphyRegion : Error {
    using Error::Error;
};

struct TailBoundExceeded : Error {
    using Error::Error;
};

struct NearSingularSet : Error {
    SingularityReport report;
    explicit NearSingularSet(SingularityReport r)
        : Error("near singular set: " + r.describe()), report(std::move(r)) {}
};

struct CancellationLoss : Error {
    using Error::Error;
};

struct DegenerateDirection : Error {
    using Error::Error;
};

struct NonPrimeModulus : Error {
    using Error::Error;
};

struct InverseOfZero : Error {
    using Error::Error;
};

struct DegenerateSample : Error {
    using Error::Error;
};

struct IndeterminateAtLattice : Error {
    using Error::Error;
};

} // namespace mtz

#endif
