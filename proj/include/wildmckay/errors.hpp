#pragma once

// Exception hierarchy shared by all wildmckay modules.  Every failure mode
// that user input can trigger maps to one of these types; internal logic
// errors use assertions instead.

#include <stdexcept>
#include <string>

namespace wmk {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- field construction / arithmetic ---------------------------------------

// Requested root-of-unity order is divisible by 3 (no such root exists in
// characteristic 3), or an order-r element was requested with gcd(r,3) != 1.
struct TameViolation : Error {
    using Error::Error;
};

// n does not divide the order s hosted by the field context.
struct OrderUnavailable : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// --- group construction ------------------------------------------------------

// A symbolic element and its matrix image disagree, or elements from
// incompatible contexts were combined.
struct RepresentationError : Error {
    using Error::Error;
};

// A closed-form count was applied to a group that does not satisfy the
// formula's hypotheses.
struct FormulaPreconditionViolation : Error {
    using Error::Error;
};

// det != 1 for some group element (group would not be in SL3).
struct DeterminantViolation : Error {
    using Error::Error;
};

// --- toric / triangulation ---------------------------------------------------

// A triangulation could not be built or failed its global validation.
struct ConstructionFailure : Error {
    using Error::Error;
};

// The group action does not permute the triangles of a triangulation.
struct EquivarianceViolation : Error {
    using Error::Error;
};

// --- invariant ring / charts -------------------------------------------------

// Relation-space kernel has unexpected dimension (no canonical choice).
struct RelationAmbiguity : Error {
    using Error::Error;
};

// A chart identity that should hold exactly does not.
struct ChartMismatch : Error {
    using Error::Error;
};

// Blow-up center generators are not adapted to any coordinate system the
// multiplicity routine can handle.
struct UnsupportedCenter : Error {
    using Error::Error;
};

// Quotient presentation failed certification (non-invariant generator,
// non-vanishing relation, or dimension mismatch).
struct PresentationMismatch : Error {
    using Error::Error;
};

// --- cli ----------------------------------------------------------------------

struct IoError : Error {
    using Error::Error;
};

}  // namespace wmk
