#pragma once

#include <stdexcept>
#include <string>

namespace fomin {

struct FominError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidWindow : FominError { using FominError::FominError; };
struct WindowTooShallow : FominError { using FominError::FominError; };
struct NeighborhoodNotVisible : FominError { using FominError::FominError; };
struct NonUniquePartner : FominError { using FominError::FominError; };
struct TripleCover : FominError { using FominError::FominError; };
struct NotConnected : FominError { using FominError::FominError; };
struct NoMinimum : FominError { using FominError::FominError; };
struct AssignmentContradiction : FominError { using FominError::FominError; };
struct NotInsertionPoint : FominError { using FominError::FominError; };
struct BadPartition : FominError { using FominError::FominError; };
struct MissingWeight : FominError { using FominError::FominError; };
struct Infeasible : FominError { using FominError::FominError; };
struct ChainUnbounded : FominError { using FominError::FominError; };
struct NotAnEliminationCase : FominError { using FominError::FominError; };
struct UnsupportedSpec : FominError { using FominError::FominError; };
struct NotDifferential : FominError { using FominError::FominError; };
struct CardinalityMismatch : FominError { using FominError::FominError; };
struct ShapeMismatch : FominError { using FominError::FominError; };
struct InvalidColoring : FominError { using FominError::FominError; };

}  // namespace fomin
