#pragma once

#include <stdexcept>
#include <string>

namespace ncp {

// Base of every error thrown by the library. The CLI maps these to a
// nonzero exit status and a structured report.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error { using Error::Error; };
class RankError : public Error { using Error::Error; };
class InputError : public Error { using Error::Error; };

// Polyhedral degeneracies detected by the brute-force enumerators.
class UnboundedError : public Error { using Error::Error; };
class EmptyPolytopeError : public Error { using Error::Error; };
class SpanError : public Error { using Error::Error; };

// Two cube vertices collided under projection.
class SkeletonViolation : public Error { using Error::Error; };

// Raised when a machine-checked statement that must hold does not. These
// indicate a bug or a transcription problem, never bad user input.
class TheoremViolation : public Error { using Error::Error; };
class FormulaError : public Error { using Error::Error; };
class ConstructionError : public Error { using Error::Error; };
class TranscriptionError : public Error { using Error::Error; };

}  // namespace ncp
