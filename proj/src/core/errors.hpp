#pragma once

#include <stdexcept>
#include <string>

namespace catlaw {

// Input text could not be parsed at all (bad JSON, missing envelope).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A name in a document does not resolve to a declared object/arrow.
struct UnresolvedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Document parsed but its payload does not match the declared kind,
// or a field has the wrong shape.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Recognized input, unsupported request (unknown form, kind, target...).
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration would exceed the configured candidate cap.  Explicit refusal;
// nothing is ever silently truncated.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed input that fails a precondition (e.g. converting a monad whose
// laws do not hold).
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace catlaw
