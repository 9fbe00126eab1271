#pragma once

#include <stdexcept>

namespace hspsim {

/// A state was used in the wrong basis or register layout.
class invalid_state : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An oracle promise (constant-or-balanced, linearity, ...) was violated by
/// the function the algorithm was run against.
class promise_violation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive routine was asked to run above its desk-scale size cap.
class refused_operation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hspsim
