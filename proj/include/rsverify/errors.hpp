#pragma once

#include <stdexcept>

namespace rsv {

// Operands do not fit together (variable counts, group sizes, ...).
struct structural_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input outside the domain of an operation.
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Request for something the toolkit deliberately does not provide.
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation that must succeed did not; indicates a formula bug.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace rsv
