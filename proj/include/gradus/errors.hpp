#pragma once

#include <stdexcept>
#include <string>

namespace gradus {

// Malformed input: bad dimensions, non-homogeneous data, parse failures.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A degreewise computation needed a degree outside the realized window.
class WindowOverflow : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// The operation is undefined on this object (e.g. depth of the zero module).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two independent algorithms disagreed.
class DiagnosticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Randomized search ran out of trials.
class SearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gradus
