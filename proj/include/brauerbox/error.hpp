#pragma once

#include <stdexcept>
#include <string>

namespace brauerbox {

/// Malformed input: unparsable files, inconsistent arguments.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A search or enumeration would exceed its configured hard bound.
class BoundExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A randomized certificate could not be completed within its budget.
/// Never silently turned into a positive or negative answer.
class Inconclusive : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace brauerbox
