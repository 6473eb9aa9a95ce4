#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ugt {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad dimension, unknown id, schema violation.
class invalid_argument : public error {
 public:
  using error::error;
};

// An exhaustive search was refused because the instance exceeds its cap.
// Callers must treat the question as undecided, never as false.
class size_cap_exceeded : public error {
 public:
  size_cap_exceeded(std::string what_check, std::size_t limit, std::size_t actual)
      : error(what_check + ": size " + std::to_string(actual) + " exceeds cap " +
              std::to_string(limit)),
        check(std::move(what_check)),
        limit(limit),
        actual(actual) {}

  std::string check;
  std::size_t limit;
  std::size_t actual;
};

class no_path : public error {
 public:
  using error::error;
};

class disconnected : public error {
 public:
  using error::error;
};

class not_converged : public error {
 public:
  using error::error;
};

}  // namespace ugt
