// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MCQ_UTIL_ERRORS_HPP_
#define MCQ_UTIL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mcq {

// Bad config file, bad CLI flags, unusable run setup. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dataset or template content violates the declared schema. CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A backend call failed (transport, provider response, decode). Recorded
// per work unit; the run continues.
class BackendError : public std::runtime_error {
public:
  explicit BackendError(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested operation is not in the backend's capability set. Raised before
// any I/O happens.
class CapabilityError : public BackendError {
public:
  explicit CapabilityError(const std::string& msg) : BackendError(msg) {}
};

}  // namespace mcq

#endif  // MCQ_UTIL_ERRORS_HPP_
