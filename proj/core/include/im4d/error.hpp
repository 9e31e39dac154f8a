// Copyright Contributors to the im4d Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace im4d {

// Error categories surfaced by the CLI as machine-parsable one-liners.
// category() strings are stable identifiers, not prose.

class Error : public std::runtime_error {
 public:
  Error(std::string category, const std::string& msg)
      : std::runtime_error(msg), category_(std::move(category)) {}
  const std::string& category() const { return category_; }

 private:
  std::string category_;
};

// Caller violated a documented precondition.
struct ContractError : Error {
  explicit ContractError(const std::string& msg) : Error("contract", msg) {}
};

// Malformed or inconsistent run configuration.
struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error("config", msg) {}
};

// Filesystem / serialization failure; message names the path.
struct IoError : Error {
  explicit IoError(const std::string& msg) : Error("io", msg) {}
};

// Stored checksum does not match file contents.
struct ChecksumError : Error {
  explicit ChecksumError(const std::string& msg) : Error("checksum", msg) {}
};

// Camera calibration violates its invariants.
struct CalibrationError : Error {
  explicit CalibrationError(const std::string& msg) : Error("calibration", msg) {}
};

// Numerical breakdown (non-finite values) with diagnostics attached.
struct NumericError : Error {
  explicit NumericError(const std::string& msg) : Error("numeric", msg) {}
};

}  // namespace im4d
