// core/error.h

// Copyright 2026  Farfield Toolkit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef FARFIELD_CORE_ERROR_H_
#define FARFIELD_CORE_ERROR_H_

#include <stdexcept>
#include <string>

namespace farfield {

// Exit-code categories used by the CLI: 1 usage/config, 2 data, 3 I/O.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg, int exit_code)
      : std::runtime_error(msg), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

// Invalid configuration or usage: bad parameter values, infeasible setups.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg, 1) {}
};

// Well-formed request on malformed or degenerate data.
class DataError : public Error {
 public:
  explicit DataError(const std::string& msg) : Error(msg, 2) {}
};

// Filesystem-level failures.
class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg, 3) {}
};

// Malformed container or header while parsing a file.
class FormatError : public DataError {
 public:
  explicit FormatError(const std::string& msg) : DataError(msg) {}
};

// Structurally valid file using an encoding we do not handle.
class UnsupportedFormatError : public DataError {
 public:
  explicit UnsupportedFormatError(const std::string& msg) : DataError(msg) {}
};

// Source/microphone placement violating room constraints.
class GeometryError : public ConfigError {
 public:
  explicit GeometryError(const std::string& msg) : ConfigError(msg) {}
};

// Requested reverberation time not achievable for the room; carries the
// minimum achievable T60 in seconds.
class InfeasibleT60Error : public ConfigError {
 public:
  InfeasibleT60Error(const std::string& msg, double min_t60)
      : ConfigError(msg), min_t60_(min_t60) {}
  double min_achievable_t60() const { return min_t60_; }

 private:
  double min_t60_;
};

// Impulse response lacks enough decay range for a T60 estimate.
class InsufficientDecayError : public DataError {
 public:
  explicit InsufficientDecayError(const std::string& msg) : DataError(msg) {}
};

// Signal too short for the requested analysis.
class InsufficientFramesError : public DataError {
 public:
  explicit InsufficientFramesError(const std::string& msg) : DataError(msg) {}
};

// Noise requested but the chunk pool is empty.
class NoNoiseAvailableError : public DataError {
 public:
  explicit NoNoiseAvailableError(const std::string& msg) : DataError(msg) {}
};

// Zero-power or otherwise degenerate signal where a finite one is required.
class DegenerateSignalError : public DataError {
 public:
  explicit DegenerateSignalError(const std::string& msg) : DataError(msg) {}
};

}  // namespace farfield

#endif  // FARFIELD_CORE_ERROR_H_
