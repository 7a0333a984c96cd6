// Copyright 2026 The adaptr authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ADAPTR_ERROR_HPP_
#define ADAPTR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace adaptr {

// Base for all toolkit errors. The CLI maps each subclass to a distinct
// process exit code (see tools/).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input data: schema violations, invariant violations, bad values.
// Messages carry file/line locations where available.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Missing or unreadable files, unwritable outputs, bad checkpoints.
class IoError : public Error {
 public:
  using Error::Error;
};

// Inconsistent or out-of-range configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Numeric failure at runtime: non-finite values, diverged training.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace adaptr

#endif  // ADAPTR_ERROR_HPP_
