// Copyright 2026 The dwarfbench Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DWARFS_ERROR_HPP_
#define DWARFS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace dwarfs {

/// Base class for all errors raised by the suite.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A parameter or argument outside its contract (k out of range, |rho| >= 1, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Incompatible operand shapes; the message names both shapes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A DataValue that violates its structural invariants.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A workload DAG that fails validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A source node left unbound, or bound to an ill-shaped value.
class BindingError : public Error {
 public:
  using Error::Error;
};

/// A kernel failure while executing a DAG edge; the message names the edge label.
class ExecutionError : public Error {
 public:
  using Error::Error;
};

/// A benchmark plan rejected before any run starts.
class PlanError : public Error {
 public:
  using Error::Error;
};

}  // namespace dwarfs

#endif  // DWARFS_ERROR_HPP_
