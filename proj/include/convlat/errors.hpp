//  Copyright 2026 The convlat Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef CONVLAT_ERRORS_HPP
#define CONVLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace convlat {

/// Bad argument values, malformed documents, domain violations.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A function does not have the shape an operation requires (convexity, normality).
class ShapeError : public std::runtime_error {
 public:
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

/// An operator descriptor could not be built (overlapping summands, asymmetric table).
class ConstructionError : public std::runtime_error {
 public:
  explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

/// The algorithm does not support the given operator.
class UnsupportedOperator : public std::runtime_error {
 public:
  explicit UnsupportedOperator(const std::string& what) : std::runtime_error(what) {}
};

/// The operator pair fails a continuity precondition of a closed-form path.
class ClassificationError : public std::runtime_error {
 public:
  explicit ClassificationError(const std::string& what) : std::runtime_error(what) {}
};

/// Output carries no mass to reduce.
class DegenerateOutput : public std::runtime_error {
 public:
  explicit DegenerateOutput(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace convlat

#endif  // CONVLAT_ERRORS_HPP
