// Copyright 2026 The qrelent Authors
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

#ifndef QRELENT_ERRORS_HPP
#define QRELENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qrelent {

/// Base class for all qrelent errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class ConvergenceFailure : public Error {
 public:
  explicit ConvergenceFailure(const std::string& what) : Error(what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

class WeightError : public Error {
 public:
  explicit WeightError(const std::string& what) : Error(what) {}
};

class SupportViolation : public Error {
 public:
  explicit SupportViolation(const std::string& what) : Error(what) {}
};

class StencilOutOfWindow : public Error {
 public:
  explicit StencilOutOfWindow(const std::string& what) : Error(what) {}
};

class NonFiniteIntegrand : public Error {
 public:
  explicit NonFiniteIntegrand(const std::string& what) : Error(what) {}
};

class MalformedSpec : public Error {
 public:
  explicit MalformedSpec(const std::string& what) : Error(what) {}
};

class MapNotTracePreservingOnRho : public Error {
 public:
  explicit MapNotTracePreservingOnRho(const std::string& what) : Error(what) {}
};

class StatesEqual : public Error {
 public:
  explicit StatesEqual(const std::string& what) : Error(what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace qrelent

#endif  // QRELENT_ERRORS_HPP
