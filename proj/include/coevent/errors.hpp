// Copyright 2026 The coevent Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COEVENT_ERRORS_HPP_
#define COEVENT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace coevent {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input data violates a structural or measure invariant. field() names the
// offending part of the input (e.g. "bra_points[1].mass").
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// A label, terrace-label or point identifier that the structure does not know.
class UnknownIdError : public Error {
 public:
  using Error::Error;
};

// A ket event that is not a union of terraces, so it has no probability at
// quotient resolution.
class UnrepresentableEventError : public Error {
 public:
  using Error::Error;
};

// Arguments that are individually valid but do not belong together, e.g. a
// distribution sized for a different quotient structure.
class InconsistentInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace coevent

#endif  // COEVENT_ERRORS_HPP_
