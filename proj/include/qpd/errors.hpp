// Copyright 2026 The qpd Authors
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

#ifndef QPD_ERRORS_H_
#define QPD_ERRORS_H_

#include <stdexcept>

namespace qpd {

// Common base so callers can catch anything raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A state vector was not normalized within tolerance.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

// Wrong number of amplitudes or a malformed matrix shape.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Qubit position outside 1..4.
class IndexError : public Error {
 public:
  using Error::Error;
};

// A scalar argument outside its admissible range (probabilities, weights,
// stage selectors).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A quantity that must be real carried a non-negligible imaginary part, or
// a matrix failed a numerical sanity check.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (amplitudes, profiles, weights).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Output file could not be written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qpd

#endif  // QPD_ERRORS_H_
