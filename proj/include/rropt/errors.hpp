// Copyright 2026 The RROpt Authors
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

#ifndef RROPT_ERRORS_HPP_
#define RROPT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rropt {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input violated a precondition (probability out of range, bad grid
// size, population proportion outside the open unit interval, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The mechanism has p00 + p11 = 1: both rows of the design matrix are
// identical, so the proportion estimator is undefined.
class DegenerateMechanism : public Error {
 public:
  using Error::Error;
};

// epsilon = 0 with delta = 0 forces identical response distributions for
// every respondent, so the estimator error is unbounded.
class ZeroEpsilonStrict : public Error {
 public:
  using Error::Error;
};

// The regime threshold g(epsilon, delta) is undefined because
// e^epsilon + 2*delta - 1 = 0.
class SingularThreshold : public Error {
 public:
  using Error::Error;
};

// No point of the search lattice (nor any injected candidate) satisfies
// the privacy constraints.
class EmptyFeasibleRegion : public Error {
 public:
  using Error::Error;
};

}  // namespace rropt

#endif  // RROPT_ERRORS_HPP_
