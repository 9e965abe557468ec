// Copyright 2026 The sympcov Authors
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

#ifndef SYMPCOV_ERRORS_H
#define SYMPCOV_ERRORS_H

#include <stdexcept>
#include <string>

namespace sympcov {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Wrong matrix/vector shape, or mode counts that do not agree.
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// Operation requires the other phase-space ordering.
class OrderingError : public Error {
   public:
    using Error::Error;
};

/// A matrix fails the symplectic group condition at the requested tolerance.
class NotSymplecticError : public Error {
   public:
    using Error::Error;
};

/// Singular or ill-conditioned matrix where an inverse is required.
class SingularityError : public Error {
   public:
    using Error::Error;
};

/// Covariance matrix that is not (numerically) positive definite.
class DegeneracyError : public Error {
   public:
    using Error::Error;
};

class NumericError : public Error {
   public:
    using Error::Error;
};

/// Moment order above the configured cap.
class UnsupportedOrderError : public Error {
   public:
    using Error::Error;
};

/// Quadrature grid too coarse or too narrow for the integrand.
class ResolutionError : public Error {
   public:
    using Error::Error;
};

class InvalidArgumentError : public Error {
   public:
    using Error::Error;
};

}  // namespace sympcov

#endif  // SYMPCOV_ERRORS_H
