/*
   Copyright 2026 The spreadpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SPREADPOLY_ERRORS_HPP
#define SPREADPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spreadpoly {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class DivideByZero : public Error {
   public:
    DivideByZero() : Error("division by the zero polynomial") {}
};

class NotDivisible : public Error {
   public:
    using Error::Error;
};

class NotPalindromic : public Error {
   public:
    using Error::Error;
};

class OddDegree : public Error {
   public:
    using Error::Error;
};

/// A computed quantity violated an integrality or shape invariant. Always an
/// internal bug, never a user error.
class InternalInconsistency : public Error {
   public:
    using Error::Error;
};

class OddTermPresent : public InternalInconsistency {
   public:
    using InternalInconsistency::InternalInconsistency;
};

/// An assembled product did not reproduce its target polynomial or integer.
class VerificationFailure : public Error {
   public:
    using Error::Error;
};

class IdentityFailure : public Error {
   public:
    using Error::Error;
};

class OutOfBounds : public Error {
   public:
    using Error::Error;
};

}  // namespace spreadpoly

#endif  // SPREADPOLY_ERRORS_HPP
