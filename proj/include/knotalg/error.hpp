/*
   Copyright 2026 The knotalg Authors

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

#ifndef KNOTALG_ERROR_HPP
#define KNOTALG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace knotalg {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input text (PD / Gauss codes, scalar literals).
class ParseError : public Error {
   public:
    using Error::Error;
};

/// Field arithmetic misuse: context mismatch, division by zero, bad modulus.
class FieldError : public Error {
   public:
    using Error::Error;
};

/// Structurally invalid request against a built object (unknown ids, wrong variant).
class InvalidArgument : public Error {
   public:
    using Error::Error;
};

}  // namespace knotalg

#endif
