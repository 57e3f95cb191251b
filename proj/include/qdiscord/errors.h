// Copyright 2026 The qdiscord Authors
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

#ifndef QDISCORD_ERRORS_H
#define QDISCORD_ERRORS_H

#include <stdexcept>
#include <string>

namespace qdiscord {

/// A matrix or parameter set that does not describe a valid quantum state.
class StateError : public std::invalid_argument {
   public:
    explicit StateError(const std::string &what) : std::invalid_argument(what) {
    }
};

/// An out-of-domain numeric parameter (q <= 0, qubit count beyond desk scale, ...).
class ParameterError : public std::invalid_argument {
   public:
    explicit ParameterError(const std::string &what) : std::invalid_argument(what) {
    }
};

/// Malformed serialized input.
class FormatError : public std::runtime_error {
   public:
    explicit FormatError(const std::string &what) : std::runtime_error(what) {
    }
};

}  // namespace qdiscord

#endif
