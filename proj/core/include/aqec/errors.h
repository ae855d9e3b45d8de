// Copyright 2026 The aqec Authors
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

#ifndef AQEC_ERRORS_H
#define AQEC_ERRORS_H

#include <stdexcept>
#include <string>

namespace aqec {

/// Invalid experiment configuration. The message names the offending field.
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Two computations that must agree did not, or a quantity left its
/// mathematically admissible range (e.g. a negative probability).
class NumericalError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace aqec

#endif
