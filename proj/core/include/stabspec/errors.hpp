// Copyright 2026 The stabspec developers
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

#pragma once

#include <stdexcept>
#include <string>

namespace stabspec {

// Error taxonomy shared by the library and the CLI exit codes:
//   std::invalid_argument -> usage/input problem
//   contract_error        -> a documented precondition or invariant was violated
//   guard_error           -> a resource/enumeration guard refused the request
//   consistency_error     -> an internal self-check failed (construction bug)
//   solver_error          -> LP/DD did not terminate normally
//   tolerance_error       -> floating-point mode could not certify a result

struct contract_error : std::runtime_error {
  explicit contract_error(const std::string& what) : std::runtime_error(what) {}
};

struct guard_error : std::runtime_error {
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

struct consistency_error : std::runtime_error {
  explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

struct solver_error : std::runtime_error {
  explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

struct tolerance_error : std::runtime_error {
  explicit tolerance_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stabspec
