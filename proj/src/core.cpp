// Copyright 2026 The trimer Authors
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

#include "trimer/core.hpp"

#include <cmath>

namespace trimer {

Sector parse_sector(std::string_view text) {
  if (text == "b" || text == "bosonic") return Sector::Bosonic;
  if (text == "f" || text == "fermionic") return Sector::Fermionic;
  throw DomainError("unknown sector '" + std::string(text) + "' (expected b or f)");
}

void check_params(const PhysParams& p) {
  if (!std::isfinite(p.alpha)) throw DomainError("alpha must be finite");
  if (!(p.epsilon > 0.0) || !std::isfinite(p.epsilon)) {
    throw DomainError("epsilon must be positive and finite");
  }
}

void require_attractive(double alpha, const char* what) {
  if (!(alpha < 0.0)) {
    throw DomainError(std::string(what) + ": requires alpha < 0 (no bound state otherwise)");
  }
}

}  // namespace trimer
