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

#ifndef TRIMER_CORE_HPP_
#define TRIMER_CORE_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace trimer {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested index or size outside the supported range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An iterative or adaptive procedure did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exchange symmetry of the two heavy particles.
enum class Sector { Bosonic, Fermionic };

inline constexpr std::string_view to_string(Sector s) {
  return s == Sector::Bosonic ? "b" : "f";
}

/// Parses "b"/"bosonic" or "f"/"fermionic".
Sector parse_sector(std::string_view text);

/// Scaled model parameters: contact coupling and mass-ratio parameter.
struct PhysParams {
  double alpha = -1.0;
  double epsilon = 0.1;
  Sector sector = Sector::Bosonic;
};

/// Throws DomainError unless epsilon > 0 (and finite).
void check_params(const PhysParams& p);

/// Throws DomainError unless alpha < 0; `what` names the caller.
void require_attractive(double alpha, const char* what);

}  // namespace trimer

#endif  // TRIMER_CORE_HPP_
