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

#include <cmath>

#include "trimer/bs_symbols.hpp"
#include "trimer/kernels.hpp"

namespace trimer::kernels {

namespace {

// The ridge of the kernel along nu' = -nu is narrower than the panels far
// out; the mirror entry (a diagonal entry of the block) absorbs the defect of
// the exact row integral, int K(nu, nu') dnu' = md(nu).
void fill_row(const BsBlockSpec& s, std::size_t i, const std::vector<double>& sqrt_w,
              double* row) {
  const std::size_t m = s.nu.size();
  const double nu_i = s.nu[i];
  const double coupling = s.sector_sign * s.alpha;
  const double scale = coupling * sqrt_w[i];
  double row_integral = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double nu_j = s.nu[j];
    const double k_same = bs::mod_kernel(s.epsilon, s.lambda, nu_i, nu_j);
    const double k_mirror = bs::mod_kernel(s.epsilon, s.lambda, nu_i, -nu_j);
    row_integral += s.weights[j] * (k_same + k_mirror);
    row[j] = scale * (k_same + s.parity * k_mirror) * sqrt_w[j];
  }
  const double md = bs::md_symbol(s.epsilon, s.lambda, nu_i);
  row[i] += 1.0 + s.alpha * md + coupling * s.parity * (md - row_integral);
}

template <bool Parallel>
void assemble_impl(const BsBlockSpec& s, std::vector<double>& out) {
  const std::size_t m = s.nu.size();
  out.assign(m * m, 0.0);
  std::vector<double> sqrt_w(m);
  for (std::size_t i = 0; i < m; ++i) sqrt_w[i] = std::sqrt(s.weights[i]);
#pragma omp parallel for schedule(static) if (Parallel)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
    fill_row(s, static_cast<std::size_t>(i), sqrt_w, &out[static_cast<std::size_t>(i) * m]);
  }
}

}  // namespace

void assemble_bs_block_serial(const BsBlockSpec& spec, std::vector<double>& out) {
  assemble_impl<false>(spec, out);
}

void assemble_bs_block_omp(const BsBlockSpec& spec, std::vector<double>& out) {
  assemble_impl<true>(spec, out);
}

void assemble_bs_block(const BsBlockSpec& spec, std::vector<double>& out) {
  if (openmp_enabled() && max_threads() > 1 && spec.nu.size() >= 128) {
    assemble_bs_block_omp(spec, out);
  } else {
    assemble_bs_block_serial(spec, out);
  }
}

}  // namespace trimer::kernels
