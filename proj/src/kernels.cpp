// Copyright 2026 The EntangleKit Authors
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

#include "entanglekit/kernels.hpp"

namespace entanglekit::kernels {

namespace reference {

void gemm(std::span<const Complex> a, std::span<const Complex> b,
          std::span<Complex> c, std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc{};
      for (std::size_t l = 0; l < k; ++l) acc += a[i * k + l] * b[l * n + j];
      c[i * n + j] = acc;
    }
  }
}

void kron(std::span<const Complex> a, std::size_t ar, std::size_t ac,
          std::span<const Complex> b, std::size_t br, std::size_t bc,
          std::span<Complex> out) {
  const std::size_t cols = ac * bc;
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t p = 0; p < br; ++p)
      for (std::size_t j = 0; j < ac; ++j)
        for (std::size_t q = 0; q < bc; ++q)
          out[(i * br + p) * cols + j * bc + q] = a[i * ac + j] * b[p * bc + q];
}

void partial_trace(std::span<const Complex> rho, std::size_t d1,
                   std::size_t d2, bool keep_first, std::span<Complex> out) {
  const std::size_t n = d1 * d2;
  if (keep_first) {
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t ip = 0; ip < d1; ++ip) {
        Complex acc{};
        for (std::size_t j = 0; j < d2; ++j)
          acc += rho[(i * d2 + j) * n + ip * d2 + j];
        out[i * d1 + ip] = acc;
      }
  } else {
    for (std::size_t j = 0; j < d2; ++j)
      for (std::size_t jp = 0; jp < d2; ++jp) {
        Complex acc{};
        for (std::size_t i = 0; i < d1; ++i)
          acc += rho[(i * d2 + j) * n + i * d2 + jp];
        out[j * d2 + jp] = acc;
      }
  }
}

}  // namespace reference

namespace parallel {

void gemm(std::span<const Complex> a, std::span<const Complex> b,
          std::span<Complex> c, std::size_t m, std::size_t k, std::size_t n) {
  const long rows = static_cast<long>(m);
#pragma omp parallel for schedule(static) if (m * n * k >= kParallelThreshold)
  for (long i = 0; i < rows; ++i) {
    const std::size_t ui = static_cast<std::size_t>(i);
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc{};
      for (std::size_t l = 0; l < k; ++l) acc += a[ui * k + l] * b[l * n + j];
      c[ui * n + j] = acc;
    }
  }
}

void kron(std::span<const Complex> a, std::size_t ar, std::size_t ac,
          std::span<const Complex> b, std::size_t br, std::size_t bc,
          std::span<Complex> out) {
  const std::size_t cols = ac * bc;
  const long out_rows = static_cast<long>(ar * br);
#pragma omp parallel for schedule(static) if (out.size() >= kParallelThreshold)
  for (long r = 0; r < out_rows; ++r) {
    const std::size_t i = static_cast<std::size_t>(r) / br;
    const std::size_t p = static_cast<std::size_t>(r) % br;
    for (std::size_t j = 0; j < ac; ++j)
      for (std::size_t q = 0; q < bc; ++q)
        out[static_cast<std::size_t>(r) * cols + j * bc + q] =
            a[i * ac + j] * b[p * bc + q];
  }
}

void partial_trace(std::span<const Complex> rho, std::size_t d1,
                   std::size_t d2, bool keep_first, std::span<Complex> out) {
  const std::size_t n = d1 * d2;
  const std::size_t kept = keep_first ? d1 : d2;
  const std::size_t traced = keep_first ? d2 : d1;
  const long cells = static_cast<long>(kept * kept);
#pragma omp parallel for schedule(static) if (kept * kept * traced >= kParallelThreshold)
  for (long cell = 0; cell < cells; ++cell) {
    const std::size_t a = static_cast<std::size_t>(cell) / kept;
    const std::size_t b = static_cast<std::size_t>(cell) % kept;
    Complex acc{};
    for (std::size_t t = 0; t < traced; ++t) {
      const std::size_t row = keep_first ? a * d2 + t : t * d2 + a;
      const std::size_t col = keep_first ? b * d2 + t : t * d2 + b;
      acc += rho[row * n + col];
    }
    out[static_cast<std::size_t>(cell)] = acc;
  }
}

}  // namespace parallel

}  // namespace entanglekit::kernels
