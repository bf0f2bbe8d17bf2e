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

#pragma once

// Dense complex kernels in two flavours: a straightforward serial reference
// and an OpenMP version that parallelizes the outer loop. Both accumulate in
// the same order, so their results are bit-identical; tests rely on that.

#include <complex>
#include <cstddef>
#include <span>

namespace entanglekit::kernels {

using Complex = std::complex<double>;

namespace reference {

/// c (m x n) = a (m x k) * b (k x n), row-major.
void gemm(std::span<const Complex> a, std::span<const Complex> b,
          std::span<Complex> c, std::size_t m, std::size_t k, std::size_t n);

/// out ((ar*br) x (ac*bc)) = a (ar x ac) kron b (br x bc).
void kron(std::span<const Complex> a, std::size_t ar, std::size_t ac,
          std::span<const Complex> b, std::size_t br, std::size_t bc,
          std::span<Complex> out);

/// Contract a (d1*d2) x (d1*d2) operator over one factor. keep_first selects
/// the d1 x d1 result, otherwise d2 x d2.
void partial_trace(std::span<const Complex> rho, std::size_t d1,
                   std::size_t d2, bool keep_first, std::span<Complex> out);

}  // namespace reference

namespace parallel {

void gemm(std::span<const Complex> a, std::span<const Complex> b,
          std::span<Complex> c, std::size_t m, std::size_t k, std::size_t n);

void kron(std::span<const Complex> a, std::size_t ar, std::size_t ac,
          std::span<const Complex> b, std::size_t br, std::size_t bc,
          std::span<Complex> out);

void partial_trace(std::span<const Complex> rho, std::size_t d1,
                   std::size_t d2, bool keep_first, std::span<Complex> out);

}  // namespace parallel

/// Work (output entries times inner length) below which the parallel
/// kernels stay on the calling thread.
inline constexpr std::size_t kParallelThreshold = 1 << 14;

}  // namespace entanglekit::kernels
