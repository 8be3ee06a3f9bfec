// Copyright 2026 The Bamia Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>

namespace bamia::kernels {

// Dense float32 inner loops behind everything that trains or scores a model.
// Two implementations are registered: a scalar reference and an AVX2+FMA
// variant. The scalar table is the semantic ground truth; the SIMD table is
// equivalence-tested against it (reduction order differs, so comparisons
// carry a float tolerance).
//
// All matrices are row-major, contiguous, no padding.
struct KernelTable {
  const char* name;

  // C[M x N] (+)= A[M x K] * B[K x N]
  void (*gemm_nn)(const float* a, const float* b, float* c, int m, int k, int n,
                  bool accumulate);
  // C[M x N] (+)= A[M x K] * B[N x K]^T
  void (*gemm_nt)(const float* a, const float* b, float* c, int m, int k, int n,
                  bool accumulate);
  // C[M x N] (+)= A[K x M]^T * B[K x N]
  void (*gemm_tn)(const float* a, const float* b, float* c, int m, int k, int n,
                  bool accumulate);

  // y += alpha * x
  void (*axpy)(float alpha, const float* x, float* y, std::size_t n);
  void (*scale)(float alpha, float* x, std::size_t n);
  float (*dot)(const float* x, const float* y, std::size_t n);
  float (*reduce_sum)(const float* x, std::size_t n);
  float (*reduce_max)(const float* x, std::size_t n);

  void (*relu_fwd)(const float* x, float* y, std::size_t n);
  // dx = dy where x > 0, else 0
  void (*relu_bwd)(const float* x, const float* dy, float* dx, std::size_t n);

  // v = mom*v + g + wd*p ; p -= lr*v   (classic momentum with L2 term)
  void (*sgd_momentum)(float* p, float* v, const float* g, float lr, float mom,
                       float wd, std::size_t n);
};

enum class Isa { scalar, avx2 };

// Table for one ISA; requesting avx2 on a machine without it throws.
const KernelTable& table(Isa isa);

// The table selected at process start: AVX2 when the CPU supports it,
// overridable with BAMIA_KERNELS=scalar|avx2.
const KernelTable& active();

// Test hook; affects subsequent active() calls.
void force(Isa isa);

bool cpu_has_avx2();
bool compiled_with_avx2();

std::string active_name();

}  // namespace bamia::kernels
