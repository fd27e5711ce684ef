// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <cstring>

#include "unihash/simd.hpp"

namespace unihash::simd {

#if defined(UNIHASH_X86_KERNELS)
extern const ArithKernels kAvx2Arith;
extern const ClmulKernels kPclmulClmul;
#endif

namespace {

bool force_scalar() {
  const char* v = std::getenv("UNIHASH_FORCE_SCALAR");
  return v != nullptr && *v != '\0' && std::strcmp(v, "0") != 0;
}

CpuFeatures detect() {
  CpuFeatures f;
#if defined(UNIHASH_X86_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  f.avx2 = __builtin_cpu_supports("avx2");
  f.pclmul = __builtin_cpu_supports("pclmul") && __builtin_cpu_supports("sse4.1");
#endif
  return f;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::pclmul: return "pclmul";
  }
  return "unknown";
}

const CpuFeatures& cpu_features() {
  static const CpuFeatures features = detect();
  return features;
}

const ArithKernels* avx2_arith_table() {
#if defined(UNIHASH_X86_KERNELS)
  return &kAvx2Arith;
#else
  return nullptr;
#endif
}

const ClmulKernels* pclmul_clmul_table() {
#if defined(UNIHASH_X86_KERNELS)
  return &kPclmulClmul;
#else
  return nullptr;
#endif
}

std::vector<const ArithKernels*> available_arith_kernels() {
  std::vector<const ArithKernels*> out{&kScalarArith};
  if (const auto* t = avx2_arith_table(); t != nullptr && cpu_features().avx2) out.push_back(t);
  return out;
}

std::vector<const ClmulKernels*> available_clmul_kernels() {
  std::vector<const ClmulKernels*> out{&kPortableClmul};
  if (const auto* t = pclmul_clmul_table(); t != nullptr && cpu_features().pclmul) {
    out.push_back(t);
  }
  return out;
}

const ArithKernels& arith_kernels() {
  static const ArithKernels* const chosen =
      force_scalar() ? &kScalarArith : available_arith_kernels().back();
  return *chosen;
}

const ClmulKernels& clmul_kernels() {
  static const ClmulKernels* const chosen =
      force_scalar() ? &kPortableClmul : available_clmul_kernels().back();
  return *chosen;
}

}  // namespace unihash::simd
