#include "l1pt/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace l1pt::kern {

#if !defined(L1PT_HAVE_AVX2_TU)
const Backend* avx2_backend() { return nullptr; }
#endif

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Backend& pick() {
    const char* req = std::getenv("L1PT_KERNELS");
    if (req && std::strcmp(req, "scalar") == 0) return scalar_backend();
    const Backend* avx2 = avx2_backend();
    if (req && std::strcmp(req, "avx2") == 0)
        return (avx2 && cpu_has_avx2()) ? *avx2 : scalar_backend();
    return (avx2 && cpu_has_avx2()) ? *avx2 : scalar_backend();
}

}  // namespace

const Backend& active() {
    static const Backend& b = pick();
    return b;
}

std::string_view backend_name() { return active().name; }

}  // namespace l1pt::kern
