#pragma once

#include <cstddef>
#include <string_view>

// Dense vector kernels used by the LP solver and instance generation.
// A scalar reference implementation always exists; an AVX2 variant is
// selected at runtime when the CPU supports it. Results of the two
// backends may differ by floating-point reassociation only.
namespace l1pt::kern {

struct Backend {
    double (*dot)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    double (*sum)(const double*, std::size_t);
    void (*scal)(double, double*, std::size_t);
    double (*max_abs)(const double*, std::size_t);
    const char* name;
};

// Active backend. Chosen once: env L1PT_KERNELS=scalar|avx2 overrides
// CPU detection (an unsupported request falls back to scalar).
const Backend& active();
const Backend& scalar_backend();
const Backend* avx2_backend();  // nullptr when not compiled in

// x . y
inline double dot(const double* x, const double* y, std::size_t n) { return active().dot(x, y, n); }
// y += a * x
inline void axpy(double a, const double* x, double* y, std::size_t n) { active().axpy(a, x, y, n); }
inline double sum(const double* x, std::size_t n) { return active().sum(x, n); }
// x *= a
inline void scal(double a, double* x, std::size_t n) { active().scal(a, x, n); }
inline double max_abs(const double* x, std::size_t n) { return active().max_abs(x, n); }

std::string_view backend_name();

}  // namespace l1pt::kern
