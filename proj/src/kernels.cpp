#include "mtz/kernels.hpp"

#include "mtz/errors.hpp"

#include <atomic>

namespace mtz::kernels {

#if MTZ_HAVE_AVX2_TU
uint64_t dot_u32_avx2(const uint32_t* a, const uint32_t* b, size_t n);
std::complex<double> cdot_avx2(const std::complex<double>* a, const std::complex<double>* b, size_t n);
#endif
#if MTZ_HAVE_NEON_TU
uint64_t dot_u32_neon(const uint32_t* a, const uint32_t* b, size_t n);
std::complex<double> cdot_neon(const std::complex<double>* a, const std::complex<double>* b, size_t n);
#endif

uint64_t dot_u32_scalar(const uint32_t* a, const uint32_t* b, size_t n) {
    uint64_t acc = 0;
    for (size_t i = 0; i < n; ++i) acc += static_cast<uint64_t>(a[i]) * b[i];
    return acc;
}

std::complex<double> cdot_scalar(const std::complex<double>* a, const std::complex<double>* b, size_t n) {
    double re = 0.0, im = 0.0;
    for (size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    }
    return {re, im};
}

namespace {

Backend detect() {
#if MTZ_HAVE_AVX2_TU
    if (__builtin_cpu_supports("avx2")) return Backend::avx2;
#endif
#if MTZ_HAVE_NEON_TU
    return Backend::neon; // baseline on aarch64
#endif
    return Backend::scalar;
}

std::atomic<Backend> g_backend{detect()};

} // namespace

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
        case Backend::neon: return "neon";
    }
    return "?";
}

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

std::vector<Backend> available_backends() {
    std::vector<Backend> v{Backend::scalar};
#if MTZ_HAVE_AVX2_TU
    if (__builtin_cpu_supports("avx2")) v.push_back(Backend::avx2);
#endif
#if MTZ_HAVE_NEON_TU
    v.push_back(Backend::neon);
#endif
    return v;
}

void force_backend(Backend b) {
    for (Backend av : available_backends())
        if (av == b) {
            g_backend.store(b, std::memory_order_relaxed);
            return;
        }
    throw Error("kernel backend unavailable: " + backend_name(b));
}

void reset_backend() { g_backend.store(detect(), std::memory_order_relaxed); }

uint64_t dot_u32(const uint32_t* a, const uint32_t* b, size_t n) {
    switch (active_backend()) {
#if MTZ_HAVE_AVX2_TU
        case Backend::avx2: return dot_u32_avx2(a, b, n);
#endif
#if MTZ_HAVE_NEON_TU
        case Backend::neon: return dot_u32_neon(a, b, n);
#endif
        default: return dot_u32_scalar(a, b, n);
    }
}

std::complex<double> cdot(const std::complex<double>* a, const std::complex<double>* b, size_t n) {
    switch (active_backend()) {
#if MTZ_HAVE_AVX2_TU
        case Backend::avx2: return cdot_avx2(a, b, n);
#endif
#if MTZ_HAVE_NEON_TU
        case Backend::neon: return cdot_neon(a, b, n);
#endif
        default: return cdot_scalar(a, b, n);
    }
}

} // namespace mtz::kernels
