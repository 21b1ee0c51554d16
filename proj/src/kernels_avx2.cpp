#include <immintrin.h>

#include <complex>
#include <cstddef>
#include <cstdint>

namespace mtz::kernels {

uint64_t dot_u32_avx2(const uint32_t* a, const uint32_t* b, size_t n) {
    __m256i acc0 = _mm256_setzero_si256();
    __m256i acc1 = _mm256_setzero_si256();
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        // even 32-bit lanes
        acc0 = _mm256_add_epi64(acc0, _mm256_mul_epu32(va, vb));
        // odd 32-bit lanes
        __m256i va1 = _mm256_srli_epi64(va, 32);
        __m256i vb1 = _mm256_srli_epi64(vb, 32);
        acc1 = _mm256_add_epi64(acc1, _mm256_mul_epu32(va1, vb1));
    }
    alignas(32) uint64_t lanes[4];
    __m256i acc = _mm256_add_epi64(acc0, acc1);
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    uint64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) sum += static_cast<uint64_t>(a[i]) * b[i];
    return sum;
}

std::complex<double> cdot_avx2(const std::complex<double>* a, const std::complex<double>* b, size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    __m256d acc = _mm256_setzero_pd(); // two interleaved complex accumulators
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(pa + 2 * i);
        __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        __m256d ar = _mm256_movedup_pd(va);       // [re, re]
        __m256d ai = _mm256_permute_pd(va, 0xF);  // [im, im]
        __m256d bsw = _mm256_permute_pd(vb, 0x5); // [b_im, b_re]
        __m256d t = _mm256_mul_pd(ai, bsw);
        acc = _mm256_add_pd(acc, _mm256_fmaddsub_pd(ar, vb, t));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double re = lanes[0] + lanes[2];
    double im = lanes[1] + lanes[3];
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    }
    return {re, im};
}

} // namespace mtz::kernels
