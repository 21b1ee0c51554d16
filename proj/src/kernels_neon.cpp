#include <arm_neon.h>

#include <complex>
#include <cstddef>
#include <cstdint>

namespace mtz::kernels {

uint64_t dot_u32_neon(const uint32_t* a, const uint32_t* b, size_t n) {
    uint64x2_t acc0 = vdupq_n_u64(0);
    uint64x2_t acc1 = vdupq_n_u64(0);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t va = vld1q_u32(a + i);
        uint32x4_t vb = vld1q_u32(b + i);
        acc0 = vaddq_u64(acc0, vmull_u32(vget_low_u32(va), vget_low_u32(vb)));
        acc1 = vaddq_u64(acc1, vmull_u32(vget_high_u32(va), vget_high_u32(vb)));
    }
    uint64_t sum = vgetq_lane_u64(acc0, 0) + vgetq_lane_u64(acc0, 1) +
                   vgetq_lane_u64(acc1, 0) + vgetq_lane_u64(acc1, 1);
    for (; i < n; ++i) sum += static_cast<uint64_t>(a[i]) * b[i];
    return sum;
}

std::complex<double> cdot_neon(const std::complex<double>* a, const std::complex<double>* b, size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    float64x2_t acc = vdupq_n_f64(0.0); // one complex accumulator [re, im]
    const float64x2_t sign = {-1.0, 1.0};
    for (size_t i = 0; i < n; ++i) {
        float64x2_t va = vld1q_f64(pa + 2 * i);
        float64x2_t vb = vld1q_f64(pb + 2 * i);
        float64x2_t ar = vdupq_laneq_f64(va, 0);
        float64x2_t ai = vdupq_laneq_f64(va, 1);
        float64x2_t bsw = vextq_f64(vb, vb, 1); // [b_im, b_re]
        float64x2_t t = vmulq_f64(vmulq_f64(ai, bsw), sign);
        acc = vaddq_f64(acc, vfmaq_f64(t, ar, vb));
    }
    return {vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1)};
}

} // namespace mtz::kernels
