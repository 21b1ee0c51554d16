#ifndef MTZ_KERNELS_HPP
#define MTZ_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mtz::kernels {

// Data-parallel inner loops used by the mod-p sweeps and the double-sum
// block. Scalar reference implementations always exist; SIMD variants are
// selected at runtime from CPU features and are equivalence-tested against
// the scalar ones.
enum class Backend { scalar, avx2, neon };

std::string backend_name(Backend b);
Backend active_backend();
std::vector<Backend> available_backends();

// Test hook: pin a specific backend (throws mtz::Error if unavailable).
void force_backend(Backend b);
void reset_backend();

// sum_i a[i]*b[i] in uint64 arithmetic, no reduction. Caller guarantees
// n * max(a) * max(b) < 2^64 (true for residues mod p with n <= p < 2^21).
uint64_t dot_u32(const uint32_t* a, const uint32_t* b, size_t n);

// sum_i a[i]*b[i] for complex doubles (no conjugation).
std::complex<double> cdot(const std::complex<double>* a, const std::complex<double>* b, size_t n);

// Reference implementations (exposed for the equivalence tests).
uint64_t dot_u32_scalar(const uint32_t* a, const uint32_t* b, size_t n);
std::complex<double> cdot_scalar(const std::complex<double>* a, const std::complex<double>* b, size_t n);

} // namespace mtz::kernels

#endif
