#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mtz/kernels.hpp"

#include <random>

using namespace mtz::kernels;

TEST_CASE("backend dispatch is sane") {
    auto avail = available_backends();
    REQUIRE(!avail.empty());
    CHECK(avail.front() == Backend::scalar);
    // active backend must be one of the available ones
    bool found = false;
    for (Backend b : avail)
        if (b == active_backend()) found = true;
    CHECK(found);
    reset_backend();
}

TEST_CASE("u32 dot product: SIMD equals scalar exactly") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<uint32_t> vd(0, 1u << 20); // p-sized residues
    std::uniform_int_distribution<size_t> ld(0, 600);
    for (int rep = 0; rep < 200; ++rep) {
        size_t n = ld(rng);
        std::vector<uint32_t> a(n), b(n);
        for (auto& x : a) x = vd(rng);
        for (auto& x : b) x = vd(rng);
        uint64_t ref = dot_u32_scalar(a.data(), b.data(), n);
        for (Backend bk : available_backends()) {
            force_backend(bk);
            CHECK(dot_u32(a.data(), b.data(), n) == ref);
        }
        reset_backend();
    }
}

TEST_CASE("complex dot product: SIMD matches scalar to rounding") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> vd(-1.0, 1.0);
    std::uniform_int_distribution<size_t> ld(0, 500);
    for (int rep = 0; rep < 100; ++rep) {
        size_t n = ld(rng);
        std::vector<std::complex<double>> a(n), b(n);
        for (auto& x : a) x = {vd(rng), vd(rng)};
        for (auto& x : b) x = {vd(rng), vd(rng)};
        auto ref = cdot_scalar(a.data(), b.data(), n);
        for (Backend bk : available_backends()) {
            force_backend(bk);
            auto got = cdot(a.data(), b.data(), n);
            CHECK(std::abs(got - ref) <= 1e-13 * (1.0 + static_cast<double>(n)));
        }
        reset_backend();
    }
}

TEST_CASE("forcing an unavailable backend throws") {
    auto avail = available_backends();
    for (Backend b : {Backend::avx2, Backend::neon}) {
        bool have = false;
        for (Backend x : avail)
            if (x == b) have = true;
        if (!have) CHECK_THROWS(force_backend(b));
    }
    reset_backend();
}
