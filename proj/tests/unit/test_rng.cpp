#include <doctest.h>

#include <cmath>

#include "l1pt/rng.hpp"

using namespace l1pt::rng;

TEST_CASE("philox4x32-10 known answers") {
    // Reference vectors for the all-zero and all-one inputs.
    const auto z = philox4x32(0, 0, 0);
    CHECK(z[0] == 0x6627e8d5u);
    CHECK(z[1] == 0xe169c58du);
    CHECK(z[2] == 0xbc57ac4cu);
    CHECK(z[3] == 0x9b00dbd8u);
    const auto f = philox4x32(~0ull, ~0ull, ~0ull);
    CHECK(f[0] == 0x408f276du);
    CHECK(f[1] == 0x41c83b0eu);
    CHECK(f[2] == 0xa20bc7c6u);
    CHECK(f[3] == 0x6d5451fdu);
}

TEST_CASE("streams are deterministic and independent") {
    Stream a(42, 7), b(42, 7), c(42, 8);
    bool all_equal = true, any_diff = false;
    for (int i = 0; i < 256; ++i) {
        const auto va = a.next_u32(), vb = b.next_u32(), vc = c.next_u32();
        all_equal &= (va == vb);
        any_diff |= (va != vc);
    }
    CHECK(all_equal);
    CHECK(any_diff);

    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    CHECK(derive_seed(123, 456) == derive_seed(123, 456));
}

TEST_CASE("uniform stays in the open unit interval") {
    Stream s(9, 0);
    for (int i = 0; i < 20000; ++i) {
        const double u = s.uniform();
        CHECK(u > 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("gaussian moments are sane") {
    Stream s(5, 3);
    const int n = 200000;
    double m1 = 0.0, m2 = 0.0, m4 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double g = s.gaussian();
        m1 += g;
        m2 += g * g;
        m4 += g * g * g * g;
    }
    m1 /= n;
    m2 /= n;
    m4 /= n;
    CHECK(std::fabs(m1) < 0.01);
    CHECK(std::fabs(m2 - 1.0) < 0.02);
    CHECK(std::fabs(m4 - 3.0) < 0.1);
}

TEST_CASE("bounded draws cover the range") {
    Stream s(77, 1);
    int seen[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 5000; ++i) {
        const auto v = s.bounded(5);
        REQUIRE(v < 5u);
        ++seen[v];
    }
    for (int k = 0; k < 5; ++k) CHECK(seen[k] > 800);
}
