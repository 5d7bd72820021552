#include <doctest.h>

#include <array>
#include <cstdint>
#include <set>

#include "aucgap/rng.hpp"

using namespace aucgap;

// derive(seed, i) is defined to equal the i-th output of the reference
// splitmix64 generator seeded with `seed`; these values come from the
// published reference implementation.
TEST_CASE("derive matches the reference splitmix64 output stream") {
    CHECK(rng::derive(0, 0) == 0xe220a8397b1dcdafull);
    CHECK(rng::derive(1234567, 0) == 6457827717110365317ull);
    CHECK(rng::derive(1234567, 1) == 3203168211198807973ull);
    CHECK(rng::derive(1234567, 2) == 9817491932198370423ull);
}

TEST_CASE("mix64 is a bijection fixed only at zero") {
    CHECK(rng::mix64(0) == 0);
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        seen.insert(rng::mix64(i));
    }
    CHECK(seen.size() == 10000);
}

TEST_CASE("derive is deterministic and collision-free across paths") {
    CHECK(rng::derive(42, 7) == rng::derive(42, 7));
    std::set<std::uint64_t> seen;
    for (std::uint64_t key = 0; key < 50; ++key) {
        for (std::uint64_t index = 0; index < 200; ++index) {
            seen.insert(rng::derive(key, index));
        }
    }
    CHECK(seen.size() == 50 * 200);

    // Nested paths are their own streams.
    CHECK(rng::derive(rng::derive(9, 1), 2) != rng::derive(9, 1));
    CHECK(rng::derive(rng::derive(9, 1), 2) != rng::derive(9, 2));
}

TEST_CASE("unit_open stays strictly inside (0,1)") {
    CHECK(rng::unit_open(0) > 0.0);
    CHECK(rng::unit_open(~0ull) < 1.0);
    double min_seen = 1.0;
    double max_seen = 0.0;
    for (std::uint64_t i = 0; i < 100000; ++i) {
        const double u = rng::unit_open(rng::derive(5, i));
        CHECK(u > 0.0);
        CHECK(u < 1.0);
        min_seen = std::min(min_seen, u);
        max_seen = std::max(max_seen, u);
    }
    CHECK(min_seen < 0.001);
    CHECK(max_seen > 0.999);
}

TEST_CASE("bounded covers [0, n) roughly uniformly") {
    constexpr std::size_t kBuckets = 16;
    std::array<std::size_t, kBuckets> counts{};
    constexpr std::size_t kDraws = 160000;
    for (std::uint64_t i = 0; i < kDraws; ++i) {
        const std::size_t index = rng::bounded(rng::derive(99, i), kBuckets);
        REQUIRE(index < kBuckets);
        ++counts[index];
    }
    for (const std::size_t count : counts) {
        CHECK(count > kDraws / kBuckets - 600);
        CHECK(count < kDraws / kBuckets + 600);
    }
}
