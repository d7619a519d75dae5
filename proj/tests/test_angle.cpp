#include "qml/angle.hpp"

#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qml;

TEST_CASE("angle canonical form") {
    CHECK(Angle(2, 6) == Angle(1, 3));
    CHECK(Angle(4, 3) == Angle(1, 3));   // reduced mod 1
    CHECK(Angle(-1, 3) == Angle(2, 3));  // wrapped into [0,1)
    CHECK(Angle(0, 5) == Angle());
    CHECK(Angle().to_string() == "0");
    CHECK(Angle(3, 21).to_string() == "1/7");
    CHECK_THROWS_AS(Angle(1, 0), std::invalid_argument);
}

TEST_CASE("angle parsing reduces, emitter is canonical") {
    CHECK(Angle::parse("1/7") == Angle(1, 7));
    CHECK(Angle::parse("2/14") == Angle(1, 7));
    CHECK(Angle::parse("0") == Angle());
    CHECK(Angle::parse("0/1") == Angle());
    CHECK(Angle::parse("9/14").to_string() == "9/14");
    CHECK_THROWS_AS(Angle::parse("x/y"), std::invalid_argument);
}

TEST_CASE("doubling examples") {
    CHECK(Angle(1, 3).doubled() == Angle(2, 3));
    CHECK(Angle(2, 3).doubled() == Angle(1, 3));
    CHECK(Angle().doubled() == Angle());  // 0 is the unique fixed point
}

TEST_CASE("halves examples") {
    auto [a1, a2] = Angle(1, 3).halves();
    CHECK(a1 == Angle(1, 6));
    CHECK(a2 == Angle(2, 3));
    auto [z1, z2] = Angle().halves();
    CHECK(z1 == Angle());
    CHECK(z2 == Angle(1, 2));
    auto [s1, s2] = Angle(2, 7).halves();
    CHECK(s1 == Angle(1, 7));
    CHECK(s2 == Angle(9, 14));
}

TEST_CASE("halves map back under doubling; first element below 1/2") {
    testing::AngleGen gen(7);
    for (int i = 0; i < 500; ++i) {
        Angle a = gen.next();
        auto [lo, hi] = a.halves();
        CHECK(lo.doubled() == a);
        CHECK(hi.doubled() == a);
        CHECK(lo < Angle(1, 2));
        CHECK(hi.to_rational() == lo.to_rational() + Rat(1, 2));
    }
}

TEST_CASE("antipode is the sibling involution") {
    testing::AngleGen gen(11);
    for (int i = 0; i < 500; ++i) {
        Angle a = gen.next();
        Angle s = a.antipode();
        CHECK(s != a);
        CHECK(s.antipode() == a);
        CHECK(s.doubled() == a.doubled());
    }
    CHECK(Angle().antipode() == Angle(1, 2));
    CHECK(Angle(1, 3).antipode() == Angle(5, 6));
}

TEST_CASE("orbit_info examples") {
    OrbitInfo i7 = orbit_info(Angle(1, 7));
    CHECK(i7.preperiod == 0);
    CHECK(i7.period == 3);
    CHECK(i7.orbit == std::vector<Angle>{Angle(1, 7), Angle(2, 7), Angle(4, 7)});

    OrbitInfo i6 = orbit_info(Angle(1, 6));
    CHECK(i6.preperiod == 1);
    CHECK(i6.period == 2);
    CHECK(i6.orbit == std::vector<Angle>{Angle(1, 6), Angle(1, 3), Angle(2, 3)});

    OrbitInfo i0 = orbit_info(Angle());
    CHECK(i0.preperiod == 0);
    CHECK(i0.period == 1);
    CHECK(i0.orbit == std::vector<Angle>{Angle()});
}

TEST_CASE("orbit_info of the image drops the preperiod by one") {
    testing::AngleGen gen(13, 4096);
    for (int i = 0; i < 200; ++i) {
        Angle a = gen.next();
        OrbitInfo ia = orbit_info(a);
        OrbitInfo ib = orbit_info(a.doubled());
        CHECK(ib.preperiod == std::max(ia.preperiod - 1, 0L));
        CHECK(ib.period == ia.period);
    }
}

namespace {

// Independent brute-force rotation-orbit search over plain integers.
std::vector<long> rotation_orbit_int(long p, long q) {
    long mod = (1L << q) - 1;
    for (long k = 1; k < mod; ++k) {
        std::vector<long> orb;
        long x = k;
        bool least = true;
        do {
            orb.push_back(x);
            x = (2 * x) % mod;
            if (x < k) { least = false; break; }
        } while (x != k);
        if (!least || static_cast<long>(orb.size()) != q) continue;
        std::vector<long> sorted = orb;
        std::sort(sorted.begin(), sorted.end());
        auto idx = [&](long v) {
            return std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin();
        };
        bool rot = true;
        for (long v : orb)
            if ((idx(v) + p) % q != idx((2 * v) % mod)) { rot = false; break; }
        if (rot) return sorted;
    }
    return {};
}

}  // namespace

TEST_CASE("rotation_number_orbit pinned examples") {
    CHECK(rotation_number_orbit(1, 2) == std::vector<Angle>{Angle(1, 3), Angle(2, 3)});
    CHECK(rotation_number_orbit(1, 3) == std::vector<Angle>{Angle(1, 7), Angle(2, 7), Angle(4, 7)});
    CHECK(rotation_number_orbit(2, 5) ==
          std::vector<Angle>{Angle(5, 31), Angle(9, 31), Angle(10, 31), Angle(18, 31), Angle(20, 31)});
    CHECK_THROWS_AS(rotation_number_orbit(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(rotation_number_orbit(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(rotation_number_orbit(3, 3), std::invalid_argument);
}

TEST_CASE("rotation_number_orbit agrees with an independent search") {
    for (long q = 2; q <= 9; ++q) {
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            auto expected = rotation_orbit_int(p, q);
            REQUIRE_FALSE(expected.empty());
            auto got = rotation_number_orbit(p, q);
            REQUIRE(got.size() == expected.size());
            long mod = (1L << q) - 1;
            for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == Angle(expected[i], mod));
        }
    }
}

TEST_CASE("rotation orbits have exact period q and doubling rotates them") {
    for (auto [p, q] : std::vector<std::pair<long, long>>{{1, 4}, {3, 7}, {5, 8}, {4, 9}}) {
        auto orbit = rotation_number_orbit(p, q);
        REQUIRE(static_cast<long>(orbit.size()) == q);
        for (const Angle& a : orbit) {
            OrbitInfo info = orbit_info(a);
            CHECK(info.preperiod == 0);
            CHECK(info.period == q);
        }
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            Angle image = orbit[i].doubled();
            CHECK(image == orbit[(i + static_cast<std::size_t>(p)) % orbit.size()]);
        }
    }
}
