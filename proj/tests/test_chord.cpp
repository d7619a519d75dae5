#include "qml/chord.hpp"

#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qml;

namespace {
Chord C(const char* text) { return Chord::parse(text); }
}  // namespace

TEST_CASE("chord storage and text format") {
    CHECK(Chord(Angle(2, 3), Angle(1, 3)) == C("1/3-2/3"));
    CHECK(C("1/7-2/7").to_string() == "1/7-2/7");
    CHECK(C("5/7").degenerate());
    CHECK(C("5/7").to_string() == "5/7");
    CHECK(C("0-1/2").to_string() == "0-1/2");
}

TEST_CASE("length examples") {
    CHECK(length(C("1/3-2/3")) == Rat(1, 3));
    CHECK(length(C("0-1/2")) == Rat(1, 2));
    CHECK(length(C("1/7-2/7")) == Rat(1, 7));
    CHECK(length(C("5/7")) == 0);
    CHECK(length(C("1/7-6/7")) == Rat(2, 7));  // wraps around 0
}

TEST_CASE("sigma_chord examples") {
    CHECK(sigma_chord(C("1/14-9/14")) == C("1/7-2/7"));
    CHECK(sigma_chord(C("0-1/2")) == C("0"));       // critical chord collapses
    CHECK(sigma_chord(C("1/3-2/3")) == C("1/3-2/3"));  // invariant leaf
}

TEST_CASE("psi fixed points and examples") {
    CHECK(psi(Rat(1, 3)) == Rat(1, 3));
    CHECK(psi(Rat(0)) == Rat(0));
    CHECK(psi(Rat(1, 4)) == Rat(1, 2));
    CHECK(psi(Rat(3, 8)) == Rat(1, 4));
    CHECK_THROWS_AS(psi(Rat(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(psi(Rat(-1, 8)), std::invalid_argument);
}

TEST_CASE("length of the image is psi of the length") {
    testing::AngleGen gen(17);
    for (int i = 0; i < 2000; ++i) {
        Chord c = gen.next_chord();
        CHECK(length(sigma_chord(c)) == psi(length(c)));
    }
}

TEST_CASE("image strictly longer iff length below 1/3") {
    testing::AngleGen gen(19);
    for (int i = 0; i < 2000; ++i) {
        Chord c = gen.next_nondegenerate_chord();
        Rat l = length(c);
        CHECK((length(sigma_chord(c)) > l) == (l < Rat(1, 3)));
    }
}

TEST_CASE("every nondegenerate chord eventually reaches length >= 1/3") {
    testing::AngleGen gen(23, 1 << 10);
    for (int i = 0; i < 300; ++i) {
        Chord c = gen.next_nondegenerate_chord();
        bool reached = false;
        for (int n = 0; n <= 40 && !reached; ++n) {
            reached = length(c) >= Rat(1, 3);
            c = sigma_chord(c);
        }
        CHECK(reached);
    }
}

TEST_CASE("linked examples") {
    CHECK(linked(C("0-1/2"), C("1/4-3/4")));
    CHECK_FALSE(linked(C("1/7-2/7"), C("1/3-2/3")));
    CHECK_FALSE(linked(C("1/3-2/3"), C("2/3-5/6")));  // shared endpoint
    CHECK_FALSE(linked(C("1/2"), C("1/4-3/4")));      // degenerate
    CHECK_FALSE(linked(C("1/3-2/3"), C("1/3-2/3")));
}

TEST_CASE("linked is symmetric") {
    testing::AngleGen gen(29, 512);
    for (int i = 0; i < 500; ++i) {
        Chord c1 = gen.next_chord(), c2 = gen.next_chord();
        CHECK(linked(c1, c2) == linked(c2, c1));
    }
}

TEST_CASE("behind examples") {
    CHECK(behind(C("5/12-7/12"), C("1/3-2/3")) == Behind::strictly_behind);
    CHECK(behind(C("1/3-5/12"), C("1/3-2/3")) == Behind::behind_only);
    CHECK(behind(C("0"), C("1/3-2/3")) == Behind::not_behind);
    CHECK(behind(C("1/3-2/3"), C("1/3-2/3")) == Behind::behind_only);
    CHECK_THROWS_AS(behind(C("1/3-2/3"), C("0-1/2")), std::domain_error);
    // Reference chords whose shorter arc wraps through 0.
    CHECK(behind(C("1/12-11/12"), C("1/7-6/7")) == Behind::strictly_behind);
    CHECK(behind(C("1/3-2/3"), C("1/7-6/7")) == Behind::not_behind);
}

TEST_CASE("behind order: strictly nested chords shrink") {
    testing::AngleGen gen(31, 512);
    int checked = 0;
    for (int i = 0; checked < 200 && i < 20000; ++i) {
        Chord c1 = gen.next_chord(), c2 = gen.next_nondegenerate_chord();
        if (is_diameter(c2)) continue;
        Behind b = behind(c1, c2);
        if (b == Behind::not_behind || c1 == c2) continue;
        ++checked;
        CHECK(length(c1) < length(c2));
    }
    CHECK(checked == 200);
}

TEST_CASE("behind is transitive across nested references") {
    testing::AngleGen gen(37, 256);
    int checked = 0;
    for (int i = 0; checked < 100 && i < 100000; ++i) {
        Chord a = gen.next_chord();
        Chord b = gen.next_nondegenerate_chord();
        Chord c = gen.next_nondegenerate_chord();
        if (is_diameter(b) || is_diameter(c)) continue;
        if (behind(a, b) != Behind::strictly_behind) continue;
        if (behind(b, c) != Behind::strictly_behind) continue;
        ++checked;
        CHECK(behind(a, c) == Behind::strictly_behind);
        // antisymmetry: b is not behind a
        if (!a.degenerate() && !is_diameter(a)) CHECK(behind(b, a) == Behind::not_behind);
    }
    CHECK(checked == 100);
}

TEST_CASE("is_vertical examples") {
    CHECK(is_vertical(C("1/3-2/3")));
    CHECK_FALSE(is_vertical(C("1/7-2/7")));
    CHECK(is_vertical(C("1/14-9/14")));
    CHECK_FALSE(is_vertical(C("0-1/3")));   // endpoint 0 is horizontal
    CHECK_FALSE(is_vertical(C("1/2-7/8")));  // endpoint 1/2 is horizontal
    CHECK_FALSE(is_vertical(C("0-1/2")));
    CHECK_THROWS_AS(is_vertical(C("1/3")), std::domain_error);
}

TEST_CASE("separates examples") {
    CHECK(separates(C("1/3-2/3"), C("0"), C("1/2")));
    CHECK_FALSE(separates(C("1/6-5/6"), C("5/12-7/12"), C("1/3-2/3")));
    CHECK_FALSE(separates(C("1/3-2/3"), C("1/3-2/3"), C("0-1/7")));
    CHECK_THROWS_AS(separates(C("0-1/2"), C("1/4-3/4"), C("1/8")), std::domain_error);
    CHECK_THROWS_AS(separates(C("1/3"), C("0"), C("1/2")), std::domain_error);
}

TEST_CASE("first_crossing agrees with the quadratic check") {
    testing::AngleGen gen(41, 128);
    for (int round = 0; round < 60; ++round) {
        std::vector<Chord> family;
        for (int i = 0; i < 30; ++i) family.push_back(gen.next_chord());
        bool naive = false;
        for (std::size_t i = 0; i < family.size() && !naive; ++i)
            for (std::size_t j = i + 1; j < family.size() && !naive; ++j)
                naive = linked(family[i], family[j]);
        auto found = first_crossing(family);
        CHECK(naive == found.has_value());
        if (found) CHECK(linked(found->first, found->second));
    }
}

TEST_CASE("chord_distance under the better pairing") {
    CHECK(chord_distance(C("5/12-7/12"), C("1/3-2/3")) == Rat(1, 12));
    CHECK(chord_distance(C("1/3-2/3"), C("1/3-2/3")) == 0);
    CHECK(chord_distance(C("0"), C("1/2")) == Rat(1, 2));
}
