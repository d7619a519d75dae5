#include "qml/oracle.hpp"

#include "qml/parameter.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qml;

namespace {
Chord C(const char* text) { return Chord::parse(text); }

std::vector<Chord> accepted_chords(const EnumerationReport& r) {
    std::vector<Chord> out;
    for (const MinorRecord& rec : r.accepted) out.push_back(rec.chord);
    return out;
}
}  // namespace

TEST_CASE("oracle exact sets for small periods") {
    EnumerationReport r2 = enumerate_periodic_minors(2);
    CHECK(accepted_chords(r2) == std::vector<Chord>{C("1/3-2/3")});
    CHECK(r2.candidates_checked == 1);

    EnumerationReport r3 = enumerate_periodic_minors(3);
    CHECK(accepted_chords(r3) == std::vector<Chord>{C("1/7-2/7"), C("3/7-4/7"), C("5/7-6/7")});
    CHECK(r3.candidates_checked == 15);  // C(6,2) pairs of exact-period-3 angles

    bool found = false;
    for (const RejectionEntry& rej : r3.rejected) {
        if (rej.chord == C("2/7-4/7")) {
            found = true;
            CHECK(rej.violated == SaProperty::SA3);
            CHECK(rej.witness == 2);
        }
    }
    CHECK(found);
    CHECK(static_cast<long>(r3.accepted.size() + r3.rejected.size()) == r3.candidates_checked);
}

TEST_CASE("oracle rejects out-of-range periods") {
    CHECK_THROWS_AS(enumerate_periodic_minors(1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_periodic_minors(11), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_periodic_minors(4, 3), std::invalid_argument);
    CHECK_NOTHROW(enumerate_periodic_minors(3, 3));
}

TEST_CASE("oracle accepted sets are pairwise unlinked, also across periods") {
    std::vector<Chord> all;
    for (long q = 2; q <= 6; ++q) {
        auto chords = accepted_chords(enumerate_periodic_minors(q));
        CHECK_FALSE(first_crossing(chords).has_value());
        all.insert(all.end(), chords.begin(), chords.end());
    }
    CHECK_FALSE(first_crossing(all).has_value());
}

TEST_CASE("cardioid edges reappear in the oracle enumeration of their period") {
    for (const CardioidEdge& e : cardioid_edges(6)) {
        long q = e.minor.a_orbit.period;
        auto chords = accepted_chords(enumerate_periodic_minors(q));
        CHECK(std::find(chords.begin(), chords.end(), e.minor.chord) != chords.end());
    }
}

TEST_CASE("hausdorff distance examples") {
    std::vector<Chord> a{C("1/3-2/3")};
    std::vector<Chord> b{C("1/3-2/3"), C("0-1/7")};
    CHECK(hausdorff_distance(a, a) == 0);
    CHECK(hausdorff_distance(a, b) == chord_distance(C("1/3-2/3"), C("0-1/7")));
    std::vector<Chord> c{C("5/12-7/12")};
    CHECK(hausdorff_distance(c, a) == Rat(1, 12));
    CHECK_THROWS_AS(hausdorff_distance(std::vector<Chord>{}, a), std::invalid_argument);
}

TEST_CASE("hausdorff distance is symmetric and satisfies identity") {
    std::vector<Chord> a{C("1/3-2/3"), C("5/12-7/12")};
    std::vector<Chord> b{C("1/7-2/7"), C("3/7-4/7"), C("11/24-13/24")};
    CHECK(hausdorff_distance(a, b) == hausdorff_distance(b, a));
    CHECK(hausdorff_distance(a, a) == 0);
}
