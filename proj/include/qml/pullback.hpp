#pragma once

#include "qml/minor.hpp"

#include <unordered_set>

namespace qml {

namespace detail {

// Sibling pairings of the four preimage points of a non-degenerate chord.
struct PullbackPairings {
    std::pair<Chord, Chord> straight;  // (a/2, b/2) and its sibling
    std::pair<Chord, Chord> crossed;   // (a/2, b/2 + 1/2) and its sibling
};

inline PullbackPairings preimage_pairings(const Chord& c) {
    auto [alo, ahi] = c.a().halves();
    auto [blo, bhi] = c.b().halves();
    PullbackPairings p;
    p.straight = {Chord(alo, blo), Chord(ahi, bhi)};
    p.crossed = {Chord(alo, bhi), Chord(ahi, blo)};
    return p;
}

inline bool pair_avoids_strip_edges(const Strip& s, const std::pair<Chord, Chord>& pr) {
    return !linked(pr.first, s.major) && !linked(pr.first, s.minus_major) &&
           !linked(pr.second, s.major) && !linked(pr.second, s.minus_major);
}

}  // namespace detail

/// The m-pullbacks of a chord not linked with m:
///   - of m itself: the major(s) +-M;
///   - of a point other than m: both preimage points;
///   - of a chord behind m: the horizontal pullbacks (inside the strip);
///   - of a chord outside D(m): the sibling pair not crossing M or -M;
///   - of a chord with degenerate m as an endpoint: the pullbacks of
///     length <= 1/4 (four chords for m = 0 and the critical diameter).
inline std::vector<Chord> m_pullbacks(const Strip& strip, const Chord& ell) {
    const Chord& m = strip.m;
    if (linked(ell, m)) throw std::domain_error("m_pullbacks: chord is linked with the minor");

    if (ell == m) {
        if (strip.major == strip.minus_major) return {strip.major};
        std::vector<Chord> r{strip.major, strip.minus_major};
        std::sort(r.begin(), r.end());
        return r;
    }
    if (ell.degenerate()) {
        auto [lo, hi] = ell.a().halves();
        return {Chord(lo, lo), Chord(hi, hi)};
    }

    if (!m.degenerate() && behind(ell, m) != Behind::not_behind) {
        // Horizontal pullbacks: connect the preimages inside each strip arc.
        auto pick = [&](const Angle& x, const CircArc& arc) {
            auto [lo, hi] = x.halves();
            if (arc.contains_closed(lo)) return lo;
            if (arc.contains_closed(hi)) return hi;
            throw internal_error("m_pullbacks: no preimage inside a strip arc");
        };
        Chord h1(pick(ell.a(), strip.strip_arc1), pick(ell.b(), strip.strip_arc1));
        Chord h2(pick(ell.a(), strip.strip_arc2), pick(ell.b(), strip.strip_arc2));
        std::vector<Chord> r{h1, h2};
        std::sort(r.begin(), r.end());
        r.erase(std::unique(r.begin(), r.end()), r.end());
        return r;
    }

    auto pairings = detail::preimage_pairings(ell);

    if (m.degenerate() && ell.has_endpoint(m.a())) {
        // Keep the pullbacks of length <= 1/4.
        std::vector<Chord> r;
        Rat quarter(1, 4);
        for (const Chord& c : {pairings.straight.first, pairings.straight.second,
                               pairings.crossed.first, pairings.crossed.second}) {
            if (length(c) <= quarter) r.push_back(c);
        }
        std::sort(r.begin(), r.end());
        r.erase(std::unique(r.begin(), r.end()), r.end());
        return r;
    }

    bool ok_straight = detail::pair_avoids_strip_edges(strip, pairings.straight);
    bool ok_crossed = detail::pair_avoids_strip_edges(strip, pairings.crossed);
    if (ok_straight == ok_crossed)
        throw internal_error("m_pullbacks: pullback pairing not uniquely determined");
    const auto& pr = ok_straight ? pairings.straight : pairings.crossed;
    std::vector<Chord> r{pr.first, pr.second};
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

inline std::vector<Chord> m_pullbacks(const MinorRecord& m, const Chord& ell) {
    return m_pullbacks(m.strip, ell);
}

/// Finite approximation of the minor leaf lamination L(m): the eventual
/// orbit of m (with siblings) and the majors, closed under iterated
/// m-pullbacks up to `depth` rounds. Leaves are canonically sorted.
struct Lamination {
    Chord seed;
    long depth = 0;
    bool includes_quadrilateral = false;
    std::vector<Chord> leaves;

    bool contains(const Chord& c) const {
        return std::binary_search(leaves.begin(), leaves.end(), c);
    }
};

inline Lamination build_lamination(const MinorRecord& m, long depth) {
    if (depth < 0) throw std::invalid_argument("build_lamination: negative depth");
    std::unordered_set<Chord> all;
    std::vector<Chord> frontier;
    auto add = [&](const Chord& c) {
        if (all.insert(c).second) frontier.push_back(c);
    };

    if (m.chord.degenerate() && m.periodic()) {
        // Seed with the critical diameter only; its iterated pullbacks
        // generate the lamination of a degenerate periodic minor.
        add(m.strip.major);
    } else {
        for (const Chord& c : m.orbit_chords) {
            add(c);
            add(c.sibling());
        }
        add(m.strip.major);
        add(m.strip.minus_major);
    }

    for (long round = 0; round < depth && !frontier.empty(); ++round) {
        std::vector<Chord> next;
        for (const Chord& c : frontier) {
            for (const Chord& p : m_pullbacks(m.strip, c)) {
                if (all.insert(p).second) next.push_back(p);
            }
        }
        frontier = std::move(next);
    }

    Lamination lam;
    lam.seed = m.chord;
    lam.depth = depth;
    lam.includes_quadrilateral = !m.chord.degenerate();
    lam.leaves.assign(all.begin(), all.end());
    std::sort(lam.leaves.begin(), lam.leaves.end());
    return lam;
}

}  // namespace qml
