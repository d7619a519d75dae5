#pragma once

#include "qml/chord.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace qml {

/// Closed circle arc [lo, hi]; with wraps set, the arc runs from lo up
/// through 1 == 0 and on to hi.
struct CircArc {
    Angle lo, hi;
    bool wraps = false;

    bool contains_closed(const Angle& x) const {
        if (wraps) return x >= lo || x <= hi;
        return lo <= x && x <= hi;
    }
};

/// Central strip S(m) of a minor-like chord m: the region between the major
/// M and its sibling -M, with sigma(M) = sigma(-M) = m and |M| >= 1/3.
struct Strip {
    Chord m;
    Chord major;        // named M in serialization
    Chord minus_major;  // = sibling of major; equal to major when m is degenerate
    std::vector<Angle> quad;        // vertices of Q(m) in circular order (2 if degenerate)
    std::vector<Chord> horizontal;  // horizontal edges of Q(m); empty if degenerate
    CircArc strip_arc1, strip_arc2;  // S(m) cut with the circle
    CircArc cap1, cap2;              // closed caps cut off by M and -M

    bool is_strip_edge(const Chord& c) const { return c == major || c == minus_major; }

    bool in_strip_closed(const Angle& x) const {
        return strip_arc1.contains_closed(x) || strip_arc2.contains_closed(x);
    }

    /// Chord contained in the closed cap behind M or behind -M.
    bool chord_in_cap(const Chord& c) const {
        return (cap1.contains_closed(c.a()) && cap1.contains_closed(c.b())) ||
               (cap2.contains_closed(c.a()) && cap2.contains_closed(c.b()));
    }
};

enum class SaProperty { SA1, SA2, SA3 };

inline std::string to_string(SaProperty p) {
    switch (p) {
        case SaProperty::SA1: return "SA1";
        case SaProperty::SA2: return "SA2";
        case SaProperty::SA3: return "SA3";
    }
    return "?";
}

struct SaCertificate {
    bool sa1 = false, sa2 = false, sa3 = false;
    long sa2_witness = -1;  // iterate of the first crossing, if any
    long sa3_witness = -1;  // first iterate whose length drops below |m|
};

/// Verification failure: the first violated property (SA1, then SA3, then
/// SA2, matching the reporting convention of the enumeration reports) plus
/// the witnessing iterate.
struct SaRejection {
    Chord chord;
    SaProperty violated = SaProperty::SA1;
    long witness = 0;
    std::string detail;
    SaCertificate certificate;
};

enum class Classification {
    degenerate_periodic,
    degenerate_preperiodic,
    nondegenerate_periodic,
    nondegenerate_preperiodic,
};

inline std::string to_string(Classification c) {
    switch (c) {
        case Classification::degenerate_periodic: return "degenerate_periodic";
        case Classification::degenerate_preperiodic: return "degenerate_preperiodic";
        case Classification::nondegenerate_periodic: return "nondegenerate_periodic";
        case Classification::nondegenerate_preperiodic: return "nondegenerate_preperiodic";
    }
    return "?";
}

struct EndpointOrbit {
    long preperiod = 0;
    long period = 1;
};

/// A chord that passed the stand-alone-minor checks, with its certificate.
struct MinorRecord {
    Chord chord;
    Classification classification = Classification::degenerate_periodic;
    Strip strip;
    std::vector<Chord> orbit_chords;  // chord, sigma(chord), ... one full cycle
    SaCertificate certificate;
    long chord_preperiod = 0;
    long chord_period = 1;
    EndpointOrbit a_orbit, b_orbit;

    bool periodic() const { return chord_preperiod == 0; }
};

using StripResult = std::variant<Strip, SaRejection>;
using VerifyResult = std::variant<MinorRecord, SaRejection>;

/// Computes the central strip of m, or the SA1 rejection explaining why m is
/// not minor-like.
inline StripResult central_strip(const Chord& m) {
    Strip s;
    s.m = m;
    if (m.degenerate()) {
        auto [lo, hi] = m.a().halves();
        s.major = Chord(lo, hi);  // the critical diameter
        s.minus_major = s.major;
        s.quad = {lo, hi};
        s.strip_arc1 = {lo, lo, false};
        s.strip_arc2 = {hi, hi, false};
        s.cap1 = {lo, hi, false};
        s.cap2 = {hi, lo, true};
        return s;
    }

    Rat d = m.b().to_rational() - m.a().to_rational();
    if (d > Rat(1, 3) && d < Rat(2, 3)) {
        return SaRejection{m, SaProperty::SA1, 0,
                           "no sibling preimage pair of length >= 1/3", {}};
    }
    auto [v0, v2] = m.a().halves();
    auto [v1, v3] = m.b().halves();
    // Circular order is always v0 < v1 < v2 < v3.
    s.quad = {v0, v1, v2, v3};
    if (d <= Rat(1, 3)) {
        s.major = Chord(v0, v3);
        s.minus_major = Chord(v1, v2);
        s.strip_arc1 = {v0, v1, false};
        s.strip_arc2 = {v2, v3, false};
        s.horizontal = {Chord(v0, v1), Chord(v2, v3)};
        s.cap1 = {v3, v0, true};
        s.cap2 = {v1, v2, false};
    } else {
        s.major = Chord(v0, v1);
        s.minus_major = Chord(v2, v3);
        s.strip_arc1 = {v1, v2, false};
        s.strip_arc2 = {v3, v0, true};
        s.horizontal = {Chord(v1, v2), Chord(v3, v0)};
        s.cap1 = {v0, v1, false};
        s.cap2 = {v2, v3, false};
    }
    // Label M with m itself if m is one of the pair, else the smaller chord.
    if (s.minus_major == m || s.minus_major < s.major) std::swap(s.major, s.minus_major);

    if (!s.is_strip_edge(m) && !s.chord_in_cap(m)) {
        return SaRejection{m, SaProperty::SA1, 0,
                           "chord meets the interior of its central strip", {}};
    }
    if (!is_vertical(s.major) || !is_vertical(s.minus_major))
        throw internal_error("central_strip: strip edges of a non-degenerate minor-like chord must be vertical");
    return s;
}

/// Forward orbit of a chord up to the first repeat: one full eventual cycle.
struct ChordOrbit {
    std::vector<Chord> chords;
    long preperiod = 0;
    long period = 1;
};

inline ChordOrbit chord_orbit(const Chord& c) {
    ChordOrbit orb;
    std::map<Chord, long> seen;
    Chord x = c;
    for (;;) {
        auto [it, fresh] = seen.emplace(x, static_cast<long>(orb.chords.size()));
        if (!fresh) {
            orb.preperiod = it->second;
            orb.period = static_cast<long>(orb.chords.size()) - it->second;
            return orb;
        }
        orb.chords.push_back(x);
        x = sigma_chord(x);
    }
}

/// Full stand-alone-minor decision: SA1 (minor-like), SA2 (orbit pairwise
/// unlinked, never crossing the strip edges), SA3 (length never drops below
/// the initial length), evaluated exactly over one eventual orbit cycle.
inline VerifyResult verify_minor(const Chord& m) {
    StripResult sr = central_strip(m);
    if (std::holds_alternative<SaRejection>(sr)) return std::get<SaRejection>(sr);
    Strip strip = std::move(std::get<Strip>(sr));

    ChordOrbit orb = chord_orbit(m);
    SaCertificate cert;
    cert.sa1 = true;

    Rat base_len = length(m);
    cert.sa3 = true;
    for (std::size_t n = 1; n < orb.chords.size(); ++n) {
        if (length(orb.chords[n]) < base_len) {
            cert.sa3 = false;
            cert.sa3_witness = static_cast<long>(n);
            break;
        }
    }

    cert.sa2 = true;
    for (std::size_t j = 0; cert.sa2 && j < orb.chords.size(); ++j) {
        const Chord& cj = orb.chords[j];
        if (linked(cj, strip.major) || linked(cj, strip.minus_major)) {
            cert.sa2 = false;
            cert.sa2_witness = static_cast<long>(j);
            break;
        }
        for (std::size_t i = 0; i < j; ++i) {
            if (linked(orb.chords[i], cj)) {
                cert.sa2 = false;
                cert.sa2_witness = static_cast<long>(j);
                break;
            }
        }
    }

    if (!cert.sa3) {
        return SaRejection{m, SaProperty::SA3, cert.sa3_witness,
                           "length drops below the initial length", cert};
    }
    if (!cert.sa2) {
        return SaRejection{m, SaProperty::SA2, cert.sa2_witness,
                           "orbit chord crosses another orbit chord or a strip edge", cert};
    }

    MinorRecord rec;
    rec.chord = m;
    rec.strip = std::move(strip);
    rec.orbit_chords = std::move(orb.chords);
    rec.certificate = cert;
    rec.chord_preperiod = orb.preperiod;
    rec.chord_period = orb.period;
    OrbitInfo ia = orbit_info(m.a());
    OrbitInfo ib = orbit_info(m.b());
    rec.a_orbit = {ia.preperiod, ia.period};
    rec.b_orbit = {ib.preperiod, ib.period};
    bool periodic = ia.preperiod == 0 && ib.preperiod == 0;
    rec.classification = m.degenerate()
        ? (periodic ? Classification::degenerate_periodic : Classification::degenerate_preperiodic)
        : (periodic ? Classification::nondegenerate_periodic : Classification::nondegenerate_preperiodic);
    return rec;
}

inline bool is_stand_alone_minor(const Chord& m) {
    return std::holds_alternative<MinorRecord>(verify_minor(m));
}

namespace detail {

// First iterate n >= 0 with sigma^n(c) == target, or -1 within one cycle.
inline long first_hit(const std::vector<Chord>& orbit, const Chord& target) {
    for (std::size_t i = 0; i < orbit.size(); ++i)
        if (orbit[i] == target) return static_cast<long>(i);
    return -1;
}

inline bool is_horizontal_edge(const Strip& s, const Chord& c) {
    for (const Chord& h : s.horizontal)
        if (h == c) return true;
    return false;
}

}  // namespace detail

/// Derived-minor test: no eventual image of m1 separates m1 from m, and no
/// image ever equals a horizontal edge of Q(m). Separation only needs to be
/// checked before the first iterate that lands on m.
template <typename Membership>
inline bool is_derived_minor(const Chord& m1, const MinorRecord& m, Membership&& is_leaf) {
    if (behind(m1, m.chord) == Behind::not_behind)
        throw std::domain_error("is_derived_minor: candidate is not behind the minor");
    if (!is_leaf(m1))
        throw std::domain_error("is_derived_minor: candidate is not a supplied lamination leaf");
    ChordOrbit orb = chord_orbit(m1);
    long n = detail::first_hit(orb.chords, m.chord);
    std::size_t sep_end = n >= 0 ? static_cast<std::size_t>(n) : orb.chords.size();
    for (std::size_t i = 1; i < orb.chords.size(); ++i) {
        const Chord& img = orb.chords[i];
        if (detail::is_horizontal_edge(m.strip, img)) return false;
        if (i < sep_end && !img.degenerate() && separates(img, m1, m.chord)) return false;
    }
    return true;
}

/// Child test: derived minor that maps onto m under some iterate (children
/// are proper: m1 == m.chord is not its own child).
template <typename Membership>
inline bool is_child(const Chord& m1, const MinorRecord& m, Membership&& is_leaf) {
    if (m1 == m.chord) return false;
    ChordOrbit orb = chord_orbit(m1);
    if (detail::first_hit(orb.chords, m.chord) < 0) return false;
    return is_derived_minor(m1, m, std::forward<Membership>(is_leaf));
}

}  // namespace qml
