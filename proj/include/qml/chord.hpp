#pragma once

#include "qml/angle.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

namespace qml {

/// Unordered pair of angles; stored with a <= b. a == b is the degenerate
/// chord (a single circle point).
class Chord {
public:
    Chord() = default;
    Chord(Angle x, Angle y) {
        if (y < x) std::swap(x, y);
        a_ = std::move(x);
        b_ = std::move(y);
    }

    const Angle& a() const { return a_; }
    const Angle& b() const { return b_; }

    bool degenerate() const { return a_ == b_; }
    bool has_endpoint(const Angle& x) const { return a_ == x || b_ == x; }

    /// The sibling chord, both endpoints shifted by 1/2.
    Chord sibling() const { return Chord(a_.antipode(), b_.antipode()); }

    bool operator==(const Chord& o) const { return a_ == o.a_ && b_ == o.b_; }

    std::strong_ordering operator<=>(const Chord& o) const {
        auto c = a_ <=> o.a_;
        if (c != std::strong_ordering::equal) return c;
        return b_ <=> o.b_;
    }

    std::string to_string() const {
        if (degenerate()) return a_.to_string();
        return a_.to_string() + "-" + b_.to_string();
    }

    /// Parses "a-b" in Angle syntax, or a single angle for a degenerate chord.
    static Chord parse(const std::string& text) {
        auto dash = text.find('-');
        if (dash == std::string::npos) {
            Angle p = Angle::parse(text);
            return Chord(p, p);
        }
        return Chord(Angle::parse(text.substr(0, dash)), Angle::parse(text.substr(dash + 1)));
    }

    std::size_t hash() const {
        std::size_t seed = a_.hash();
        boost::hash_combine(seed, b_.hash());
        return seed;
    }

private:
    Angle a_, b_;
};

/// Length of the shorter arc between the endpoints; in [0, 1/2].
inline Rat length(const Chord& c) {
    return circle_distance(c.a(), c.b());
}

inline bool is_diameter(const Chord& c) {
    return length(c) == Rat(1, 2);
}

/// Image chord under doubling (degenerate when c is a diameter).
inline Chord sigma_chord(const Chord& c) {
    return Chord(c.a().doubled(), c.b().doubled());
}

/// Length map of doubling: psi(x) = 2x on [0,1/4], 1-2x on [1/4,1/2].
/// Satisfies length(sigma_chord(c)) == psi(length(c)).
inline Rat psi(const Rat& x) {
    if (x < 0 || x > Rat(1, 2)) throw std::invalid_argument("psi: argument outside [0, 1/2]");
    if (x <= Rat(1, 4)) return 2 * x;
    return 1 - 2 * x;
}

namespace detail {
// Strictly inside the open arc from lo to hi counterclockwise (lo < hi as
// stored representatives; no wrap).
inline bool in_open_arc(const Angle& x, const Angle& lo, const Angle& hi) {
    return lo < x && x < hi;
}
}  // namespace detail

/// True iff the open chords cross inside the disk. Chords sharing an endpoint
/// are not linked; degenerate chords are never linked.
inline bool linked(const Chord& c1, const Chord& c2) {
    if (c1.degenerate() || c2.degenerate()) return false;
    if (c1.has_endpoint(c2.a()) || c1.has_endpoint(c2.b())) return false;
    bool a_in = detail::in_open_arc(c2.a(), c1.a(), c1.b());
    bool b_in = detail::in_open_arc(c2.b(), c1.a(), c1.b());
    return a_in != b_in;
}

enum class Behind { strictly_behind, behind_only, not_behind };

namespace detail {

// H(c): the shorter open arc bounded by the endpoints of a non-diameter chord.
// Returned as a membership test pair: (lo, hi, wraps).
struct Arc {
    Angle lo, hi;
    bool wraps = false;  // arc runs hi -> lo through 0

    bool contains_open(const Angle& x) const {
        if (wraps) return x > hi || x < lo;
        return lo < x && x < hi;
    }
    bool contains_closed(const Angle& x) const {
        if (x == lo || x == hi) return true;
        return contains_open(x);
    }
};

inline Arc shorter_arc(const Chord& c) {
    // For a < b: if b - a < 1/2 the shorter arc is (a, b), if > 1/2 it wraps.
    Rat d = c.b().to_rational() - c.a().to_rational();
    Arc arc;
    if (d <= Rat(1, 2)) {
        arc.lo = c.a();
        arc.hi = c.b();
        arc.wraps = false;
    } else {
        arc.lo = c.a();
        arc.hi = c.b();
        arc.wraps = true;
    }
    return arc;
}

}  // namespace detail

/// Position of c1 relative to the region cut off by c (on the shorter-arc
/// side H(c)). c must not be a diameter.
inline Behind behind(const Chord& c1, const Chord& c) {
    if (is_diameter(c)) throw std::domain_error("behind: reference chord is a diameter");
    if (c.degenerate()) {
        // H(c) is empty; only the same singleton is (weakly) behind.
        return c1 == c ? Behind::behind_only : Behind::not_behind;
    }
    detail::Arc h = detail::shorter_arc(c);
    bool a_open = h.contains_open(c1.a());
    bool b_open = h.contains_open(c1.b());
    if (a_open && b_open) return Behind::strictly_behind;
    if (h.contains_closed(c1.a()) && h.contains_closed(c1.b())) return Behind::behind_only;
    return Behind::not_behind;
}

/// True iff c separates 0 from 1/2 strictly. Chords with endpoint 0 or 1/2
/// are horizontal.
inline bool is_vertical(const Chord& c) {
    if (c.degenerate()) throw std::domain_error("is_vertical: degenerate chord");
    static const Angle half(1, 2);
    return !c.a().is_zero() && c.a() < half && half < c.b();
}

/// True iff c separates c1 from c2: their endpoints not shared with c lie in
/// different components of the circle minus the endpoints of c.
inline bool separates(const Chord& c, const Chord& c1, const Chord& c2) {
    if (c.degenerate()) throw std::domain_error("separates: separator is degenerate");
    if (linked(c, c1) || linked(c, c2)) throw std::domain_error("separates: linked inputs");
    if (c == c1 || c == c2) return false;

    // Components of S^1 minus {a, b}: inside = open arc (a, b), outside = the rest.
    auto side = [&](const Chord& x, bool& any_inside, bool& any_outside) {
        for (const Angle* p : {&x.a(), &x.b()}) {
            if (*p == c.a() || *p == c.b()) continue;
            if (detail::in_open_arc(*p, c.a(), c.b()))
                any_inside = true;
            else
                any_outside = true;
        }
    };
    bool in1 = false, out1 = false, in2 = false, out2 = false;
    side(c1, in1, out1);
    side(c2, in2, out2);
    if ((in1 && out1) || (in2 && out2)) throw std::domain_error("separates: linked inputs");
    if (!(in1 || out1) || !(in2 || out2)) return false;  // no endpoints off c
    return (in1 && out2) || (out1 && in2);
}

/// Chord metric: endpoint circle-distances under the best endpoint pairing.
inline Rat chord_distance(const Chord& c1, const Chord& c2) {
    Rat d1 = std::max(circle_distance(c1.a(), c2.a()), circle_distance(c1.b(), c2.b()));
    Rat d2 = std::max(circle_distance(c1.a(), c2.b()), circle_distance(c1.b(), c2.a()));
    return std::min(d1, d2);
}

/// Finds a linked pair in a family of chords, or nullopt if the family is
/// pairwise unlinked. O(n log n) sweep over endpoint intervals.
inline std::optional<std::pair<Chord, Chord>> first_crossing(std::span<const Chord> chords) {
    std::vector<Chord> sorted(chords.begin(), chords.end());
    std::sort(sorted.begin(), sorted.end(), [](const Chord& x, const Chord& y) {
        auto c = x.a() <=> y.a();
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        return y.b() < x.b();  // ties: wider interval first
    });
    std::vector<const Chord*> stack;
    for (const Chord& c : sorted) {
        while (!stack.empty() && stack.back()->b() <= c.a()) stack.pop_back();
        if (!stack.empty() && stack.back()->b() < c.b()) {
            // Overlap without nesting; recheck with the exact predicate so
            // shared endpoints are not reported.
            if (linked(*stack.back(), c)) return std::make_pair(*stack.back(), c);
        }
        stack.push_back(&c);
    }
    return std::nullopt;
}

}  // namespace qml

template <>
struct std::hash<qml::Chord> {
    std::size_t operator()(const qml::Chord& c) const noexcept { return c.hash(); }
};
