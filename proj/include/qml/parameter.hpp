#pragma once

#include "qml/pullback.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <unordered_map>

namespace qml {

/// Edge of the combinatorial main cardioid: the shortest hull edge of the
/// rotation set with rotation number p/q.
struct CardioidEdge {
    long p = 0, q = 0;
    MinorRecord minor;
    std::vector<Angle> rotation_orbit;

    std::string rotation_label() const { return std::to_string(p) + "/" + std::to_string(q); }
};

/// All cardioid edges with rotation number denominator 2..max_q, sorted by
/// position of the minor on the circle.
inline std::vector<CardioidEdge> cardioid_edges(long max_q) {
    if (max_q < 2) throw std::invalid_argument("cardioid_edges: max_q must be >= 2");
    std::vector<CardioidEdge> edges;
    for (long q = 2; q <= max_q; ++q) {
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            CardioidEdge e;
            e.p = p;
            e.q = q;
            e.rotation_orbit = rotation_number_orbit(p, q);
            // Shortest edge of the convex hull of the orbit.
            const auto& pts = e.rotation_orbit;
            std::optional<Chord> best;
            Rat best_len;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                Chord edge(pts[i], pts[(i + 1) % pts.size()]);
                Rat l = length(edge);
                if (!best || l < best_len) { best = edge; best_len = l; }
            }
            VerifyResult v = verify_minor(*best);
            if (!std::holds_alternative<MinorRecord>(v))
                throw internal_error("cardioid_edges: rotation-set minor failed verification");
            e.minor = std::get<MinorRecord>(std::move(v));
            edges.push_back(std::move(e));
        }
    }
    std::sort(edges.begin(), edges.end(), [](const CardioidEdge& x, const CardioidEdge& y) {
        return x.minor.chord < y.minor.chord;
    });
    return edges;
}

/// Offspring tree node: an SA-verified minor strictly behind its parent that
/// maps onto the parent chord under the recorded iterate.
struct OffspringNode {
    MinorRecord record;
    int parent = -1;  // index into nodes; -1 means the tree root
    long iterates_to_parent = 0;
    long iterates_to_root = 0;
    int generation = 1;
};

struct OffspringTree {
    MinorRecord root;
    std::vector<OffspringNode> nodes;
};

namespace detail {

// Shared SA-verification cache for bulk tree generation.
class VerifyCache {
public:
    const MinorRecord* lookup(const Chord& c) {
        auto it = cache_.find(c);
        if (it == cache_.end()) {
            it = cache_.emplace(c, verify_minor(c)).first;
        }
        return std::get_if<MinorRecord>(&it->second);
    }

private:
    std::unordered_map<Chord, VerifyResult> cache_;
};

}  // namespace detail

namespace detail {

// Children of `m` (generation one): SA-verified minors strictly behind m in
// the iterated m-pullback DAG of m that pass the derived-minor conditions
// and map onto m. Returns them with the first-hit iterate, sorted by chord.
inline std::vector<std::pair<Chord, long>> direct_children(const MinorRecord& m, long depth,
                                                           VerifyCache& cache) {
    std::unordered_set<Chord> seen{m.chord};
    std::vector<Chord> frontier{m.chord};
    std::vector<Chord> candidates;
    for (long round = 0; round < depth && !frontier.empty(); ++round) {
        std::vector<Chord> next;
        for (const Chord& c : frontier) {
            for (const Chord& p : m_pullbacks(m.strip, c)) {
                if (seen.insert(p).second) {
                    next.push_back(p);
                    if (behind(p, m.chord) == Behind::strictly_behind) candidates.push_back(p);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(candidates.begin(), candidates.end());

    std::vector<std::pair<Chord, long>> kids;
    for (const Chord& x : candidates) {
        const MinorRecord* rec = cache.lookup(x);
        if (!rec) continue;
        const std::vector<Chord>& orbit = rec->orbit_chords;
        long n = first_hit(orbit, m.chord);
        if (n <= 0) continue;
        bool ok = true;
        for (std::size_t i = 1; i < orbit.size() && ok; ++i) {
            const Chord& img = orbit[i];
            if (is_horizontal_edge(m.strip, img)) ok = false;
            if (ok && static_cast<long>(i) < n && !img.degenerate() && separates(img, x, m.chord))
                ok = false;
        }
        if (ok) kids.emplace_back(x, n);
    }
    return kids;
}

}  // namespace detail

/// Offspring tree of m. Generation 1 holds the children of m (iterated
/// m-pullbacks of m up to `depth`, strictly behind m, derived, mapping onto
/// m); generation k+1 holds the children of each generation-k node, each
/// computed in that node's own lamination with the same pullback depth.
/// Nodes appear in depth-first order, parents before children.
namespace detail {

inline void expand_children(OffspringTree& tree, int parent_index, int generation,
                            int generations, long depth, VerifyCache& cache) {
    const MinorRecord parent_rec =
        parent_index < 0 ? tree.root : tree.nodes[static_cast<std::size_t>(parent_index)].record;
    auto kids = direct_children(parent_rec, depth, cache);
    for (const auto& [chord, n] : kids) {
        OffspringNode node;
        node.record = *cache.lookup(chord);
        node.parent = parent_index;
        node.iterates_to_parent = n;
        node.generation = generation;
        long to_root = first_hit(node.record.orbit_chords, tree.root.chord);
        if (to_root < 0) throw internal_error("children: node orbit misses the tree root");
        node.iterates_to_root = to_root;
        int index = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back(std::move(node));
        if (generation < generations)
            expand_children(tree, index, generation + 1, generations, depth, cache);
    }
}

}  // namespace detail

inline OffspringTree children(const MinorRecord& m, int generations, long depth) {
    if (generations < 1) throw std::invalid_argument("children: generations must be >= 1");
    OffspringTree tree;
    tree.root = m;
    detail::VerifyCache cache;
    detail::expand_children(tree, -1, 1, generations, depth, cache);
    return tree;
}

/// Offspring construction for a target angle, following the recursive proof:
/// pull a major chain back along the itinerary of `a`, pass to the
/// separating image closest to the current minor, and recurse inside that
/// minor's lamination until `a` is an endpoint.
struct OffspringStep {
    Chord minor;        // the minor whose lamination the chain was pulled in
    Chord leaf;         // the chain end containing `a`
    Chord derived;      // the separating image chosen (== leaf when none)
    long chain_length;  // iterates from leaf onto `minor`
};

struct OffspringReport {
    MinorRecord result;
    std::vector<OffspringStep> steps;
    // Every SA-accepted separating image encountered, with the iterate k
    // such that sigma^k(a) is one of its endpoints.
    std::vector<std::pair<long, Chord>> accepted_separators;
};

inline OffspringReport offspring_report(const MinorRecord& m, const Angle& a) {
    if (a.is_periodic())
        throw std::domain_error("offspring: angle is periodic");
    {
        Chord pt(a, a);
        if (behind(pt, m.chord) != Behind::strictly_behind)
            throw std::domain_error("offspring: angle is not strictly behind the minor");
    }
    OrbitInfo aorb = orbit_info(a);
    auto hits_endpoint = [&](const Chord& c) {
        for (const Angle& x : aorb.orbit)
            if (c.has_endpoint(x)) return true;
        return false;
    };
    if (!hits_endpoint(m.chord))
        throw std::domain_error("offspring: orbit of the angle never hits an endpoint of the minor");

    OffspringReport report;
    detail::VerifyCache cache;
    MinorRecord cur = m;
    long guard = 4 * static_cast<long>(aorb.orbit.size()) + 16;

    for (long rounds = 0; rounds < guard; ++rounds) {
        // Minimal n >= 1 with sigma^n(a) an endpoint of cur.
        long n = -1;
        {
            Angle x = a.doubled();
            for (long k = 1; k <= static_cast<long>(aorb.orbit.size()); ++k) {
                if (cur.chord.has_endpoint(x)) { n = k; break; }
                x = x.doubled();
            }
        }
        if (n < 0) throw internal_error("offspring: itinerary lost the current minor");

        // sigma^(n-1)(ell) must be a major of L(cur); walk the chain down to a.
        std::vector<Angle> apath{a};
        for (long k = 1; k < n; ++k) apath.push_back(apath.back().doubled());
        const Angle& top_angle = apath.back();
        Chord chain = cur.strip.major.has_endpoint(top_angle) ? cur.strip.major
                     : cur.strip.minus_major.has_endpoint(top_angle)
                         ? cur.strip.minus_major
                         : throw internal_error("offspring: itinerary does not meet a major");
        for (long k = n - 2; k >= 0; --k) {
            const Angle& want = apath[static_cast<std::size_t>(k)];
            Chord found;
            bool ok = false;
            for (const Chord& p : m_pullbacks(cur.strip, chain)) {
                if (p.has_endpoint(want)) { found = p; ok = true; break; }
            }
            if (!ok) throw internal_error("offspring: pullback chain lost the itinerary");
            chain = found;
        }
        Chord ell = chain;  // contains a by construction

        // Separating images of ell between a and cur; choose the one closest
        // to cur (the longest, by nesting).
        ChordOrbit ellorb = chord_orbit(ell);
        Chord point_a(a, a);
        std::optional<Chord> closest;
        Rat closest_len;
        for (std::size_t i = 1; i < ellorb.chords.size(); ++i) {
            const Chord& img = ellorb.chords[i];
            if (img.degenerate() || img == cur.chord) continue;
            if (!separates(img, point_a, cur.chord)) continue;
            if (cache.lookup(img))
                report.accepted_separators.emplace_back(static_cast<long>(i), img);
            Rat l = length(img);
            if (!closest || l > closest_len) { closest = img; closest_len = l; }
        }
        Chord derived = closest ? *closest : ell;
        report.steps.push_back({cur.chord, ell, derived, n});

        const MinorRecord* drec = cache.lookup(derived);
        if (!drec) throw internal_error("offspring: derived leaf failed stand-alone verification");
        if (derived.has_endpoint(a)) {
            report.result = *drec;
            return report;
        }
        cur = *drec;
    }
    throw internal_error("offspring: recursion failed to terminate");
}

inline MinorRecord offspring(const MinorRecord& m, const Angle& a) {
    return offspring_report(m, a).result;
}

/// Finite approximation of QML^nr: the cardioid edges up to max_q together
/// with their offspring trees.
struct QmlNrParams {
    long max_q = 2;
    int generations = 1;
    long depth = 1;
};

struct QmlNrLeaf {
    MinorRecord record;
    std::string root;  // rotation number label "p/q" of the cardioid edge
    long iterates_to_root = 0;
};

struct QmlNrResult {
    QmlNrParams params;
    std::vector<QmlNrLeaf> leaves;  // sorted by chord

    std::vector<Chord> chords() const {
        std::vector<Chord> r;
        r.reserve(leaves.size());
        for (const auto& l : leaves) r.push_back(l.record.chord);
        return r;
    }
};

inline QmlNrResult qml_nr_approx(long max_q, int generations, long depth) {
    QmlNrResult result;
    result.params = {max_q, generations, depth};
    for (const CardioidEdge& edge : cardioid_edges(max_q)) {
        result.leaves.push_back({edge.minor, edge.rotation_label(), 0});
        OffspringTree tree = children(edge.minor, generations, depth);
        for (OffspringNode& node : tree.nodes)
            result.leaves.push_back({std::move(node.record), edge.rotation_label(), node.iterates_to_root});
    }
    std::sort(result.leaves.begin(), result.leaves.end(),
              [](const QmlNrLeaf& x, const QmlNrLeaf& y) { return x.record.chord < y.record.chord; });
    result.leaves.erase(std::unique(result.leaves.begin(), result.leaves.end(),
                                    [](const QmlNrLeaf& x, const QmlNrLeaf& y) {
                                        return x.record.chord == y.record.chord;
                                    }),
                        result.leaves.end());
    return result;
}

}  // namespace qml
