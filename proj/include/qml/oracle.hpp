#pragma once

#include "qml/minor.hpp"

#include <span>

namespace qml {

struct RejectionEntry {
    Chord chord;
    SaProperty violated = SaProperty::SA1;
    long witness = 0;
};

/// Exhaustive ground truth for one period: verdicts for every non-degenerate
/// chord whose endpoints both have exact period q under doubling.
struct EnumerationReport {
    long period_bound = 0;  // the q that was enumerated
    long candidates_checked = 0;
    std::vector<MinorRecord> accepted;       // sorted by chord
    std::vector<RejectionEntry> rejected;    // sorted by chord
};

inline EnumerationReport enumerate_periodic_minors(long q, long bound = 10) {
    if (q < 2 || q > bound)
        throw std::invalid_argument("enumerate_periodic_minors: period out of range");
    Int modulus = (Int(1) << q) - 1;
    std::vector<Angle> angles;
    for (Int k = 1; k < modulus; ++k) {
        Angle a(k, modulus);
        // Exact period q: the orbit of k under doubling mod (2^q - 1) has size q.
        long per = 1;
        Int x = (k << 1) % modulus;
        while (x != k) {
            x = (x << 1) % modulus;
            ++per;
        }
        if (per == q) angles.push_back(a);
    }
    EnumerationReport report;
    report.period_bound = q;
    for (std::size_t i = 0; i < angles.size(); ++i) {
        for (std::size_t j = i + 1; j < angles.size(); ++j) {
            ++report.candidates_checked;
            Chord c(angles[i], angles[j]);
            VerifyResult v = verify_minor(c);
            if (auto* rec = std::get_if<MinorRecord>(&v)) {
                report.accepted.push_back(std::move(*rec));
            } else {
                const SaRejection& rej = std::get<SaRejection>(v);
                report.rejected.push_back({rej.chord, rej.violated, rej.witness});
            }
        }
    }
    auto by_chord = [](const auto& x, const auto& y) { return x.chord < y.chord; };
    std::sort(report.accepted.begin(), report.accepted.end(), by_chord);
    std::sort(report.rejected.begin(), report.rejected.end(), by_chord);
    return report;
}

/// Distance from one chord to the nearest element of a set.
inline Rat min_chord_distance(const Chord& c, std::span<const Chord> set) {
    if (set.empty()) throw std::invalid_argument("min_chord_distance: empty set");
    Rat best = chord_distance(c, set[0]);
    for (std::size_t i = 1; i < set.size(); ++i) {
        Rat d = chord_distance(c, set[i]);
        if (d < best) best = d;
    }
    return best;
}

/// Symmetric Hausdorff distance between chord sets under the chord metric.
inline Rat hausdorff_distance(std::span<const Chord> a, std::span<const Chord> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("hausdorff_distance: empty input");
    Rat worst = 0;
    for (const Chord& x : a) {
        Rat d = min_chord_distance(x, b);
        if (d > worst) worst = d;
    }
    for (const Chord& y : b) {
        Rat d = min_chord_distance(y, a);
        if (d > worst) worst = d;
    }
    return worst;
}

}  // namespace qml
