#pragma once

#include "qml/parameter.hpp"

namespace qml {

/// Binary substitution words of a non-degenerate periodic minor: the
/// repeating blocks of the two endpoint angles, of length equal to the
/// endpoint period (twice the chord period when sigma^p swaps endpoints).
struct TuningWords {
    Chord base;
    long word_len = 0;
    std::vector<bool> word0, word1;  // blocks of the smaller/larger endpoint
};

namespace detail {

inline std::vector<bool> bits_msb(const Int& value, long width) {
    std::vector<bool> bits(static_cast<std::size_t>(width));
    for (long i = 0; i < width; ++i)
        bits[static_cast<std::size_t>(width - 1 - i)] = boost::multiprecision::bit_test(value, static_cast<unsigned>(i));
    return bits;
}

inline Int bits_to_int(const std::vector<bool>& bits) {
    Int v = 0;
    for (bool b : bits) {
        v <<= 1;
        if (b) v |= 1;
    }
    return v;
}

}  // namespace detail

inline TuningWords tuning_words(const MinorRecord& base) {
    if (base.classification != Classification::nondegenerate_periodic)
        throw std::domain_error("tuning_words: base must be a non-degenerate periodic minor");
    long p = base.a_orbit.period;
    if (base.b_orbit.period != p)
        throw internal_error("tuning_words: endpoint periods differ on an accepted minor");
    TuningWords w;
    w.base = base.chord;
    w.word_len = p;
    Int modulus = (Int(1) << p) - 1;
    // theta = K/(2^p - 1); the repeating block is K as p bits.
    auto block = [&](const Angle& theta) {
        Int k = theta.num() * (modulus / theta.den());
        return detail::bits_msb(k, p);
    };
    w.word0 = block(base.chord.a());
    w.word1 = block(base.chord.b());
    if (w.word0 == w.word1) throw internal_error("tuning_words: identical endpoint words");
    return w;
}

namespace detail {

// Preperiodic binary expansion of theta: `pre` bits then repeating `rep`.
struct BinaryExpansion {
    std::vector<bool> pre, rep;
};

inline BinaryExpansion binary_expansion(const Angle& theta) {
    // den = 2^u * v with v odd. theta * 2^u = num/v, so the expansion has u
    // leading bits (the integer part) followed by the block of (num mod v)/v
    // over r = ord_v(2) bits.
    Int v = theta.den();
    long u = 0;
    while ((v & 1) == 0) { v >>= 1; ++u; }
    Int p_int = theta.num() / v;
    Int y_num = theta.num() % v;
    long r = 1;
    if (v != 1) {
        Int pow2 = 2 % v;
        r = 1;
        while (pow2 != 1) {
            pow2 = (pow2 << 1) % v;
            ++r;
        }
    }
    Int block = y_num * (((Int(1) << r) - 1) / v);
    BinaryExpansion e;
    e.pre = bits_msb(p_int, u);
    e.rep = bits_msb(block, r);
    return e;
}

inline std::vector<bool> substitute(const TuningWords& w, const std::vector<bool>& bits) {
    std::vector<bool> out;
    out.reserve(bits.size() * static_cast<std::size_t>(w.word_len));
    for (bool b : bits) {
        const auto& word = b ? w.word1 : w.word0;
        out.insert(out.end(), word.begin(), word.end());
    }
    return out;
}

inline Angle from_expansion(const std::vector<bool>& pre, const std::vector<bool>& rep) {
    long u = static_cast<long>(pre.size());
    long r = static_cast<long>(rep.size());
    Int p_val = bits_to_int(pre);
    Int r_val = bits_to_int(rep);
    Int rep_mod = (Int(1) << r) - 1;
    return Angle(p_val * rep_mod + r_val, (Int(1) << u) * rep_mod);
}

}  // namespace detail

/// Word substitution on the binary expansion of theta (terminating-expansion
/// convention for dyadic angles). Exactly semiconjugates: for p the word
/// length, sigma^p(tune_angle(theta)) == tune_angle(sigma(theta)).
inline Angle tune_angle(const TuningWords& w, const Angle& theta) {
    detail::BinaryExpansion e = detail::binary_expansion(theta);
    return detail::from_expansion(detail::substitute(w, e.pre), detail::substitute(w, e.rep));
}

/// Both substitution images of theta. They differ exactly for angles with
/// two binary expansions (dyadic denominators), mirroring the endpoint
/// identification of the collapse map; equal otherwise.
inline std::pair<Angle, Angle> tune_angle_both(const TuningWords& w, const Angle& theta) {
    Angle primary = tune_angle(w, theta);
    Int den = theta.den();
    long u = 0;
    Int d = den;
    while ((d & 1) == 0) { d >>= 1; ++u; }
    if (d != 1) return {primary, primary};  // not dyadic: unique expansion
    // Alternative expansion: (pre bits of num*2^u... ) - 1 followed by 1s.
    std::vector<bool> pre_bits;
    if (!theta.is_zero()) {
        // theta = n/2^u with n odd; bits of n-1 over u bits, then repeating 1.
        pre_bits = detail::bits_msb(theta.num() - 1, u);
    }
    // theta = 0 keeps an empty preperiod: its all-ones expansion.
    std::vector<bool> ones{true};
    Angle secondary = detail::from_expansion(detail::substitute(w, pre_bits), detail::substitute(w, ones));
    return {primary, secondary};
}

/// Endpointwise tuning of a chord; the result must pass stand-alone
/// verification (a failure indicates an inconsistent word pair).
inline Chord tune_chord(const TuningWords& w, const Chord& ell) {
    Chord tuned(tune_angle(w, ell.a()), tune_angle(w, ell.b()));
    if (!is_stand_alone_minor(tuned))
        throw internal_error("tune_chord: tuned chord failed stand-alone verification");
    return tuned;
}

/// Finite approximation of QML^fr: level 0 is qml_nr_approx; each further
/// level tunes the level-0 leaf set by the words of every periodic minor
/// emitted at the previous level.
inline std::vector<MinorRecord> qml_approx(long max_q, int generations, long depth, int levels) {
    if (levels < 0) throw std::invalid_argument("qml_approx: negative levels");
    QmlNrResult level0 = qml_nr_approx(max_q, generations, depth);
    std::map<Chord, MinorRecord> all;
    std::vector<MinorRecord> current_periodic;
    for (const QmlNrLeaf& leaf : level0.leaves) {
        all.emplace(leaf.record.chord, leaf.record);
        if (leaf.record.classification == Classification::nondegenerate_periodic)
            current_periodic.push_back(leaf.record);
    }
    for (int lvl = 1; lvl <= levels; ++lvl) {
        std::vector<MinorRecord> next_periodic;
        for (const MinorRecord& base : current_periodic) {
            TuningWords w = tuning_words(base);
            for (const QmlNrLeaf& leaf : level0.leaves) {
                Chord tuned = tune_chord(w, leaf.record.chord);
                VerifyResult v = verify_minor(tuned);
                MinorRecord* rec = std::get_if<MinorRecord>(&v);
                if (!rec) throw internal_error("qml_approx: tuned minor failed verification");
                auto [it, fresh] = all.emplace(tuned, *rec);
                if (fresh && rec->classification == Classification::nondegenerate_periodic)
                    next_periodic.push_back(*rec);
            }
        }
        current_periodic = std::move(next_periodic);
    }
    std::vector<MinorRecord> out;
    out.reserve(all.size());
    for (auto& [chord, rec] : all) out.push_back(std::move(rec));
    return out;
}

}  // namespace qml
