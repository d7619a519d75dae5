#pragma once

#include "qml/chord.hpp"

#include <random>

namespace qml::testing {

/// Deterministic generator of random angles with denominator <= max_den.
class AngleGen {
public:
    explicit AngleGen(std::uint64_t seed, long max_den = 1 << 16)
        : rng_(seed), den_dist_(1, max_den) {}

    Angle next() {
        long den = den_dist_(rng_);
        std::uniform_int_distribution<long> num_dist(0, den - 1);
        return Angle(num_dist(rng_), den);
    }

    Chord next_chord() { return Chord(next(), next()); }

    Chord next_nondegenerate_chord() {
        for (;;) {
            Chord c = next_chord();
            if (!c.degenerate()) return c;
        }
    }

private:
    std::mt19937_64 rng_;
    std::uniform_int_distribution<long> den_dist_;
};

}  // namespace qml::testing
