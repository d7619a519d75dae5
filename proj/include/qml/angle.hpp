#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/functional/hash.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qml {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when a library invariant that should be unbreakable is breached.
/// CLI maps this to exit code 3.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Exact rational point of R/Z, stored as a reduced fraction num/den with
/// 0 <= num < den. The zero angle is 0/1.
class Angle {
public:
    Angle() : num_(0), den_(1) {}

    /// Canonicalizes mod 1 and reduces. den must be nonzero.
    Angle(Int num, Int den) {
        if (den == 0) throw std::invalid_argument("Angle: zero denominator");
        if (den < 0) { den = -den; num = -num; }
        num %= den;
        if (num < 0) num += den;
        Int g = boost::multiprecision::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
        num_ = std::move(num);
        den_ = std::move(den);
    }

    Angle(long num, long den) : Angle(Int(num), Int(den)) {}

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    /// Periodic under doubling iff the denominator is odd.
    bool is_periodic() const { return (den_ & 1) == 1; }

    /// sigma_2: 2a mod 1.
    Angle doubled() const {
        Angle r;
        if ((den_ & 1) == 0) {
            // num / (den/2); gcd is 1 since gcd(num, den) = 1.
            r.num_ = num_;
            r.den_ = den_ >> 1;
        } else {
            Int n2 = num_ << 1;
            if (n2 >= den_) n2 -= den_;
            // gcd(2*num mod den, den) = gcd(2*num, den) = 1 for odd den.
            r.num_ = std::move(n2);
            r.den_ = den_;
        }
        return r;
    }

    /// The two sigma_2-preimages {a/2, a/2 + 1/2}; a/2 in [0,1/2) comes first.
    std::pair<Angle, Angle> halves() const {
        Angle lo, hi;
        if ((num_ & 1) == 0) {
            lo.num_ = num_ >> 1;
            lo.den_ = den_;
        } else {
            lo.num_ = num_;
            lo.den_ = den_ << 1;
        }
        // hi = (num + den) / (2 den), reduced by the same parity rules.
        Int t = num_ + den_;
        if ((t & 1) == 0) {
            hi.num_ = t >> 1;
            hi.den_ = den_;
        } else {
            hi.num_ = std::move(t);
            hi.den_ = den_ << 1;
        }
        return {lo, hi};
    }

    /// a + 1/2 mod 1 (the sibling involution on angles).
    Angle antipode() const {
        auto [lo, hi] = doubled().halves();
        return lo == *this ? hi : lo;
    }

    Rat to_rational() const { return Rat(num_, den_); }

    bool operator==(const Angle& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::strong_ordering operator<=>(const Angle& o) const {
        Int lhs = num_ * o.den_;
        Int rhs = o.num_ * den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string to_string() const {
        if (num_ == 0) return "0";
        return num_.str() + "/" + den_.str();
    }

    /// Parses "p/q" (reduced or not; canonicalized mod 1) or a bare integer.
    static Angle parse(const std::string& text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) return Angle(Int(text), Int(1));
            return Angle(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("Angle: cannot parse '" + text + "'");
        }
    }

    std::size_t hash() const {
        std::size_t seed = boost::hash<Int>{}(num_);
        boost::hash_combine(seed, boost::hash<Int>{}(den_));
        return seed;
    }

private:
    Int num_, den_;
};

/// Normalized circle distance min(|x-y|, 1-|x-y|), a rational in [0, 1/2].
inline Rat circle_distance(const Angle& x, const Angle& y) {
    Rat d = x.to_rational() - y.to_rational();
    if (d < 0) d = -d;
    Rat alt = 1 - d;
    return d <= alt ? d : alt;
}

/// Preperiod/period bookkeeping of an angle under sigma_2, with the eventual
/// orbit listed up to (and excluding) the first repeat.
struct OrbitInfo {
    long preperiod = 0;
    long period = 1;
    std::vector<Angle> orbit;  // a, sigma(a), ..., sigma^(preperiod+period-1)(a)
};

/// Exact minimal preperiod and period of a under doubling.
/// A rational angle is periodic iff its denominator is odd.
inline OrbitInfo orbit_info(const Angle& a) {
    // Split den = 2^e * u with u odd: preperiod is e, period is ord_u(2).
    OrbitInfo info;
    std::vector<Angle> orbit;
    Angle x = a;
    long e = 0;
    while (!x.is_periodic()) {
        orbit.push_back(x);
        x = x.doubled();
        ++e;
    }
    Angle first = x;
    long p = 0;
    do {
        orbit.push_back(x);
        x = x.doubled();
        ++p;
    } while (x != first);
    info.preperiod = e;
    info.period = p;
    info.orbit = std::move(orbit);
    return info;
}

/// The unique periodic orbit of period q on which sigma_2 acts as the
/// combinatorial rotation by p/q, found by exhaustive search over the
///q-periodic angles k/(2^q - 1). Result sorted ascending.
inline std::vector<Angle> rotation_number_orbit(long p, long q) {
    if (q < 2 || p <= 0 || p >= q || boost::multiprecision::gcd(Int(p), Int(q)) != 1)
        throw std::invalid_argument("rotation_number_orbit: need 0 < p < q, gcd(p,q) = 1");
    Int modulus = (Int(1) << q) - 1;
    for (Int k = 1; k < modulus; ++k) {
        // Walk the orbit of k/modulus; visit each orbit once, from its least element.
        std::vector<Int> orb;
        Int x = k;
        bool least = true;
        do {
            orb.push_back(x);
            x = (x << 1) % modulus;
            if (x < k) { least = false; break; }
        } while (x != k);
        if (!least || static_cast<long>(orb.size()) != q) continue;
        // Sorted positions; doubling must advance every index by p mod q.
        std::vector<Int> sorted = orb;
        std::sort(sorted.begin(), sorted.end());
        auto index_of = [&](const Int& v) {
            return static_cast<long>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
        };
        bool rotation = true;
        for (const Int& v : orb) {
            Int image = (v << 1) % modulus;
            if ((index_of(v) + p) % q != index_of(image)) { rotation = false; break; }
        }
        if (!rotation) continue;
        std::vector<Angle> result;
        result.reserve(sorted.size());
        for (const Int& v : sorted) result.emplace_back(v, modulus);
        return result;
    }
    throw internal_error("rotation_number_orbit: no rotation set found");
}

}  // namespace qml

template <>
struct std::hash<qml::Angle> {
    std::size_t operator()(const qml::Angle& a) const noexcept { return a.hash(); }
};
