#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace latref {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Error taxonomy shared across the library.
struct DegenerateLattice : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotPrimitive : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct RankMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotSpacelike : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotAcuteAngled : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotCoxeter : std::domain_error {
    using std::domain_error::domain_error;
};
struct DegenerateVertex : std::domain_error {
    using std::domain_error::domain_error;
};
struct IllposedAngleSet : std::domain_error {
    using std::domain_error::domain_error;
};

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }
inline Rat abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

inline int sign(const Int& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }
inline int sign(const Rat& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// gcd of a whole coordinate vector (non-negative; 0 for the zero vector)
inline Int content(const std::vector<Int>& v) {
    Int g = 0;
    for (const auto& c : v) g = gcd(g, c);
    return g;
}

inline bool is_primitive(const std::vector<Int>& v) { return content(v) == 1; }

// floor(sqrt(n)) for n >= 0
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative");
    if (n == 0) return 0;
    Int x = Int(1) << (unsigned)((boost::multiprecision::msb(n) / 2) + 1);
    for (;;) {
        Int y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    return x;
}

// floor(sqrt(r)) over the rationals, r >= 0
inline Int isqrt_floor(const Rat& r) {
    if (r < 0) throw std::invalid_argument("isqrt_floor of negative");
    Int f = num(r) / den(r);
    Int s = isqrt(f);
    // floor(sqrt(floor r)) can undershoot by at most... verify against r itself
    while (Rat((s + 1) * (s + 1)) <= r) ++s;
    while (Rat(s * s) > r) --s;
    return s;
}

inline bool is_square(const Int& n) {
    if (n < 0) return false;
    Int s = isqrt(n);
    return s * s == n;
}

// trial-division factorization; fine at the magnitudes this project sees
inline std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n < 0) n = -n;
    std::vector<std::pair<Int, int>> out;
    if (n <= 1) return out;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// squarefree part of a nonzero rational, as an integer (sign preserved)
inline Int squarefree_part(const Rat& r) {
    if (r == 0) throw std::invalid_argument("squarefree_part of zero");
    Int n = num(r) * den(r);  // same square class as r
    Int sf = n < 0 ? -1 : 1;
    for (const auto& [p, e] : factorize(n))
        if (e % 2) sf *= p;
    return sf;
}

inline int v_p(Int n, const Int& p) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

}  // namespace latref
