#pragma once

#include "latref/numeric.hpp"

#include <cmath>

namespace latref {

// sign of a + b*sqrt(D) for rational a, b and rational D >= 0, computed exactly
inline int sign_quad(const Rat& a, const Rat& b, const Rat& D) {
    if (D < 0) throw std::invalid_argument("sign_quad needs D >= 0");
    if (b == 0 || D == 0) return sign(a);
    if (a == 0) return sign(b);
    int sa = sign(a), sb = sign(b);
    if (sa == sb) return sa;
    Rat lhs = a * a, rhs = b * b * D;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

// Element of Q(sqrt2, sqrt3): a + b*sqrt2 + c*sqrt3 + d*sqrt6 with rational coefficients.
// Just enough arithmetic for the cofactor algebra of the width bound.
struct Q236 {
    Rat a{0}, b{0}, c{0}, d{0};

    Q236() = default;
    Q236(Rat a_) : a(std::move(a_)) {}
    Q236(Rat a_, Rat b_, Rat c_, Rat d_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    Q236 operator+(const Q236& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Q236 operator-(const Q236& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Q236 operator-() const { return {-a, -b, -c, -d}; }
    Q236 operator*(const Q236& o) const {
        // basis products: s2*s2=2, s3*s3=3, s6*s6=6, s2*s3=s6, s2*s6=2*s3, s3*s6=3*s2
        return {a * o.a + 2 * b * o.b + 3 * c * o.c + 6 * d * o.d,
                a * o.b + b * o.a + 3 * (c * o.d + d * o.c),
                a * o.c + c * o.a + 2 * (b * o.d + d * o.b),
                a * o.d + d * o.a + b * o.c + c * o.b};
    }
    bool operator==(const Q236& o) const = default;

    double to_double() const {
        return a.convert_to<double>() + b.convert_to<double>() * std::sqrt(2.0) +
               c.convert_to<double>() * std::sqrt(3.0) + d.convert_to<double>() * std::sqrt(6.0);
    }
};

}  // namespace latref
