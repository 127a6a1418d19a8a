#pragma once

// Shared helpers for the test suites: independent oracles kept deliberately
// separate from the library implementation paths they cross-check, plus small
// deterministic random generators.

#include <catch2/catch_amalgamated.hpp>

#include "qweyl/cyclotomic.hpp"
#include "qweyl/rational.hpp"

#include <map>
#include <random>
#include <vector>

namespace testsupport {

using qweyl::Int;
using qweyl::Rational;

// --- independent polynomial long division over Q -------------------------

// Schoolbook long division over rationals; returns quotient, requires the
// division to be exact. Independent of the library's monic integer division.
inline std::vector<Rational> oracle_poly_div(const std::vector<Rational>& num,
                                             const std::vector<Rational>& den) {
    std::vector<Rational> rem = num;
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    std::vector<Rational> d = den;
    while (!d.empty() && d.back() == 0) d.pop_back();
    REQUIRE(!d.empty());
    REQUIRE(rem.size() >= d.size());
    std::vector<Rational> quot(rem.size() - d.size() + 1);
    for (std::size_t qi = quot.size(); qi-- > 0;) {
        Rational c = rem[qi + d.size() - 1] / d.back();
        quot[qi] = c;
        for (std::size_t j = 0; j < d.size(); ++j) rem[qi + j] -= c * d[j];
    }
    for (const Rational& r : rem) REQUIRE(r == 0);
    return quot;
}

// Cyclotomic polynomial via the rational long-division oracle.
inline std::vector<Rational> oracle_cyclotomic(unsigned n) {
    static std::map<unsigned, std::vector<Rational>> memo;
    auto hit = memo.find(n);
    if (hit != memo.end()) return hit->second;
    std::vector<Rational> poly(n + 1);
    poly[0] = -1;
    poly[n] = 1;
    for (unsigned d : qweyl::divisors_of(n))
        if (d != n) poly = oracle_poly_div(poly, oracle_cyclotomic(d));
    memo[n] = poly;
    return poly;
}

// --- order oracle: literal power iteration --------------------------------

inline unsigned oracle_order_by_iteration(const qweyl::Cyc& a) {
    const qweyl::Cyc one = qweyl::Cyc(1).lifted_to(a.conductor());
    qweyl::Cyc p = a;
    for (unsigned t = 1; t <= a.conductor(); ++t) {
        if (p == one) return t;
        p = p * a;
    }
    return 0;  // not a root of unity within the conductor bound
}

// --- deterministic random values ------------------------------------------

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240817ULL);
    return gen;
}

inline Rational random_rational(int span = 6) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, span);
    return Rational(num(rng()), den(rng()));
}

inline qweyl::Cyc random_cyc(unsigned conductor) {
    const unsigned phi = qweyl::euler_phi(conductor);
    std::vector<Rational> coeffs(phi);
    for (Rational& c : coeffs) c = random_rational();
    return qweyl::Cyc::from_coeffs(conductor, std::move(coeffs));
}

inline qweyl::Cyc random_nonzero_cyc(unsigned conductor) {
    for (;;) {
        qweyl::Cyc c = random_cyc(conductor);
        if (!c.is_zero()) return c;
    }
}

}  // namespace testsupport
