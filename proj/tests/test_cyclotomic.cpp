#include "test_support.hpp"

#include "qweyl/cyclotomic.hpp"

using qweyl::Cyc;
using qweyl::cyclotomic_polynomial;
using qweyl::euler_phi;
using qweyl::Int;
using qweyl::Rational;

namespace {

std::vector<Int> to_int_poly(const std::vector<Rational>& p) {
    std::vector<Int> out;
    out.reserve(p.size());
    for (const Rational& c : p) {
        REQUIRE(boost::multiprecision::denominator(c) == 1);
        out.push_back(boost::multiprecision::numerator(c));
    }
    return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials: base cases and oracle-derived values") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});  // x - 1
    CHECK(cyclotomic_polynomial(2) == std::vector<Int>{1, 1});   // x + 1
    // Derived with the independent long-division oracle.
    CHECK(cyclotomic_polynomial(4) == to_int_poly(testsupport::oracle_cyclotomic(4)));
    CHECK(cyclotomic_polynomial(6) == to_int_poly(testsupport::oracle_cyclotomic(6)));
    CHECK(cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});      // x^2 + 1
    CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});     // x^2 - x + 1
    CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST_CASE("cyclotomic polynomials: degree and product identity up to 30") {
    for (unsigned n = 1; n <= 30; ++n) {
        const std::vector<Int>& phi_n = cyclotomic_polynomial(n);
        REQUIRE(phi_n.size() == euler_phi(n) + 1);
        CHECK(phi_n.back() == 1);
        // Product of Phi_d over d | n must equal x^n - 1 exactly.
        std::vector<Int> prod{1};
        for (unsigned d : qweyl::divisors_of(n)) {
            const std::vector<Int>& f = cyclotomic_polynomial(d);
            std::vector<Int> next(prod.size() + f.size() - 1, 0);
            for (std::size_t i = 0; i < prod.size(); ++i)
                for (std::size_t j = 0; j < f.size(); ++j) next[i + j] += prod[i] * f[j];
            prod = std::move(next);
        }
        std::vector<Int> expect(n + 1, 0);
        expect[0] = -1;
        expect[n] = 1;
        CHECK(prod == expect);
    }
}

TEST_CASE("primitive roots") {
    CHECK(Cyc::zeta(1) == Cyc(1));
    CHECK(Cyc::zeta(2) == Cyc(-1));
    // zeta_4^2 = -1, via reduction mod x^2 + 1.
    const Cyc i = Cyc::zeta(4);
    CHECK(i * i == Cyc(-1));
    for (unsigned n = 1; n <= 24; ++n) CHECK(Cyc::zeta(n).order_of_unit() == n);
}

TEST_CASE("field arithmetic examples") {
    const Cyc i = Cyc::zeta(4);
    CHECK(i * i == Cyc(-1));

    const Cyc a = testsupport::random_cyc(12);
    CHECK(a + Cyc(0) == a);

    // zeta_6 + zeta_6^5 = 1 (reduce mod x^2 - x + 1).
    const Cyc w = Cyc::zeta(6);
    CHECK(w + w.pow(5) == Cyc(1));
}

TEST_CASE("mixed-conductor arithmetic lifts to the lcm") {
    const Cyc i = Cyc::zeta(4);
    const Cyc w = Cyc::zeta(6);
    const Cyc prod = i * w;
    CHECK(prod.conductor() == 12);
    CHECK(prod == Cyc::zeta(12).pow(3 + 2));
    CHECK(i + (-i) == Cyc(0));
}

TEST_CASE("inversion") {
    CHECK(Cyc(1).inverse() == Cyc(1));
    for (unsigned n : {3u, 4u, 6u, 8u, 12u})
        CHECK(Cyc::zeta(n).inverse() == Cyc::zeta(n).pow(static_cast<long long>(n) - 1));
    // (1 + zeta_4)^{-1} = (1 - zeta_4)/2: verify the product reduces to 1.
    const Cyc i = Cyc::zeta(4);
    const Cyc inv = (Cyc(1) + i).inverse();
    CHECK(inv == (Cyc(1) - i).scaled(Rational(1, 2)));
    CHECK((Cyc(1) + i) * inv == Cyc(1));
    CHECK_THROWS_AS(Cyc(0).inverse(), std::domain_error);
}

TEST_CASE("order of unit: examples and iteration oracle") {
    CHECK(Cyc(1).order_of_unit() == 1);
    CHECK(Cyc::zeta(6).pow(2).order_of_unit() == 3);
    const Cyc m1 = Cyc::zeta(8).pow(4);
    CHECK(testsupport::oracle_order_by_iteration(m1) == 2);
    CHECK(m1.order_of_unit() == 2);
    CHECK_THROWS_AS(Cyc(0).order_of_unit(), std::domain_error);
    CHECK_THROWS_AS((Cyc::zeta(8) + Cyc(1)).order_of_unit(), std::domain_error);
}

TEST_CASE("order of unit: order_of_unit(zeta_n^k) = n / gcd(n, k)") {
    for (unsigned n = 1; n <= 24; ++n) {
        const Cyc z = Cyc::zeta(n);
        for (unsigned k = 1; k <= n; ++k) {
            const Cyc zk = z.pow(k);
            const unsigned expect = n / std::gcd(n, k);
            CHECK(zk.order_of_unit() == expect);
            CHECK(testsupport::oracle_order_by_iteration(zk) == expect);
        }
    }
}

TEST_CASE("field axioms on random samples") {
    for (int trial = 0; trial < 60; ++trial) {
        const unsigned n1 = std::vector<unsigned>{1, 2, 3, 4, 6, 8, 12}[trial % 7];
        const unsigned n2 = std::vector<unsigned>{1, 4, 6, 12}[trial % 4];
        const Cyc a = testsupport::random_cyc(n1);
        const Cyc b = testsupport::random_cyc(n2);
        const Cyc c = testsupport::random_cyc(6);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Cyc(1));
            // Canonical form: every coefficient of the inverse stays reduced.
            for (const Rational& r : a.inverse().coeffs())
                CHECK(boost::multiprecision::denominator(r) > 0);
        }
    }
}

TEST_CASE("conductor lifting is the identity on values") {
    for (unsigned n : {1u, 2u, 3u, 4u, 6u}) {
        const Cyc a = testsupport::random_cyc(n);
        for (unsigned mult : {2u, 3u, 4u}) {
            const Cyc lifted = a.lifted_to(n * mult);
            CHECK(lifted.conductor() == n * mult);
            CHECK(lifted == a);
            CHECK(lifted + Cyc(0) == a);
        }
    }
    CHECK_THROWS_AS(Cyc::zeta(4).lifted_to(6), std::invalid_argument);
}

TEST_CASE("rational detection and rendering") {
    const Cyc w = Cyc::zeta(6);
    CHECK((w + w.pow(5)).is_rational());
    CHECK((w + w.pow(5)).rational_value() == 1);
    CHECK_FALSE(w.is_rational());
    CHECK(Cyc(0).str() == "0");
    CHECK(Cyc(Rational(-3, 2)).str() == "-3/2");
    CHECK(w.str("q") == "q");
    CHECK((Cyc(1) - Cyc::zeta(12).pow(2)).str("q") == "1 - q^2");
}
