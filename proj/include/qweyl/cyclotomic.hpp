#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// A value is a coefficient vector of length phi(n) over the canonical basis
// 1, zeta, ..., zeta^{phi(n)-1} of Q[x]/Phi_n(x). Mixed-conductor operands are
// lifted to the lcm conductor before operating, so equality across conductors
// is decided on canonical coefficient vectors.

#include "qweyl/rational.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <utility>
#include <vector>

namespace qweyl {

inline unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline std::vector<unsigned> divisors_of(unsigned n) {
    std::vector<unsigned> divs;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d != n / d) divs.push_back(n / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

namespace detail {

// Exact division of integer polynomials, ascending coefficients, monic divisor.
inline std::vector<Int> poly_divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
    if (den.empty() || den.back() != 1)
        throw invariant_error("poly_divide_exact: divisor must be monic");
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size())
        throw invariant_error("poly_divide_exact: degree underflow");
    std::vector<Int> quot(num.size() - dd, 0);
    for (std::size_t qi = quot.size(); qi-- > 0;) {
        const Int c = num[qi + dd];
        quot[qi] = c;
        if (c != 0) {
            for (std::size_t j = 0; j <= dd; ++j) num[qi + j] -= c * den[j];
        }
    }
    for (const Int& c : num)
        if (c != 0) throw invariant_error("poly_divide_exact: nonzero remainder");
    return quot;
}

}  // namespace detail

// Phi_n, monic with integer coefficients, degree phi(n); computed by exact
// division of x^n - 1 by the product of Phi_d over proper divisors d of n.
inline const std::vector<Int>& cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    static std::map<unsigned, std::vector<Int>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto hit = cache.find(n);
    if (hit != cache.end()) return hit->second;
    for (unsigned d : divisors_of(n)) {
        if (cache.count(d)) continue;
        std::vector<Int> num(d + 1, 0);
        num[0] = -1;
        num[d] = 1;
        for (unsigned e : divisors_of(d))
            if (e != d) num = detail::poly_divide_exact(std::move(num), cache.at(e));
        cache.emplace(d, std::move(num));
    }
    return cache.at(n);
}

namespace detail {

// Per-conductor reduction data: Phi_n plus the canonical forms of
// x^{phi}, ..., x^{D} mod Phi_n where D = max(2*phi - 2, n - 1) covers both
// products of reduced values and lifts from subfields.
struct CycField {
    unsigned n = 1;
    unsigned phi = 1;
    std::vector<std::vector<Rational>> xpow;  // xpow[k] = x^{phi+k} mod Phi_n

    explicit CycField(unsigned conductor) : n(conductor), phi(euler_phi(conductor)) {
        const std::vector<Int>& min_poly = cyclotomic_polynomial(n);
        const std::size_t top = std::max<std::size_t>(2 * phi > 2 ? 2 * phi - 2 : 0,
                                                      n > 0 ? n - 1 : 0);
        if (top < phi) return;
        std::vector<Rational> base(phi);
        for (unsigned i = 0; i < phi; ++i) base[i] = Rational(-min_poly[i]);
        xpow.push_back(base);
        for (std::size_t k = phi + 1; k <= top; ++k) {
            const std::vector<Rational>& prev = xpow.back();
            std::vector<Rational> next(phi);
            const Rational overflow = prev[phi - 1];
            for (unsigned i = phi; i-- > 1;) next[i] = prev[i - 1];
            next[0] = 0;
            if (overflow != 0)
                for (unsigned i = 0; i < phi; ++i) next[i] += overflow * base[i];
            xpow.push_back(std::move(next));
        }
    }

    // Reduces an ascending-coefficient polynomial of degree <= D to canonical form.
    std::vector<Rational> reduce(const std::vector<Rational>& poly) const {
        std::vector<Rational> out(phi);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            if (poly[i] == 0) continue;
            if (i < phi) {
                out[i] += poly[i];
            } else {
                const std::vector<Rational>& row = xpow.at(i - phi);
                for (unsigned j = 0; j < phi; ++j)
                    if (row[j] != 0) out[j] += poly[i] * row[j];
            }
        }
        return out;
    }
};

inline const CycField& cyc_field(unsigned n) {
    static std::map<unsigned, std::unique_ptr<CycField>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    std::unique_ptr<CycField>& slot = cache[n];
    if (!slot) slot = std::make_unique<CycField>(n);
    return *slot;
}

}  // namespace detail

class Cyc {
public:
    Cyc() : n_(1), c_(1) {}
    Cyc(const Rational& r) : n_(1), c_(1, r) {}  // NOLINT: implicit by design
    Cyc(int v) : Cyc(Rational(v)) {}             // NOLINT
    Cyc(const Int& v) : Cyc(Rational(v)) {}      // NOLINT

    static Cyc zeta(unsigned n) {
        if (n == 0) throw std::invalid_argument("Cyc::zeta: conductor must be positive");
        const detail::CycField& F = detail::cyc_field(n);
        std::vector<Rational> c(F.phi);
        if (F.phi == 1) {
            // Q(zeta_1) = Q(zeta_2) = Q: zeta is 1 resp. -1.
            c[0] = (n == 1) ? 1 : -1;
        } else {
            c[1] = 1;
        }
        return Cyc(n, std::move(c));
    }

    static Cyc from_coeffs(unsigned n, std::vector<Rational> coeffs) {
        if (n == 0) throw std::invalid_argument("Cyc::from_coeffs: conductor must be positive");
        if (coeffs.size() != euler_phi(n))
            throw std::invalid_argument("Cyc::from_coeffs: expected phi(n) coefficients");
        return Cyc(n, std::move(coeffs));
    }

    unsigned conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    const Rational& rational_value() const {
        if (!is_rational()) throw std::domain_error("Cyc: value is not rational");
        return c_[0];
    }

    // Lifts into Q(zeta_m) for a multiple m of the conductor.
    Cyc lifted_to(unsigned m) const {
        if (m == n_) return *this;
        if (m == 0 || m % n_ != 0)
            throw std::invalid_argument("Cyc::lifted_to: target is not a conductor multiple");
        const unsigned step = m / n_;
        std::vector<Rational> poly(static_cast<std::size_t>(step) * (c_.size() - 1) + 1);
        for (std::size_t i = 0; i < c_.size(); ++i) poly[i * step] = c_[i];
        return Cyc(m, detail::cyc_field(m).reduce(poly));
    }

    friend Cyc operator+(const Cyc& a, const Cyc& b) {
        auto [x, y] = lift_pair(a, b);
        for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
        return x;
    }

    friend Cyc operator-(const Cyc& a, const Cyc& b) {
        auto [x, y] = lift_pair(a, b);
        for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
        return x;
    }

    Cyc operator-() const {
        Cyc r = *this;
        for (Rational& v : r.c_) v = -v;
        return r;
    }

    friend Cyc operator*(const Cyc& a, const Cyc& b) {
        // Rational scalars act coefficientwise; avoids pointless lifting.
        if (a.n_ == 1) return b.scaled(a.c_[0]);
        if (b.n_ == 1) return a.scaled(b.c_[0]);
        auto [x, y] = lift_pair(a, b);
        std::vector<Rational> prod(2 * x.c_.size() - 1);
        for (std::size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i] == 0) continue;
            for (std::size_t j = 0; j < y.c_.size(); ++j)
                if (y.c_[j] != 0) prod[i + j] += x.c_[i] * y.c_[j];
        }
        return Cyc(x.n_, detail::cyc_field(x.n_).reduce(prod));
    }

    Cyc scaled(const Rational& r) const {
        Cyc out = *this;
        for (Rational& v : out.c_) v *= r;
        return out;
    }

    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

    friend bool operator==(const Cyc& a, const Cyc& b) {
        if (a.n_ == b.n_) return a.c_ == b.c_;
        auto [x, y] = lift_pair(a, b);
        return x.c_ == y.c_;
    }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    // Multiplicative inverse via extended gcd with Phi_n (irreducible over Q).
    Cyc inverse() const {
        if (is_zero()) throw std::domain_error("Cyc::inverse: division by zero");
        if (is_rational()) return Cyc(Rational(1) / c_[0]).lifted_to(n_);
        const std::vector<Int>& phi_int = cyclotomic_polynomial(n_);
        std::vector<Rational> r0(phi_int.size());
        for (std::size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rational(phi_int[i]);
        std::vector<Rational> r1(c_.begin(), c_.end());
        trim(r1);
        std::vector<Rational> t0{Rational(0)}, t1{Rational(1)};
        while (degree(r1) > 0) {
            auto [q, rem] = poly_divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(rem);
            std::vector<Rational> t2 = poly_sub(t0, poly_mul(q, t1));
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r1.empty())
            throw invariant_error("Cyc::inverse: gcd degenerated (Phi_n not coprime?)");
        const Rational lead = r1[0];
        std::vector<Rational> out(c_.size());
        for (std::size_t i = 0; i < t1.size() && i < out.size(); ++i) out[i] = t1[i] / lead;
        if (t1.size() > out.size())
            throw invariant_error("Cyc::inverse: representative exceeds phi(n)");
        return Cyc(n_, std::move(out));
    }

    Cyc pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyc result = Cyc(Rational(1)).lifted_to(n_);
        Cyc base = *this;
        unsigned long long k = static_cast<unsigned long long>(e);
        while (k) {
            if (k & 1ULL) result *= base;
            base *= base;
            k >>= 1ULL;
        }
        return result;
    }

    // Smallest t >= 1 with a^t = 1 when one exists with t <= conductor;
    // otherwise a not-a-root-of-unity error. Candidates are the ascending
    // divisors of lcm(2, n), the torsion exponent of Q(zeta_n)^*, each tested
    // by binary powering; this returns the same t as stepping a, a^2, ..., a^n.
    unsigned order_of_unit() const {
        if (is_zero()) throw std::domain_error("order_of_unit: zero input");
        const unsigned torsion = (n_ % 2 == 0) ? n_ : 2 * n_;
        const Cyc unit = Cyc(Rational(1)).lifted_to(n_);
        for (unsigned d : divisors_of(torsion)) {
            if (pow(d) == unit) {
                if (d <= n_) return d;
                break;
            }
        }
        throw std::domain_error("order_of_unit: not a root of unity within conductor bound");
    }

    std::string str(const std::string& root_symbol = "z") const;

private:
    Cyc(unsigned n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}

    static std::pair<Cyc, Cyc> lift_pair(const Cyc& a, const Cyc& b) {
        if (a.n_ == b.n_) return {a, b};
        const unsigned m = static_cast<unsigned>(std::lcm(a.n_, b.n_));
        return {a.lifted_to(m), b.lifted_to(m)};
    }

    static std::size_t degree(const std::vector<Rational>& p) {
        return p.empty() ? 0 : p.size() - 1;
    }

    static void trim(std::vector<Rational>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    }

    static std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                                          const std::vector<Rational>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Rational> out(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                if (b[j] != 0) out[i + j] += a[i] * b[j];
        }
        trim(out);
        return out;
    }

    static std::vector<Rational> poly_sub(const std::vector<Rational>& a,
                                          const std::vector<Rational>& b) {
        std::vector<Rational> out = a;
        if (out.size() < b.size()) out.resize(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
        trim(out);
        return out;
    }

    static std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(
        std::vector<Rational> num, const std::vector<Rational>& den) {
        if (den.empty()) throw invariant_error("poly_divmod: division by zero polynomial");
        if (num.size() < den.size()) return {{}, std::move(num)};
        std::vector<Rational> quot(num.size() - den.size() + 1);
        const Rational& lead = den.back();
        for (std::size_t qi = quot.size(); qi-- > 0;) {
            const Rational c = num[qi + den.size() - 1] / lead;
            quot[qi] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j < den.size(); ++j) num[qi + j] -= c * den[j];
        }
        trim(num);
        trim(quot);
        return {std::move(quot), std::move(num)};
    }

    unsigned n_;
    std::vector<Rational> c_;
};

inline Cyc primitive_root(unsigned n) { return Cyc::zeta(n); }

inline std::string Cyc::str(const std::string& root_symbol) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational v = c_[i];
        if (first) {
            if (v < 0) {
                out += "-";
                v = -v;
            }
            first = false;
        } else {
            out += (v < 0) ? " - " : " + ";
            if (v < 0) v = -v;
        }
        const bool unit_coeff = (v == 1);
        if (i == 0) {
            out += qweyl::to_string(v);
        } else {
            if (!unit_coeff) {
                out += qweyl::to_string(v);
                out += "*";
            }
            out += root_symbol;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace qweyl
