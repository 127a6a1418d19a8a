#pragma once

// The quantum Weyl algebra A(q1, q2, lambda) on generators y1, x1, y2, x2 at
// roots of unity: parameters, PBW-basis elements, normal-form multiplication
// by confluent rewriting, the normal elements z1, z2, centrality tests, and
// the parameter-twist isomorphisms.
//
// The PBW order is y1 < x1 < y2 < x2; ordered monomials y1^a1 x1^b1 y2^a2 x2^b2
// form a basis. Every out-of-order adjacent generator pair rewrites by one of
// the six defining relations:
//
//   x1 y1 = q1 y1 x1 + 1                y2 y1 = lambda^{-1} y1 y2
//   y2 x1 = lambda x1 y2                x2 y1 = q1 lambda y1 x2
//   x2 x1 = (q1 lambda)^{-1} x1 x2      x2 y2 = q2 y2 x2 + 1 + (q1 - 1) y1 x1
//
// Each rewrite either lowers the weighted degree (weights 1, 1, 2, 2) or keeps
// it and removes an inversion, so reduction terminates; confluence is the PBW
// basis property and is exercised by the property tests.

#include "qweyl/cyclotomic.hpp"
#include "qweyl/rational.hpp"

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace qweyl {

enum class Gen : unsigned char { Y1 = 0, X1 = 1, Y2 = 2, X2 = 3 };

constexpr std::array<Gen, 4> kGenerators{Gen::Y1, Gen::X1, Gen::Y2, Gen::X2};

inline const char* gen_name(Gen g) {
    constexpr const char* names[4] = {"y1", "x1", "y2", "x2"};
    return names[static_cast<unsigned>(g)];
}

struct PBWMonomial {
    unsigned a1 = 0;  // y1 exponent
    unsigned b1 = 0;  // x1 exponent
    unsigned a2 = 0;  // y2 exponent
    unsigned b2 = 0;  // x2 exponent

    friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;

    bool is_one() const { return a1 == 0 && b1 == 0 && a2 == 0 && b2 == 0; }
    unsigned degree() const { return a1 + b1 + a2 + b2; }

    unsigned exponent(Gen g) const {
        switch (g) {
            case Gen::Y1: return a1;
            case Gen::X1: return b1;
            case Gen::Y2: return a2;
            case Gen::X2: return b2;
        }
        return 0;
    }

    static PBWMonomial generator(Gen g, unsigned k = 1) {
        PBWMonomial m;
        switch (g) {
            case Gen::Y1: m.a1 = k; break;
            case Gen::X1: m.b1 = k; break;
            case Gen::Y2: m.a2 = k; break;
            case Gen::X2: m.b2 = k; break;
        }
        return m;
    }
};

class AlgebraElement {
public:
    AlgebraElement() = default;

    static AlgebraElement zero() { return {}; }
    static AlgebraElement one() { return scalar(Cyc(1)); }
    static AlgebraElement scalar(const Cyc& c) { return monomial(PBWMonomial{}, c); }
    static AlgebraElement monomial(const PBWMonomial& m, const Cyc& c = Cyc(1)) {
        AlgebraElement e;
        e.add_term(m, c);
        return e;
    }
    static AlgebraElement generator(Gen g, unsigned k = 1) {
        return monomial(PBWMonomial::generator(g, k));
    }

    void add_term(const PBWMonomial& m, const Cyc& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void add_scaled(const AlgebraElement& other, const Cyc& c) {
        if (c.is_zero()) return;
        for (const auto& [m, v] : other.terms_) add_term(m, v * c);
    }

    AlgebraElement scaled(const Cyc& c) const {
        AlgebraElement out;
        out.add_scaled(*this, c);
        return out;
    }

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
        AlgebraElement out = a;
        out.add_scaled(b, Cyc(1));
        return out;
    }
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
        AlgebraElement out = a;
        out.add_scaled(b, Cyc(-1));
        return out;
    }
    AlgebraElement operator-() const { return scaled(Cyc(-1)); }

    bool is_zero() const { return terms_.empty(); }

    bool is_scalar() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    Cyc scalar_value() const {
        if (terms_.empty()) return Cyc(0);
        if (!is_scalar()) throw std::domain_error("AlgebraElement: not a scalar");
        return terms_.begin()->second;
    }

    const std::map<PBWMonomial, Cyc>& terms() const { return terms_; }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto it = a.terms_.begin();
        auto jt = b.terms_.begin();
        for (; it != a.terms_.end(); ++it, ++jt)
            if (it->first != jt->first || !(it->second == jt->second)) return false;
        return true;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) {
        return !(a == b);
    }

private:
    std::map<PBWMonomial, Cyc> terms_;
};

namespace detail {

struct AlgebraCache {
    std::mutex mu;
    std::vector<std::unique_ptr<Cyc>> zeta_pow;  // lazy, size l
    std::map<std::pair<PBWMonomial, PBWMonomial>, AlgebraElement> products;
};

}  // namespace detail

// Root-of-unity data: q1, q2, lambda are primitive l1-th, l2-th, l3-th roots
// of unity realized as zeta_l^{e1}, zeta_l^{e2}, zeta_l^{e3}, l = lcm(l1,l2,l3).
class AlgebraParams {
public:
    AlgebraParams(unsigned l1, unsigned l2, unsigned l3)
        : AlgebraParams(l1, l2, l3, default_exp(l1, l2, l3, 1), default_exp(l1, l2, l3, 2),
                        default_exp(l1, l2, l3, 3)) {}

    AlgebraParams(unsigned l1, unsigned l2, unsigned l3, unsigned e1, unsigned e2, unsigned e3)
        : l1_(l1), l2_(l2), l3_(l3) {
        if (l1_ < 2 || l2_ < 2)
            throw std::invalid_argument("AlgebraParams: l1 and l2 must be at least 2");
        if (l3_ < 1) throw std::invalid_argument("AlgebraParams: l3 must be at least 1");
        l_ = static_cast<unsigned>(std::lcm(std::lcm(l1_, l2_), l3_));
        e1_ = normalize_exp(e1);
        e2_ = normalize_exp(e2);
        e3_ = normalize_exp(e3);
        // ord(zeta_l^e) = l / gcd(l, e); requiring gcd(e_i, l) = l / l_i pins
        // the order of each cached root exactly.
        if (std::gcd(e1_, l_) != l_ / l1_)
            throw std::invalid_argument("AlgebraParams: e1 does not give a primitive l1-th root");
        if (std::gcd(e2_, l_) != l_ / l2_)
            throw std::invalid_argument("AlgebraParams: e2 does not give a primitive l2-th root");
        if (std::gcd(e3_, l_) != l_ / l3_)
            throw std::invalid_argument("AlgebraParams: e3 does not give a primitive l3-th root");
        cache_ = std::make_shared<detail::AlgebraCache>();
        cache_->zeta_pow.resize(l_);
        q1_ = zeta_power(e1_);
        q2_ = zeta_power(e2_);
        lambda_ = zeta_power(e3_);
        lambda_inv_ = zeta_power(-static_cast<long long>(e3_));
        q1lambda_ = zeta_power(static_cast<long long>(e1_) + e3_);
        q1lambda_inv_ = zeta_power(-static_cast<long long>(e1_) - e3_);
        q1_minus_one_ = q1_ - Cyc(1);
        q2_minus_one_ = q2_ - Cyc(1);
    }

    unsigned l1() const { return l1_; }
    unsigned l2() const { return l2_; }
    unsigned l3() const { return l3_; }
    unsigned l() const { return l_; }
    unsigned e1() const { return e1_; }
    unsigned e2() const { return e2_; }
    unsigned e3() const { return e3_; }

    const Cyc& q1() const { return q1_; }
    const Cyc& q2() const { return q2_; }
    const Cyc& lambda() const { return lambda_; }
    const Cyc& lambda_inv() const { return lambda_inv_; }
    const Cyc& q1lambda() const { return q1lambda_; }
    const Cyc& q1lambda_inv() const { return q1lambda_inv_; }
    const Cyc& q1_minus_one() const { return q1_minus_one_; }
    const Cyc& q2_minus_one() const { return q2_minus_one_; }

    // zeta_l^k for any integer k, memoized per residue.
    Cyc zeta_power(long long k) const {
        long long r = k % static_cast<long long>(l_);
        if (r < 0) r += l_;
        const auto idx = static_cast<std::size_t>(r);
        std::lock_guard<std::mutex> lock(cache_->mu);
        std::unique_ptr<Cyc>& slot = cache_->zeta_pow[idx];
        if (!slot) slot = std::make_unique<Cyc>(Cyc::zeta(l_).pow(static_cast<long long>(idx)));
        return *slot;
    }

    bool same_parameters(const AlgebraParams& o) const {
        return l1_ == o.l1_ && l2_ == o.l2_ && l3_ == o.l3_ && e1_ == o.e1_ && e2_ == o.e2_ &&
               e3_ == o.e3_;
    }

    detail::AlgebraCache& cache() const { return *cache_; }

private:
    static unsigned default_exp(unsigned l1, unsigned l2, unsigned l3, int which) {
        const unsigned l = static_cast<unsigned>(std::lcm(std::lcm(l1, l2), l3));
        const unsigned li = which == 1 ? l1 : which == 2 ? l2 : l3;
        return l / li;
    }

    unsigned normalize_exp(unsigned e) const {
        const unsigned r = e % l_;
        return r == 0 ? l_ : r;
    }

    unsigned l1_, l2_, l3_, l_ = 1;
    unsigned e1_ = 0, e2_ = 0, e3_ = 0;
    Cyc q1_, q2_, lambda_, lambda_inv_, q1lambda_, q1lambda_inv_, q1_minus_one_, q2_minus_one_;
    std::shared_ptr<detail::AlgebraCache> cache_;
};

enum class ReduceStrategy { LeftmostFirst, RightmostFirst };

namespace detail {

inline std::string monomial_word(const PBWMonomial& m) {
    std::string w;
    w.reserve(m.degree());
    w.append(m.a1, static_cast<char>(Gen::Y1));
    w.append(m.b1, static_cast<char>(Gen::X1));
    w.append(m.a2, static_cast<char>(Gen::Y2));
    w.append(m.b2, static_cast<char>(Gen::X2));
    return w;
}

inline PBWMonomial word_monomial(const std::string& w) {
    PBWMonomial m;
    for (char c : w) {
        switch (static_cast<Gen>(c)) {
            case Gen::Y1: ++m.a1; break;
            case Gen::X1: ++m.b1; break;
            case Gen::Y2: ++m.a2; break;
            case Gen::X2: ++m.b2; break;
        }
    }
    return m;
}

}  // namespace detail

// PBW normal form of a word of generators, by rewriting out-of-order adjacent
// pairs until every surviving word is ordered. The strategy selects which
// inversion is rewritten first; results agree (confluence).
inline AlgebraElement normalize_word(const std::string& word, const AlgebraParams& p,
                                     ReduceStrategy strategy = ReduceStrategy::LeftmostFirst) {
    constexpr char kY1 = static_cast<char>(Gen::Y1);
    constexpr char kX1 = static_cast<char>(Gen::X1);
    constexpr char kY2 = static_cast<char>(Gen::Y2);
    constexpr char kX2 = static_cast<char>(Gen::X2);

    std::map<std::string, Cyc> work;
    work.emplace(word, Cyc(1));
    AlgebraElement out;

    const auto push = [&work](std::string w, const Cyc& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = work.try_emplace(std::move(w), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) work.erase(it);
        }
    };

    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const std::string& w = node.key();
        const Cyc& coeff = node.mapped();

        std::size_t pos = std::string::npos;
        if (strategy == ReduceStrategy::LeftmostFirst) {
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (w[i] > w[i + 1]) {
                    pos = i;
                    break;
                }
        } else {
            for (std::size_t i = w.size(); i-- > 1;)
                if (w[i - 1] > w[i]) {
                    pos = i - 1;
                    break;
                }
        }
        if (pos == std::string::npos) {
            out.add_term(detail::word_monomial(w), coeff);
            continue;
        }

        const char u = w[pos], v = w[pos + 1];
        std::string swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);

        if (u == kX1 && v == kY1) {  // x1 y1 = q1 y1 x1 + 1
            push(std::move(swapped), coeff * p.q1());
            std::string dropped = w;
            dropped.erase(pos, 2);
            push(std::move(dropped), coeff);
        } else if (u == kY2 && v == kY1) {  // y2 y1 = lambda^{-1} y1 y2
            push(std::move(swapped), coeff * p.lambda_inv());
        } else if (u == kY2 && v == kX1) {  // y2 x1 = lambda x1 y2
            push(std::move(swapped), coeff * p.lambda());
        } else if (u == kX2 && v == kY1) {  // x2 y1 = q1 lambda y1 x2
            push(std::move(swapped), coeff * p.q1lambda());
        } else if (u == kX2 && v == kX1) {  // x2 x1 = (q1 lambda)^{-1} x1 x2
            push(std::move(swapped), coeff * p.q1lambda_inv());
        } else if (u == kX2 && v == kY2) {  // x2 y2 = q2 y2 x2 + 1 + (q1-1) y1 x1
            push(std::move(swapped), coeff * p.q2());
            std::string dropped = w;
            dropped.erase(pos, 2);
            push(std::move(dropped), coeff);
            std::string zterm = w;
            zterm[pos] = kY1;
            zterm[pos + 1] = kX1;
            push(std::move(zterm), coeff * p.q1_minus_one());
        } else {
            throw invariant_error("normalize_word: unexpected generator pair");
        }
    }
    return out;
}

namespace detail {

inline int highest_block(const PBWMonomial& m) {
    if (m.b2) return 3;
    if (m.a2) return 2;
    if (m.b1) return 1;
    if (m.a1) return 0;
    return -1;
}

inline int lowest_block(const PBWMonomial& m) {
    if (m.a1) return 0;
    if (m.b1) return 1;
    if (m.a2) return 2;
    if (m.b2) return 3;
    return 4;
}

inline const AlgebraElement& cached_monomial_product(const PBWMonomial& m1,
                                                     const PBWMonomial& m2,
                                                     const AlgebraParams& p) {
    AlgebraCache& cache = p.cache();
    const std::pair<PBWMonomial, PBWMonomial> key{m1, m2};
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.products.find(key);
        if (it != cache.products.end()) return it->second;
    }
    AlgebraElement value;
    if (highest_block(m1) <= lowest_block(m2)) {
        // Concatenation is already ordered.
        value = AlgebraElement::monomial(
            PBWMonomial{m1.a1 + m2.a1, m1.b1 + m2.b1, m1.a2 + m2.a2, m1.b2 + m2.b2});
    } else {
        value = normalize_word(monomial_word(m1) + monomial_word(m2), p);
    }
    std::lock_guard<std::mutex> lock(cache.mu);
    return cache.products.emplace(key, std::move(value)).first->second;
}

}  // namespace detail

// PBW normal form of a product, bilinear over the coefficient field.
inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b,
                               const AlgebraParams& p) {
    AlgebraElement out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out.add_scaled(detail::cached_monomial_product(ma, mb, p), ca * cb);
    return out;
}

inline AlgebraElement element_pow(const AlgebraElement& e, unsigned k, const AlgebraParams& p) {
    AlgebraElement result = AlgebraElement::one();
    AlgebraElement base = e;
    while (k) {
        if (k & 1U) result = multiply(result, base, p);
        base = multiply(base, base, p);
        k >>= 1U;
    }
    return result;
}

// z1 = 1 + (q1-1) y1 x1 and z2 = z1 + (q2-1) y2 x2; the commutator forms
// z1 = x1 y1 - y1 x1 and z2 = x2 y2 - y2 x2 are verified via multiply.
inline std::pair<AlgebraElement, AlgebraElement> normal_elements(const AlgebraParams& p) {
    AlgebraElement z1 = AlgebraElement::one();
    z1.add_term(PBWMonomial{1, 1, 0, 0}, p.q1_minus_one());
    AlgebraElement z2 = z1;
    z2.add_term(PBWMonomial{0, 0, 1, 1}, p.q2_minus_one());

    const AlgebraElement x1 = AlgebraElement::generator(Gen::X1);
    const AlgebraElement y1 = AlgebraElement::generator(Gen::Y1);
    const AlgebraElement x2 = AlgebraElement::generator(Gen::X2);
    const AlgebraElement y2 = AlgebraElement::generator(Gen::Y2);
    if (multiply(x1, y1, p) - multiply(y1, x1, p) != z1)
        throw invariant_error("normal_elements: z1 commutator form mismatch");
    if (multiply(x2, y2, p) - multiply(y2, x2, p) != z2)
        throw invariant_error("normal_elements: z2 commutator form mismatch");
    return {z1, z2};
}

// True iff e * g = scalar * (g * e) in normal form.
inline bool commutation_check(const AlgebraElement& e, Gen g, const Cyc& scalar,
                              const AlgebraParams& p) {
    const AlgebraElement gen = AlgebraElement::generator(g);
    return multiply(e, gen, p) == multiply(gen, e, p).scaled(scalar);
}

inline bool is_central(const AlgebraElement& e, const AlgebraParams& p) {
    for (Gen g : kGenerators) {
        const AlgebraElement gen = AlgebraElement::generator(g);
        if (multiply(e, gen, p) != multiply(gen, e, p)) return false;
    }
    return true;
}

// --- parameter twists ------------------------------------------------------
//
// Four tuples (p1, p2, gamma) whose algebra A(p1, p2, gamma) is isomorphic to
// A(q1, q2, lambda), with explicit generator images.

struct TwistVariant {
    Cyc p1, p2, gamma;
    // Images of the A(p1,p2,gamma) generators inside A(q1,q2,lambda),
    // indexed by Gen (Y1, X1, Y2, X2 slots hold the images of Y1, X1, Y2, X2).
    std::array<AlgebraElement, 4> images;
};

inline TwistVariant twist_variant(int variant, const AlgebraParams& p) {
    const AlgebraElement x1 = AlgebraElement::generator(Gen::X1);
    const AlgebraElement y1 = AlgebraElement::generator(Gen::Y1);
    const AlgebraElement x2 = AlgebraElement::generator(Gen::X2);
    const AlgebraElement y2 = AlgebraElement::generator(Gen::Y2);
    const Cyc& q1 = p.q1();
    const Cyc& q2 = p.q2();
    const Cyc& lam = p.lambda();

    TwistVariant t;
    const auto set = [&t](const AlgebraElement& iy1, const AlgebraElement& ix1,
                          const AlgebraElement& iy2, const AlgebraElement& ix2) {
        t.images[static_cast<unsigned>(Gen::Y1)] = iy1;
        t.images[static_cast<unsigned>(Gen::X1)] = ix1;
        t.images[static_cast<unsigned>(Gen::Y2)] = iy2;
        t.images[static_cast<unsigned>(Gen::X2)] = ix2;
    };
    switch (variant) {
        case 1:
            t.p1 = q1;
            t.p2 = q2;
            t.gamma = lam;
            set(y1, x1, y2, x2);
            break;
        case 2:
            t.p1 = q1.inverse();
            t.p2 = q2;
            t.gamma = p.lambda_inv();
            set(x1, y1.scaled(-q1), y2.scaled(q1), x2);
            break;
        case 3:
            t.p1 = q1;
            t.p2 = q2.inverse();
            t.gamma = p.q1lambda_inv();
            set(y1, x1, x2, y2.scaled(-q2));
            break;
        case 4:
            t.p1 = q1.inverse();
            t.p2 = q2.inverse();
            t.gamma = p.q1lambda();
            set(x1, y1.scaled(-q1), x2.scaled(q1), y2.scaled(-q2));
            break;
        default:
            throw std::invalid_argument("twist_variant: variant must be 1..4");
    }
    return t;
}

inline AlgebraElement twist_image(int variant, Gen g, const AlgebraParams& p) {
    return twist_variant(variant, p).images[static_cast<unsigned>(g)];
}

// Verifies that the images satisfy the six defining relations of A(p1,p2,gamma).
inline bool twist_relations_hold(int variant, const AlgebraParams& p) {
    const TwistVariant t = twist_variant(variant, p);
    const AlgebraElement& Y1 = t.images[static_cast<unsigned>(Gen::Y1)];
    const AlgebraElement& X1 = t.images[static_cast<unsigned>(Gen::X1)];
    const AlgebraElement& Y2 = t.images[static_cast<unsigned>(Gen::Y2)];
    const AlgebraElement& X2 = t.images[static_cast<unsigned>(Gen::X2)];
    const Cyc p1gamma = t.p1 * t.gamma;

    if (multiply(X1, X2, p) != multiply(X2, X1, p).scaled(p1gamma)) return false;
    if (multiply(X1, Y2, p) != multiply(Y2, X1, p).scaled(t.gamma.inverse())) return false;
    if (multiply(Y1, Y2, p) != multiply(Y2, Y1, p).scaled(t.gamma)) return false;
    if (multiply(Y1, X2, p) != multiply(X2, Y1, p).scaled(p1gamma.inverse())) return false;
    if (multiply(X1, Y1, p) - multiply(Y1, X1, p).scaled(t.p1) != AlgebraElement::one())
        return false;
    AlgebraElement rhs = AlgebraElement::one();
    rhs.add_scaled(multiply(Y1, X1, p), t.p1 - Cyc(1));
    if (multiply(X2, Y2, p) - multiply(Y2, X2, p).scaled(t.p2) != rhs) return false;
    return true;
}

// --- iterated Ore presentation ---------------------------------------------
//
// K[y1][x1; tau1, delta1][y2; sigma2][x2; tau2, delta2] data: automorphism
// scalings on earlier generators and the two derivation images.

struct OrePresentation {
    Cyc tau1_y1;
    Cyc sigma2_y1, sigma2_x1;
    Cyc tau2_y1, tau2_x1, tau2_y2;
    AlgebraElement delta1_y1;
    AlgebraElement delta2_y1, delta2_x1, delta2_y2;

    explicit OrePresentation(const AlgebraParams& p)
        : tau1_y1(p.q1()),
          sigma2_y1(p.lambda_inv()),
          sigma2_x1(p.lambda()),
          tau2_y1(p.q1lambda()),
          tau2_x1(p.q1lambda_inv()),
          tau2_y2(p.q2()),
          delta1_y1(AlgebraElement::one()),
          delta2_y1(AlgebraElement::zero()),
          delta2_x1(AlgebraElement::zero()) {
        AlgebraElement z1 = AlgebraElement::one();
        z1.add_term(PBWMonomial{1, 1, 0, 0}, p.q1_minus_one());
        delta2_y2 = z1;
        if (delta2_y2 != normal_elements(p).first)
            throw invariant_error("OrePresentation: delta2(y2) must equal z1");
    }

    // tau2 extends multiplicatively over the subalgebra generated by y1, x1, y2.
    AlgebraElement tau2_apply(const AlgebraElement& e) const {
        AlgebraElement out;
        for (const auto& [m, c] : e.terms()) {
            if (m.b2 != 0)
                throw std::invalid_argument("OrePresentation: tau2 domain excludes x2");
            Cyc factor = tau2_y1.pow(m.a1) * tau2_x1.pow(m.b1) * tau2_y2.pow(m.a2);
            out.add_term(m, c * factor);
        }
        return out;
    }

    // delta_j tau_j = q_j tau_j delta_j on the generators each delta acts on.
    bool q_skew_condition_holds(const AlgebraParams& p) const {
        // delta1 tau1 (y1) = delta1(q1 y1) = q1 * 1; q1 tau1 delta1(y1) = q1 * 1.
        const AlgebraElement lhs1 = delta1_y1.scaled(tau1_y1);
        const AlgebraElement rhs1 = delta1_y1.scaled(p.q1());
        if (lhs1 != rhs1) return false;
        // delta2 tau2 (g) = scale * delta2(g) vs q2 tau2(delta2(g)), g in {y1, x1, y2}.
        const std::array<std::pair<Cyc, const AlgebraElement*>, 3> rows{
            std::pair<Cyc, const AlgebraElement*>{tau2_y1, &delta2_y1},
            std::pair<Cyc, const AlgebraElement*>{tau2_x1, &delta2_x1},
            std::pair<Cyc, const AlgebraElement*>{tau2_y2, &delta2_y2}};
        for (const auto& [scale, image] : rows) {
            const AlgebraElement lhs = image->scaled(scale);
            const AlgebraElement rhs = tau2_apply(*image).scaled(p.q2());
            if (lhs != rhs) return false;
        }
        return true;
    }
};

}  // namespace qweyl
