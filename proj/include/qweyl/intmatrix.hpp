#pragma once

// Integer-matrix algorithms at desk scale: invariant factors by Smith
// reduction with gcd-pivot selection, determinantal divisors by brute-force
// minor enumeration (the independent cross-check), exact determinants.

#include "qweyl/rational.hpp"

#include <cstddef>
#include <vector>

namespace qweyl {

struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;  // row-major

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}
    IntMatrix(std::size_t r, std::size_t c, std::vector<Int> entries)
        : rows(r), cols(c), a(std::move(entries)) {
        if (a.size() != rows * cols)
            throw std::invalid_argument("IntMatrix: entry count mismatch");
    }

    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    IntMatrix transpose() const {
        IntMatrix t(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool is_zero() const {
        for (const Int& v : a)
            if (v != 0) return false;
        return true;
    }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }

    friend IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
        if (x.rows != y.rows || x.cols != y.cols)
            throw std::invalid_argument("IntMatrix: shape mismatch");
        IntMatrix s(x.rows, x.cols);
        for (std::size_t k = 0; k < x.a.size(); ++k) s.a[k] = x.a[k] + y.a[k];
        return s;
    }
};

struct InvariantFactors {
    std::size_t rank = 0;
    std::vector<Int> factors;  // d_1 | d_2 | ... | d_rank, all positive
};

// Cofactor-expansion determinant; matrices here are at most 4x4.
inline Int determinant(const IntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant: square matrix required");
    const std::size_t n = m.rows;
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Int det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        const Int term = m.at(0, j) * determinant(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

namespace detail {

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// All k-subsets of 0..n-1 in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return out;
    for (;;) {
        out.push_back(idx);
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
}

}  // namespace detail

// k-th entry = gcd of all k x k minors (0 if all vanish), k = 1..min(rows, cols).
inline std::vector<Int> determinantal_divisors(const IntMatrix& m) {
    const std::size_t kmax = std::min(m.rows, m.cols);
    std::vector<Int> divisors;
    for (std::size_t k = 1; k <= kmax; ++k) {
        Int g = 0;
        for (const auto& ri : detail::subsets(m.rows, k)) {
            for (const auto& cj : detail::subsets(m.cols, k)) {
                IntMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(ri[i], cj[j]);
                g = int_gcd(g, determinant(sub));
            }
        }
        divisors.push_back(detail::abs_int(g));
    }
    return divisors;
}

// Invariant factors (and rank) under unimodular row/column operations.
// Pivot selection takes a least-magnitude nonzero entry; eliminations are
// integer row/column updates with euclidean quotients.
inline InvariantFactors smith_invariant_factors(IntMatrix m) {
    InvariantFactors result;
    std::size_t corner = 0;
    const std::size_t nmin = std::min(m.rows, m.cols);

    const auto find_min_pivot = [&](std::size_t from, std::size_t& pi, std::size_t& pj) {
        bool found = false;
        Int best = 0;
        for (std::size_t i = from; i < m.rows; ++i) {
            for (std::size_t j = from; j < m.cols; ++j) {
                if (m.at(i, j) == 0) continue;
                const Int mag = detail::abs_int(m.at(i, j));
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        }
        return found;
    };

    while (corner < nmin) {
        std::size_t pi = corner, pj = corner;
        if (!find_min_pivot(corner, pi, pj)) break;
        // Move pivot to the corner.
        if (pi != corner)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(pi, j), m.at(corner, j));
        if (pj != corner)
            for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, pj), m.at(i, corner));

        bool clean = true;
        for (std::size_t i = corner + 1; i < m.rows && clean; ++i) {
            if (m.at(i, corner) == 0) continue;
            const Int q = m.at(i, corner) / m.at(corner, corner);
            for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) -= q * m.at(corner, j);
            if (m.at(i, corner) != 0) clean = false;  // remainder became the new minimum
        }
        if (!clean) continue;
        for (std::size_t j = corner + 1; j < m.cols && clean; ++j) {
            if (m.at(corner, j) == 0) continue;
            const Int q = m.at(corner, j) / m.at(corner, corner);
            for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, corner);
            if (m.at(corner, j) != 0) clean = false;
        }
        if (!clean) continue;
        // Pivot must divide every remaining entry before it can be recorded.
        bool divides_all = true;
        for (std::size_t i = corner + 1; i < m.rows && divides_all; ++i) {
            for (std::size_t j = corner + 1; j < m.cols; ++j) {
                if (m.at(i, j) % m.at(corner, corner) != 0) {
                    for (std::size_t c = 0; c < m.cols; ++c) m.at(corner, c) += m.at(i, c);
                    divides_all = false;
                    break;
                }
            }
        }
        if (!divides_all) continue;
        ++corner;
    }

    for (std::size_t i = 0; i < corner; ++i) {
        result.factors.push_back(detail::abs_int(m.at(i, i)));
    }
    result.rank = result.factors.size();
    for (std::size_t i = 0; i + 1 < result.factors.size(); ++i) {
        if (result.factors[i + 1] % result.factors[i] != 0)
            throw invariant_error("smith_invariant_factors: divisibility chain broken");
    }
    return result;
}

}  // namespace qweyl
