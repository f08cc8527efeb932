#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "fockforge/rational.hpp"

namespace fockforge {

struct LatticeVector {
    std::vector<long long> coords;

    LatticeVector() = default;
    explicit LatticeVector(std::vector<long long> c) : coords(std::move(c)) {}

    static LatticeVector zero(int rank) { return LatticeVector(std::vector<long long>(rank, 0)); }
    static LatticeVector basis(int rank, int i) {
        LatticeVector v = zero(rank);
        v.coords.at(i) = 1;
        return v;
    }

    int rank() const { return static_cast<int>(coords.size()); }
    bool is_zero() const {
        return std::all_of(coords.begin(), coords.end(), [](long long c) { return c == 0; });
    }

    friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
        if (a.rank() != b.rank()) throw UsageError("lattice vector: rank mismatch");
        LatticeVector out = a;
        for (int i = 0; i < out.rank(); ++i) out.coords[i] += b.coords[i];
        return out;
    }
    friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
        if (a.rank() != b.rank()) throw UsageError("lattice vector: rank mismatch");
        LatticeVector out = a;
        for (int i = 0; i < out.rank(); ++i) out.coords[i] -= b.coords[i];
        return out;
    }
    friend LatticeVector operator-(const LatticeVector& a) {
        LatticeVector out = a;
        for (auto& c : out.coords) c = -c;
        return out;
    }
    friend LatticeVector operator*(long long s, const LatticeVector& a) {
        LatticeVector out = a;
        for (auto& c : out.coords) c *= s;
        return out;
    }

    std::string to_text() const {
        std::string out = "[";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(coords[i]);
        }
        return out + "]";
    }

    auto operator<=>(const LatticeVector&) const = default;
};

enum class Parity { even, odd };

/// Integer lattice with symmetric nondegenerate Gram matrix and a parity
/// flag per basis generator.  Even-parity generators must have even norm.
class Lattice {
public:
    Lattice(std::vector<std::vector<long long>> gram, std::vector<Parity> parity)
        : gram_(std::move(gram)), parity_(std::move(parity)) {
        rank_ = static_cast<int>(gram_.size());
        if (rank_ == 0) throw UsageError("lattice: rank must be positive");
        if (static_cast<int>(parity_.size()) != rank_)
            throw UsageError("lattice: parity list length differs from rank");
        for (const auto& row : gram_)
            if (static_cast<int>(row.size()) != rank_)
                throw UsageError("lattice: gram matrix not square");
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                if (gram_[i][j] != gram_[j][i]) throw UsageError("lattice: gram matrix not symmetric");
        for (int i = 0; i < rank_; ++i)
            if (parity_[i] == Parity::even && gram_[i][i] % 2 != 0)
                throw UsageError("lattice: even generator with odd norm");
        if (is_zero(determinant())) throw UsageError("lattice: degenerate gram matrix");
    }

    explicit Lattice(const std::vector<std::vector<long long>>& gram)
        : Lattice(gram, std::vector<Parity>(gram.size(), Parity::even)) {}

    Lattice(std::initializer_list<std::vector<long long>> gram)
        : Lattice(std::vector<std::vector<long long>>(gram)) {}

    int rank() const { return rank_; }
    const std::vector<std::vector<long long>>& gram() const { return gram_; }
    Parity parity(int i) const { return parity_.at(i); }
    bool is_odd_color(int i) const { return parity_.at(i) == Parity::odd; }
    const std::vector<Parity>& parities() const { return parity_; }

    std::vector<bool> odd_palette() const {
        std::vector<bool> odd(rank_);
        for (int i = 0; i < rank_; ++i) odd[i] = parity_[i] == Parity::odd;
        return odd;
    }

    bool all_even() const {
        return std::all_of(parity_.begin(), parity_.end(),
                           [](Parity p) { return p == Parity::even; });
    }

    long long inner(const LatticeVector& a, const LatticeVector& b) const {
        if (a.rank() != rank_ || b.rank() != rank_)
            throw UsageError("lattice: vector rank mismatch");
        long long total = 0;
        for (int i = 0; i < rank_; ++i) {
            if (a.coords[i] == 0) continue;
            for (int j = 0; j < rank_; ++j) total += a.coords[i] * gram_[i][j] * b.coords[j];
        }
        return total;
    }

    long long norm(const LatticeVector& a) const { return inner(a, a); }

    Integer determinant() const {
        // Bareiss fraction-free elimination; exact.
        int n = rank_;
        std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = make_integer(gram_[i][j]);
        Integer prev(1);
        int sign = 1;
        for (int k = 0; k < n - 1; ++k) {
            if (is_zero(m[k][k])) {
                int swap_row = -1;
                for (int r = k + 1; r < n; ++r)
                    if (!is_zero(m[r][k])) {
                        swap_row = r;
                        break;
                    }
                if (swap_row < 0) return Integer(0);
                std::swap(m[k], m[swap_row]);
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j)
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            prev = m[k][k];
        }
        return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
    }

    /// All leading principal minors positive.
    bool is_positive_definite() const {
        std::vector<Rational> diag;
        std::vector<std::vector<Rational>> unit;
        return cholesky(diag, unit);
    }

    /// All lattice points x (including 0) with norm(x) <= bound, with their
    /// exact norms; requires positive definiteness.
    std::vector<std::pair<LatticeVector, long long>> points_up_to_norm(long long bound) const {
        std::vector<Rational> diag;
        std::vector<std::vector<Rational>> unit;
        if (!cholesky(diag, unit))
            throw UnsupportedInputError(
                "lattice: enumeration requires a positive definite gram matrix "
                "(some leading principal minor is not positive)");
        std::vector<std::pair<LatticeVector, long long>> found;
        if (bound < 0) return found;
        std::vector<long long> x(rank_, 0);
        enumerate_level(rank_ - 1, make_rational(bound), diag, unit, x, found);
        std::sort(found.begin(), found.end());
        return found;
    }

    /// Delta = { alpha : (alpha, alpha) = 2 }, canonically ordered.
    std::vector<LatticeVector> roots() const {
        std::vector<LatticeVector> out;
        for (auto& [v, n] : points_up_to_norm(2))
            if (n == 2) out.push_back(v);
        return out;
    }

    /// Whether the norm-2 vectors generate the whole lattice over the
    /// integers (upper-triangular integer echelon basis with unit diagonal).
    bool spanned_by_roots() const {
        std::vector<std::vector<Integer>> pivots(rank_);
        auto insert = [&](std::vector<Integer> v) {
            for (int col = 0; col < rank_; ++col) {
                if (is_zero(v[col])) continue;
                if (pivots[col].empty()) {
                    pivots[col] = std::move(v);
                    return;
                }
                std::vector<Integer>& p = pivots[col];
                Integer g, a, b;
                mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), p[col].get_mpz_t(),
                           v[col].get_mpz_t());
                Integer pc = p[col] / g, vc = v[col] / g;
                std::vector<Integer> combined(rank_), rest(rank_);
                for (int j = 0; j < rank_; ++j) {
                    combined[j] = a * p[j] + b * v[j];
                    rest[j] = pc * v[j] - vc * p[j];
                }
                pivots[col] = std::move(combined);
                v = std::move(rest);
            }
        };
        for (const auto& r : roots()) {
            std::vector<Integer> v(rank_);
            for (int j = 0; j < rank_; ++j) v[j] = make_integer(r.coords[j]);
            insert(std::move(v));
        }
        Integer det(1);
        for (int col = 0; col < rank_; ++col) {
            if (pivots[col].empty()) return false;
            det *= pivots[col][col];
        }
        return det == 1 || det == -1;
    }

    /// Extends by a hyperbolic rank-2 block pairing trivially with the rest
    /// (the optional H^0 + H^4 summand of the full cohomology lattice).
    Lattice with_h0_h4_summand() const {
        int n = rank_ + 2;
        std::vector<std::vector<long long>> g(n, std::vector<long long>(n, 0));
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) g[i][j] = gram_[i][j];
        g[rank_][rank_ + 1] = 1;
        g[rank_ + 1][rank_] = 1;
        std::vector<Parity> par = parity_;
        par.push_back(Parity::even);
        par.push_back(Parity::even);
        return Lattice(std::move(g), std::move(par));
    }

private:
    /// Gram = U^T D U with U unit upper triangular; returns false if some
    /// pivot (ratio of consecutive leading principal minors) is not positive.
    bool cholesky(std::vector<Rational>& diag, std::vector<std::vector<Rational>>& unit) const {
        int n = rank_;
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = make_rational(gram_[i][j]);
        diag.assign(n, Rational(0));
        unit.assign(n, std::vector<Rational>(n, Rational(0)));
        for (int i = 0; i < n; ++i) {
            if (mpq_sgn(a[i][i].get_mpq_t()) <= 0) return false;
            diag[i] = a[i][i];
            unit[i][i] = 1;
            for (int j = i + 1; j < n; ++j) unit[i][j] = a[i][j] / a[i][i];
            for (int j = i + 1; j < n; ++j)
                for (int k = i + 1; k < n; ++k) a[j][k] -= a[j][i] * a[i][k] / a[i][i];
        }
        return true;
    }

    static long long floor_rational(const Rational& r) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
        if (!q.fits_slong_p()) throw UsageError("lattice: enumeration bound overflow");
        return q.get_si();
    }

    void enumerate_level(int level, const Rational& remaining, const std::vector<Rational>& diag,
                         const std::vector<std::vector<Rational>>& unit, std::vector<long long>& x,
                         std::vector<std::pair<LatticeVector, long long>>& found) const {
        if (level < 0) {
            LatticeVector v{std::vector<long long>(x)};
            found.emplace_back(v, norm(v));
            return;
        }
        Rational center(0);
        for (int j = level + 1; j < rank_; ++j)
            center += unit[level][j] * make_rational(x[j]);
        // D (t + center)^2 <= remaining
        auto fits = [&](long long t) {
            Rational s = make_rational(t) + center;
            return s * s * diag[level] <= remaining;
        };
        long long start = floor_rational(Rational(-center));
        for (long long t = start; fits(t); --t) {
            x[level] = t;
            Rational s = make_rational(t) + center;
            enumerate_level(level - 1, remaining - s * s * diag[level], diag, unit, x, found);
        }
        for (long long t = start + 1; fits(t); ++t) {
            x[level] = t;
            Rational s = make_rational(t) + center;
            enumerate_level(level - 1, remaining - s * s * diag[level], diag, unit, x, found);
        }
        x[level] = 0;
    }

    int rank_;
    std::vector<std::vector<long long>> gram_;
    std::vector<Parity> parity_;
};

inline long long inner(const Lattice& L, const LatticeVector& a, const LatticeVector& b) {
    return L.inner(a, b);
}

/// Element epsilon(a,b) * e^{a+b} of the twisted group algebra.
struct GroupElement {
    int sign = 1; // +1 or -1
    LatticeVector exponent;

    auto operator<=>(const GroupElement&) const = default;

    std::string to_text() const {
        return std::string(sign < 0 ? "-" : "") + "e^" + exponent.to_text();
    }
};

/// The standard bimultiplicative section of the commutator condition:
/// epsilon(a_i, a_j) = +1 for i <= j and (-1)^{(a_i,a_j)} for i > j,
/// extended bimultiplicatively to all of L x L.  On an even lattice this
/// satisfies epsilon(a,b) epsilon(b,a) = (-1)^{(a,b)}.
class Cocycle {
public:
    explicit Cocycle(const Lattice& lattice) : gram_(lattice.gram()) {}

    int epsilon(const LatticeVector& a, const LatticeVector& b) const {
        int rank = static_cast<int>(gram_.size());
        if (a.rank() != rank || b.rank() != rank)
            throw UsageError("cocycle: vector rank mismatch");
        long long parity = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < i; ++j) parity += a.coords[i] * b.coords[j] * gram_[i][j];
        return (parity % 2 + 2) % 2 == 0 ? 1 : -1;
    }

    GroupElement group_mul(const GroupElement& x, const GroupElement& y) const {
        return GroupElement{x.sign * y.sign * epsilon(x.exponent, y.exponent),
                            x.exponent + y.exponent};
    }

private:
    std::vector<std::vector<long long>> gram_;
};

} // namespace fockforge
