#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fockforge/rational.hpp"

namespace fockforge {

/// Exact truncated formal power series in one or two commuting variables.
/// Exponents are capped per variable at the truncation order; coefficients
/// beyond the cap are dropped by every operation (truncated-ring semantics).
class TruncatedSeries {
public:
    using Exponents = std::array<int, 2>; // second entry 0 for univariate

    struct GrlexLess {
        bool operator()(const Exponents& a, const Exponents& b) const {
            int da = a[0] + a[1], db = b[0] + b[1];
            if (da != db) return da < db;
            return a < b;
        }
    };
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    TruncatedSeries(std::string var, int order)
        : vars_{std::move(var)}, order_(order) {
        if (order < 0) throw UsageError("series: negative truncation order");
    }
    TruncatedSeries(std::string var1, std::string var2, int order)
        : vars_{std::move(var1), std::move(var2)}, order_(order) {
        if (order < 0) throw UsageError("series: negative truncation order");
        if (vars_[0] == vars_[1]) throw UsageError("series: duplicate variable name");
    }

    static TruncatedSeries one(const TruncatedSeries& like) {
        TruncatedSeries s = zero(like);
        s.add_term({0, 0}, Rational(1));
        return s;
    }
    static TruncatedSeries zero(const TruncatedSeries& like) {
        TruncatedSeries s = like;
        s.terms_.clear();
        return s;
    }

    int nvars() const { return static_cast<int>(vars_.size()); }
    int order() const { return order_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    Rational coeff(int e0, int e1 = 0) const {
        auto it = terms_.find({e0, e1});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Adds c * x^e; silently drops exponents beyond the truncation order.
    void add_term(Exponents e, const Rational& c) {
        if (e[0] < 0 || e[1] < 0) throw UsageError("series: negative exponent");
        if (nvars() == 1 && e[1] != 0) throw UsageError("series: second exponent on univariate series");
        if (e[0] > order_ || e[1] > order_) return;
        if (is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    bool same_shape(const TruncatedSeries& o) const {
        return vars_ == o.vars_ && order_ == o.order_;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        require_same_shape(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        require_same_shape(o);
        for (const auto& [e, c] : o.terms_) add_term(e, Rational(-c));
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_shape(b);
        TruncatedSeries out = zero(a);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e{ea[0] + eb[0], ea[1] + eb[1]};
                if (e[0] > a.order_ || e[1] > a.order_) continue;
                out.add_term(e, Rational(ca * cb));
            }
        return out;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& p) {
        TruncatedSeries out = zero(p);
        for (const auto& [e, c] : p.terms_) out.add_term(e, Rational(s * c));
        return out;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.vars_ == b.vars_ && a.order_ == b.order_ && a.terms_ == b.terms_;
    }

    /// exp(a) = sum a^k / k! ; requires zero constant term.
    TruncatedSeries exp() const {
        if (!is_zero(coeff(0, 0)))
            throw UsageError("series_exp: nonzero constant term");
        TruncatedSeries result = one(*this);
        TruncatedSeries term = one(*this);
        int max_k = order_ * nvars();
        for (int k = 1; k <= max_k; ++k) {
            term = term * *this;
            term = make_rational(1, k) * term;
            if (term.terms_.empty()) break;
            result += term;
        }
        return result;
    }

    /// Multiplicative inverse; requires the constant term to be nonzero.
    TruncatedSeries inverse() const {
        Rational c0 = coeff(0, 0);
        if (is_zero(c0)) throw UsageError("series: inverse of series with zero constant term");
        // Newton-free direct recursion on graded pieces: with a = c0(1 + r),
        // 1/a = (1/c0) * sum (-r)^k.
        TruncatedSeries r = *this;
        r.terms_.erase({0, 0});
        r = Rational(Rational(-1) / c0) * r;
        TruncatedSeries result = one(*this);
        TruncatedSeries term = one(*this);
        int max_k = order_ * nvars();
        for (int k = 1; k <= max_k; ++k) {
            term = term * r;
            if (term.terms_.empty()) break;
            result += term;
        }
        return Rational(Rational(1) / c0) * result;
    }

    /// Integer power, negative exponents via inverse().
    TruncatedSeries pow(long k) const {
        TruncatedSeries base = k >= 0 ? *this : inverse();
        unsigned long e = static_cast<unsigned long>(k >= 0 ? k : -k);
        TruncatedSeries acc = one(*this);
        while (e > 0) {
            if (e & 1u) acc = acc * base;
            base = base * base;
            e >>= 1u;
        }
        return acc;
    }

    /// Canonical text: terms in graded-lexicographic order, exact fractions.
    std::string to_text() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            std::string cs = to_string(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (out.empty()) {
                if (neg) out += "-", cs = cs.substr(1);
            } else {
                out += neg ? " - " : " + ";
                if (neg) cs = cs.substr(1);
            }
            std::string mono;
            for (int v = 0; v < nvars(); ++v) {
                if (e[v] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[v];
                if (e[v] != 1) mono += "^" + std::to_string(e[v]);
            }
            if (mono.empty()) {
                out += cs;
            } else {
                if (cs != "1") out += cs + "*";
                out += mono;
            }
        }
        return out;
    }

private:
    void require_same_shape(const TruncatedSeries& o) const {
        if (!same_shape(o))
            throw UsageError("series: variable set or truncation order mismatch");
    }

    std::vector<std::string> vars_;
    int order_;
    TermMap terms_;
};

inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }
inline TruncatedSeries series_exp(const TruncatedSeries& a) { return a.exp(); }

/// (1 - ts)^{-k} truncated at the given order, for any integer k.  The
/// coefficient of (ts)^n is C(n+k-1, n); the recurrence c_n = c_{n-1}(k+n-1)/n
/// covers negative k as well.
inline TruncatedSeries binomial_power(long k, int order) {
    TruncatedSeries s("t", "s", order);
    Rational c(1);
    s.add_term({0, 0}, c);
    for (int n = 1; n <= order; ++n) {
        c *= make_rational(k + n - 1, n);
        if (is_zero(c)) break;
        s.add_term({n, n}, c);
    }
    return s;
}

} // namespace fockforge
