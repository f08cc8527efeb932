#pragma once

#include <map>
#include <string>

#include "fockforge/rational.hpp"

namespace fockforge {

/// Sparse Laurent polynomial in one symbol (q by convention), coefficients
/// in C.  No zero coefficients are stored.
template <typename C>
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const C& constant) { add_term(0, constant); } // NOLINT: implicit by design
    LaurentPoly(long constant) { add_term(0, C(constant)); }  // NOLINT

    static LaurentPoly monomial(const C& coeff, long exponent) {
        LaurentPoly p;
        p.add_term(exponent, coeff);
        return p;
    }

    const std::map<long, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    C coeff(long exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(long exponent, const C& coeff) {
        if (fockforge::is_zero(coeff)) return;
        auto [it, inserted] = terms_.try_emplace(exponent, coeff);
        if (!inserted) {
            it->second += coeff;
            if (fockforge::is_zero(it->second)) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, C(-c));
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly out;
        for (const auto& [e, c] : a.terms_) out.add_term(e, C(-c));
        return out;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, C(ca * cb));
        return out;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator*(const C& s, const LaurentPoly& p) {
        LaurentPoly out;
        for (const auto& [e, c] : p.terms_) out.add_term(e, C(s * c));
        return out;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    /// q -> q^{-1}.
    LaurentPoly invert_symbol() const {
        LaurentPoly out;
        for (const auto& [e, c] : terms_) out.add_term(-e, c);
        return out;
    }

    /// Exponents in descending order: "q^2 + 1 + q^-2".
    std::string to_text(const std::string& symbol = "q") const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string c = to_string(it->second);
            bool neg = !c.empty() && c[0] == '-';
            if (out.empty()) {
                if (neg) out += "-", c = c.substr(1);
            } else {
                out += neg ? " - " : " + ";
                if (neg) c = c.substr(1);
            }
            long e = it->first;
            if (e == 0) {
                out += c;
            } else {
                if (c != "1") out += c + "*";
                out += symbol;
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    std::map<long, C> terms_;
};

template <typename C>
inline bool is_zero(const LaurentPoly<C>& p) {
    return p.is_zero();
}

/// Laurent polynomials in q with integer coefficients; the value type of the
/// q-deformed pairing.
using LaurentPolyQ = LaurentPoly<Integer>;

/// Same ring with rational coefficients, used when q-valued scalars multiply
/// rational state coefficients.
using LaurentPolyQRat = LaurentPoly<Rational>;

inline LaurentPolyQRat to_rational_poly(const LaurentPolyQ& p) {
    LaurentPolyQRat out;
    for (const auto& [e, c] : p.terms()) out.add_term(e, Rational(c));
    return out;
}

/// Evaluate at a nonzero rational point.
template <typename C>
Rational evaluate_at(const LaurentPoly<C>& p, const Rational& q) {
    Rational total(0);
    for (const auto& [e, c] : p.terms()) {
        if (e < 0 && is_zero(q)) throw UsageError("laurent: evaluation at q = 0");
        total += Rational(c) * rational_pow(q, e);
    }
    return total;
}

/// [n] = (q^n - q^{-n})/(q - q^{-1}) = q^{n-1} + q^{n-3} + ... + q^{1-n}.
inline LaurentPolyQ q_integer(long n) {
    if (n <= 0) throw UsageError("q_integer: n must be positive");
    LaurentPolyQ out;
    for (long e = n - 1; e >= 1 - n; e -= 2) out.add_term(e, Integer(1));
    return out;
}

} // namespace fockforge
