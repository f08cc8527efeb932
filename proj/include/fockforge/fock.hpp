#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fockforge/lattice.hpp"
#include "fockforge/laurent.hpp"
#include "fockforge/partitions.hpp"
#include "fockforge/series.hpp"

namespace fockforge {

/// Oscillator mode v^color_mode; negative mode = creation, positive =
/// annihilation.  Mode zero is not an operator here.
struct OperatorSymbol {
    int color = 0;
    long mode = 0;
};

enum class PairingKind { classical, level_c, q_deformed };

/// n [n c K] / [n] as a Laurent polynomial in q, where K is a gram entry.
/// For cK >= 1 the exact quotient is sum_{j=0}^{cK-1} q^{n(cK-1-2j)}, scaled
/// by n; negative K negates the expansion of |K|; K = 0 gives zero.
inline LaurentPolyQ q_pairing_value(long long K, long n, long long c) {
    if (n < 1) throw UsageError("q_pairing: mode must be positive");
    if (c < 1) throw UsageError("q_pairing: level must be >= 1");
    LaurentPolyQ out;
    long long aK = K < 0 ? -K : K;
    long long m = c * aK;
    for (long long j = 0; j < m; ++j)
        out.add_term(n * (m - 1 - 2 * j), Integer(K < 0 ? -n : n));
    return out;
}

/// Rule n -> bilinear form on V: classical n(v,w), level-c pairing cn(v,w),
/// or the q-deformed Laurent-polynomial-valued pairing.
class PairingSpec {
public:
    static PairingSpec classical(const Lattice& lattice) {
        return PairingSpec(PairingKind::classical, 1, lattice.gram());
    }
    static PairingSpec with_level(const Lattice& lattice, long long c) {
        if (c < 1) throw UsageError("pairing: level must be >= 1");
        return PairingSpec(PairingKind::level_c, c, lattice.gram());
    }
    static PairingSpec q_deformed(const Lattice& lattice, long long c) {
        if (c < 1) throw UsageError("pairing: level must be >= 1");
        return PairingSpec(PairingKind::q_deformed, c, lattice.gram());
    }

    PairingKind kind() const { return kind_; }
    long long level() const { return level_; }
    int rank() const { return static_cast<int>(gram_.size()); }
    const std::vector<std::vector<long long>>& gram() const { return gram_; }

    bool is_q_valued() const { return kind_ == PairingKind::q_deformed; }

    /// <v^i_n, v^j_n> at mode n >= 1 for the classical / level-c kinds.
    Rational rational_value(int i, int j, long n) const {
        if (kind_ == PairingKind::q_deformed)
            throw UsageError("pairing: q-deformed pairing is Laurent-valued");
        check_args(i, j, n);
        return make_rational(level_ * n * gram_[i][j]);
    }

    LaurentPolyQ q_value(int i, int j, long n) const {
        check_args(i, j, n);
        if (kind_ != PairingKind::q_deformed)
            return LaurentPolyQ(make_integer(level_ * n * gram_[i][j]));
        return q_pairing_value(gram_[i][j], n, level_);
    }

private:
    PairingSpec(PairingKind kind, long long level, std::vector<std::vector<long long>> gram)
        : kind_(kind), level_(level), gram_(std::move(gram)) {}

    void check_args(int i, int j, long n) const {
        if (i < 0 || j < 0 || i >= rank() || j >= rank())
            throw UsageError("pairing: color outside palette");
        if (n < 1) throw UsageError("pairing: mode must be positive");
    }

    PairingKind kind_;
    long long level_;
    std::vector<std::vector<long long>> gram_;
};

inline LaurentPolyQ q_pairing(const Lattice& lattice, int i, int j, long n, long long c) {
    if (i < 0 || j < 0 || i >= lattice.rank() || j >= lattice.rank())
        throw UsageError("q_pairing: color outside palette");
    return q_pairing_value(lattice.gram()[i][j], n, c);
}

// Coefficient-ring glue shared by the rational and q-valued instantiations.
inline Rational coeff_from_rational(const Rational& r, const Rational&) { return r; }
inline LaurentPolyQRat coeff_from_rational(const Rational& r, const LaurentPolyQRat&) {
    return LaurentPolyQRat(r);
}
inline Rational coeff_scale(const Rational& c, const Rational& s) { return Rational(c * s); }
inline LaurentPolyQRat coeff_scale(const LaurentPolyQRat& c, const Rational& s) { return s * c; }

namespace detail {

// Canonical generator order inside a monomial: colors ascending, parts
// descending within a color.  Only odd generators matter for Koszul signs.
inline std::vector<std::pair<int, int>> odd_generator_keys(const Multipartition& m,
                                                           const std::vector<bool>& odd) {
    std::vector<std::pair<int, int>> keys;
    for (const auto& [color, part] : m.components()) {
        if (!odd[color]) continue;
        for (int p : part.parts()) keys.emplace_back(color, -p);
    }
    return keys; // already sorted: colors ascend, -part ascends as part descends
}

} // namespace detail

/// Finite rational-linear combination of multipartition monomials over a
/// parity palette; the monomial for color-i parts (n1, n2, ...) represents
/// v^i_{-n1} v^i_{-n2} ... applied to the vacuum.
template <typename C>
class BasicFockState {
public:
    explicit BasicFockState(std::vector<bool> odd) : odd_(std::move(odd)) {}

    static BasicFockState vacuum(const std::vector<bool>& odd) {
        BasicFockState s(odd);
        s.terms_[Multipartition()] = C(1);
        return s;
    }
    static BasicFockState zero(const std::vector<bool>& odd) { return BasicFockState(odd); }
    static BasicFockState monomial(const std::vector<bool>& odd, const Multipartition& m,
                                   const C& coeff) {
        BasicFockState s(odd);
        for (const auto& [color, part] : m.components()) {
            if (color >= static_cast<int>(odd.size()))
                throw UsageError("fock state: color outside palette");
            if (odd[color] && part.has_repeated_part())
                throw UsageError("fock state: repeated part on an odd color");
        }
        s.add_term(m, coeff);
        return s;
    }

    const std::vector<bool>& palette() const { return odd_; }
    int ncolors() const { return static_cast<int>(odd_.size()); }
    const std::map<Multipartition, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    C coeff(const Multipartition& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C() : it->second;
    }

    void add_term(const Multipartition& m, const C& c) {
        if (fockforge::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (fockforge::is_zero(it->second)) terms_.erase(it);
        }
    }

    BasicFockState& operator+=(const BasicFockState& o) {
        require_same_palette(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    BasicFockState& operator-=(const BasicFockState& o) {
        require_same_palette(o);
        for (const auto& [m, c] : o.terms_) add_term(m, C(-c));
        return *this;
    }
    friend BasicFockState operator+(BasicFockState a, const BasicFockState& b) { return a += b; }
    friend BasicFockState operator-(BasicFockState a, const BasicFockState& b) { return a -= b; }
    friend BasicFockState operator-(const BasicFockState& a) {
        BasicFockState out(a.odd_);
        for (const auto& [m, c] : a.terms_) out.add_term(m, C(-c));
        return out;
    }
    friend BasicFockState operator*(const C& s, const BasicFockState& x) {
        BasicFockState out(x.odd_);
        for (const auto& [m, c] : x.terms_) out.add_term(m, C(s * c));
        return out;
    }
    friend bool operator==(const BasicFockState& a, const BasicFockState& b) {
        return a.odd_ == b.odd_ && a.terms_ == b.terms_;
    }

    /// Largest total mode weight among terms; 0 for the zero state.
    long long max_degree() const {
        long long d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_weight());
        return d;
    }

    bool is_homogeneous() const {
        long long d = -1;
        for (const auto& [m, c] : terms_) {
            if (d < 0) d = m.total_weight();
            else if (d != m.total_weight()) return false;
        }
        return true;
    }

    /// Decomposition into the graded pieces S_n.
    std::map<long long, BasicFockState> graded_components() const {
        std::map<long long, BasicFockState> out;
        for (const auto& [m, c] : terms_) {
            auto [it, inserted] = out.try_emplace(m.total_weight(), BasicFockState(odd_));
            it->second.add_term(m, c);
        }
        return out;
    }

    void require_same_palette(const BasicFockState& o) const {
        if (odd_ != o.odd_) throw UsageError("fock state: palette mismatch");
    }

private:
    std::vector<bool> odd_;
    std::map<Multipartition, C> terms_;
};

using FockState = BasicFockState<Rational>;
using FockStateQ = BasicFockState<LaurentPolyQRat>;

/// Bidegree-graded sum of monomial tensor pairs, the coproduct's codomain.
template <typename C>
class BasicTensorState {
public:
    explicit BasicTensorState(std::vector<bool> odd) : odd_(std::move(odd)) {}

    const std::vector<bool>& palette() const { return odd_; }
    const std::map<std::pair<Multipartition, Multipartition>, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Multipartition& a, const Multipartition& b, const C& c) {
        if (fockforge::is_zero(c)) return;
        auto key = std::make_pair(a, b);
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (fockforge::is_zero(it->second)) terms_.erase(it);
        }
    }

    friend bool operator==(const BasicTensorState& a, const BasicTensorState& b) {
        return a.odd_ == b.odd_ && a.terms_ == b.terms_;
    }

private:
    std::vector<bool> odd_;
    std::map<std::pair<Multipartition, Multipartition>, C> terms_;
};

using FockTensor = BasicTensorState<Rational>;
using FockTensorQ = BasicTensorState<LaurentPolyQRat>;

namespace detail {

/// Product of two monomials with Koszul sign; returns false when an odd
/// generator repeats (exterior square is zero).
inline bool merge_monomials(const Multipartition& a, const Multipartition& b,
                            const std::vector<bool>& odd, Multipartition& out, int& sign) {
    auto oa = odd_generator_keys(a, odd);
    auto ob = odd_generator_keys(b, odd);
    long long inversions = 0;
    // Any key of b strictly smaller than a key of a must cross it.
    for (const auto& kb : ob) {
        auto it = std::upper_bound(oa.begin(), oa.end(), kb);
        if (it != oa.begin() && *(it - 1) == kb) return false; // repeated odd generator
        inversions += oa.end() - it;
    }
    sign = inversions % 2 == 0 ? 1 : -1;

    std::map<int, Partition> merged;
    for (const auto& [color, part] : a.components()) merged[color] = part;
    for (const auto& [color, part] : b.components()) {
        auto it = merged.find(color);
        if (it == merged.end()) {
            merged[color] = part;
            continue;
        }
        Partition acc = it->second;
        for (int p : part.parts()) acc = acc.with_part_added(p);
        it->second = acc;
    }
    out = Multipartition(std::move(merged));
    return true;
}

} // namespace detail

/// Super-commutative polynomial product with Koszul signs.
template <typename C>
BasicFockState<C> multiply(const BasicFockState<C>& x, const BasicFockState<C>& y) {
    x.require_same_palette(y);
    BasicFockState<C> out = BasicFockState<C>::zero(x.palette());
    for (const auto& [ma, ca] : x.terms())
        for (const auto& [mb, cb] : y.terms()) {
            Multipartition merged;
            int sign = 1;
            if (!detail::merge_monomials(ma, mb, x.palette(), merged, sign)) continue;
            C c = C(ca * cb);
            if (sign < 0) c = C(-c);
            out.add_term(merged, c);
        }
    return out;
}

template <typename C>
BasicFockState<C> operator*(const BasicFockState<C>& x, const BasicFockState<C>& y) {
    return multiply(x, y);
}

/// Left multiplication by the creation generator v^color_{-part}.
template <typename C>
BasicFockState<C> multiply_by_generator(int color, int part, const BasicFockState<C>& x) {
    if (color < 0 || color >= x.ncolors()) throw UsageError("fock: color outside palette");
    if (part < 1) throw UsageError("fock: generator part must be positive");
    Multipartition g;
    g = g.with_component(color, Partition({part}));
    BasicFockState<C> gen = BasicFockState<C>::monomial(x.palette(), g, C(1));
    return multiply(gen, x);
}

/// The annihilation mode v^color_n (n > 0) acting as the super-derivation
/// with v^i_n (v^j_{-m}) = delta_{nm} <pairing at n>.  `pairing(i, j, n)`
/// supplies the mode-n value in the coefficient ring.
template <typename C, typename PairingFn>
BasicFockState<C> apply_annihilator(int color, long n, const BasicFockState<C>& x,
                                    PairingFn&& pairing) {
    if (color < 0 || color >= x.ncolors()) throw UsageError("fock: color outside palette");
    if (n < 1) throw UsageError("fock: annihilation mode must be positive");
    const auto& odd = x.palette();
    bool op_odd = odd[color];
    BasicFockState<C> out = BasicFockState<C>::zero(odd);
    int part = static_cast<int>(n);
    for (const auto& [mono, coeff] : x.terms()) {
        auto odd_keys = detail::odd_generator_keys(mono, odd);
        for (const auto& [j, partition] : mono.components()) {
            int mult = partition.multiplicity(part);
            if (mult == 0) continue;
            C value = pairing(color, j, n);
            if (is_zero(value)) continue;
            int sign = 1;
            if (op_odd) {
                // Crossings with odd generators strictly before the hit.
                std::pair<int, int> hit{j, -part};
                auto it = std::lower_bound(odd_keys.begin(), odd_keys.end(), hit);
                sign = (it - odd_keys.begin()) % 2 == 0 ? 1 : -1;
            }
            Multipartition reduced =
                mono.with_component(j, partition.with_part_removed(part));
            C c = C(coeff * value);
            c = coeff_scale(c, Rational(sign * mult));
            out.add_term(reduced, c);
        }
    }
    return out;
}

/// mode < 0: multiply by the generator; mode > 0: act by the adjoint
/// derivation under the given pairing.
template <typename C, typename PairingFn>
BasicFockState<C> apply_mode(const OperatorSymbol& op, const BasicFockState<C>& x,
                             PairingFn&& pairing) {
    if (op.mode == 0) throw UsageError("fock: mode must be nonzero");
    if (op.mode < 0)
        return multiply_by_generator<C>(op.color, static_cast<int>(-op.mode), x);
    return apply_annihilator<C>(op.color, op.mode, x, pairing);
}

inline FockState apply(const OperatorSymbol& op, const FockState& x, const PairingSpec& pairing) {
    if (pairing.is_q_valued())
        throw UsageError("fock: q-deformed pairing requires the q-valued apply");
    return apply_mode(op, x, [&](int i, int j, long n) { return pairing.rational_value(i, j, n); });
}

inline FockStateQ to_q_state(const FockState& x) {
    FockStateQ out = FockStateQ::zero(x.palette());
    for (const auto& [m, c] : x.terms()) out.add_term(m, LaurentPolyQRat(c));
    return out;
}

inline FockStateQ apply_q(const OperatorSymbol& op, const FockStateQ& x,
                          const PairingSpec& pairing) {
    return apply_mode(op, x, [&](int i, int j, long n) {
        return to_rational_poly(pairing.q_value(i, j, n));
    });
}

/// Linear combination sum_j v_j * v^j_mode applied to x (the mode of a
/// curve-class combination).
inline FockState apply_combination(const std::vector<long long>& v, long mode, const FockState& x,
                                   const PairingSpec& pairing) {
    if (static_cast<int>(v.size()) != x.ncolors())
        throw UsageError("fock: combination length differs from palette");
    FockState out = FockState::zero(x.palette());
    for (int j = 0; j < x.ncolors(); ++j) {
        if (v[j] == 0) continue;
        out += make_rational(v[j]) * apply(OperatorSymbol{j, mode}, x, pairing);
    }
    return out;
}

/// Commutator data for [v^i_n, v^j_m] x (anticommutator for odd-odd pairs):
/// `actual` is the bracket computed operationally, `predicted` the
/// delta_{n,-m} pairing value acting on x.
template <typename C>
struct CommutatorCheck {
    BasicFockState<C> actual;
    BasicFockState<C> predicted;
    bool matches() const { return actual == predicted; }
};

template <typename C, typename PairingFn>
CommutatorCheck<C> commutator_check_impl(int i, int j, long n, long m, const BasicFockState<C>& x,
                                         PairingFn&& pairing, bool odd_i, bool odd_j) {
    OperatorSymbol a{i, n}, b{j, m};
    BasicFockState<C> ab = apply_mode(a, apply_mode(b, x, pairing), pairing);
    BasicFockState<C> ba = apply_mode(b, apply_mode(a, x, pairing), pairing);
    bool anti = odd_i && odd_j;
    BasicFockState<C> actual = anti ? ab + ba : ab - ba;

    BasicFockState<C> predicted = BasicFockState<C>::zero(x.palette());
    if (n == -m) {
        long nn = n > 0 ? n : -n;
        C value = pairing(i, j, nn);
        // Bosonic commutators are odd under mode reflection; anticommutators
        // of odd pairs are not.
        if (!anti && n < 0) value = C(-value);
        for (const auto& [mono, c] : x.terms()) predicted.add_term(mono, C(c * value));
    }
    return {actual, predicted};
}

inline CommutatorCheck<Rational> commutator_check(int i, int j, long n, long m, const FockState& x,
                                                  const PairingSpec& pairing) {
    if (pairing.is_q_valued())
        throw UsageError("fock: q-deformed pairing requires the q-valued commutator check");
    return commutator_check_impl(
        i, j, n, m, x, [&](int a, int b, long k) { return pairing.rational_value(a, b, k); },
        x.palette().at(i), x.palette().at(j));
}

inline CommutatorCheck<LaurentPolyQRat> commutator_check_q(int i, int j, long n, long m,
                                                           const FockStateQ& x,
                                                           const PairingSpec& pairing) {
    return commutator_check_impl(
        i, j, n, m, x,
        [&](int a, int b, long k) { return to_rational_poly(pairing.q_value(a, b, k)); },
        x.palette().at(i), x.palette().at(j));
}

/// Algebra-map extension of Delta v_n = v_n (x) 1 + 1 (x) v_n with Koszul
/// signs in the tensor square.
template <typename C>
BasicTensorState<C> coproduct(const BasicFockState<C>& x) {
    const auto& odd = x.palette();
    BasicTensorState<C> out(odd);
    for (const auto& [mono, coeff] : x.terms()) {
        // Factor list in canonical order: (color, part, multiplicity, odd).
        struct Factor {
            int color;
            int part;
            int mult;
            bool odd;
        };
        std::vector<Factor> factors;
        for (const auto& [color, partition] : mono.components())
            for (const auto& [part, mult] : partition.exponent_form())
                factors.push_back({color, part, mult, odd[color]});
        std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) {
            if (a.color != b.color) return a.color < b.color;
            return a.part > b.part;
        });

        std::map<int, std::map<int, int>> left, right; // color -> part -> mult
        auto expand = [&](auto&& self, std::size_t idx, int right_odd_parity,
                          const Rational& weight) -> void {
            if (idx == factors.size()) {
                auto build = [](const std::map<int, std::map<int, int>>& lists) {
                    std::map<int, Partition> comps;
                    for (const auto& [color, mults] : lists)
                        comps[color] = Partition::from_exponent_form(mults);
                    return Multipartition(std::move(comps));
                };
                out.add_term(build(left), build(right), coeff_scale(coeff, weight));
                return;
            }
            const Factor& f = factors[idx];
            if (f.odd) {
                // Sending the generator left crosses every odd generator
                // already sent right.
                left[f.color][f.part] = 1;
                self(self, idx + 1, right_odd_parity,
                     right_odd_parity ? Rational(-weight) : weight);
                left[f.color].erase(f.part);
                if (left[f.color].empty()) left.erase(f.color);
                right[f.color][f.part] = 1;
                self(self, idx + 1, right_odd_parity ^ 1, weight);
                right[f.color].erase(f.part);
                if (right[f.color].empty()) right.erase(f.color);
            } else {
                for (int a = 0; a <= f.mult; ++a) {
                    Rational w = weight * Rational(binomial(f.mult, a));
                    if (a > 0) left[f.color][f.part] = a;
                    if (f.mult - a > 0) right[f.color][f.part] = f.mult - a;
                    self(self, idx + 1, right_odd_parity, w);
                    left[f.color].erase(f.part);
                    if (left[f.color].empty()) left.erase(f.color);
                    right[f.color].erase(f.part);
                    if (right[f.color].empty()) right.erase(f.color);
                }
            }
        };
        expand(expand, 0, 0, Rational(1));
    }
    return out;
}

/// The unique pairing with multiplication/comultiplication adjoint, vacuum
/// normalization <1,1> = 1, and generator pairing given by `pairing`.
/// Computed by annihilating x's generators against y.
template <typename C, typename PairingFn>
C inner_product_impl(const BasicFockState<C>& x, const BasicFockState<C>& y, PairingFn&& pairing) {
    x.require_same_palette(y);
    C total = C();
    for (const auto& [mono, coeff] : x.terms()) {
        BasicFockState<C> target = y;
        // Peel the leftmost generator repeatedly: (g x', y) = (x', g^dagger y).
        Multipartition current = mono;
        bool dead = false;
        while (!current.empty()) {
            const auto& [color, partition] = *current.components().begin();
            int part = partition.parts().front();
            target = apply_annihilator<C>(color, part, target, pairing);
            if (target.is_zero()) {
                dead = true;
                break;
            }
            current = current.with_component(color, partition.with_part_removed(part));
        }
        if (dead) continue;
        C vac = target.coeff(Multipartition());
        total += C(coeff * vac);
    }
    return total;
}

inline Rational inner_product(const FockState& x, const FockState& y, const PairingSpec& pairing) {
    if (pairing.is_q_valued())
        throw UsageError("fock: q-deformed pairing requires the q-valued inner product");
    return inner_product_impl(x, y,
                              [&](int i, int j, long n) { return pairing.rational_value(i, j, n); });
}

inline LaurentPolyQRat inner_product_q(const FockStateQ& x, const FockStateQ& y,
                                       const PairingSpec& pairing) {
    return inner_product_impl(
        x, y, [&](int i, int j, long n) { return to_rational_poly(pairing.q_value(i, j, n)); });
}

/// (x (x) y, Delta z) with the componentwise tensor pairing.
inline Rational tensor_pairing(const FockState& x, const FockState& y, const FockTensor& dz,
                               const PairingSpec& pairing) {
    Rational total(0);
    for (const auto& [pair_mono, c] : dz.terms()) {
        FockState a = FockState::monomial(x.palette(), pair_mono.first, Rational(1));
        FockState b = FockState::monomial(y.palette(), pair_mono.second, Rational(1));
        Rational pa = inner_product(x, a, pairing);
        if (is_zero(pa)) continue;
        Rational pb = inner_product(y, b, pairing);
        total += c * pa * pb;
    }
    return total;
}

/// Degree-n component of H^v(t) = exp(sum_{m>=1} v_{-m} t^m / m) applied to
/// the vacuum; v must be supported on even colors.  h_0 = 1.
inline FockState h_element(const Lattice& lattice, const std::vector<long long>& v, long n) {
    if (n < 0) throw UsageError("h_element: degree must be nonnegative");
    if (static_cast<int>(v.size()) != lattice.rank())
        throw UsageError("h_element: coefficient vector length differs from rank");
    for (int j = 0; j < lattice.rank(); ++j)
        if (v[j] != 0 && lattice.is_odd_color(j))
            throw UnsupportedInputError("h_element: odd colors cannot be exponentiated");
    auto odd = lattice.odd_palette();
    std::vector<FockState> h;
    h.push_back(FockState::vacuum(odd));
    // t H'(t) = (sum_m E_m t^m) H(t) with E_m = sum_j v_j alpha^j_{-m},
    // whence k h_k = sum_{m<=k} E_m h_{k-m}.
    std::vector<FockState> e; // E_1 .. E_n as states
    for (long m = 1; m <= n; ++m) {
        FockState em = FockState::zero(odd);
        for (int j = 0; j < lattice.rank(); ++j) {
            if (v[j] == 0) continue;
            Multipartition mono;
            mono = mono.with_component(j, Partition({static_cast<int>(m)}));
            em.add_term(mono, make_rational(v[j]));
        }
        e.push_back(em);
    }
    for (long k = 1; k <= n; ++k) {
        FockState acc = FockState::zero(odd);
        for (long m = 1; m <= k; ++m) acc += multiply(e[m - 1], h[k - m]);
        h.push_back(make_rational(1, k) * acc);
    }
    return h[n];
}

/// The double generating function sum (h^v_n, h^w_m) t^n s^m computed from
/// first principles on a synthetic two-color lattice with (v, w) = k, for
/// comparison against the closed binomial expansion.
inline TruncatedSeries hh_pairing_series(long long k, int order, PairingKind kind = PairingKind::classical,
                                         long long level = 1) {
    if (kind == PairingKind::q_deformed)
        throw UsageError("hh_pairing_series: q-deformed pairing is Laurent-valued");
    // Diagonal entries keep the gram even and nondegenerate for every k.
    long long d = 2 * k * k + 2;
    Lattice lattice({{2, k}, {k, d}});
    PairingSpec pairing = kind == PairingKind::classical ? PairingSpec::classical(lattice)
                                                         : PairingSpec::with_level(lattice, level);
    std::vector<FockState> hv, hw;
    for (int n = 0; n <= order; ++n) {
        hv.push_back(h_element(lattice, {1, 0}, n));
        hw.push_back(h_element(lattice, {0, 1}, n));
    }
    TruncatedSeries out("t", "s", order);
    for (int n = 0; n <= order; ++n)
        for (int m = 0; m <= order; ++m)
            out.add_term({n, m}, inner_product(hv[n], hw[m], pairing));
    return out;
}

/// Polynomials in countably many graded generators; the monomial
/// prod_i x_i^{a_i} is keyed by the partition with a_i parts equal to i.
using GeneratorPoly = std::map<Partition, Rational>;

enum class NewtonDirection { h_from_p, p_from_h };

namespace detail {

inline void poly_add(GeneratorPoly& p, const Partition& key, const Rational& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = p.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) p.erase(it);
    }
}

inline GeneratorPoly poly_times_generator(const GeneratorPoly& p, int k) {
    GeneratorPoly out;
    for (const auto& [mono, c] : p) poly_add(out, mono.with_part_added(k), c);
    return out;
}

} // namespace detail

/// Newton's identities as universal polynomials: entry n-1 expresses h_n in
/// the p_k (direction h_from_p) or p_n in the h_k (direction p_from_h),
/// exact rational coefficients.
inline std::vector<GeneratorPoly> newton_convert(NewtonDirection direction, int nmax) {
    if (nmax < 1) throw UsageError("newton_convert: nmax must be >= 1");
    std::vector<GeneratorPoly> out;
    if (direction == NewtonDirection::h_from_p) {
        std::vector<GeneratorPoly> h(nmax + 1);
        h[0] = {{Partition(), Rational(1)}};
        for (int n = 1; n <= nmax; ++n) {
            GeneratorPoly acc;
            for (int k = 1; k <= n; ++k)
                for (const auto& [mono, c] : detail::poly_times_generator(h[n - k], k))
                    detail::poly_add(acc, mono, c);
            for (auto& [mono, c] : acc) c /= n;
            h[n] = std::move(acc);
        }
        out.assign(h.begin() + 1, h.end());
    } else {
        std::vector<GeneratorPoly> p(nmax + 1);
        for (int n = 1; n <= nmax; ++n) {
            GeneratorPoly acc;
            detail::poly_add(acc, Partition({n}), Rational(n));
            for (int k = 1; k <= n - 1; ++k)
                for (const auto& [mono, c] : detail::poly_times_generator(p[n - k], k))
                    detail::poly_add(acc, mono, Rational(-c));
            p[n] = std::move(acc);
        }
        out.assign(p.begin() + 1, p.end());
    }
    return out;
}

/// Substitutes Fock states for the generators of a universal polynomial.
inline FockState substitute_generators(const GeneratorPoly& poly,
                                       const std::function<FockState(int)>& generator,
                                       const std::vector<bool>& odd) {
    FockState total = FockState::zero(odd);
    for (const auto& [mono, c] : poly) {
        FockState term = FockState::vacuum(odd);
        for (int part : mono.parts()) term = multiply(term, generator(part));
        total += c * term;
    }
    return total;
}

} // namespace fockforge
