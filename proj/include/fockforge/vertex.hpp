#pragma once

#include <map>
#include <string>
#include <vector>

#include "fockforge/fock.hpp"
#include "fockforge/lattice.hpp"

namespace fockforge {

/// Element of F = S (x) C{L}: finitely many charge sectors e^lambda, each
/// carrying a Fock-space component.
class ChargedState {
public:
    explicit ChargedState(std::vector<bool> odd) : odd_(std::move(odd)) {}

    static ChargedState zero(const Lattice& lattice) {
        return ChargedState(lattice.odd_palette());
    }
    static ChargedState vacuum(const Lattice& lattice) {
        ChargedState s(lattice.odd_palette());
        s.add_sector(LatticeVector::zero(lattice.rank()), FockState::vacuum(s.odd_));
        return s;
    }
    static ChargedState pure(const LatticeVector& sector, const FockState& fock) {
        ChargedState s(fock.palette());
        s.add_sector(sector, fock);
        return s;
    }

    const std::vector<bool>& palette() const { return odd_; }
    const std::map<LatticeVector, FockState>& sectors() const { return sectors_; }
    bool is_zero() const { return sectors_.empty(); }

    FockState sector(const LatticeVector& lambda) const {
        auto it = sectors_.find(lambda);
        return it == sectors_.end() ? FockState::zero(odd_) : it->second;
    }

    void add_sector(const LatticeVector& lambda, const FockState& f) {
        if (f.is_zero()) return;
        auto [it, inserted] = sectors_.try_emplace(lambda, f);
        if (!inserted) {
            it->second += f;
            if (it->second.is_zero()) sectors_.erase(it);
        }
    }

    ChargedState& operator+=(const ChargedState& o) {
        for (const auto& [l, f] : o.sectors_) add_sector(l, f);
        return *this;
    }
    friend ChargedState operator+(ChargedState a, const ChargedState& b) { return a += b; }
    friend ChargedState operator-(const ChargedState& a) {
        ChargedState out(a.odd_);
        for (const auto& [l, f] : a.sectors_) out.add_sector(l, -f);
        return out;
    }
    friend ChargedState operator-(ChargedState a, const ChargedState& b) { return a + (-b); }
    friend ChargedState operator*(const Rational& s, const ChargedState& x) {
        ChargedState out(x.odd_);
        for (const auto& [l, f] : x.sectors_) out.add_sector(l, s * f);
        return out;
    }
    friend bool operator==(const ChargedState& a, const ChargedState& b) {
        return a.odd_ == b.odd_ && a.sectors_ == b.sectors_;
    }

private:
    std::vector<bool> odd_;
    std::map<LatticeVector, FockState> sectors_;
};

/// Conformal weight of the degree-n Fock part of sector lambda.
inline Rational l0_eigenvalue(const Lattice& lattice, const LatticeVector& lambda, long n) {
    return make_rational(lattice.inner(lambda, lambda), 2) + Rational(n);
}

/// (1/2) c1.c1 - c2 with c1 = lambda and c2 = n; satisfies
/// l0_eigenvalue + ch2_of = (lambda, lambda).
inline Rational ch2_of(const Lattice& lattice, const LatticeVector& lambda, long n) {
    return make_rational(lattice.inner(lambda, lambda), 2) - Rational(n);
}

/// L0-eigenvalue decomposition of a charged state.
inline std::map<Rational, ChargedState> l0_components(const Lattice& lattice,
                                                      const ChargedState& x) {
    std::map<Rational, ChargedState> out;
    for (const auto& [lambda, fock] : x.sectors())
        for (const auto& [deg, piece] : fock.graded_components()) {
            Rational w = l0_eigenvalue(lattice, lambda, deg);
            auto [it, inserted] = out.try_emplace(w, ChargedState::zero(lattice));
            it->second.add_sector(lambda, piece);
        }
    return out;
}

inline long factorial_small(int k) {
    long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

/// Mode m of the vertex operator attached to a root alpha, normalized so
/// that mode m lowers L0 by exactly m:
///   Gamma_alpha(z) = exp(sum_{n>0} alpha_{-n} z^n/n)
///                    exp(-sum_{n>0} alpha_n z^{-n}/n) e^alpha z^{(alpha,.)}
/// with the cocycle sign epsilon(alpha, lambda) on sector lambda; mode m is
/// the z^{-m-1} coefficient.  On a state of bounded degree only finitely
/// many oscillator weights (p, q) with p - q = -m - 1 - (alpha, lambda)
/// contribute; if either exceeds the truncation order N this raises
/// TruncationError rather than returning a silently wrong answer.
inline ChargedState vertex_mode_apply(const Lattice& lattice, const LatticeVector& alpha, long m,
                                      const ChargedState& x, int order) {
    if (!lattice.all_even())
        throw UnsupportedInputError("vertex: lattice part uses the even sublattice only");
    if (lattice.norm(alpha) != 2)
        throw UnsupportedInputError("vertex: operator requires a root, (alpha, alpha) = 2");
    Cocycle cocycle(lattice);
    PairingSpec pairing = PairingSpec::classical(lattice);
    auto odd = lattice.odd_palette();

    std::vector<long long> alpha_coords = alpha.coords;
    // Creation halves: multiplication by h^alpha_p.
    std::vector<FockState> h_cache;
    auto h_of = [&](long p) -> const FockState& {
        while (static_cast<long>(h_cache.size()) <= p)
            h_cache.push_back(h_element(lattice, alpha_coords, static_cast<long>(h_cache.size())));
        return h_cache[p];
    };

    // Degree-q component of exp(-sum_{n>0} alpha_n z^{-n}/n) applied to f.
    auto annihilation_part = [&](long q, const FockState& f) {
        FockState acc = FockState::zero(odd);
        for_each_partition(static_cast<int>(q), [&](const Partition& beta) {
            Rational coeff(1);
            FockState term = f;
            for (const auto& [part, mult] : beta.exponent_form()) {
                for (int r = 0; r < mult; ++r) {
                    coeff *= make_rational(-1, part);
                    term = apply_combination(alpha_coords, part, term, pairing);
                    if (term.is_zero()) return;
                }
                coeff *= make_rational(1, factorial_small(mult));
            }
            acc += coeff * term;
        });
        return acc;
    };

    ChargedState out = ChargedState::zero(lattice);
    for (const auto& [lambda, fock] : x.sectors()) {
        long long shift = lattice.inner(alpha, lambda);
        int eps = cocycle.epsilon(alpha, lambda);
        LatticeVector target = alpha + lambda;
        for (const auto& [deg, piece] : fock.graded_components()) {
            for (long q = 0; q <= deg; ++q) {
                long p = q - m - 1 - shift;
                if (p < 0) continue;
                if (p > order || q > order)
                    throw TruncationError(
                        "vertex: mode needs oscillator weight beyond the truncation order");
                FockState lowered = annihilation_part(q, piece);
                if (lowered.is_zero()) continue;
                FockState term = multiply(h_of(p), lowered);
                if (eps < 0) term = -term;
                out.add_sector(target, term);
            }
        }
    }
    return out;
}

/// Basis vector of the conformal-weight-1 space: an oscillator Cartan
/// element v^color_{-1} . 1 (x) e^0 or a group-algebra element 1 (x) e^alpha.
struct WeightOneBasisElement {
    enum class Kind { cartan, root };
    Kind kind = Kind::cartan;
    int color = 0;
    LatticeVector root;

    std::string label() const {
        if (kind == Kind::cartan) return "h" + std::to_string(color);
        return "e^" + root.to_text();
    }
};

/// The weight-1 Lie algebra extracted from F: basis, structure constants of
/// the zero-mode bracket, and the invariant form read off the mode that
/// lowers the combined weight to the vacuum.
struct WeightOneAlgebra {
    std::vector<WeightOneBasisElement> basis;
    std::vector<std::vector<std::vector<Rational>>> bracket; // [i][j] -> coordinates
    std::vector<std::vector<Rational>> invariant_form;

    int dimension() const { return static_cast<int>(basis.size()); }

    bool antisymmetry_holds() const {
        int d = dimension();
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k)
                    if (bracket[i][j][k] != Rational(-bracket[j][i][k])) return false;
        return true;
    }

    bool jacobi_holds() const {
        int d = dimension();
        auto bra = [&](const std::vector<Rational>& a,
                       const std::vector<Rational>& b) -> std::vector<Rational> {
            std::vector<Rational> out(d, Rational(0));
            for (int i = 0; i < d; ++i) {
                if (is_zero(a[i])) continue;
                for (int j = 0; j < d; ++j) {
                    if (is_zero(b[j])) continue;
                    for (int k = 0; k < d; ++k) out[k] += a[i] * b[j] * bracket[i][j][k];
                }
            }
            return out;
        };
        std::vector<std::vector<Rational>> unit(d, std::vector<Rational>(d, Rational(0)));
        for (int i = 0; i < d; ++i) unit[i][i] = 1;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) {
                    std::vector<Rational> lhs = bra(unit[i], bracket[j][k]);
                    std::vector<Rational> mid = bra(bracket[i][j], unit[k]);
                    std::vector<Rational> rhs = bra(unit[j], bracket[i][k]);
                    for (int t = 0; t < d; ++t)
                        if (lhs[t] != mid[t] + rhs[t]) return false;
                }
        return true;
    }
};

/// Applies mode k of a weight-1 basis element to a charged state.  Mode 0 is
/// the bracket action, mode 1 pairs down to the vacuum.
inline ChargedState weight_one_mode_apply(const Lattice& lattice, const WeightOneBasisElement& a,
                                          long k, const ChargedState& x, int order) {
    if (a.kind == WeightOneBasisElement::Kind::root)
        return vertex_mode_apply(lattice, a.root, k, x, order);
    PairingSpec pairing = PairingSpec::classical(lattice);
    ChargedState out = ChargedState::zero(lattice);
    LatticeVector e_i = LatticeVector::basis(lattice.rank(), a.color);
    if (k == 0) {
        // Heisenberg zero mode: acts on sector lambda by (e_i, lambda).
        for (const auto& [lambda, fock] : x.sectors()) {
            long long w = lattice.inner(e_i, lambda);
            if (w == 0) continue;
            out.add_sector(lambda, make_rational(w) * fock);
        }
        return out;
    }
    std::vector<long long> coords(lattice.rank(), 0);
    coords[a.color] = 1;
    for (const auto& [lambda, fock] : x.sectors())
        out.add_sector(lambda, apply_combination(coords, k, fock, pairing));
    return out;
}

/// Frenkel-Kac weight-1 Lie algebra of a positive definite even lattice
/// spanned by its roots.
inline WeightOneAlgebra weight_one_algebra(const Lattice& lattice, int order) {
    if (!lattice.all_even())
        throw UnsupportedInputError("weight-one: lattice must be purely even");
    if (!lattice.is_positive_definite())
        throw UnsupportedInputError("weight-one: lattice must be positive definite");
    auto roots = lattice.roots();
    if (!lattice.spanned_by_roots())
        throw UnsupportedInputError("weight-one: lattice not spanned by roots");

    WeightOneAlgebra alg;
    for (int i = 0; i < lattice.rank(); ++i)
        alg.basis.push_back({WeightOneBasisElement::Kind::cartan, i, LatticeVector()});
    for (const auto& r : roots)
        alg.basis.push_back({WeightOneBasisElement::Kind::root, -1, r});
    int d = alg.dimension();

    auto element_state = [&](const WeightOneBasisElement& b) {
        if (b.kind == WeightOneBasisElement::Kind::cartan) {
            Multipartition mono;
            mono = mono.with_component(b.color, Partition({1}));
            return ChargedState::pure(LatticeVector::zero(lattice.rank()),
                                      FockState::monomial(lattice.odd_palette(), mono, Rational(1)));
        }
        return ChargedState::pure(b.root, FockState::vacuum(lattice.odd_palette()));
    };

    auto decompose = [&](const ChargedState& s) {
        std::vector<Rational> coords(d, Rational(0));
        for (const auto& [lambda, fock] : s.sectors()) {
            if (lambda.is_zero()) {
                for (const auto& [mono, c] : fock.terms()) {
                    if (mono.total_weight() != 1)
                        throw UnsupportedInputError("weight-one: bracket left the weight-1 space");
                    int color = mono.components().begin()->first;
                    coords[color] += c;
                }
                continue;
            }
            auto it = std::find_if(alg.basis.begin(), alg.basis.end(), [&](const auto& b) {
                return b.kind == WeightOneBasisElement::Kind::root && b.root == lambda;
            });
            if (it == alg.basis.end())
                throw UnsupportedInputError("weight-one: bracket left the weight-1 space");
            for (const auto& [mono, c] : fock.terms()) {
                if (mono.total_weight() != 0)
                    throw UnsupportedInputError("weight-one: bracket left the weight-1 space");
                coords[it - alg.basis.begin()] += c;
            }
        }
        return coords;
    };

    alg.bracket.assign(d, std::vector<std::vector<Rational>>());
    alg.invariant_form.assign(d, std::vector<Rational>(d, Rational(0)));
    for (int i = 0; i < d; ++i) {
        alg.bracket[i].reserve(d);
        for (int j = 0; j < d; ++j) {
            ChargedState b = element_state(alg.basis[j]);
            alg.bracket[i].push_back(decompose(weight_one_mode_apply(lattice, alg.basis[i], 0, b, order)));
            ChargedState down = weight_one_mode_apply(lattice, alg.basis[i], 1, b, order);
            alg.invariant_form[i][j] =
                down.sector(LatticeVector::zero(lattice.rank())).coeff(Multipartition());
        }
    }
    return alg;
}

/// Number of basis states of F at a given L0 level: lattice points lambda
/// with (lambda,lambda)/2 <= level times oscillator multipartitions of the
/// complementary weight.  The enumeration route, independent of the product
/// formula.
inline Integer character_basis_count(const Lattice& lattice, int level) {
    if (!lattice.is_positive_definite())
        throw UnsupportedInputError("character: lattice must be positive definite");
    Integer total(0);
    auto odd = lattice.odd_palette();
    for (const auto& [vec, norm] : lattice.points_up_to_norm(2LL * level)) {
        long long sector_weight = norm / 2;
        total += count_multipartitions(odd, static_cast<int>(level - sector_weight));
    }
    return total;
}

/// Graded character of F: theta-series of the lattice times the oscillator
/// eta-type product, truncated at q^order.
inline TruncatedSeries character(const Lattice& lattice, int order) {
    if (!lattice.is_positive_definite())
        throw UnsupportedInputError("character: lattice must be positive definite");
    TruncatedSeries theta("q", order);
    for (const auto& [vec, norm] : lattice.points_up_to_norm(2LL * order))
        theta.add_term({static_cast<int>(norm / 2), 0}, Rational(1));
    TruncatedSeries osc = TruncatedSeries::one(theta);
    for (int m = 1; m <= order; ++m) {
        TruncatedSeries geom("q", order); // (1 - q^m)^{-1}
        for (int j = 0; j * m <= order; ++j) geom.add_term({j * m, 0}, Rational(1));
        for (int r = 0; r < lattice.rank(); ++r) osc *= geom;
    }
    return theta * osc;
}

} // namespace fockforge
