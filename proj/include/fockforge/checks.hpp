#pragma once

#include <array>
#include <string>
#include <vector>

#include "fockforge/fock.hpp"
#include "fockforge/hilbgen.hpp"
#include "fockforge/io.hpp"
#include "fockforge/lattice.hpp"
#include "fockforge/vertex.hpp"

namespace fockforge {

/// Outcome of one verified identity, keyed for the report document.
struct CheckResult {
    std::string key;    // e.g. "S1.heisenberg"
    std::string anchor; // the identity the check verifies
    std::string status; // "pass" | "fail" | "skip"
    std::string detail;

    bool failed() const { return status == "fail"; }
};

struct CheckOptions {
    int order = 6;
    long long level = 1;
    unsigned long long seed = 7;
    int n_states = 20;
    int state_degree = 6;
    int n_triples = 30;
    int triple_degree = 4;
};

/// Deterministic, platform-independent generator for the property suites.
class SplitMix64 {
public:
    explicit SplitMix64(unsigned long long seed) : state_(seed) {}

    unsigned long long next() {
        unsigned long long z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi]; modulo bias is irrelevant for test-data purposes.
    long long uniform(long long lo, long long hi) {
        if (hi < lo) throw UsageError("rng: empty range");
        return lo + static_cast<long long>(next() % static_cast<unsigned long long>(hi - lo + 1));
    }

private:
    unsigned long long state_;
};

/// Random sparse state of bounded degree; odd colors stay strict.
inline FockState random_fock_state(SplitMix64& rng, const std::vector<bool>& odd, int max_degree,
                                   int max_terms) {
    FockState x = FockState::zero(odd);
    int nterms = static_cast<int>(rng.uniform(1, max_terms));
    for (int t = 0; t < nterms; ++t) {
        Multipartition mono;
        long long budget = rng.uniform(0, max_degree);
        while (budget > 0) {
            int color = static_cast<int>(rng.uniform(0, static_cast<long long>(odd.size()) - 1));
            int part = static_cast<int>(rng.uniform(1, budget));
            if (odd[color] && mono.component(color).multiplicity(part) > 0) {
                budget -= 1; // treat as a dud draw so the loop terminates
                continue;
            }
            mono = mono.with_component(color, mono.component(color).with_part_added(part));
            budget -= part;
        }
        long long mag = rng.uniform(1, 9);
        long long sgn = rng.uniform(0, 1) ? 1 : -1;
        long long den = rng.uniform(1, 4);
        x += FockState::monomial(odd, mono, make_rational(mag * sgn, den));
    }
    return x;
}

/// Exact rank of a rational matrix by Gauss-Jordan elimination.
inline int matrix_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!is_zero(m[r][col])) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        Rational inv = Rational(1) / m[rank][col];
        for (int c = col; c < cols; ++c) m[rank][c] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || is_zero(m[r][col])) continue;
            Rational f = m[r][col];
            for (int c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// Individual identity checks.  Each returns a CheckResult; the acceptance
// suite calls these with its own pinned parameters.
// ---------------------------------------------------------------------------

/// [v^i_n, v^j_m] = delta_{n,-m} <pairing at n> on every supplied state, all
/// signed mode pairs up to max_mode, all color pairs.
inline CheckResult check_heisenberg(const Lattice& lattice, const PairingSpec& pairing,
                                    int max_mode, const std::vector<FockState>& states) {
    long long checked = 0, failures = 0;
    for (int i = 0; i < lattice.rank(); ++i)
        for (int j = 0; j < lattice.rank(); ++j)
            for (long n = -max_mode; n <= max_mode; ++n)
                for (long m = -max_mode; m <= max_mode; ++m) {
                    if (n == 0 || m == 0) continue;
                    for (const auto& x : states) {
                        ++checked;
                        if (!commutator_check(i, j, n, m, x, pairing).matches()) ++failures;
                    }
                }
    return {"S1.heisenberg", "[v_n, v_m] = delta_{n,-m} (v_n, v_n)",
            failures == 0 ? "pass" : "fail",
            std::to_string(checked) + " commutators, " + std::to_string(failures) + " failures"};
}

/// (xy, z) = (x (x) y, Delta z) on the supplied random triples.
inline CheckResult check_hopf_adjointness(const Lattice& lattice, const PairingSpec& pairing,
                                          const std::vector<std::array<FockState, 3>>& triples) {
    (void)lattice;
    long long failures = 0;
    for (const auto& [x, y, z] : triples) {
        Rational lhs = inner_product(multiply(x, y), z, pairing);
        Rational rhs = tensor_pairing(x, y, coproduct(z), pairing);
        if (lhs != rhs) ++failures;
    }
    return {"S1.hopf_adjoint", "(xy, z) = (x (x) y, Delta z)", failures == 0 ? "pass" : "fail",
            std::to_string(triples.size()) + " triples, " + std::to_string(failures) + " failures"};
}

/// Delta h^v_n = sum_{a+b=n} h^v_a (x) h^v_b for basis colors and one mixed
/// combination.
inline CheckResult check_grouplike(const Lattice& lattice, int nmax) {
    std::vector<std::vector<long long>> combos;
    for (int i = 0; i < lattice.rank(); ++i) {
        if (lattice.is_odd_color(i)) continue;
        std::vector<long long> e(lattice.rank(), 0);
        e[i] = 1;
        combos.push_back(e);
    }
    if (combos.size() >= 2) {
        std::vector<long long> mixed(lattice.rank(), 0);
        for (int i = 0; i < lattice.rank(); ++i)
            if (!lattice.is_odd_color(i)) mixed[i] = (i % 2 == 0) ? 1 : -2;
        combos.push_back(mixed);
    }
    auto odd = lattice.odd_palette();
    long long failures = 0, checked = 0;
    for (const auto& v : combos) {
        std::vector<FockState> h;
        for (int n = 0; n <= nmax; ++n) h.push_back(h_element(lattice, v, n));
        for (int n = 0; n <= nmax; ++n) {
            FockTensor expected(odd);
            for (int a = 0; a <= n; ++a)
                for (const auto& [ma, ca] : h[a].terms())
                    for (const auto& [mb, cb] : h[n - a].terms())
                        expected.add_term(ma, mb, Rational(ca * cb));
            ++checked;
            if (!(coproduct(h[n]) == expected)) ++failures;
        }
    }
    return {"S1.grouplike", "Delta h^v_n = sum_{a+b=n} h^v_a (x) h^v_b",
            failures == 0 ? "pass" : "fail",
            std::to_string(checked) + " elements, " + std::to_string(failures) + " failures"};
}

/// The reduced coproduct's kernel in degree n has dimension exactly rank
/// (the primitive space is V t^{-n}).
inline CheckResult check_primitive_dimension(const Lattice& lattice, int nmax) {
    auto odd = lattice.odd_palette();
    for (int n = 1; n <= nmax; ++n) {
        std::vector<Multipartition> basis;
        for_each_multipartition(odd, n, [&](const Multipartition& m) { basis.push_back(m); });
        std::map<std::pair<Multipartition, Multipartition>, int> row_index;
        std::vector<std::vector<Rational>> rows;
        auto row_of = [&](const std::pair<Multipartition, Multipartition>& key) -> int {
            auto [it, inserted] = row_index.try_emplace(key, static_cast<int>(rows.size()));
            if (inserted) rows.emplace_back(basis.size(), Rational(0));
            return it->second;
        };
        for (std::size_t col = 0; col < basis.size(); ++col) {
            FockState x = FockState::monomial(odd, basis[col], Rational(1));
            for (const auto& [key, c] : coproduct(x).terms()) {
                if (key.first.empty() || key.second.empty()) continue; // reduced coproduct
                rows[row_of(key)][col] = c;
            }
        }
        int kernel = static_cast<int>(basis.size()) - matrix_rank(rows);
        if (kernel != lattice.rank())
            return {"S1.primitives", "primitive elements of degree n form V t^{-n}", "fail",
                    "degree " + std::to_string(n) + ": kernel dimension " + std::to_string(kernel) +
                        ", expected " + std::to_string(lattice.rank())};
    }
    return {"S1.primitives", "primitive elements of degree n form V t^{-n}", "pass",
            "degrees 1.." + std::to_string(nmax)};
}

/// First-principles (h^v_n, h^w_m) table equals the binomial expansion.
inline CheckResult check_hh_series(long long kmax, int order) {
    for (long long k = -kmax; k <= kmax; ++k)
        if (!(hh_pairing_series(k, order) == binomial_power(k, order)))
            return {"S3.prop4", "sum (h^v_n, h^w_m) t^n s^m = (1-ts)^{-(v,w)}", "fail",
                    "mismatch at (v,w) = " + std::to_string(k)};
    return {"S3.prop4", "sum (h^v_n, h^w_m) t^n s^m = (1-ts)^{-(v,w)}", "pass",
            "|(v,w)| <= " + std::to_string(kmax) + ", order " + std::to_string(order)};
}

/// q-pairing facts: palindromic in q <-> q^{-1}, equal to the level-c
/// pairing at q = 1, and [n] itself palindromic with [n](1) = n.
inline CheckResult check_q_pairing(const Lattice& lattice, long long cmax, int nmax) {
    for (long n = 1; n <= 50; ++n) {
        LaurentPolyQ qn = q_integer(n);
        if (!(qn == qn.invert_symbol()))
            return {"S1.q_pairing", "(a^i_n, a^j_m) = n delta_{nm} [nc(a^i,a^j)]/[n]", "fail",
                    "[n] not palindromic at n = " + std::to_string(n)};
        if (evaluate_at(qn, Rational(1)) != Rational(n))
            return {"S1.q_pairing", "(a^i_n, a^j_m) = n delta_{nm} [nc(a^i,a^j)]/[n]", "fail",
                    "[n](1) != n at n = " + std::to_string(n)};
    }
    for (long long c = 1; c <= cmax; ++c)
        for (int i = 0; i < lattice.rank(); ++i)
            for (int j = 0; j < lattice.rank(); ++j)
                for (long n = 1; n <= nmax; ++n) {
                    LaurentPolyQ p = q_pairing(lattice, i, j, n, c);
                    if (!(p == p.invert_symbol()))
                        return {"S1.q_pairing", "(a^i_n, a^j_m) = n delta_{nm} [nc(a^i,a^j)]/[n]",
                                "fail", "pairing not palindromic"};
                    if (evaluate_at(p, Rational(1)) !=
                        make_rational(c * n * lattice.gram()[i][j]))
                        return {"S1.q_pairing", "(a^i_n, a^j_m) = n delta_{nm} [nc(a^i,a^j)]/[n]",
                                "fail", "q = 1 specialization differs from level-c pairing"};
                }
    return {"S1.q_pairing", "(a^i_n, a^j_m) = n delta_{nm} [nc(a^i,a^j)]/[n]", "pass",
            "c <= " + std::to_string(cmax) + ", n <= " + std::to_string(nmax) +
                ", palindromy and q = 1 specialization"};
}

/// Cocycle identities: bimultiplicative associativity, the commutator
/// condition, and unit normalization, on basis pairs plus random vectors.
inline CheckResult check_cocycle(const Lattice& lattice, SplitMix64& rng, int n_random) {
    Cocycle eps(lattice);
    int rank = lattice.rank();
    auto random_even_vector = [&]() {
        LatticeVector v = LatticeVector::zero(rank);
        for (int i = 0; i < rank; ++i)
            v.coords[i] = lattice.is_odd_color(i) ? 0 : rng.uniform(-3, 3);
        return v;
    };
    LatticeVector zero = LatticeVector::zero(rank);
    for (int i = 0; i < rank; ++i) {
        LatticeVector a = LatticeVector::basis(rank, i);
        if (eps.epsilon(a, zero) != 1 || eps.epsilon(zero, a) != 1)
            return {"S1.cocycle", "e^a e^b = (-1)^{(a,b)} e^b e^a", "fail", "unit normalization"};
    }
    std::vector<std::array<LatticeVector, 3>> triples;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            for (int k = 0; k < rank; ++k)
                if (!lattice.is_odd_color(i) && !lattice.is_odd_color(j) &&
                    !lattice.is_odd_color(k))
                    triples.push_back({LatticeVector::basis(rank, i), LatticeVector::basis(rank, j),
                                       LatticeVector::basis(rank, k)});
    for (int t = 0; t < n_random; ++t)
        triples.push_back({random_even_vector(), random_even_vector(), random_even_vector()});
    for (const auto& [a, b, c] : triples) {
        // 2-cocycle identity epsilon(a,b) epsilon(a+b,c) = epsilon(b,c) epsilon(a,b+c)
        if (eps.epsilon(a, b) * eps.epsilon(a + b, c) != eps.epsilon(b, c) * eps.epsilon(a, b + c))
            return {"S1.cocycle", "e^a e^b = (-1)^{(a,b)} e^b e^a", "fail", "associativity"};
        Cocycle e2(lattice);
        GroupElement ga{1, a}, gb{1, b}, gc{1, c};
        if (!(e2.group_mul(e2.group_mul(ga, gb), gc) == e2.group_mul(ga, e2.group_mul(gb, gc))))
            return {"S1.cocycle", "e^a e^b = (-1)^{(a,b)} e^b e^a", "fail", "group associativity"};
        long long ab = lattice.inner(a, b);
        int expected = (ab % 2 + 2) % 2 == 0 ? 1 : -1;
        if (eps.epsilon(a, b) * eps.epsilon(b, a) != expected)
            return {"S1.cocycle", "e^a e^b = (-1)^{(a,b)} e^b e^a", "fail", "commutator condition"};
    }
    return {"S1.cocycle", "e^a e^b = (-1)^{(a,b)} e^b e^a", "pass",
            std::to_string(triples.size()) + " triples"};
}

/// Root enumeration: closure under negation, exact norm 2, and agreement
/// with a brute-force box search.
inline CheckResult check_roots(const Lattice& lattice) {
    if (!lattice.is_positive_definite())
        return {"S1.roots", "Delta = { alpha : (alpha, alpha) = 2 }", "skip",
                "lattice not positive definite; roots unsupported"};
    auto roots = lattice.roots();
    for (const auto& r : roots) {
        if (lattice.norm(r) != 2)
            return {"S1.roots", "Delta = { alpha : (alpha, alpha) = 2 }", "fail", "norm != 2"};
        if (std::find(roots.begin(), roots.end(), -r) == roots.end())
            return {"S1.roots", "Delta = { alpha : (alpha, alpha) = 2 }", "fail",
                    "not closed under negation"};
    }
    // Independent box search within the coordinate bounds of the found roots.
    long long box = 2;
    for (const auto& r : roots)
        for (long long c : r.coords) box = std::max(box, c < 0 ? -c : c);
    std::vector<LatticeVector> brute;
    LatticeVector v = LatticeVector::zero(lattice.rank());
    auto scan = [&](auto&& self, int i) -> void {
        if (i == lattice.rank()) {
            if (lattice.norm(v) == 2) brute.push_back(v);
            return;
        }
        for (long long c = -box; c <= box; ++c) {
            v.coords[i] = c;
            self(self, i + 1);
        }
        v.coords[i] = 0;
    };
    scan(scan, 0);
    std::sort(brute.begin(), brute.end());
    if (brute != roots)
        return {"S1.roots", "Delta = { alpha : (alpha, alpha) = 2 }", "fail",
                "ellipsoid and box enumeration disagree"};
    return {"S1.roots", "Delta = { alpha : (alpha, alpha) = 2 }", "pass",
            std::to_string(roots.size()) + " roots"};
}

/// Frenkel-Kac facts: dimension rank + |Delta|, antisymmetry, Jacobi, and
/// Cartan-matrix recovery [h_i, e^gamma] = (a_i, gamma) e^gamma.
inline CheckResult check_frenkel_kac(const Lattice& lattice, int order) {
    const char* anchor = "weight-1 space = simple Lie algebra g with roots Delta";
    if (!lattice.all_even() || !lattice.is_positive_definite())
        return {"S1.frenkel_kac", anchor, "skip", "requires a positive definite even lattice"};
    if (!lattice.spanned_by_roots())
        return {"S1.frenkel_kac", anchor, "skip", "lattice not spanned by roots"};
    WeightOneAlgebra alg = weight_one_algebra(lattice, order);
    auto roots = lattice.roots();
    if (alg.dimension() != lattice.rank() + static_cast<int>(roots.size()))
        return {"S1.frenkel_kac", anchor, "fail", "dimension mismatch"};
    if (!alg.antisymmetry_holds()) return {"S1.frenkel_kac", anchor, "fail", "antisymmetry"};
    if (!alg.jacobi_holds()) return {"S1.frenkel_kac", anchor, "fail", "Jacobi identity"};
    for (int i = 0; i < lattice.rank(); ++i)
        for (int b = 0; b < alg.dimension(); ++b) {
            if (alg.basis[b].kind != WeightOneBasisElement::Kind::root) continue;
            LatticeVector gamma = alg.basis[b].root;
            long long expected = lattice.inner(LatticeVector::basis(lattice.rank(), i), gamma);
            for (int k = 0; k < alg.dimension(); ++k) {
                Rational want = k == b ? make_rational(expected) : Rational(0);
                if (alg.bracket[i][b][k] != want)
                    return {"S1.frenkel_kac", anchor, "fail", "Cartan matrix recovery"};
            }
        }
    return {"S1.frenkel_kac", anchor, "pass",
            "dim " + std::to_string(alg.dimension()) + ", antisymmetry, Jacobi, Cartan recovery"};
}

/// Character product formula vs direct basis enumeration, level by level;
/// the q^1 coefficient also matches the weight-one dimension.
inline CheckResult check_character(const Lattice& lattice, int levels) {
    const char* anchor = "character of F: theta-series times oscillator product";
    if (!lattice.is_positive_definite())
        return {"S4.character", anchor, "skip", "lattice not positive definite"};
    TruncatedSeries ch = character(lattice, levels);
    for (int l = 0; l <= levels; ++l)
        if (ch.coeff(l) != Rational(character_basis_count(lattice, l)))
            return {"S4.character", anchor, "fail", "level " + std::to_string(l)};
    if (lattice.all_even() && lattice.spanned_by_roots() && levels >= 1) {
        WeightOneAlgebra alg = weight_one_algebra(lattice, 4);
        if (ch.coeff(1) != Rational(alg.dimension()))
            return {"S4.character", anchor, "fail", "q^1 coefficient vs weight-one dimension"};
    }
    return {"S4.character", anchor, "pass", "levels 0.." + std::to_string(levels)};
}

/// Stratum dimension bookkeeping, exhaustively over partitions.
inline CheckResult check_strata(int nmax) {
    const char* anchor = "dim S^n_a X = 2 l(a); dim Hilb strata = n + l(a); fiber n - 1";
    for (int n = 0; n <= nmax; ++n) {
        bool ok = true;
        for_each_partition(n, [&](const Partition& alpha) {
            long long fiber = 0;
            for (const auto& [part, mult] : alpha.exponent_form())
                fiber += static_cast<long long>(mult) * (part - 1);
            if (stratum_dim_sym(alpha) != 2 * alpha.length()) ok = false;
            if (stratum_dim_hilb(alpha) - stratum_dim_sym(alpha) / 2 !=
                alpha.weight() - alpha.length())
                ok = false;
            if (alpha.weight() - alpha.length() != fiber) ok = false;
        });
        if (!ok) return {"S3.strata", anchor, "fail", "n = " + std::to_string(n)};
        if (n >= 1 && punctual_fiber_dim(n) != n - 1)
            return {"S3.strata", anchor, "fail", "fiber dimension"};
    }
    return {"S3.strata", anchor, "pass", "exhaustive, n <= " + std::to_string(nmax)};
}

/// The component census p(n) agrees between enumeration, the Euler product
/// count, and the pentagonal-number recurrence.
inline CheckResult check_census(int nmax) {
    const char* anchor = "components of the curve Lagrangian = partitions of n, pure dimension n";
    std::vector<Integer> pent(nmax + 1);
    pent[0] = 1;
    for (int n = 1; n <= nmax; ++n) {
        Integer total(0);
        for (int k = 1;; ++k) {
            long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            Integer term(0);
            if (g1 <= n) term += pent[n - g1];
            if (g2 <= n) term += pent[n - g2];
            if (k % 2 == 1)
                total += term;
            else
                total -= term;
        }
        pent[n] = total;
    }
    for (int n = 0; n <= nmax; ++n) {
        ComponentCensus census = component_census(n);
        Integer enumerated(0);
        for_each_partition(n, [&](const Partition&) { ++enumerated; });
        if (census.count != enumerated || census.count != pent[n] || census.dimension != n)
            return {"S3.prop3", anchor, "fail", "n = " + std::to_string(n)};
    }
    return {"S3.prop3", anchor, "pass", "n <= " + std::to_string(nmax) + ", pentagonal recurrence"};
}

/// Newton universal polynomials: expanding h_n(p_1..p_n) in Fock generators
/// reproduces h_element, and the two directions invert each other at random
/// rational points.
inline CheckResult check_newton(const Lattice& lattice, int nmax, SplitMix64& rng) {
    const char* anchor = "h^Z_n is a universal polynomial in the r^Z_k, f(n) = n";
    int color = -1;
    for (int i = 0; i < lattice.rank(); ++i)
        if (!lattice.is_odd_color(i)) {
            color = i;
            break;
        }
    if (color < 0) return {"S3.lemma5", anchor, "skip", "no even color"};
    auto odd = lattice.odd_palette();
    auto h_polys = newton_convert(NewtonDirection::h_from_p, nmax);
    auto p_polys = newton_convert(NewtonDirection::p_from_h, nmax);
    std::vector<long long> v(lattice.rank(), 0);
    v[color] = 1;
    auto power_sum_state = [&](int k) {
        Multipartition mono;
        mono = mono.with_component(color, Partition({k}));
        return FockState::monomial(odd, mono, Rational(1));
    };
    for (int n = 1; n <= nmax; ++n) {
        FockState lhs = substitute_generators(h_polys[n - 1], power_sum_state, odd);
        if (!(lhs == h_element(lattice, v, n)))
            return {"S3.lemma5", anchor, "fail", "h_" + std::to_string(n) + " expansion"};
    }
    // Round trip at random rational points.
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Rational> p_vals(nmax + 1);
        for (int k = 1; k <= nmax; ++k) {
            long long num = rng.uniform(-9, 9);
            long long den = rng.uniform(1, 4);
            p_vals[k] = make_rational(num, den);
        }
        auto eval = [](const GeneratorPoly& poly, const std::vector<Rational>& vals) {
            Rational total(0);
            for (const auto& [mono, c] : poly) {
                Rational term = c;
                for (int part : mono.parts()) term *= vals[part];
                total += term;
            }
            return total;
        };
        std::vector<Rational> h_vals(nmax + 1);
        for (int n = 1; n <= nmax; ++n) h_vals[n] = eval(h_polys[n - 1], p_vals);
        for (int n = 1; n <= nmax; ++n)
            if (eval(p_polys[n - 1], h_vals) != p_vals[n])
                return {"S3.lemma5", anchor, "fail", "round trip at degree " + std::to_string(n)};
    }
    return {"S3.lemma5", anchor, "pass",
            "n <= " + std::to_string(nmax) + ", Fock expansion and rational round trip"};
}

/// dim S_n equals the coefficient of x^n in prod (1+x^m)^l (1-x^m)^{-k}.
inline CheckResult check_free_generation(const Lattice& lattice, int nmax) {
    const char* anchor = "the r^{Z_i}_n freely generate S";
    auto odd = lattice.odd_palette();
    int k = 0, l = 0;
    for (int i = 0; i < lattice.rank(); ++i) (lattice.is_odd_color(i) ? l : k)++;
    TruncatedSeries prod("x", nmax);
    prod.add_term({0, 0}, Rational(1));
    for (int m = 1; m <= nmax; ++m) {
        TruncatedSeries even_factor("x", nmax); // (1 - x^m)^{-1}
        for (int j = 0; j * m <= nmax; ++j) even_factor.add_term({j * m, 0}, Rational(1));
        for (int r = 0; r < k; ++r) prod *= even_factor;
        TruncatedSeries odd_factor("x", nmax); // (1 + x^m)
        odd_factor.add_term({0, 0}, Rational(1));
        odd_factor.add_term({m, 0}, Rational(1));
        for (int r = 0; r < l; ++r) prod *= odd_factor;
    }
    for (int n = 0; n <= nmax; ++n)
        if (prod.coeff(n) != Rational(count_multipartitions(odd, n)))
            return {"S3.prop6", anchor, "fail", "degree " + std::to_string(n)};
    return {"S3.prop6", anchor, "pass",
            "monomial enumeration matches the series, n <= " + std::to_string(nmax)};
}

/// u^0 extraction: degenerates to the partition product when h20 = 0 and
/// matches the (n,n)-diagonal of the bigraded series.
inline CheckResult check_u0(int nmax) {
    const char* anchor = "dim S^{n,n}_n z^n = coefficient of u^0 in the two-variable product";
    TruncatedSeries plain = u0_series(0, 1, nmax);
    for (int n = 0; n <= nmax; ++n)
        if (plain.coeff(n) != Rational(count_partitions(n)))
            return {"S3.u0", anchor, "fail", "h20 = 0 degeneration"};
    for (auto [h20, h11] : std::vector<std::pair<long long, long long>>{{1, 0}, {1, 20}, {2, 3}}) {
        HodgeDiamond d; // only h20/h02/h11 nonzero: the diagonal subalgebra input
        d.set(2, 0, h20);
        d.set(0, 2, h20);
        d.set(1, 1, h11);
        BigradedSeries big = hilb_hodge_series(d, nmax);
        TruncatedSeries u0 = u0_series(h20, h11, nmax);
        for (int n = 0; n <= nmax; ++n)
            if (u0.coeff(n) != Rational(big.coeff(n, n, n)))
                return {"S3.u0", anchor, "fail",
                        "diagonal mismatch at n = " + std::to_string(n) + " (h20 = " +
                            std::to_string(h20) + ", h11 = " + std::to_string(h11) + ")"};
    }
    return {"S3.u0", anchor, "pass", "degeneration and diagonal cross-check, n <= " +
                                         std::to_string(nmax)};
}

/// Hodge series totals match the free-generation monomial counts; degree 1
/// reproduces the surface's own Hodge polynomial; Hodge symmetry holds.
inline CheckResult check_hodge_totals(int nmax) {
    const char* anchor = "S is a Fock space on H*(X): graded Hodge series";
    for (const auto& [name, diamond] :
         std::vector<std::pair<std::string, HodgeDiamond>>{{"P2-like", HodgeDiamond::projective_plane()},
                                                           {"K3-like", HodgeDiamond::k3()}}) {
        BigradedSeries big = hilb_hodge_series(diamond, nmax);
        if (!big.symmetric_in_ts())
            return {"S3.thm7", anchor, "fail", name + ": t <-> s symmetry"};
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q)
                if (big.coeff(1, p, q) != make_integer(diamond.h(p, q)))
                    return {"S3.thm7", anchor, "fail", name + ": Hilb^1 X != X"};
        for (int n = 0; n <= nmax; ++n)
            if (big.total(n) != fock_dim_oracle(static_cast<int>(diamond.even_colors()),
                                                static_cast<int>(diamond.odd_colors()), n))
                return {"S3.thm7", anchor, "fail",
                        name + ": total at n = " + std::to_string(n)};
    }
    return {"S3.thm7", anchor, "pass", "P2-like and K3-like, n <= " + std::to_string(nmax)};
}

/// Level-c Heisenberg relations for c = 1..cmax.
inline CheckResult check_central_charge(const Lattice& lattice, long long cmax, int max_mode) {
    const char* anchor = "[h^S_1, h^{S'}_{-1}] = c (S, S')";
    for (long long c = 1; c <= cmax; ++c)
        for (const auto& r : central_charge_check(c, lattice.gram(), max_mode))
            if (!r.passed)
                return {"S5.charge", anchor, "fail",
                        "c = " + std::to_string(c) + ": " + r.relation + " (" + r.detail + ")"};
    return {"S5.charge", anchor, "pass", "c = 1.." + std::to_string(cmax)};
}

/// Corner excess: exhaustive rank-1 check and the multipartition analogue.
inline CheckResult check_corner_lemma(int nmax, int multirank, int multiweight) {
    const char* anchor = "one more way to add a square to a partition than to remove";
    for (const auto& r : corner_excess_report(nmax, multirank, multiweight))
        if (!r.passed) return {"S5.corners", anchor, "fail", r.relation};
    return {"S5.corners", anchor, "pass",
            "n <= " + std::to_string(nmax) + ", c = " + std::to_string(multirank) +
                " up to weight " + std::to_string(multiweight)};
}

// ---------------------------------------------------------------------------
// Orchestration
// ---------------------------------------------------------------------------

inline std::vector<FockState> make_random_states(SplitMix64& rng, const std::vector<bool>& odd,
                                                 int count, int max_degree) {
    std::vector<FockState> states;
    states.push_back(FockState::vacuum(odd));
    for (int i = 1; i < count; ++i) states.push_back(random_fock_state(rng, odd, max_degree, 3));
    return states;
}

inline std::vector<std::array<FockState, 3>> make_random_triples(SplitMix64& rng,
                                                                 const std::vector<bool>& odd,
                                                                 int count, int max_degree) {
    std::vector<std::array<FockState, 3>> triples;
    for (int i = 0; i < count; ++i)
        triples.push_back({random_fock_state(rng, odd, max_degree, 2),
                           random_fock_state(rng, odd, max_degree, 2),
                           random_fock_state(rng, odd, max_degree, 2)});
    return triples;
}

/// The S1 axioms exercised by `fock check-axioms`.
inline std::vector<CheckResult> run_fock_axiom_checks(const Lattice& lattice,
                                                      const CheckOptions& opts) {
    SplitMix64 rng(opts.seed);
    PairingSpec pairing = opts.level == 1 ? PairingSpec::classical(lattice)
                                          : PairingSpec::with_level(lattice, opts.level);
    auto odd = lattice.odd_palette();
    auto states = make_random_states(rng, odd, opts.n_states, opts.state_degree);
    auto triples = make_random_triples(rng, odd, opts.n_triples, opts.triple_degree);
    std::vector<CheckResult> results;
    results.push_back(check_heisenberg(lattice, pairing, std::min(opts.order, 6), states));
    results.push_back(check_hopf_adjointness(lattice, pairing, triples));
    results.push_back(check_grouplike(lattice, std::min(opts.order, 8)));
    results.push_back(check_primitive_dimension(lattice, std::min(opts.order, 4)));
    results.push_back(check_q_pairing(lattice, 3, 10));
    results.push_back(check_cocycle(lattice, rng, 100));
    return results;
}

/// Everything `check-all` runs, in canonical report order.
inline std::vector<CheckResult> run_all_checks(const Lattice& lattice, const CheckOptions& opts) {
    std::vector<CheckResult> results = run_fock_axiom_checks(lattice, opts);
    SplitMix64 rng(opts.seed + 1);
    results.push_back(check_roots(lattice));
    results.push_back(check_frenkel_kac(lattice, opts.order));
    results.push_back(check_character(lattice, std::min(opts.order, 6)));
    results.push_back(check_strata(12));
    results.push_back(check_census(20));
    results.push_back(check_newton(lattice, std::min(opts.order, 6), rng));
    results.push_back(check_free_generation(lattice, std::min(opts.order, 8)));
    results.push_back(check_hh_series(4, std::min(opts.order, 8)));
    results.push_back(check_hodge_totals(std::min(opts.order, 8)));
    results.push_back(check_u0(std::min(opts.order, 6)));
    results.push_back(check_central_charge(lattice, 3, std::min(opts.order, 4)));
    results.push_back(check_corner_lemma(25, 2, 10));
    return results;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (r.failed()) return false;
    return true;
}

inline Json report_to_json(const std::string& command, const Json& params,
                           const std::vector<CheckResult>& results) {
    Json checks = Json::array();
    for (const auto& r : results)
        checks.push_back(Json{{"key", r.key}, {"anchor", r.anchor}, {"status", r.status},
                              {"detail", r.detail}});
    return Json{{"command", command},
                {"params", params},
                {"checks", checks},
                {"all_pass", all_passed(results)}};
}

} // namespace fockforge
