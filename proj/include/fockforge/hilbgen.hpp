#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fockforge/fock.hpp"
#include "fockforge/lattice.hpp"
#include "fockforge/partitions.hpp"
#include "fockforge/series.hpp"

namespace fockforge {

/// Hodge numbers h^{p,q} of a surface, 0 <= p, q <= 2.
class HodgeDiamond {
public:
    HodgeDiamond() : h_{} {}

    static HodgeDiamond from_entries(const std::map<std::pair<int, int>, long long>& entries) {
        HodgeDiamond d;
        for (const auto& [pq, v] : entries) d.set(pq.first, pq.second, v);
        d.validate();
        return d;
    }

    long long h(int p, int q) const {
        if (p < 0 || p > 2 || q < 0 || q > 2) throw UsageError("hodge diamond: index out of range");
        return h_[p][q];
    }
    void set(int p, int q, long long v) {
        if (p < 0 || p > 2 || q < 0 || q > 2) throw UsageError("hodge diamond: index out of range");
        if (v < 0) throw UsageError("hodge diamond: negative Hodge number");
        h_[p][q] = v;
    }
    void validate() const {
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q)
                if (h_[p][q] != h_[q][p]) throw UsageError("hodge diamond: h(p,q) != h(q,p)");
        if (h_[0][0] < 1) throw UsageError("hodge diamond: h(0,0) must be >= 1");
    }

    long long even_colors() const {
        long long k = 0;
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q)
                if ((p + q) % 2 == 0) k += h_[p][q];
        return k;
    }
    long long odd_colors() const {
        long long l = 0;
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q)
                if ((p + q) % 2 == 1) l += h_[p][q];
        return l;
    }

    /// A P^2-like diamond: h^{00} = h^{11} = h^{22} = 1.
    static HodgeDiamond projective_plane() {
        HodgeDiamond d;
        d.set(0, 0, 1);
        d.set(1, 1, 1);
        d.set(2, 2, 1);
        return d;
    }
    /// A K3-like diamond: 1, 0, (1, 20, 1), 0, 1.
    static HodgeDiamond k3() {
        HodgeDiamond d;
        d.set(0, 0, 1);
        d.set(2, 0, 1);
        d.set(0, 2, 1);
        d.set(1, 1, 20);
        d.set(2, 2, 1);
        return d;
    }

private:
    long long h_[3][3];
};

/// Hodge polynomials in (t, s) of the graded pieces, indexed by the z-degree
/// n = 0..order.
class BigradedSeries {
public:
    using Bidegree = std::pair<int, int>;

    explicit BigradedSeries(int order) : order_(order), by_n_(order + 1) {
        if (order < 0) throw UsageError("bigraded series: negative order");
    }

    int order() const { return order_; }
    const std::map<Bidegree, Integer>& at(int n) const {
        if (n < 0 || n > order_) throw UsageError("bigraded series: degree out of range");
        return by_n_[n];
    }

    Integer coeff(int n, int a, int b) const {
        const auto& m = at(n);
        auto it = m.find({a, b});
        return it == m.end() ? Integer(0) : it->second;
    }

    void add(int n, int a, int b, const Integer& c) {
        if (n < 0 || n > order_) return;
        if (is_zero(c)) return;
        auto& m = by_n_[n];
        auto [it, inserted] = m.try_emplace({a, b}, c);
        if (!inserted) {
            it->second += c;
            if (is_zero(it->second)) m.erase(it);
        }
    }

    /// Value at t = s = 1: the total Betti sum of the degree-n piece.
    Integer total(int n) const {
        Integer s(0);
        for (const auto& [bd, c] : at(n)) s += c;
        return s;
    }

    bool symmetric_in_ts() const {
        for (int n = 0; n <= order_; ++n)
            for (const auto& [bd, c] : by_n_[n])
                if (coeff(n, bd.second, bd.first) != c) return false;
        return true;
    }

private:
    int order_;
    std::vector<std::map<Bidegree, Integer>> by_n_;
};

/// Hodge series of the graded Fock pieces built from a surface diamond: the
/// product over m >= 1 and (p, q) of (1 - t^{m+p-1} s^{m+q-1} z^m)^{-h^{p,q}}
/// for p + q even and (1 + t^{m+p-1} s^{m+q-1} z^m)^{h^{p,q}} for p + q odd,
/// expanded through z^order.
inline BigradedSeries hilb_hodge_series(const HodgeDiamond& diamond, int order) {
    BigradedSeries acc(order);
    acc.add(0, 0, 0, Integer(1));
    for (int m = 1; m <= order; ++m) {
        for (int p = 0; p < 3; ++p) {
            for (int q = 0; q < 3; ++q) {
                long long h = diamond.h(p, q);
                if (h == 0) continue;
                int a = m + p - 1, b = m + q - 1;
                bool odd = (p + q) % 2 == 1;
                // Expansion of the single factor in powers j of t^a s^b z^m.
                std::vector<Integer> factor;
                for (int j = 0; j * m <= order; ++j)
                    factor.push_back(odd ? binomial(static_cast<unsigned long>(h), j)
                                         : binomial(static_cast<unsigned long>(j + h - 1), j));
                BigradedSeries next(order);
                for (int n = 0; n <= order; ++n)
                    for (const auto& [bd, c] : acc.at(n))
                        for (int j = 0; j < static_cast<int>(factor.size()); ++j) {
                            if (n + j * m > order) break;
                            if (is_zero(factor[j])) continue;
                            next.add(n + j * m, bd.first + j * a, bd.second + j * b,
                                     c * factor[j]);
                        }
                acc = std::move(next);
            }
        }
    }
    return acc;
}

/// Coefficient of u^0 in prod_{n>=1} ((1-z^n u)(1-z^n u^{-1}))^{-h20}
/// (1-z^n)^{-h11}, i.e. the generating series of the diagonal (n,n)-bidegree
/// dimensions, as a truncated series in z.
inline TruncatedSeries u0_series(long long h20, long long h11, int order) {
    if (h20 < 0 || h11 < 0) throw UsageError("u0_series: negative exponent");
    // (z-degree, u-degree) -> coefficient; u-degrees stay within [-order, order].
    std::map<std::pair<int, int>, Integer> acc{{{0, 0}, Integer(1)}};
    auto mul_factor = [&](int zdeg, int udeg, long long repeat) {
        // multiply by (1 - z^zdeg u^udeg)^{-repeat}
        if (repeat == 0) return;
        std::map<std::pair<int, int>, Integer> next;
        for (const auto& [key, c] : acc)
            for (int j = 0; key.first + j * zdeg <= order; ++j) {
                Integer w = c * binomial(static_cast<unsigned long>(j + repeat - 1), j);
                auto k = std::make_pair(key.first + j * zdeg, key.second + j * udeg);
                auto [it, inserted] = next.try_emplace(k, w);
                if (!inserted) it->second += w;
            }
        acc = std::move(next);
    };
    for (int n = 1; n <= order; ++n) {
        mul_factor(n, 1, h20);
        mul_factor(n, -1, h20);
        mul_factor(n, 0, h11);
    }
    TruncatedSeries out("z", order);
    for (const auto& [key, c] : acc)
        if (key.second == 0) out.add_term({key.first, 0}, Rational(c));
    return out;
}

/// Monomial count of the degree-n piece of a Fock space on k even and l odd
/// generators per mode, by direct enumeration.
inline Integer fock_dim_oracle(int colors_even, int colors_odd, int n) {
    if (colors_even < 0 || colors_odd < 0) throw UsageError("fock_dim_oracle: negative color count");
    std::vector<bool> odd(colors_even + colors_odd, false);
    for (int i = colors_even; i < colors_even + colors_odd; ++i) odd[i] = true;
    return count_multipartitions(odd, n);
}

/// Pass/fail record of one verified relation.
struct RelationResult {
    std::string relation;
    bool passed = false;
    std::string detail;
};

/// Verifies the level-c Heisenberg relations on every monomial state of
/// weight <= state_weight: [h^S_1, h^{S'}_{-1}] = c (S,S') and
/// [v^i_n, v^j_{-n}] = c n (v^i, v^j).
inline std::vector<RelationResult> central_charge_check(long long c,
                                                        const std::vector<std::vector<long long>>& gram,
                                                        int max_mode, int state_weight = 3) {
    if (c < 1) throw UsageError("central_charge_check: level must be >= 1");
    Lattice lattice(gram);
    PairingSpec pairing = PairingSpec::with_level(lattice, c);
    auto odd = lattice.odd_palette();
    std::vector<FockState> states;
    for (int w = 0; w <= state_weight; ++w)
        for_each_multipartition(odd, w, [&](const Multipartition& m) {
            states.push_back(FockState::monomial(odd, m, Rational(1)));
        });

    std::vector<RelationResult> results;
    // Mode-1 commutators of curve-class combinations, including mixed sums.
    std::vector<std::vector<long long>> combos;
    for (int i = 0; i < lattice.rank(); ++i) {
        std::vector<long long> e(lattice.rank(), 0);
        e[i] = 1;
        combos.push_back(e);
    }
    if (lattice.rank() >= 2) {
        std::vector<long long> all_ones(lattice.rank(), 1);
        combos.push_back(all_ones);
    }
    {
        bool ok = true;
        std::string detail;
        for (const auto& u : combos)
            for (const auto& w : combos) {
                long long uw = 0;
                for (int i = 0; i < lattice.rank(); ++i)
                    for (int j = 0; j < lattice.rank(); ++j) uw += u[i] * gram[i][j] * w[j];
                for (const auto& x : states) {
                    FockState lhs = apply_combination(u, 1, apply_combination(w, -1, x, pairing), pairing) -
                                    apply_combination(w, -1, apply_combination(u, 1, x, pairing), pairing);
                    FockState rhs = make_rational(c * uw) * x;
                    if (!(lhs == rhs)) {
                        ok = false;
                        detail = "failed on a state of weight " + std::to_string(x.max_degree());
                    }
                }
            }
        results.push_back({"[h^S_1, h^S'_-1] = c (S, S')", ok, detail});
    }
    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i < lattice.rank() && ok; ++i)
            for (int j = 0; j < lattice.rank() && ok; ++j)
                for (int n = 1; n <= max_mode && ok; ++n)
                    for (const auto& x : states) {
                        auto check = commutator_check(i, j, n, -n, x, pairing);
                        FockState expected = make_rational(c * n * gram[i][j]) * x;
                        if (!(check.actual == expected) || !check.matches()) {
                            ok = false;
                            detail = "failed at mode " + std::to_string(n);
                            break;
                        }
                    }
        results.push_back({"[v^i_n, v^j_-n] = c n (v^i, v^j)", ok, detail});
    }
    return results;
}

/// Exhaustive corner-excess verification: every partition has exactly one
/// more addable than removable cell, and c-tuples of partitions have total
/// excess c.
inline std::vector<RelationResult> corner_excess_report(int n_max, int multirank = 2,
                                                        int multiweight_max = 10) {
    std::vector<RelationResult> results;
    {
        bool ok = true;
        long long checked = 0;
        for (int n = 0; n <= n_max && ok; ++n)
            for_each_partition(n, [&](const Partition& p) {
                ++checked;
                if (p.addable_cells().size() != p.removable_cells().size() + 1) ok = false;
            });
        results.push_back({"|addable| - |removable| = 1", ok,
                           std::to_string(checked) + " partitions, n <= " + std::to_string(n_max)});
    }
    if (multirank >= 1) {
        bool ok = true;
        long long checked = 0;
        std::vector<bool> odd(multirank, false);
        for (int w = 0; w <= multiweight_max && ok; ++w)
            for_each_multipartition(odd, w, [&](const Multipartition& m) {
                ++checked;
                long long excess = 0;
                for (int color = 0; color < multirank; ++color) {
                    const Partition& p = m.component(color);
                    excess += static_cast<long long>(p.addable_cells().size()) -
                              static_cast<long long>(p.removable_cells().size());
                }
                if (excess != multirank) ok = false;
            });
        results.push_back({"multipartition corner excess = c", ok,
                           std::to_string(checked) + " tuples, c = " + std::to_string(multirank) +
                               ", weight <= " + std::to_string(multiweight_max)});
    }
    return results;
}

} // namespace fockforge
