// Test-side oracles, kept independent of the library's computation paths.
#pragma once

#include <vector>

#include "fockforge/rational.hpp"

namespace oracles {

using fockforge::Integer;

/// p(0..nmax) by Euler's pentagonal-number recurrence.
inline std::vector<Integer> partition_counts_pentagonal(int nmax) {
    std::vector<Integer> p(nmax + 1);
    p[0] = 1;
    for (int n = 1; n <= nmax; ++n) {
        Integer total(0);
        for (int k = 1;; ++k) {
            long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            Integer term(0);
            if (g1 <= n) term += p[n - g1];
            if (g2 <= n) term += p[n - g2];
            if (k % 2 == 1)
                total += term;
            else
                total -= term;
        }
        p[n] = total;
    }
    return p;
}

/// Complete homogeneous symmetric polynomial h_k(x_1..x_m) by direct
/// monomial enumeration; the evaluation oracle for Newton's identities.
inline fockforge::Rational complete_homogeneous(int k, const std::vector<fockforge::Rational>& x) {
    using fockforge::Rational;
    // sum over weakly increasing index tuples of length k
    Rational total(0);
    std::vector<int> idx;
    auto rec = [&](auto&& self, int remaining, int lo) -> void {
        if (remaining == 0) {
            Rational term(1);
            for (int i : idx) term *= x[i];
            total += term;
            return;
        }
        for (int i = lo; i < static_cast<int>(x.size()); ++i) {
            idx.push_back(i);
            self(self, remaining - 1, i);
            idx.pop_back();
        }
    };
    rec(rec, k, 0);
    return total;
}

inline fockforge::Rational power_sum(int k, const std::vector<fockforge::Rational>& x) {
    fockforge::Rational total(0);
    for (const auto& v : x) total += fockforge::rational_pow(v, k);
    return total;
}

} // namespace oracles
