#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fockforge/rational.hpp"

namespace fockforge {

/// Young-diagram cell, (row, column), zero-based, English convention.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

/// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw UsageError("partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw UsageError("partition: parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long long weight() const {
        long long w = 0;
        for (int p : parts_) w += p;
        return w;
    }
    bool empty() const { return parts_.empty(); }

    /// Multiplicity map i -> alpha_i for alpha = (1^{a_1} 2^{a_2} ...).
    std::map<int, int> exponent_form() const {
        std::map<int, int> mult;
        for (int p : parts_) ++mult[p];
        return mult;
    }
    static Partition from_exponent_form(const std::map<int, int>& mult) {
        std::vector<int> parts;
        for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
            if (it->second < 0) throw UsageError("partition: negative multiplicity");
            parts.insert(parts.end(), it->second, it->first);
        }
        return Partition(std::move(parts));
    }

    int multiplicity(int part) const {
        int m = 0;
        for (int p : parts_)
            if (p == part) ++m;
        return m;
    }

    bool has_repeated_part() const {
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i] == parts_[i - 1]) return true;
        return false;
    }

    /// Cells whose addition still yields a partition; always one more of
    /// these than removable cells.
    std::vector<Cell> addable_cells() const {
        std::vector<Cell> cells;
        int len = length();
        for (int r = 0; r < len; ++r)
            if (r == 0 || parts_[r] < parts_[r - 1]) cells.push_back({r, parts_[r]});
        cells.push_back({len, 0});
        return cells;
    }

    std::vector<Cell> removable_cells() const {
        std::vector<Cell> cells;
        int len = length();
        for (int r = 0; r < len; ++r)
            if (r == len - 1 || parts_[r] > parts_[r + 1]) cells.push_back({r, parts_[r] - 1});
        return cells;
    }

    Partition with_part_added(int part) const {
        std::vector<int> parts = parts_;
        auto it = std::upper_bound(parts.begin(), parts.end(), part, std::greater<int>());
        parts.insert(it, part);
        Partition out;
        out.parts_ = std::move(parts);
        return out;
    }

    /// Removes one occurrence of the given part; UsageError if absent.
    Partition with_part_removed(int part) const {
        std::vector<int> parts = parts_;
        auto it = std::find(parts.begin(), parts.end(), part);
        if (it == parts.end()) throw UsageError("partition: part not present");
        parts.erase(it);
        Partition out;
        out.parts_ = std::move(parts);
        return out;
    }

    std::string to_text() const {
        std::string out = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(parts_[i]);
        }
        return out + ")";
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Visits every partition of n exactly once, first part descending
/// (reverse-lexicographic order): (n), (n-1,1), ..., (1^n).
template <typename F>
void for_each_partition(int n, F&& visit) {
    if (n < 0) throw UsageError("partitions: negative weight");
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            Partition p(current);
            visit(static_cast<const Partition&>(p));
            return;
        }
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    rec(rec, n, n);
}

/// Partitions of n into distinct parts, same canonical order.
template <typename F>
void for_each_strict_partition(int n, F&& visit) {
    if (n < 0) throw UsageError("partitions: negative weight");
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            Partition p(current);
            visit(static_cast<const Partition&>(p));
            return;
        }
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part - 1);
            current.pop_back();
        }
    };
    rec(rec, n, n);
}

inline std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

/// p(n) by the Euler product convolution; cheap for desk-scale n.
inline Integer count_partitions(int n) {
    if (n < 0) throw UsageError("partitions: negative weight");
    std::vector<Integer> dp(n + 1, Integer(0));
    dp[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int j = k; j <= n; ++j) dp[j] += dp[j - k];
    return dp[n];
}

/// Complex dimension 2*length of the symmetric-power stratum indexed by alpha.
inline long long stratum_dim_sym(const Partition& alpha) { return 2LL * alpha.length(); }

/// Dimension weight + length of the corresponding Hilbert-scheme stratum.
inline long long stratum_dim_hilb(const Partition& alpha) {
    return alpha.weight() + alpha.length();
}

/// Dimension n-1 of the punctual fiber over an n-fold point; n >= 1.
inline long long punctual_fiber_dim(long long n) {
    if (n < 1) throw UsageError("punctual_fiber_dim: n must be >= 1");
    return n - 1;
}

struct ComponentCensus {
    Integer count;       // one irreducible component per partition of n
    long long dimension; // all of pure dimension n
};

inline ComponentCensus component_census(int n) { return {count_partitions(n), n}; }

/// Tuple of partitions indexed by color; empty components are not stored.
class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(std::map<int, Partition> components)
        : components_(std::move(components)) {
        for (auto it = components_.begin(); it != components_.end();) {
            if (it->first < 0) throw UsageError("multipartition: negative color");
            if (it->second.empty())
                it = components_.erase(it);
            else
                ++it;
        }
    }

    const std::map<int, Partition>& components() const { return components_; }
    bool empty() const { return components_.empty(); }

    long long total_weight() const {
        long long w = 0;
        for (const auto& [color, p] : components_) w += p.weight();
        return w;
    }

    const Partition& component(int color) const {
        static const Partition kEmpty;
        auto it = components_.find(color);
        return it == components_.end() ? kEmpty : it->second;
    }

    Multipartition with_component(int color, Partition p) const {
        Multipartition out = *this;
        if (p.empty())
            out.components_.erase(color);
        else
            out.components_[color] = std::move(p);
        return out;
    }

    std::string to_text() const {
        if (components_.empty()) return "{}";
        std::string out = "{";
        bool first = true;
        for (const auto& [color, p] : components_) {
            if (!first) out += ", ";
            first = false;
            out += std::to_string(color) + ": " + p.to_text();
        }
        return out + "}";
    }

    auto operator<=>(const Multipartition&) const = default;

private:
    std::map<int, Partition> components_;
};

/// Visits every multipartition of the given total weight over the palette;
/// odd colors carry strict partitions (exterior generators square to zero).
template <typename F>
void for_each_multipartition(const std::vector<bool>& odd, int weight, F&& visit) {
    if (weight < 0) throw UsageError("multipartitions: negative weight");
    int ncolors = static_cast<int>(odd.size());
    std::map<int, Partition> current;
    auto rec = [&](auto&& self, int color, int remaining) -> void {
        if (color == ncolors) {
            if (remaining == 0) {
                Multipartition m(current);
                visit(static_cast<const Multipartition&>(m));
            }
            return;
        }
        for (int w = 0; w <= remaining; ++w) {
            auto use = [&](const Partition& p) {
                if (!p.empty()) current[color] = p;
                self(self, color + 1, remaining - w);
                current.erase(color);
            };
            if (odd[color])
                for_each_strict_partition(w, use);
            else
                for_each_partition(w, use);
        }
    };
    rec(rec, 0, weight);
}

/// Direct monomial count of the weight-n graded piece over the palette.
inline Integer count_multipartitions(const std::vector<bool>& odd, int weight) {
    Integer count(0);
    for_each_multipartition(odd, weight, [&](const Multipartition&) { ++count; });
    return count;
}

} // namespace fockforge
