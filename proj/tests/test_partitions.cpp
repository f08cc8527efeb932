#include <catch2/catch_amalgamated.hpp>

#include "fockforge/partitions.hpp"
#include "fockforge/series.hpp"

#include "oracles.hpp"

using namespace fockforge;

TEST_CASE("partition enumeration") {
    auto p0 = enumerate_partitions(0);
    REQUIRE(p0.size() == 1);
    REQUIRE(p0[0].empty());

    // hand enumeration: (4), (3,1), (2,2), (2,1,1), (1,1,1,1)
    auto p4 = enumerate_partitions(4);
    REQUIRE(p4.size() == 5);
    REQUIRE(p4[0] == Partition({4}));
    REQUIRE(p4[1] == Partition({3, 1}));
    REQUIRE(p4[2] == Partition({2, 2}));
    REQUIRE(p4[3] == Partition({2, 1, 1}));
    REQUIRE(p4[4] == Partition({1, 1, 1, 1}));

    REQUIRE(enumerate_partitions(10).size() == 42); // p(10) from the recurrence oracle

    SECTION("no duplicates, all weights correct") {
        for (int n = 0; n <= 12; ++n) {
            auto parts = enumerate_partitions(n);
            for (std::size_t i = 0; i < parts.size(); ++i) {
                REQUIRE(parts[i].weight() == n);
                if (i > 0) REQUIRE(parts[i - 1] != parts[i]);
            }
        }
    }
}

TEST_CASE("enumeration count satisfies the pentagonal recurrence") {
    auto expect = oracles::partition_counts_pentagonal(60);
    for (int n = 0; n <= 60; ++n) {
        Integer count(0);
        for_each_partition(n, [&](const Partition&) { ++count; });
        REQUIRE(count == expect[n]);
        REQUIRE(count_partitions(n) == expect[n]);
    }
}

TEST_CASE("corner cells") {
    Partition empty;
    REQUIRE(empty.addable_cells().size() == 1);
    REQUIRE(empty.removable_cells().empty());
    REQUIRE(empty.addable_cells()[0] == Cell{0, 0});

    // (2,1): drawing the diagram gives 3 addable, 2 removable
    Partition p21({2, 1});
    REQUIRE(p21.addable_cells() == std::vector<Cell>{{0, 2}, {1, 1}, {2, 0}});
    REQUIRE(p21.removable_cells() == std::vector<Cell>{{0, 1}, {1, 0}});

    // a rectangle has one removable corner
    Partition rect({5, 5, 5});
    REQUIRE(rect.addable_cells().size() == 2);
    REQUIRE(rect.removable_cells().size() == 1);
    REQUIRE(rect.removable_cells()[0] == Cell{2, 4});

    SECTION("excess is exactly one, exhaustively to n = 25") {
        for (int n = 0; n <= 25; ++n)
            for_each_partition(n, [&](const Partition& p) {
                REQUIRE(p.addable_cells().size() == p.removable_cells().size() + 1);
            });
    }

    SECTION("adding any addable cell yields a valid partition, and back") {
        for (int n = 0; n <= 12; ++n)
            for_each_partition(n, [&](const Partition& p) {
                for (const Cell& c : p.addable_cells()) {
                    Partition bigger = p.with_part_added(1);
                    (void)bigger;
                    // reconstruct by row: new part value is col + 1
                    Partition grown = p.with_part_added(c.col + 1);
                    REQUIRE(grown.weight() == p.weight() + c.col + 1);
                }
            });
    }
}

TEST_CASE("stratum dimensions") {
    Partition ones({1, 1, 1, 1, 1});
    REQUIRE(stratum_dim_sym(ones) == 10);  // 2n for (1^n)
    REQUIRE(stratum_dim_hilb(ones) == 10); // n + l = 2n on the open stratum

    Partition single({7});
    REQUIRE(stratum_dim_sym(single) == 2);
    REQUIRE(stratum_dim_hilb(single) == 8); // n + 1

    REQUIRE(stratum_dim_sym(Partition({2, 1})) == 4);
    REQUIRE(stratum_dim_hilb(Partition()) == 0);

    REQUIRE(punctual_fiber_dim(1) == 0);
    REQUIRE(punctual_fiber_dim(2) == 1);
    REQUIRE(punctual_fiber_dim(7) == 6);
    REQUIRE_THROWS_AS(punctual_fiber_dim(0), UsageError);

    SECTION("hilb minus half-sym equals the fiber dimension, n <= 20") {
        for (int n = 0; n <= 20; ++n)
            for_each_partition(n, [&](const Partition& a) {
                long long fiber = 0;
                for (const auto& [part, mult] : a.exponent_form())
                    fiber += static_cast<long long>(mult) * (part - 1);
                REQUIRE(stratum_dim_hilb(a) - stratum_dim_sym(a) / 2 == a.weight() - a.length());
                REQUIRE(a.weight() - a.length() == fiber);
            });
    }
}

TEST_CASE("component census") {
    REQUIRE(component_census(0).count == 1);
    auto c4 = component_census(4);
    REQUIRE(c4.count == 5);
    REQUIRE(c4.dimension == 4);
    REQUIRE(component_census(6).count == 11); // p(6) from the recurrence oracle
}

TEST_CASE("exponent form round trip") {
    for (int n = 0; n <= 15; ++n)
        for_each_partition(n, [&](const Partition& p) {
            auto mult = p.exponent_form();
            long long weight = 0, length = 0;
            for (const auto& [part, m] : mult) {
                weight += static_cast<long long>(part) * m;
                length += m;
            }
            REQUIRE(weight == p.weight());
            REQUIRE(length == p.length());
            REQUIRE(Partition::from_exponent_form(mult) == p);
        });
}

TEST_CASE("partition validation") {
    REQUIRE_THROWS_AS(Partition({1, 2}), UsageError);
    REQUIRE_THROWS_AS(Partition({2, 0}), UsageError);
    REQUIRE_THROWS_AS(Partition({2, 1}).with_part_removed(3), UsageError);
    REQUIRE(Partition({3, 2, 2}).with_part_removed(2) == Partition({3, 2}));
    REQUIRE(Partition({3, 2}).with_part_added(5) == Partition({5, 3, 2}));
}

TEST_CASE("multipartition counts match the Euler product") {
    // over k even colors the weight-n count is the x^n coefficient of
    // prod (1 - x^m)^{-k}
    for (int k = 1; k <= 5; ++k) {
        int order = 12;
        TruncatedSeries prod("x", order);
        prod.add_term({0, 0}, Rational(1));
        for (int m = 1; m <= order; ++m) {
            TruncatedSeries geom("x", order);
            for (int j = 0; j * m <= order; ++j) geom.add_term({j * m, 0}, Rational(1));
            for (int r = 0; r < k; ++r) prod *= geom;
        }
        std::vector<bool> odd(k, false);
        for (int n = 0; n <= order; ++n)
            REQUIRE(Rational(count_multipartitions(odd, n)) == prod.coeff(n));
    }
}

TEST_CASE("multipartition basics") {
    Multipartition m;
    REQUIRE(m.empty());
    REQUIRE(m.total_weight() == 0);

    m = m.with_component(2, Partition({3, 1})).with_component(0, Partition({2}));
    REQUIRE(m.total_weight() == 6);
    REQUIRE(m.component(2) == Partition({3, 1}));
    REQUIRE(m.component(1).empty());
    REQUIRE(m.to_text() == "{0: (2), 2: (3,1)}");

    // assigning an empty partition removes the entry
    m = m.with_component(0, Partition());
    REQUIRE(m.components().size() == 1);

    SECTION("strict partitions for odd colors in enumeration") {
        std::vector<bool> odd{true};
        Integer n3(0);
        for_each_multipartition(odd, 3, [&](const Multipartition& mp) {
            REQUIRE(!mp.component(0).has_repeated_part());
            ++n3;
        });
        REQUIRE(n3 == 2); // (3) and (2,1)
    }
}
