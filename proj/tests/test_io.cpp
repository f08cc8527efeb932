#include <catch2/catch_amalgamated.hpp>

#include "fockforge/checks.hpp"
#include "fockforge/io.hpp"

using namespace fockforge;

TEST_CASE("lattice json round trip") {
    Lattice mixed({{2, 0}, {0, 1}}, {Parity::even, Parity::odd});
    Json j = to_json(mixed);
    Lattice back = lattice_from_json(j);
    REQUIRE(back.gram() == mixed.gram());
    REQUIRE(back.parities() == mixed.parities());

    SECTION("parity defaults to even") {
        Lattice a2 = lattice_from_json(Json::parse(R"({"gram": [[2,-1],[-1,2]]})"));
        REQUIRE(a2.rank() == 2);
        REQUIRE(a2.all_even());
    }

    SECTION("optional hyperbolic summand") {
        Lattice ext = lattice_from_json(
            Json::parse(R"({"gram": [[2]], "h0_h4_summand": true})"));
        REQUIRE(ext.rank() == 3);
        REQUIRE(ext.gram()[1][2] == 1);
    }

    SECTION("malformed inputs raise usage errors") {
        REQUIRE_THROWS_AS(lattice_from_json(Json::parse("[1,2,3]")), UsageError);
        REQUIRE_THROWS_AS(lattice_from_json(Json::parse(R"({"gram": [[2]], "rank": 5})")),
                          UsageError);
        REQUIRE_THROWS_AS(
            lattice_from_json(Json::parse(R"({"gram": [[2]], "parity": ["odd", "even"]})")),
            UsageError);
    }
}

TEST_CASE("fock state json round trip") {
    Lattice a2({{2, -1}, {-1, 2}});
    SplitMix64 rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        FockState x = random_fock_state(rng, a2.odd_palette(), 5, 3);
        Json j = to_json(x, a2);
        REQUIRE(fock_state_from_json(j, a2) == x);
    }

    SECTION("palette disagreement is rejected") {
        FockState x = FockState::vacuum(a2.odd_palette());
        Json j = to_json(x, a2);
        Lattice other({{2}});
        REQUIRE_THROWS_AS(fock_state_from_json(j, other), UsageError);
    }
}

TEST_CASE("series json shape") {
    TruncatedSeries s = binomial_power(2, 3);
    Json j = to_json(s);
    REQUIRE(j["variables"] == Json::array({"t", "s"}));
    REQUIRE(j["order"] == 3);
    // terms are triples [e_t, e_s, coefficient]
    REQUIRE(j["terms"][0] == Json::array({0, 0, "1"}));
    REQUIRE(j["terms"][1] == Json::array({1, 1, "2"}));

    TruncatedSeries z("z", 2);
    z.add_term({1, 0}, make_rational(1, 2));
    Json jz = to_json(z);
    REQUIRE(jz["terms"][0] == Json::array({1, "1/2"}));
}

TEST_CASE("hodge diamond json") {
    HodgeDiamond k3 = hodge_from_json(
        Json::parse(R"({"h": {"0,0":1, "2,0":1, "0,2":1, "1,1":20, "2,2":1}})"));
    REQUIRE(k3.h(1, 1) == 20);
    REQUIRE(k3.h(2, 0) == 1);
    REQUIRE_THROWS_AS(hodge_from_json(Json::parse(R"({"h": {"0,0":1, "1,0":1}})")), UsageError);

    Json j = to_json(HodgeDiamond::projective_plane());
    REQUIRE(hodge_from_json(j).h(1, 1) == 1);
}

TEST_CASE("laurent json") {
    Json j = to_json(q_integer(3));
    REQUIRE(j["terms"] == Json::array({Json::array({-2, "1"}), Json::array({0, "1"}),
                                       Json::array({2, "1"})}));
}

TEST_CASE("report json is deterministic") {
    Lattice a1({{2}});
    CheckOptions opts;
    opts.order = 3;
    opts.n_states = 4;
    opts.n_triples = 4;
    auto r1 = run_fock_axiom_checks(a1, opts);
    auto r2 = run_fock_axiom_checks(a1, opts);
    Json params{{"order", opts.order}};
    REQUIRE(report_to_json("fock check-axioms", params, r1).dump() ==
            report_to_json("fock check-axioms", params, r2).dump());
    for (const auto& r : r1) REQUIRE(r.status == "pass");
}
