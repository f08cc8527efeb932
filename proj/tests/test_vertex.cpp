#include <catch2/catch_amalgamated.hpp>

#include "fockforge/checks.hpp"
#include "fockforge/vertex.hpp"

using namespace fockforge;

namespace {
const Lattice a1({{2}});
const Lattice a2({{2, -1}, {-1, 2}});

FockState fock_mono(const Lattice& L, int color, const Partition& p) {
    Multipartition m;
    m = m.with_component(color, p);
    return FockState::monomial(L.odd_palette(), m, Rational(1));
}
} // namespace

TEST_CASE("degree operator eigenvalues") {
    LatticeVector zero = LatticeVector::zero(1);
    LatticeVector alpha = LatticeVector::basis(1, 0);

    REQUIRE(l0_eigenvalue(a1, zero, 0) == Rational(0));
    REQUIRE(l0_eigenvalue(a1, alpha, 0) == Rational(1)); // (alpha, alpha)/2
    REQUIRE(l0_eigenvalue(a1, zero, 1) == Rational(1));

    REQUIRE(ch2_of(a1, zero, 0) == Rational(0));
    REQUIRE(ch2_of(a1, zero, 3) == Rational(-3));
    REQUIRE(ch2_of(a1, alpha, 1) == Rational(0)); // 1/2 . 2 - 1

    SECTION("the two gradings are linked by (lambda, lambda)") {
        for (long long c = -3; c <= 3; ++c)
            for (long n = 0; n <= 5; ++n) {
                LatticeVector v = LatticeVector(std::vector<long long>{c});
                REQUIRE(l0_eigenvalue(a1, v, n) + ch2_of(a1, v, n) ==
                        make_rational(a1.inner(v, v)));
                REQUIRE(l0_eigenvalue(a1, v, n) - Rational(n) -
                            make_rational(a1.inner(v, v), 2) ==
                        Rational(0));
                REQUIRE(ch2_of(a1, v, n) + Rational(n) - make_rational(a1.inner(v, v), 2) ==
                        Rational(0));
            }
    }
}

TEST_CASE("vertex operator modes") {
    LatticeVector alpha = LatticeVector::basis(1, 0);
    ChargedState vac = ChargedState::vacuum(a1);

    // the annihilation half acts trivially on the vacuum: mode -1 produces
    // exactly 1 (x) e^alpha with coefficient +1
    ChargedState lifted = vertex_mode_apply(a1, alpha, -1, vac, 6);
    REQUIRE(lifted.sectors().size() == 1);
    REQUIRE(lifted.sector(alpha).coeff(Multipartition()) == Rational(1));

    // zero mode of Gamma_alpha on 1 (x) e^{-alpha}: proportional to
    // alpha_{-1} . 1 (x) e^0 with the cocycle sign eps(alpha, -alpha) = +1
    ChargedState lowered =
        vertex_mode_apply(a1, alpha, 0, ChargedState::pure(-alpha, FockState::vacuum(a1.odd_palette())), 6);
    Cocycle eps(a1);
    int sign = eps.epsilon(alpha, -alpha);
    REQUIRE(sign == 1);
    ChargedState expected =
        ChargedState::pure(LatticeVector::zero(1), Rational(sign) * fock_mono(a1, 0, Partition({1})));
    REQUIRE(lowered == expected);

    SECTION("non-root vectors are rejected") {
        LatticeVector twice = 2 * alpha;
        REQUIRE_THROWS_AS(vertex_mode_apply(a1, twice, 0, vac, 6), UnsupportedInputError);
    }

    SECTION("insufficient truncation raises an explicit error") {
        REQUIRE_THROWS_AS(vertex_mode_apply(a1, alpha, -9, vac, 4), TruncationError);
    }

    SECTION("modes lower L0 by the mode index") {
        for (long m : {-3L, -2L, -1L, 0L, 1L}) {
            ChargedState in = ChargedState::pure(-alpha, fock_mono(a1, 0, Partition({2})));
            ChargedState out = vertex_mode_apply(a1, alpha, m, in, 8);
            for (const auto& [lambda, fock] : out.sectors())
                for (const auto& [deg, piece] : fock.graded_components())
                    REQUIRE(l0_eigenvalue(a1, lambda, deg) ==
                            l0_eigenvalue(a1, -alpha, 2) - Rational(m));
        }
    }
}

TEST_CASE("weight-one algebra of A1") {
    WeightOneAlgebra alg = weight_one_algebra(a1, 6);
    REQUIRE(alg.dimension() == 3); // one Cartan, two roots
    REQUIRE(alg.antisymmetry_holds());
    REQUIRE(alg.jacobi_holds());

    // [h, e^alpha] = (alpha, alpha) e^alpha = 2 e^alpha
    int h = 0, ep = -1, em = -1;
    LatticeVector alpha = LatticeVector::basis(1, 0);
    for (int i = 0; i < alg.dimension(); ++i) {
        if (alg.basis[i].kind != WeightOneBasisElement::Kind::root) continue;
        if (alg.basis[i].root == alpha) ep = i;
        if (alg.basis[i].root == -alpha) em = i;
    }
    REQUIRE(ep >= 0);
    REQUIRE(em >= 0);
    REQUIRE(alg.bracket[h][ep][ep] == Rational(2));
    REQUIRE(alg.bracket[h][em][em] == Rational(-2));

    // [e, f] lands in the Cartan with coefficient +-1
    REQUIRE(alg.bracket[ep][em][h] != Rational(0));

    // invariant form: <h, h> = 2, <e, f> = +-1, <e, e> = 0
    REQUIRE(alg.invariant_form[h][h] == Rational(2));
    REQUIRE(alg.invariant_form[ep][ep] == Rational(0));
    REQUIRE(alg.invariant_form[ep][em] != Rational(0));
}

TEST_CASE("weight-one algebra of A2") {
    WeightOneAlgebra alg = weight_one_algebra(a2, 6);
    REQUIRE(alg.dimension() == 8); // 2 Cartans + 6 roots
    REQUIRE(alg.antisymmetry_holds());
    REQUIRE(alg.jacobi_holds());

    SECTION("Cartan matrix recovery on all roots") {
        for (int i = 0; i < a2.rank(); ++i)
            for (int b = 0; b < alg.dimension(); ++b) {
                if (alg.basis[b].kind != WeightOneBasisElement::Kind::root) continue;
                long long expected =
                    a2.inner(LatticeVector::basis(2, i), alg.basis[b].root);
                for (int k = 0; k < alg.dimension(); ++k)
                    REQUIRE(alg.bracket[i][b][k] ==
                            (k == b ? make_rational(expected) : Rational(0)));
            }
    }

    SECTION("rootless or unspanned lattices are rejected") {
        REQUIRE_THROWS_AS(weight_one_algebra(Lattice({{4}}), 6), UnsupportedInputError);
        REQUIRE_THROWS_AS(weight_one_algebra(Lattice({{2, 3}, {3, -4}}), 6),
                          UnsupportedInputError);
    }
}

TEST_CASE("vertex commutation sign") {
    // for (alpha, beta) = -1 the two leading-mode products differ by
    // eps(alpha,beta) eps(beta,alpha) = (-1)^{(alpha,beta)} = -1
    auto roots = a2.roots();
    Cocycle eps(a2);
    int tested = 0;
    for (const auto& alpha : roots)
        for (const auto& beta : roots) {
            if (a2.inner(alpha, beta) != -1) continue;
            for (long long c0 : {0LL, 1LL}) {
                LatticeVector lambda = c0 * roots[0];
                ChargedState x = ChargedState::pure(lambda, FockState::vacuum(a2.odd_palette()));
                long m_beta = -1 - a2.inner(beta, lambda);
                long m_alpha_after = -1 - a2.inner(alpha, beta + lambda);
                long m_alpha = -1 - a2.inner(alpha, lambda);
                long m_beta_after = -1 - a2.inner(beta, alpha + lambda);
                ChargedState ab =
                    vertex_mode_apply(a2, alpha, m_alpha_after,
                                      vertex_mode_apply(a2, beta, m_beta, x, 6), 6);
                ChargedState ba =
                    vertex_mode_apply(a2, beta, m_beta_after,
                                      vertex_mode_apply(a2, alpha, m_alpha, x, 6), 6);
                Rational ca = ab.sector(alpha + beta + lambda).coeff(Multipartition());
                Rational cb = ba.sector(alpha + beta + lambda).coeff(Multipartition());
                REQUIRE(!is_zero(ca));
                REQUIRE(ca == Rational(-cb));
                ++tested;
            }
        }
    REQUIRE(tested > 0);
}

TEST_CASE("character of A1") {
    // levels 0..4 must come out as 1, 3, 4, 7, 13 by the enumeration oracle:
    // lattice points c alpha at level c^2 times oscillator partitions.
    TruncatedSeries ch = character(a1, 6);
    for (int level = 0; level <= 6; ++level)
        REQUIRE(ch.coeff(level) == Rational(character_basis_count(a1, level)));
    REQUIRE(ch.coeff(0) == Rational(1));
    REQUIRE(ch.coeff(1) == Rational(3));
    REQUIRE(ch.coeff(2) == Rational(4));
    REQUIRE(ch.coeff(3) == Rational(7));
    REQUIRE(ch.coeff(4) == Rational(13));

    // cross-module consistency: q^1 coefficient equals the weight-one dim
    REQUIRE(ch.coeff(1) == Rational(weight_one_algebra(a1, 4).dimension()));
    TruncatedSeries ch2 = character(a2, 4);
    REQUIRE(ch2.coeff(1) == Rational(weight_one_algebra(a2, 4).dimension()));

    SECTION("indefinite lattices are rejected") {
        REQUIRE_THROWS_AS(character(Lattice({{2, 3}, {3, -4}}), 4), UnsupportedInputError);
    }
}

TEST_CASE("charged state L0 decomposition") {
    LatticeVector alpha = LatticeVector::basis(1, 0);
    ChargedState x = ChargedState::vacuum(a1);
    x.add_sector(alpha, fock_mono(a1, 0, Partition({2})));
    auto pieces = l0_components(a1, x);
    REQUIRE(pieces.size() == 2);
    REQUIRE(pieces.count(Rational(0)) == 1);
    REQUIRE(pieces.count(Rational(3)) == 1); // 1 + 2
}
