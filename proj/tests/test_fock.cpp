#include <catch2/catch.hpp>

#include <nakafock/fock.hpp>
#include <nakafock/symfunc.hpp>

#include <random>

using namespace nakafock;

namespace {

FockVector random_vector(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coeff(-3, 3);
    FockVector v;
    for (int t = 0; t < 4; ++t) {
        const auto level = enumerate_partitions(deg(rng));
        v.add_term(level[std::uniform_int_distribution<std::size_t>(0, level.size() - 1)(rng)],
                   Rational(coeff(rng)));
    }
    return v;
}

}  // namespace

TEST_CASE("structure constants", "[fock]") {
    CHECK(heisenberg_constant(1, 1) == 1);
    CHECK(heisenberg_constant(1, 2) == -2);
    CHECK(heisenberg_constant(1, 3) == 3);
    CHECK(heisenberg_constant(1, 4) == -4);
    CHECK(heisenberg_constant(2, 1) == -2);
    CHECK(heisenberg_constant(2, 3) == -6);
    // odd under i -> -i
    for (int r = 1; r <= 4; ++r)
        for (int i = 1; i <= 6; ++i)
            CHECK(heisenberg_constant(r, -i) == -heisenberg_constant(r, i));
    CHECK_THROWS_AS(heisenberg_constant(2, 0), std::invalid_argument);
}

TEST_CASE("create and annihilate", "[fock]") {
    const auto model = HeisenbergModel::closed_form(1, 1);

    CHECK(create(FockVector::vacuum(), 3) == FockVector::basis(Partition{3}));
    CHECK(create(FockVector::basis(Partition{2, 1}), 2) ==
          FockVector::basis(Partition{2, 2, 1}));

    CHECK(annihilate(FockVector::vacuum(), 1, model).is_zero());
    for (int i = 1; i <= 4; ++i) {
        const auto m2 = HeisenbergModel::closed_form(2, 3);
        CHECK(annihilate(FockVector::basis(Partition{i}), i, m2) ==
              FockVector::vacuum() * (heisenberg_constant(2, i) * Rational(3)));
    }

    // d/dp_2 picks up the multiplicity: p_(2,2) -> 2 c_{1,2} p_(2) = -4 p_(2)
    CHECK(annihilate(FockVector::basis(Partition{2, 2}), 2, model) ==
          FockVector::basis(Partition{2}) * Rational(-4));

    // unknown constants rule fails loudly
    const auto pending = HeisenbergModel::pending(2, 1);
    CHECK_THROWS_AS(annihilate(FockVector::basis(Partition{1}), 1, pending),
                    std::logic_error);
}

TEST_CASE("transport along the p-m isomorphism", "[fock]") {
    // create(., i) conjugated by the basis change equals multiply_p
    for (int d = 0; d <= 8; ++d)
        for (const auto& mu : enumerate_partitions(d))
            for (int i = 1; i <= 4; ++i) {
                const SymFunc in_m = convert(
                    SymFunc::basis_element(Basis::power, mu), Basis::monomial);
                const SymFunc lhs = convert(
                    to_symfunc(create(from_symfunc(SymFunc::basis_element(Basis::power, mu)),
                                       i)),
                    Basis::monomial);
                CHECK(lhs == multiply_p(in_m, i));
            }
}

TEST_CASE("commutator check", "[fock]") {
    {
        const auto rep = commutator_check(1, -1, HeisenbergModel::closed_form(1, 1), 6);
        CHECK(rep.pass);
        CHECK(rep.expected == 1);
        CHECK(rep.scalars_uniform);
        for (const auto& d : rep.per_degree) CHECK(d.scalar == 1);
    }
    {
        const auto rep = commutator_check(2, -3, HeisenbergModel::closed_form(2, 5), 6);
        CHECK(rep.pass);
        CHECK(rep.expected == 0);
        CHECK(rep.scalars_uniform);
    }
    {
        const auto rep = commutator_check(1, -1, HeisenbergModel::closed_form(2, 3), 6);
        CHECK(rep.pass);
        CHECK(rep.expected == -6);
    }
    {
        // antisymmetry: [B_{-1}, B_1] carries the opposite sign
        const auto rep = commutator_check(-1, 1, HeisenbergModel::closed_form(1, 1), 6);
        CHECK(rep.pass);
        CHECK(rep.expected == -1);
    }
    CHECK_THROWS_AS(commutator_check(2, -3, HeisenbergModel::closed_form(1, 1), 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(commutator_check(0, 1, HeisenbergModel::closed_form(1, 1), 4),
                    std::invalid_argument);
}

TEST_CASE("heisenberg relations on a grid", "[fock]") {
    // acceptance runs the documented grid; a representative slice here
    for (int r : {1, 2})
        for (long long q : {1, 2})
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) {
                    const auto model = HeisenbergModel::closed_form(r, q);
                    const auto mixed = commutator_check(i, -j, model, 6);
                    CHECK(mixed.pass);
                    CHECK(mixed.expected ==
                          (i == j ? heisenberg_constant(r, i) * Rational(q) : Rational(0)));
                    CHECK(commutator_check(i, j, model, 6).pass);    // [B_i, B_j] = 0
                    CHECK(commutator_check(-i, -j, model, 6).pass);  // [B_-i, B_-j] = 0
                }
}

TEST_CASE("operator words", "[fock]") {
    const auto model = HeisenbergModel::closed_form(2, 1);
    const FockVector v = FockVector::basis(Partition{2, 1});
    // rightmost generator acts first
    const OperatorWord w{{1, -1}, Rational(1)};
    CHECK(apply_word(w, v, model) ==
          annihilate(create(v, 1), 1, model));
    const OperatorWord scaled{{-2}, Rational(Int(1), Int(3))};
    CHECK(apply_word(scaled, v, model) == create(v, 2) * Rational(Int(1), Int(3)));
}

TEST_CASE("vertex operator series", "[fock]") {
    const auto model = HeisenbergModel::closed_form(1, 1);
    const VertexSeries cm(VertexKind::creation, model, 4);
    const VertexSeries cp(VertexKind::annihilation, model, 4);

    // z^1 coefficient of C_-(z) is exactly create(., 1)
    const FockVector v = FockVector::basis(Partition{2});
    CHECK(cm.coefficient_applied(1, v) == create(v, 1));

    // C_+(z)[vac] is the zero series
    for (const auto& term : cp.apply(FockVector::vacuum())) CHECK(term.is_zero());

    // exp(C_-(z))[vac] reads as sum z^n e_n, i.e. m_(1^n) in the monomial basis
    const auto expseries = cm.exp_apply(FockVector::vacuum());
    for (int n = 0; n <= 4; ++n) {
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        const SymFunc as_m = convert(to_symfunc(expseries[static_cast<std::size_t>(n)]),
                                     Basis::monomial);
        CHECK(as_m == SymFunc::basis_element(Basis::monomial, Partition(ones)));
    }

    CHECK_THROWS_AS(VertexSeries(VertexKind::creation, model, 0), std::invalid_argument);
}

TEST_CASE("phi identity", "[fock]") {
    {
        const auto rep = phi_identity_check(HeisenbergModel::closed_form(1, 1), 8);
        CHECK(rep.pass);
        REQUIRE(rep.phi_even.size() == 4);
        CHECK(rep.phi_even[0] == 1);
        CHECK(rep.phi_even[1] == Rational(Int(-1), Int(2)));
        CHECK(rep.phi_even[2] == Rational(Int(1), Int(3)));
        CHECK(rep.phi_even[3] == Rational(Int(-1), Int(4)));
    }
    {
        const auto rep = phi_identity_check(HeisenbergModel::closed_form(2, 1), 8);
        CHECK(rep.pass);
        // c_{2,n}/n^2 = -2/n
        CHECK(rep.phi_even[0] == -2);
        CHECK(rep.phi_even[1] == -1);
        CHECK(rep.phi_even[2] == Rational(Int(-2), Int(3)));
    }
    {
        // zero pairing kills both sides
        const auto rep = phi_identity_check(HeisenbergModel::closed_form(3, 0), 6);
        CHECK(rep.pass);
        for (const auto& c : rep.phi_even) CHECK(c == 0);
    }
    CHECK_THROWS_AS(phi_identity_check(HeisenbergModel::closed_form(1, 1), 7),
                    std::invalid_argument);
    CHECK_THROWS_AS(phi_identity_check(HeisenbergModel::closed_form(1, 1), 2),
                    std::invalid_argument);
}

TEST_CASE("solve constants", "[fock]") {
    const auto c1 = solve_constants(1, 1, 6);
    for (int n = 1; n <= 6; ++n)
        CHECK(c1[static_cast<std::size_t>(n - 1)] == Rational(sign_pow(n - 1)) * Rational(n));

    const auto c2 = solve_constants(2, 1, 6);
    for (int n = 1; n <= 6; ++n)
        CHECK(c2[static_cast<std::size_t>(n - 1)] == Rational(-2 * n));

    // independent of q, including negative pairings
    CHECK(solve_constants(3, 5, 8) == solve_constants(3, 1, 8));
    CHECK(solve_constants(4, -2, 8) == solve_constants(4, 1, 8));

    for (int r = 1; r <= 4; ++r) {
        const auto solved = solve_constants(r, 1, 10);
        for (int n = 1; n <= 10; ++n)
            CHECK(solved[static_cast<std::size_t>(n - 1)] == heisenberg_constant(r, n));
    }

    CHECK_THROWS_AS(solve_constants(2, 0, 4), std::domain_error);

    // a solved model matches the closed form
    const auto solved_model = HeisenbergModel::solved(3, 2, 12);
    const auto closed = HeisenbergModel::closed_form(3, 2, 12);
    CHECK(*solved_model.constants == *closed.constants);
}

TEST_CASE("adjoint pairing", "[fock]") {
    std::mt19937 rng(17);
    for (int r : {1, 2, 3})
        for (long long q : {1, 2}) {
            const auto model = HeisenbergModel::closed_form(r, q);
            // <B_{-i} u, v> = <u, B_i v>
            for (int trial = 0; trial < 10; ++trial) {
                const FockVector u = random_vector(rng, 5);
                const FockVector v = random_vector(rng, 6);
                for (int i = 1; i <= 3; ++i)
                    CHECK(fock_pairing(create(u, i), v, model) ==
                          fock_pairing(u, annihilate(v, i, model), model));
            }
            // generating function of elementary images
            const auto gf = adjoint_pairing_gf(model, 5);
            RationalSeries base = RationalSeries::one(10);
            base.set(2, Rational(-sign_pow(r)));
            const RationalSeries target = base.pow(static_cast<long long>(r) * q);
            for (int n = 0; n <= 5; ++n) CHECK(gf[static_cast<std::size_t>(n)] == target[2 * n]);
        }
    CHECK(fock_pairing(FockVector::vacuum(), FockVector::vacuum(),
                       HeisenbergModel::closed_form(2, 2)) == 1);
}
