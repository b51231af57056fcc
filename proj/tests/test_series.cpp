#include <catch2/catch.hpp>

#include <nakafock/series.hpp>
#include <nakafock/symfunc.hpp>

#include <random>

using namespace nakafock;

namespace {

RationalSeries random_series(std::mt19937& rng, int order, bool zero_constant) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    RationalSeries s(order);
    for (int k = zero_constant ? 1 : 0; k <= order; ++k)
        s.set(k, Rational(Int(num(rng)), Int(den(rng))));
    return s;
}

LambdaSeries h_series(int order) {
    const auto table = symdetail::complete_power_table(order);
    LambdaSeries s(order);
    for (int n = 0; n <= order; ++n) s.set(n, table[static_cast<std::size_t>(n)]);
    return s;
}

LambdaSeries e_series(int order) {
    const auto table = symdetail::elementary_power_table(order);
    LambdaSeries s(order);
    for (int n = 0; n <= order; ++n) s.set(n, table[static_cast<std::size_t>(n)]);
    return s;
}

RationalSeries truncated(const RationalSeries& s, int order) {
    RationalSeries out(order);
    for (int k = 0; k <= order; ++k) out.set(k, s[k]);
    return out;
}

}  // namespace

TEST_CASE("series ring basics", "[series]") {
    RationalSeries one_plus(5), one_minus(5);
    one_plus.set(0, 1);
    one_plus.set(1, 1);
    one_minus.set(0, 1);
    one_minus.set(1, -1);
    RationalSeries expect(5);
    expect.set(0, 1);
    expect.set(2, -1);
    CHECK(one_plus * one_minus == expect);

    CHECK(one_plus * RationalSeries(5) == RationalSeries(5));  // anything * 0 = 0

    CHECK_THROWS_AS(one_plus * RationalSeries(4), std::invalid_argument);
    CHECK_THROWS_AS(RationalSeries(-1), std::invalid_argument);
}

TEST_CASE("exp and log invert each other", "[series]") {
    RationalSeries log1z(20);
    for (int n = 1; n <= 20; ++n) log1z.set(n, Rational(Int(sign_pow(n - 1)), Int(n)));
    RationalSeries one_plus_z(20);
    one_plus_z.set(0, 1);
    one_plus_z.set(1, 1);
    CHECK(log1z.exp() == one_plus_z);          // exp(log(1+z)) = 1+z
    CHECK(one_plus_z.log() == log1z);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const int order = std::uniform_int_distribution<int>(1, 20)(rng);
        const RationalSeries a = random_series(rng, order, true);
        CHECK(a.exp().log() == a);
        RationalSeries u = random_series(rng, order, true);
        u.set(0, 1);
        CHECK(u.log().exp() == u);
    }

    RationalSeries bad(4);
    bad.set(0, 2);
    CHECK_THROWS_AS(bad.exp(), std::domain_error);
    CHECK_THROWS_AS(RationalSeries(4).log(), std::domain_error);
}

TEST_CASE("powers and inverses", "[series]") {
    RationalSeries base(4);
    base.set(0, 1);
    base.set(2, -1);
    RationalSeries expect(4);
    expect.set(0, 1);
    expect.set(2, -2);
    expect.set(4, 1);
    CHECK(base.pow(2) == expect);  // (1-z^2)^2

    RationalSeries geo(8);
    geo.set(0, 1);
    geo.set(2, 1);
    const RationalSeries inv = geo.pow(-1);
    for (int k = 0; k <= 8; ++k)
        CHECK(inv[k] == (k % 2 ? Rational(0) : Rational(sign_pow(k / 2))));
    CHECK(inv * geo == RationalSeries::one(8));

    CHECK_THROWS_AS(RationalSeries(3).inverse(), std::domain_error);
    CHECK(RationalSeries::one(3).pow(0) == RationalSeries::one(3));
}

TEST_CASE("derivative", "[series]") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        const int order = std::uniform_int_distribution<int>(2, 12)(rng);
        const RationalSeries a = random_series(rng, order, false);
        const RationalSeries b = random_series(rng, order, false);
        // product rule, one order down
        auto lhs = (a * b).derivative();
        auto rhs = a.derivative() * truncated(b, order - 1) +
                   truncated(a, order - 1) * b.derivative();
        CHECK(lhs == rhs);
    }
    CHECK_THROWS_AS(RationalSeries(0).derivative(), std::invalid_argument);
}

TEST_CASE("lambda-valued series identities", "[series]") {
    const int order = 6;
    const LambdaSeries h = h_series(order);
    const LambdaSeries e = e_series(order);

    // E(z) H(-z) = 1
    LambdaSeries h_neg(order);
    for (int n = 0; n <= order; ++n)
        h_neg.set(n, n % 2 ? h[n] * Rational(-1) : h[n]);
    CHECK(e * h_neg == LambdaSeries::one(order));

    // H = exp(sum p_n z^n / n)
    LambdaSeries arg(order);
    for (int n = 1; n <= order; ++n)
        arg.set(n, SymFunc::basis_element(Basis::power, Partition{n},
                                          Rational(Int(1), Int(n))));
    CHECK(arg.exp() == h);

    // P(z) = d/dz log H(z)
    const LambdaSeries p = h.log().derivative();
    for (int n = 1; n <= order; ++n)
        CHECK(p[n - 1] == SymFunc::basis_element(Basis::power, Partition{n}));

    // coefficient of z^n in H equals the full monomial sum h_n
    for (int n = 0; n <= order; ++n) {
        SymFunc sum(Basis::monomial);
        for (const auto& nu : enumerate_partitions(n)) sum.add_term(nu, Rational(1));
        CHECK(convert(h[n], Basis::monomial) == sum);
    }
}
