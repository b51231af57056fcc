#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "partition.hpp"
#include "rational.hpp"
#include "series.hpp"
#include "symfunc.hpp"

// Fock-space model of the Heisenberg algebra on the polynomial ring in
// p_1, p_2, ...: creation B_{-i} is free multiplication by p_i, and
// annihilation B_i acts as c_{r,i} * q * d/dp_i. With the structure
// constants c_{r,i} = (-1)^(ri-1) * r * i this realizes
// [B_i, B_j] = delta_{i+j,0} * c_{r,i} * q * id.

namespace nakafock {

/// Vector in the polynomial Fock space, in the p-monomial basis p_mu.
class FockVector {
public:
    FockVector() = default;

    static FockVector vacuum() { return basis(Partition{}); }

    static FockVector basis(Partition mu, Rational coeff = Rational(1)) {
        FockVector v;
        v.add_term(std::move(mu), std::move(coeff));
        return v;
    }

    const std::map<Partition, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Partition& mu) const {
        auto it = terms_.find(mu);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int degree() const {
        int d = 0;
        for (const auto& [mu, c] : terms_) d = std::max(d, mu.weight());
        return d;
    }

    void add_term(Partition mu, Rational coeff) {
        if (coeff == 0) return;
        auto it = terms_.find(mu);
        if (it == terms_.end()) {
            terms_.emplace(std::move(mu), std::move(coeff));
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    FockVector& operator+=(const FockVector& o) {
        for (const auto& [mu, c] : o.terms_) add_term(mu, c);
        return *this;
    }

    FockVector& operator-=(const FockVector& o) {
        for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
        return *this;
    }

    FockVector& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [mu, c] : terms_) c *= s;
        return *this;
    }

    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(FockVector a, const Rational& s) { return a *= s; }
    friend FockVector operator*(const Rational& s, FockVector a) { return a *= s; }

    bool operator==(const FockVector& o) const { return terms_ == o.terms_; }

private:
    std::map<Partition, Rational> terms_;
};

inline SymFunc to_symfunc(const FockVector& v) {
    SymFunc f(Basis::power);
    for (const auto& [mu, c] : v.terms()) f.add_term(mu, c);
    return f;
}

inline FockVector from_symfunc(const SymFunc& f) {
    if (f.basis() != Basis::power)
        throw std::invalid_argument("from_symfunc: expected the power basis");
    FockVector v;
    for (const auto& [mu, c] : f.terms()) v.add_term(mu, c);
    return v;
}

/// Structure constant c_{r,i} = (-1)^(ri-1) * r * i, valid for any i != 0.
inline Rational heisenberg_constant(int rank, long long i) {
    if (i == 0) throw std::invalid_argument("heisenberg_constant: i must be nonzero");
    return Rational(sign_pow(rank * i - 1)) * Rational(rank) * Rational(i);
}

/// Derives c_{r,1}..c_{r,N} from the pairing generating function
/// (1 - (-1)^r z^2)^(r*q): take log, read the z^(2n) coefficient, divide
/// by q/n^2. The result is independent of q.
inline std::vector<Rational> solve_constants(int rank, long long q, int count) {
    if (rank < 1) throw std::invalid_argument("solve_constants: rank must be >= 1");
    if (count < 1) throw std::invalid_argument("solve_constants: count must be >= 1");
    if (q == 0) throw std::domain_error("solve_constants: pairing q must be nonzero");
    RationalSeries base = RationalSeries::one(2 * count);
    base.set(2, Rational(-sign_pow(rank)));
    const RationalSeries g = base.pow(static_cast<long long>(rank) * q).log();
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int n = 1; n <= count; ++n)
        out.push_back(g[2 * n] * Rational(Int(n) * Int(n)) / Rational(q));
    return out;
}

// The generating-function exponent above is r*q. The weaker variant with
// exponent q alone does not reproduce the commutator scalars; suites note
// this next to the derived constants.
inline constexpr const char* kExponentNote =
    "derived from log (1-(-1)^r z^2)^(r*q); exponent r*q, not q";

/// Rank r, intersection pairing q = <[C],[C']>, and the constants rule
/// n -> c_{r,n}. The rule may be absent before a solve fills it in.
struct HeisenbergModel {
    int rank = 1;
    long long pairing = 1;
    std::optional<std::vector<Rational>> constants;

    static HeisenbergModel pending(int rank, long long pairing) {
        return HeisenbergModel{rank, pairing, std::nullopt};
    }

    static HeisenbergModel closed_form(int rank, long long pairing, int max_index = 64) {
        HeisenbergModel m{rank, pairing, std::vector<Rational>{}};
        m.constants->reserve(static_cast<std::size_t>(max_index));
        for (int n = 1; n <= max_index; ++n)
            m.constants->push_back(heisenberg_constant(rank, n));
        return m;
    }

    static HeisenbergModel solved(int rank, long long pairing, int max_index = 64) {
        return HeisenbergModel{rank, pairing, solve_constants(rank, pairing, max_index)};
    }

    bool constants_known(int upto) const {
        return constants && static_cast<int>(constants->size()) >= upto;
    }

    Rational constant(int n) const {
        if (n < 1) throw std::invalid_argument("HeisenbergModel::constant: n must be >= 1");
        if (!constants_known(n))
            throw std::logic_error("HeisenbergModel: constants rule unknown for n = " +
                                   std::to_string(n));
        return (*constants)[static_cast<std::size_t>(n - 1)];
    }
};

/// Multiplication by p_i.
inline FockVector create(const FockVector& v, int i) {
    if (i < 1) throw std::invalid_argument("create: i must be >= 1");
    FockVector out;
    for (const auto& [mu, c] : v.terms()) out.add_term(mu.with_part(i), c);
    return out;
}

/// c_{r,i} * q * d/dp_i; annihilates the vacuum.
inline FockVector annihilate(const FockVector& v, int i, const HeisenbergModel& model) {
    if (i < 1) throw std::invalid_argument("annihilate: i must be >= 1");
    FockVector out;
    for (const auto& [mu, c] : v.terms()) {
        const int mult = mu.multiplicity(i);
        if (mult == 0) continue;
        out.add_term(mu.removing_one(i),
                     c * Rational(mult) * model.constant(i) * Rational(model.pairing));
    }
    return out;
}

/// Signed generator: g < 0 creates with index -g, g > 0 annihilates.
inline FockVector apply_generator(const FockVector& v, int g, const HeisenbergModel& model) {
    if (g == 0) throw std::invalid_argument("apply_generator: generator must be nonzero");
    return g < 0 ? create(v, -g) : annihilate(v, g, model);
}

/// Composition of signed generators with a scalar weight; the rightmost
/// generator acts first.
struct OperatorWord {
    std::vector<int> generators;
    Rational weight = Rational(1);
};

inline FockVector apply_word(const OperatorWord& word, FockVector v,
                             const HeisenbergModel& model) {
    for (auto it = word.generators.rbegin(); it != word.generators.rend(); ++it)
        v = apply_generator(v, *it, model);
    return v * word.weight;
}

struct DegreeScalar {
    int degree = 0;
    bool is_scalar = false;   // commutator acted as a scalar on the whole piece
    Rational scalar;          // that scalar, when is_scalar
};

struct CommutatorReport {
    int i = 0;
    int j = 0;
    int rank = 1;
    long long pairing = 1;
    int degree_cap = 0;
    Rational expected;
    std::vector<DegreeScalar> per_degree;
    bool scalars_uniform = false;  // same scalar on every graded piece
    std::size_t vectors_checked = 0;
    bool pass = false;
};

/// Applies [B_i, B_j] to every p-monomial of degree <= degree_cap and
/// compares with delta_{i+j,0} * c_{r,i} * q * id; also records the scalar
/// observed on each graded piece, which must not depend on the degree.
inline CommutatorReport commutator_check(int i, int j, const HeisenbergModel& model,
                                         int degree_cap) {
    if (i == 0 || j == 0)
        throw std::invalid_argument("commutator_check: indices must be nonzero");
    if (degree_cap < std::abs(i) + std::abs(j))
        throw std::invalid_argument("commutator_check: degree_cap must be >= |i|+|j|");
    CommutatorReport rep;
    rep.i = i;
    rep.j = j;
    rep.rank = model.rank;
    rep.pairing = model.pairing;
    rep.degree_cap = degree_cap;
    rep.expected = (i + j == 0)
                       ? Rational(i > 0 ? 1 : -1) * model.constant(std::abs(i)) *
                             Rational(model.pairing)
                       : Rational(0);
    rep.pass = true;
    for (int d = 0; d <= degree_cap; ++d) {
        DegreeScalar obs;
        obs.degree = d;
        obs.is_scalar = true;
        bool scalar_set = false;
        for (const auto& mu : enumerate_partitions(d)) {
            const FockVector v = FockVector::basis(mu);
            const FockVector w = apply_generator(apply_generator(v, j, model), i, model) -
                                 apply_generator(apply_generator(v, i, model), j, model);
            ++rep.vectors_checked;
            const Rational lambda = w.coeff(mu);
            if (!(w == v * lambda)) {
                obs.is_scalar = false;
                rep.pass = false;
                continue;
            }
            if (!scalar_set) {
                obs.scalar = lambda;
                scalar_set = true;
            } else if (obs.scalar != lambda) {
                obs.is_scalar = false;
                rep.pass = false;
            }
            if (lambda != rep.expected) rep.pass = false;
        }
        rep.per_degree.push_back(obs);
    }
    rep.scalars_uniform = true;
    for (const auto& obs : rep.per_degree)
        if (!obs.is_scalar || obs.scalar != rep.per_degree.front().scalar)
            rep.scalars_uniform = false;
    return rep;
}

enum class VertexKind {
    creation,     // C_-(z): coefficient of z^i is B_{-i} / ((-1)^(i-1) i)
    annihilation  // C_+(z): coefficient of z^i is B_i / ((-1)^(i-1) i)
};

/// Operator-valued truncated series. Coefficients are applied on demand;
/// nothing operator-shaped is ever materialized.
class VertexSeries {
public:
    VertexSeries(VertexKind kind, HeisenbergModel model, int order)
        : kind_(kind), model_(std::move(model)), order_(order) {
        if (order < 1) throw std::invalid_argument("VertexSeries: order must be >= 1");
    }

    int order() const { return order_; }
    VertexKind kind() const { return kind_; }

    static Rational scale(int i) { return Rational(Int(sign_pow(i - 1)), Int(i)); }

    /// The z^i coefficient applied to v.
    FockVector coefficient_applied(int i, const FockVector& v) const {
        if (i < 1 || i > order_) return FockVector();
        const FockVector w =
            kind_ == VertexKind::creation ? create(v, i) : annihilate(v, i, model_);
        return w * scale(i);
    }

    std::vector<FockVector> apply(const FockVector& v) const {
        std::vector<FockVector> s(static_cast<std::size_t>(order_) + 1);
        s[0] = v;
        return apply(s);
    }

    /// C(z) * (sum_j z^j w_j), truncated at the order.
    std::vector<FockVector> apply(const std::vector<FockVector>& s) const {
        std::vector<FockVector> out(static_cast<std::size_t>(order_) + 1);
        for (int k = 0; k <= order_; ++k)
            for (int i = 1; i <= k; ++i) {
                if (static_cast<std::size_t>(k - i) >= s.size()) continue;
                out[static_cast<std::size_t>(k)] +=
                    coefficient_applied(i, s[static_cast<std::size_t>(k - i)]);
            }
        return out;
    }

    std::vector<FockVector> exp_apply(const FockVector& v) const {
        std::vector<FockVector> s(static_cast<std::size_t>(order_) + 1);
        s[0] = v;
        return exp_apply(s);
    }

    /// exp(C(z)) applied to a vector-valued series. Every application of
    /// C(z) raises the z-valuation, so the sum stops by itself.
    std::vector<FockVector> exp_apply(const std::vector<FockVector>& s) const {
        std::vector<FockVector> acc = s;
        acc.resize(static_cast<std::size_t>(order_) + 1);
        std::vector<FockVector> cur = acc;
        for (int k = 1; k <= order_; ++k) {
            cur = apply(cur);
            bool all_zero = true;
            const Rational inv_k(Int(1), Int(k));
            for (std::size_t t = 0; t < cur.size(); ++t) {
                cur[t] *= inv_k;
                if (!cur[t].is_zero()) all_zero = false;
                acc[t] += cur[t];
            }
            if (all_zero) break;
        }
        return acc;
    }

private:
    VertexKind kind_;
    HeisenbergModel model_;
    int order_;
};

inline VertexSeries vertex_series(VertexKind kind, const HeisenbergModel& model, int order) {
    return VertexSeries(kind, model, order);
}

struct PhiReport {
    int rank = 1;
    long long pairing = 1;
    int order = 0;
    std::vector<Rational> phi_even;  // phi_even[n-1] = c_{r,n} * q / n^2
    std::size_t vectors_checked = 0;
    bool pass = false;
};

/// Checks [C_-(z), exp(C'_+(z))] = -Phi(z) exp(C'_+(z)) with
/// Phi(z) = sum c_{r,n} q z^(2n) / n^2, on every p-monomial of degree
/// <= order/2, coefficient-wise to the given order.
inline PhiReport phi_identity_check(const HeisenbergModel& model, int order) {
    if (order < 4 || order % 2 != 0)
        throw std::invalid_argument("phi_identity_check: order must be even and >= 4");
    PhiReport rep;
    rep.rank = model.rank;
    rep.pairing = model.pairing;
    rep.order = order;
    for (int n = 1; 2 * n <= order; ++n)
        rep.phi_even.push_back(model.constant(n) * Rational(model.pairing) /
                               Rational(Int(n) * Int(n)));
    const VertexSeries cm(VertexKind::creation, model, order);
    const VertexSeries cp(VertexKind::annihilation, model, order);
    rep.pass = true;
    for (int d = 0; d <= order / 2; ++d) {
        for (const auto& mu : enumerate_partitions(d)) {
            const FockVector v = FockVector::basis(mu);
            const auto expv = cp.exp_apply(v);
            const auto lhs_a = cm.apply(expv);
            const auto lhs_b = cp.exp_apply(cm.apply(v));
            ++rep.vectors_checked;
            for (int k = 0; k <= order; ++k) {
                FockVector rhs;
                for (int n = 1; 2 * n <= k; ++n)
                    rhs -= expv[static_cast<std::size_t>(k - 2 * n)] *
                           rep.phi_even[static_cast<std::size_t>(n - 1)];
                const FockVector lhs = lhs_a[static_cast<std::size_t>(k)] -
                                       lhs_b[static_cast<std::size_t>(k)];
                if (!(lhs == rhs)) rep.pass = false;
            }
        }
    }
    return rep;
}

/// Bilinear pairing on p-monomials making B_i adjoint to B_{-i}:
/// <p_mu, p_mu> = prod_k m_k(mu)! * prod_j c_{r,mu_j} * q, off-diagonal 0,
/// <vac, vac> = 1.
inline Rational fock_pairing(const FockVector& u, const FockVector& v,
                             const HeisenbergModel& model) {
    Rational acc(0);
    for (const auto& [mu, cu] : u.terms()) {
        const Rational cv = v.coeff(mu);
        if (cv == 0) continue;
        Rational w(1);
        const auto& parts = mu.parts();
        int run = 0;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            run = (k > 0 && parts[k] == parts[k - 1]) ? run + 1 : 1;
            w *= Rational(run);  // builds prod m_k! incrementally
            w *= model.constant(parts[k]) * Rational(model.pairing);
        }
        acc += cu * cv * w;
    }
    return acc;
}

/// <E_n, E_n> for n = 0..count, where E_n is the image of e_n in the
/// p-monomial Fock basis; reproduces the z^(2n) coefficients of
/// (1 - (-1)^r z^2)^(r*q).
inline std::vector<Rational> adjoint_pairing_gf(const HeisenbergModel& model, int count) {
    if (count < 0) throw std::invalid_argument("adjoint_pairing_gf: count must be >= 0");
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(count) + 1);
    for (int n = 0; n <= count; ++n) {
        const FockVector en = from_symfunc(
            convert(elementary(n), Basis::power, std::max(n, kDefaultDegreeCap)));
        out.push_back(fock_pairing(en, en, model));
    }
    return out;
}

}  // namespace nakafock
