#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "partition.hpp"
#include "rational.hpp"
#include "series.hpp"
#include "symfunc.hpp"

// Cohomology ring of the Grassmannian Gr(G_x, n) of n-dimensional
// quotients of an r-dimensional space, presented on Schur classes s_lambda
// with lambda inside the n x (r-n) rectangle. Products are computed
// upstairs in Lambda and pushed down by discarding every Schur class that
// does not fit the rectangle.

namespace nakafock {

struct GrassRing {
    int total = 0;      // r = dim G_x
    int quot_rank = 0;  // n = rank Q
    int sub_rank = 0;   // m = r - n = rank S

    GrassRing(int r, int n) : total(r), quot_rank(n), sub_rank(r - n) {
        if (r < 0 || n < 0 || n > r)
            throw std::invalid_argument("GrassRing: need 0 <= n <= r");
    }

    int top_degree() const { return quot_rank * sub_rank; }

    Partition top_partition() const {
        std::vector<int> parts(static_cast<std::size_t>(sub_rank > 0 ? quot_rank : 0),
                               sub_rank);
        return Partition(std::move(parts));
    }

    bool fits(const Partition& mu) const {
        if (mu.length() > quot_rank) return false;
        return mu.empty() || mu.parts().front() <= sub_rank;
    }
};

/// Ring element: integer combination of rectangle Schur classes.
class CohomClass {
public:
    CohomClass() = default;

    static CohomClass one() { return schur_term(Partition{}, Int(1)); }

    static CohomClass schur_term(Partition mu, Int coeff) {
        CohomClass c;
        c.add_term(std::move(mu), std::move(coeff));
        return c;
    }

    const std::map<Partition, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(const Partition& mu) const {
        auto it = terms_.find(mu);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(Partition mu, Int coeff) {
        if (coeff == 0) return;
        auto it = terms_.find(mu);
        if (it == terms_.end()) {
            terms_.emplace(std::move(mu), std::move(coeff));
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    CohomClass& operator+=(const CohomClass& o) {
        for (const auto& [mu, c] : o.terms_) add_term(mu, c);
        return *this;
    }

    CohomClass& operator-=(const CohomClass& o) {
        for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
        return *this;
    }

    friend CohomClass operator+(CohomClass a, const CohomClass& b) { return a += b; }
    friend CohomClass operator-(CohomClass a, const CohomClass& b) { return a -= b; }

    bool operator==(const CohomClass& o) const { return terms_ == o.terms_; }

private:
    std::map<Partition, Int> terms_;
};

namespace schdetail {

/// Inhomogeneous Lambda element, one power-basis piece per degree, with
/// everything above the ring's top degree dropped as it appears.
using GradedLambda = std::map<int, SymFunc>;

inline void gl_add(GradedLambda& acc, int degree, const SymFunc& f) {
    if (f.is_zero()) return;
    auto [it, fresh] = acc.try_emplace(degree, f);
    if (!fresh) {
        it->second += f;
        if (it->second.is_zero()) acc.erase(it);
    }
}

inline GradedLambda gl_one() {
    GradedLambda g;
    g.emplace(0, SymFunc::one(Basis::power));
    return g;
}

inline GradedLambda gl_mul(const GradedLambda& a, const GradedLambda& b, int top) {
    GradedLambda out;
    for (const auto& [da, fa] : a)
        for (const auto& [db, fb] : b) {
            if (da + db > top) continue;
            gl_add(out, da + db, fa * fb);
        }
    return out;
}

inline GradedLambda gl_pow(GradedLambda base, long long k, int top) {
    GradedLambda acc = gl_one();
    while (k > 0) {
        if (k & 1) acc = gl_mul(acc, base, top);
        base = gl_mul(base, base, top);
        k >>= 1;
    }
    return acc;
}

/// Inverse as a graded series; the degree-0 piece must be a unit (+-1).
inline GradedLambda gl_inverse(const GradedLambda& a, int top) {
    auto it0 = a.find(0);
    if (it0 == a.end() || !it0->second.is_constant())
        throw std::domain_error("gl_inverse: constant term is not a unit");
    const Rational c0 = it0->second.constant_coeff();
    if (c0 == 0) throw std::domain_error("gl_inverse: constant term is not a unit");
    const Rational inv0 = Rational(1) / c0;
    GradedLambda out;
    gl_add(out, 0, SymFunc::one(Basis::power) * inv0);
    for (int d = 1; d <= top; ++d) {
        SymFunc acc(Basis::power);
        for (int k = 1; k <= d; ++k) {
            auto ak = a.find(k);
            auto bd = out.find(d - k);
            if (ak == a.end() || bd == out.end()) continue;
            acc += ak->second * bd->second;
        }
        acc *= -inv0;
        gl_add(out, d, acc);
    }
    return out;
}

/// Push a graded Lambda element into the ring: Schur-expand each degree,
/// drop what does not fit, and insist the survivors are integers.
inline CohomClass to_cohom(const GradedLambda& g, const GrassRing& ring) {
    CohomClass out;
    for (const auto& [d, f] : g) {
        if (d > ring.top_degree()) continue;
        const SymFunc s = symdetail::from_power(f, Basis::schur);
        for (const auto& [mu, c] : s.terms()) {
            if (!ring.fits(mu)) continue;
            if (!is_integer(c))
                throw std::logic_error(
                    "to_cohom: non-integer coefficient in the rectangle basis");
            out.add_term(mu, numerator(c));
        }
    }
    return out;
}

inline GradedLambda from_cohom(const CohomClass& a) {
    GradedLambda out;
    for (const auto& [mu, c] : a.terms()) {
        const SymFunc f = symdetail::to_power(
            SymFunc::basis_element(Basis::schur, mu, Rational(c)));
        gl_add(out, mu.weight(), f);
    }
    return out;
}

/// c(Q) in Lambda: c_i(Q) = s_(1^i) = e_i for i <= rank Q.
inline GradedLambda taut_quotient(const GrassRing& ring, bool dual) {
    const auto table = symdetail::elementary_power_table(ring.quot_rank);
    GradedLambda out;
    for (int i = 0; i <= ring.quot_rank; ++i) {
        SymFunc f = table[static_cast<std::size_t>(i)];
        if (dual && i % 2 != 0) f *= Rational(-1);
        gl_add(out, i, f);
    }
    return out;
}

}  // namespace schdetail

enum class Tautological { Q, Q_dual, S, S_dual };

enum class TensorVariant { S_tensor_Qdual, Sdual_tensor_Q, Qdual_tensor_Q };

namespace schdetail {

/// Total Chern class of the tensor bundle over two Chern-root alphabets:
/// x = roots of Q (n of them), y = roots of S (m of them). The trivial
/// total bundle forces p_k(x u y) = 0, i.e. p_k(y) = -p_k(x), which
/// eliminates y entirely. The class is assembled as exp of
///   sum_t z^t (-1)^(t-1)/t * sum_{a+b=t} C(t,a) eps_y^a eps_x^b p_a p_b
/// with p_0 standing for the alphabet size.
inline GradedLambda tensor_lambda(const GrassRing& ring, TensorVariant variant) {
    const int top = ring.top_degree();
    const int n = ring.quot_rank;
    const int m = ring.sub_rank;
    // first alphabet: y for S-variants, x for End(Q); second is always x
    const bool first_is_sub = variant != TensorVariant::Qdual_tensor_Q;
    const int count1 = first_is_sub ? m : n;
    const int count2 = n;
    const int eps1 = variant == TensorVariant::S_tensor_Qdual ? 1 : -1;
    const int eps2 = variant == TensorVariant::S_tensor_Qdual ? -1 : 1;
    LambdaSeries logc(top);
    for (int t = 1; t <= top; ++t) {
        SymFunc acc(Basis::power);
        for (int a = 0; a <= t; ++a) {
            const int b = t - a;
            Rational coef = Rational(binomial(t, a));
            if (eps1 == -1 && a % 2 != 0) coef = -coef;
            if (eps2 == -1 && b % 2 != 0) coef = -coef;
            // p_a(first alphabet): size for a = 0, else -p_a(x) when the
            // alphabet is y, or p_a(x) itself for End(Q)
            Partition parts;
            if (a == 0) {
                coef *= Rational(count1);
            } else {
                if (first_is_sub) coef = -coef;
                parts = parts.with_part(a);
            }
            if (b == 0) {
                coef *= Rational(count2);
            } else {
                parts = parts.with_part(b);
            }
            acc += SymFunc::basis_element(Basis::power, parts, coef);
        }
        acc *= Rational(Int(sign_pow(t - 1)), Int(t));
        logc.set(t, acc);
    }
    const LambdaSeries c = logc.exp();
    GradedLambda out;
    for (int d = 0; d <= top; ++d) gl_add(out, d, c[d]);
    return out;
}

}  // namespace schdetail

/// Graded list c_0..c_top of the tautological bundle's Chern classes.
/// c(S) and c(S_dual) are the formal inverses of c(Q) and c(Q_dual).
inline std::vector<CohomClass> chern(Tautological bundle, const GrassRing& ring) {
    using namespace schdetail;
    GradedLambda g;
    switch (bundle) {
        case Tautological::Q: g = taut_quotient(ring, false); break;
        case Tautological::Q_dual: g = taut_quotient(ring, true); break;
        case Tautological::S: g = gl_inverse(taut_quotient(ring, false), ring.top_degree()); break;
        case Tautological::S_dual:
            g = gl_inverse(taut_quotient(ring, true), ring.top_degree());
            break;
    }
    const CohomClass total = to_cohom(g, ring);
    std::vector<CohomClass> out(static_cast<std::size_t>(ring.top_degree()) + 1);
    for (const auto& [mu, c] : total.terms())
        out[static_cast<std::size_t>(mu.weight())].add_term(mu, c);
    return out;
}

/// Chern classes of S (x) Q_dual, S_dual (x) Q or Q_dual (x) Q, degree by
/// degree up to the ring's top.
inline std::vector<CohomClass> chern_tensor(const GrassRing& ring, TensorVariant variant) {
    using namespace schdetail;
    const GradedLambda g = tensor_lambda(ring, variant);
    std::vector<CohomClass> out(static_cast<std::size_t>(ring.top_degree()) + 1);
    for (const auto& [d, f] : g) {
        GradedLambda piece;
        gl_add(piece, d, f);
        out[static_cast<std::size_t>(d)] = to_cohom(piece, ring);
    }
    return out;
}

/// Littlewood-Richardson product with rectangle truncation.
inline CohomClass multiply(const CohomClass& a, const CohomClass& b, const GrassRing& ring) {
    using namespace schdetail;
    return to_cohom(gl_mul(from_cohom(a), from_cohom(b), ring.top_degree()), ring);
}

/// Coefficient of the full-rectangle Schur class; 0 below top degree.
inline Int integrate(const CohomClass& a, const GrassRing& ring) {
    return a.coeff(ring.top_partition());
}

struct ExcessReport {
    int r = 0;
    int n = 0;
    bool excess_matches = false;   // c(V) from the four-term formula equals c(S (x) Q_dual)
    bool cancel_q = false;         // c(Q)^r = c(S_dual (x) Q) c(Q_dual (x) Q)
    bool cancel_q_dual = false;    // c(Q_dual)^r = c(S (x) Q_dual) c(Q (x) Q_dual)
    bool pass = false;
};

/// Rebuilds c(V) = c(restricted tangent) c(T_Gr) / (c(Q)^r)^2 with the
/// restricted tangent class (c(Q)c(Q_dual))^r and T_Gr = S_dual (x) Q, and
/// compares it class-by-class against c(S (x) Q_dual).
inline ExcessReport excess_check(const GrassRing& ring) {
    using namespace schdetail;
    const int top = ring.top_degree();
    ExcessReport rep;
    rep.r = ring.total;
    rep.n = ring.quot_rank;
    const GradedLambda cQ = taut_quotient(ring, false);
    const GradedLambda cQd = taut_quotient(ring, true);
    const GradedLambda tangent = tensor_lambda(ring, TensorVariant::Sdual_tensor_Q);
    const GradedLambda cotangent = tensor_lambda(ring, TensorVariant::S_tensor_Qdual);
    const GradedLambda end_q = tensor_lambda(ring, TensorVariant::Qdual_tensor_Q);
    const GradedLambda moduli = gl_pow(gl_mul(cQ, cQd, top), ring.total, top);
    const GradedLambda cQr = gl_pow(cQ, ring.total, top);
    const GradedLambda inv = gl_inverse(cQr, top);
    const GradedLambda excess =
        gl_mul(gl_mul(gl_mul(moduli, tangent, top), inv, top), inv, top);
    rep.excess_matches = to_cohom(excess, ring) == to_cohom(cotangent, ring);
    rep.cancel_q = to_cohom(cQr, ring) == to_cohom(gl_mul(tangent, end_q, top), ring);
    rep.cancel_q_dual = to_cohom(gl_pow(cQd, ring.total, top), ring) ==
                        to_cohom(gl_mul(cotangent, end_q, top), ring);
    rep.pass = rep.excess_matches && rep.cancel_q && rep.cancel_q_dual;
    return rep;
}

/// Euler characteristic of Gr(G_x, n): integral of c_top(S_dual (x) Q).
inline Int euler_characteristic(int r, int n) {
    const GrassRing ring(r, n);
    const auto c = chern_tensor(ring, TensorVariant::Sdual_tensor_Q);
    return integrate(c[static_cast<std::size_t>(ring.top_degree())], ring);
}

/// Intersection number of the two complementary cycles through one point:
/// the integral of c_top(S (x) Q_dual), and 0 when n > r (empty
/// intersection).
inline Int intersection_number(int r, int n) {
    if (r < 0) throw std::invalid_argument("intersection_number: r must be >= 0");
    if (n < 0) throw std::invalid_argument("intersection_number: n must be >= 0");
    if (n > r) return Int(0);
    const GrassRing ring(r, n);
    const auto c = chern_tensor(ring, TensorVariant::S_tensor_Qdual);
    return integrate(c[static_cast<std::size_t>(ring.top_degree())], ring);
}

/// a_i = (-1)^((r-1) i) * C(r, i), the one-point intersection numbers.
inline Int subdivision_factor(int r, int i) {
    return Int(sign_pow(static_cast<long long>(r - 1) * i)) * binomial(r, i);
}

/// Sum of prod_i a_(nu_i) over all ordered subdivisions of n into q parts.
inline Int pairing_coefficient(int r, long long q, int n) {
    if (q < 1) throw std::invalid_argument("pairing_coefficient: q must be >= 1");
    if (n < 0) throw std::invalid_argument("pairing_coefficient: n must be >= 0");
    Int acc(0);
    for (const auto& nu : compositions_of(n, static_cast<int>(q))) {
        Int prod(1);
        for (int e : nu.entries()) {
            if (e > r) {
                prod = 0;
                break;
            }
            prod *= subdivision_factor(r, e);
        }
        acc += prod;
    }
    return acc;
}

struct PairingReport {
    int r = 0;
    long long q = 0;
    int count = 0;
    std::vector<Int> observed;  // subdivision sums, n = 0..count
    std::vector<Int> target;    // z^(2n) coefficients of (1+(-1)^(r-1) z^2)^(rq)
    bool pass = false;
};

/// Coefficient-wise comparison of the subdivision sums against the
/// binomial generating function (1 + (-1)^(r-1) z^2)^(r q).
inline PairingReport pairing_gf_check(int r, long long q, int count) {
    if (count < 0) throw std::invalid_argument("pairing_gf_check: count must be >= 0");
    PairingReport rep;
    rep.r = r;
    rep.q = q;
    rep.count = count;
    RationalSeries base = RationalSeries::one(2 * count);
    base.set(2, Rational(sign_pow(r - 1)));
    const RationalSeries gf = base.pow(static_cast<long long>(r) * q);
    rep.pass = true;
    for (int n = 0; n <= count; ++n) {
        rep.observed.push_back(pairing_coefficient(r, q, n));
        const Rational t = gf[2 * n];
        if (!is_integer(t)) throw std::logic_error("pairing_gf_check: non-integer target");
        rep.target.push_back(numerator(t));
        if (rep.observed.back() != rep.target.back()) rep.pass = false;
    }
    return rep;
}

}  // namespace nakafock
