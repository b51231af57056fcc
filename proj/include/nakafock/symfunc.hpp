#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "partition.hpp"
#include "rational.hpp"

namespace nakafock {

enum class Basis { monomial, elementary, complete, power, schur };

inline char basis_tag(Basis b) {
    switch (b) {
        case Basis::monomial: return 'm';
        case Basis::elementary: return 'e';
        case Basis::complete: return 'h';
        case Basis::power: return 'p';
        case Basis::schur: return 's';
    }
    throw std::logic_error("basis_tag: bad basis");
}

inline Basis parse_basis(const std::string& tag) {
    if (tag == "m") return Basis::monomial;
    if (tag == "e") return Basis::elementary;
    if (tag == "h") return Basis::complete;
    if (tag == "p") return Basis::power;
    if (tag == "s") return Basis::schur;
    throw std::invalid_argument("parse_basis: unknown basis tag '" + tag + "'");
}

/// Conversions and general products have factorial-ish blowup; they refuse
/// to run past the configured cap instead of silently truncating.
class DegreeCapError : public std::runtime_error {
public:
    DegreeCapError(int degree, int cap)
        : std::runtime_error("symmetric function degree " + std::to_string(degree) +
                             " exceeds the configured cap " + std::to_string(cap)),
          degree_(degree),
          cap_(cap) {}
    int degree() const { return degree_; }
    int cap() const { return cap_; }

private:
    int degree_;
    int cap_;
};

inline constexpr int kDefaultDegreeCap = 12;

/// Sparse linear combination of basis-labeled partitions over exact
/// rationals. In the multiplicative bases (e, h, p) the partition labels
/// index products of the one-part generators.
class SymFunc {
public:
    explicit SymFunc(Basis basis) : basis_(basis) {}

    static SymFunc zero(Basis basis) { return SymFunc(basis); }

    static SymFunc basis_element(Basis basis, Partition mu, Rational coeff = Rational(1)) {
        SymFunc f(basis);
        f.add_term(std::move(mu), std::move(coeff));
        return f;
    }

    static SymFunc one(Basis basis) { return basis_element(basis, Partition{}); }

    Basis basis() const { return basis_; }
    const std::map<Partition, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Partition& mu) const {
        auto it = terms_.find(mu);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Maximum term weight; 0 for the zero function.
    int degree() const {
        int d = 0;
        for (const auto& [mu, c] : terms_) d = std::max(d, mu.weight());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const int d = terms_.begin()->first.weight();
        for (const auto& [mu, c] : terms_)
            if (mu.weight() != d) return false;
        return true;
    }

    /// True when the function is a rational multiple of 1.
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    Rational constant_coeff() const { return coeff(Partition{}); }

    std::map<int, SymFunc> graded_components() const {
        std::map<int, SymFunc> out;
        for (const auto& [mu, c] : terms_) {
            auto [it, fresh] = out.try_emplace(mu.weight(), basis_);
            it->second.add_term(mu, c);
        }
        return out;
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

    SymFunc& operator+=(const SymFunc& o) {
        require_same_basis(o);
        for (const auto& [mu, c] : o.terms_) add_term(mu, c);
        return *this;
    }

    SymFunc& operator-=(const SymFunc& o) {
        require_same_basis(o);
        for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
        return *this;
    }

    SymFunc& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [mu, c] : terms_) c *= s;
        return *this;
    }

    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const Rational& s) { return a *= s; }
    friend SymFunc operator*(const Rational& s, SymFunc a) { return a *= s; }
    friend SymFunc operator-(SymFunc a) {
        for (auto& [mu, c] : a.terms_) c = -c;
        return a;
    }

    /// Product in the free multiplicative bases (e, h, p): concatenation of
    /// part multisets, no conversion. General products live in multiply().
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b) {
        a.require_same_basis(b);
        if (a.basis_ == Basis::monomial || a.basis_ == Basis::schur)
            throw std::invalid_argument(
                "SymFunc::operator*: free product needs a multiplicative basis; "
                "use multiply() for monomial or schur");
        SymFunc out(a.basis_);
        for (const auto& [mu, cmu] : a.terms_)
            for (const auto& [nu, cnu] : b.terms_)
                out.add_term(merge_parts(mu, nu), cmu * cnu);
        return out;
    }

    bool operator==(const SymFunc& o) const {
        return basis_ == o.basis_ && terms_ == o.terms_;
    }

    static Partition merge_parts(const Partition& a, const Partition& b) {
        std::vector<int> parts;
        parts.reserve(a.parts().size() + b.parts().size());
        std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
                   std::back_inserter(parts), std::greater<int>());
        return Partition(std::move(parts));
    }

private:
    void require_same_basis(const SymFunc& o) const {
        if (basis_ != o.basis_)
            throw std::invalid_argument("SymFunc: basis mismatch");
    }

    Basis basis_;
    std::map<Partition, Rational> terms_;
};

/// All partitions nu reachable by adding i to one part of mu (a zero part
/// appends a new part i), with multiplicity a = #{parts of nu equal to the
/// new value}. Distinct source values give distinct nu, so each target
/// appears once.
inline std::vector<std::pair<Partition, long long>> pieri_targets(const Partition& mu, int i) {
    if (i < 1) throw std::invalid_argument("pieri_targets: i must be >= 1");
    std::vector<int> values{0};
    for (int v : mu.parts())
        if (v != values.back()) values.push_back(v);
    std::vector<std::pair<Partition, long long>> out;
    for (int v : values) {
        Partition nu = (v == 0) ? mu.with_part(i) : mu.removing_one(v).with_part(v + i);
        out.emplace_back(std::move(nu), 0);
        out.back().second = out.back().first.multiplicity(v + i);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

/// p_i * f in the monomial basis, by linear extension of pieri_targets.
inline SymFunc multiply_p(const SymFunc& f, int i) {
    if (f.basis() != Basis::monomial)
        throw std::invalid_argument("multiply_p: f must be in the monomial basis");
    if (i < 1) throw std::invalid_argument("multiply_p: i must be >= 1");
    SymFunc out(Basis::monomial);
    for (const auto& [mu, c] : f.terms())
        for (const auto& [nu, a] : pieri_targets(mu, i)) out.add_term(nu, c * a);
    return out;
}

namespace symdetail {

/// Solve A^T x = b exactly (A square, rationals). Throws on singular A,
/// which would mean a broken transition matrix.
inline std::vector<Rational> solve_transposed(std::vector<std::vector<Rational>> a,
                                              std::vector<Rational> b) {
    const std::size_t n = a.size();
    // build augmented [A^T | b]
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m[r][c] = a[c][r];
        m[r][n] = std::move(b[r]);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("solve_transposed: singular transition matrix");
        std::swap(m[col], m[piv]);
        const Rational inv = Rational(1) / m[col][col];
        for (std::size_t c = col; c <= n; ++c) m[col][c] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rational factor = m[r][col];
            for (std::size_t c = col; c <= n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = std::move(m[r][n]);
    return x;
}

/// e_0..e_nmax in the power basis via n*e_n = sum (-1)^(i-1) e_(n-i) p_i.
inline std::vector<SymFunc> elementary_power_table(int nmax) {
    std::vector<SymFunc> e;
    e.push_back(SymFunc::one(Basis::power));
    for (int n = 1; n <= nmax; ++n) {
        SymFunc acc(Basis::power);
        for (int i = 1; i <= n; ++i) {
            const Rational s(sign_pow(i - 1));
            for (const auto& [mu, c] : e[static_cast<std::size_t>(n - i)].terms())
                acc.add_term(mu.with_part(i), s * c);
        }
        acc *= Rational(Int(1), Int(n));
        e.push_back(std::move(acc));
    }
    return e;
}

/// h_0..h_nmax in the power basis via n*h_n = sum h_(n-i) p_i.
inline std::vector<SymFunc> complete_power_table(int nmax) {
    std::vector<SymFunc> h;
    h.push_back(SymFunc::one(Basis::power));
    for (int n = 1; n <= nmax; ++n) {
        SymFunc acc(Basis::power);
        for (int i = 1; i <= n; ++i)
            for (const auto& [mu, c] : h[static_cast<std::size_t>(n - i)].terms())
                acc.add_term(mu.with_part(i), c);
        acc *= Rational(Int(1), Int(n));
        h.push_back(std::move(acc));
    }
    return h;
}

/// s_lambda = det(h_{lambda_i - i + j}) expanded over the free algebra on
/// the h_n, by row recursion with minors memoized per column mask.
inline SymFunc jacobi_trudi_complete(const Partition& lambda) {
    const auto& lam = lambda.parts();
    const int ell = lambda.length();
    if (ell == 0) return SymFunc::one(Basis::complete);
    if (ell > 30) throw std::invalid_argument("jacobi_trudi_complete: partition too long");
    std::map<std::uint32_t, SymFunc> memo;
    std::function<const SymFunc&(int, std::uint32_t)> minor = [&](int row, std::uint32_t mask)
        -> const SymFunc& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        SymFunc acc(Basis::complete);
        if (row == ell) {
            acc = SymFunc::one(Basis::complete);
        } else {
            int parity = 0;
            for (int j = 0; j < ell; ++j) {
                if (mask & (1u << j)) continue;
                const int a = lam[static_cast<std::size_t>(row)] - row + j;
                if (a >= 0) {
                    const SymFunc& sub = minor(row + 1, mask | (1u << j));
                    const Rational s(parity % 2 ? -1 : 1);
                    if (a == 0) {
                        for (const auto& [mu, c] : sub.terms()) acc.add_term(mu, s * c);
                    } else {
                        for (const auto& [mu, c] : sub.terms())
                            acc.add_term(mu.with_part(a), s * c);
                    }
                }
                ++parity;
            }
        }
        return memo.emplace(mask, std::move(acc)).first->second;
    };
    return minor(0, 0);
}

inline SymFunc to_power(const SymFunc& f);

/// p_rho in the monomial basis: iterated Pieri products on m_[] = 1.
inline SymFunc power_to_monomial_element(const Partition& rho) {
    SymFunc acc = SymFunc::one(Basis::monomial);
    for (int part : rho.parts()) acc = multiply_p(acc, part);
    return acc;
}

/// Basis element expanded in power coordinates (not for the monomial basis).
inline SymFunc element_to_power(Basis basis, const Partition& mu) {
    switch (basis) {
        case Basis::power:
            return SymFunc::basis_element(Basis::power, mu);
        case Basis::elementary:
        case Basis::complete: {
            const auto table = basis == Basis::elementary
                                   ? elementary_power_table(mu.empty() ? 0 : mu.parts().front())
                                   : complete_power_table(mu.empty() ? 0 : mu.parts().front());
            SymFunc acc = SymFunc::one(Basis::power);
            for (int part : mu.parts()) acc = acc * table[static_cast<std::size_t>(part)];
            return acc;
        }
        case Basis::schur:
            return to_power(jacobi_trudi_complete(mu));
        case Basis::monomial:
            throw std::logic_error("element_to_power: monomial handled elsewhere");
    }
    throw std::logic_error("element_to_power: bad basis");
}

/// One homogeneous piece, expressed in power coordinates by solving against
/// the degree-d transition matrix of the source basis.
inline SymFunc homogeneous_to_power(const SymFunc& f, int d) {
    const auto parts = enumerate_partitions(d);
    const std::size_t n = parts.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    std::map<Partition, std::size_t> index;
    for (std::size_t k = 0; k < n; ++k) index.emplace(parts[k], k);
    for (std::size_t a = 0; a < n; ++a) {
        const SymFunc row = power_to_monomial_element(parts[a]);
        for (const auto& [nu, c] : row.terms()) m[a][index.at(nu)] = c;
    }
    std::vector<Rational> rhs(n, Rational(0));
    for (const auto& [mu, c] : f.terms()) rhs[index.at(mu)] = c;
    const auto x = solve_transposed(std::move(m), std::move(rhs));
    SymFunc out(Basis::power);
    for (std::size_t a = 0; a < n; ++a) out.add_term(parts[a], x[a]);
    return out;
}

inline SymFunc to_power(const SymFunc& f) {
    switch (f.basis()) {
        case Basis::power:
            return f;
        case Basis::monomial: {
            SymFunc out(Basis::power);
            for (const auto& [d, piece] : f.graded_components())
                out += homogeneous_to_power(piece, d);
            return out;
        }
        default: {
            SymFunc out(Basis::power);
            for (const auto& [mu, c] : f.terms()) {
                SymFunc e = element_to_power(f.basis(), mu);
                out += e * c;
            }
            return out;
        }
    }
}

inline SymFunc from_power(const SymFunc& fp, Basis target) {
    if (target == Basis::power) return fp;
    if (target == Basis::monomial) {
        SymFunc out(Basis::monomial);
        for (const auto& [rho, c] : fp.terms()) out += power_to_monomial_element(rho) * c;
        return out;
    }
    SymFunc out(target);
    for (const auto& [d, piece] : fp.graded_components()) {
        const auto parts = enumerate_partitions(d);
        const std::size_t n = parts.size();
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
        std::map<Partition, std::size_t> index;
        for (std::size_t k = 0; k < n; ++k) index.emplace(parts[k], k);
        for (std::size_t a = 0; a < n; ++a) {
            const SymFunc row = element_to_power(target, parts[a]);
            for (const auto& [nu, c] : row.terms()) m[a][index.at(nu)] = c;
        }
        std::vector<Rational> rhs(n, Rational(0));
        for (const auto& [mu, c] : piece.terms()) rhs[index.at(mu)] = c;
        const auto x = solve_transposed(std::move(m), std::move(rhs));
        for (std::size_t a = 0; a < n; ++a) out.add_term(parts[a], x[a]);
    }
    return out;
}

}  // namespace symdetail

/// Exact change of basis; round trips are the identity.
inline SymFunc convert(const SymFunc& f, Basis target, int degree_cap = kDefaultDegreeCap) {
    const int d = f.degree();
    if (d > degree_cap) throw DegreeCapError(d, degree_cap);
    if (f.basis() == target) return f;
    return symdetail::from_power(symdetail::to_power(f), target);
}

/// Exact product: route through the power basis (a free polynomial
/// algebra), multiply there, convert back to the inputs' basis.
inline SymFunc multiply(const SymFunc& f, const SymFunc& g, int degree_cap = kDefaultDegreeCap) {
    if (f.basis() != g.basis())
        throw std::invalid_argument("multiply: operands must share a basis");
    if (f.is_zero() || g.is_zero()) return SymFunc::zero(f.basis());
    const int d = f.degree() + g.degree();
    if (d > degree_cap) throw DegreeCapError(d, degree_cap);
    const SymFunc prod = symdetail::to_power(f) * symdetail::to_power(g);
    return symdetail::from_power(prod, f.basis());
}

inline SymFunc elementary(int n) {
    return SymFunc::basis_element(Basis::elementary, n == 0 ? Partition{} : Partition{n});
}
inline SymFunc complete(int n) {
    return SymFunc::basis_element(Basis::complete, n == 0 ? Partition{} : Partition{n});
}
inline SymFunc power_sum(int n) {
    if (n < 1) throw std::invalid_argument("power_sum: n must be >= 1");
    return SymFunc::basis_element(Basis::power, Partition{n});
}

}  // namespace nakafock
