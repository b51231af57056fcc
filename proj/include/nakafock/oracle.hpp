#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "partition.hpp"
#include "rational.hpp"
#include "symfunc.hpp"

// Finite-variable ground truth: every basis element is expanded straight
// from its definition (symmetrized monomials, subset/multiset sums, power
// sums, tableau contents), independently of the algebraic machinery in
// symfunc.hpp. Tests treat these expansions as the arbiter.
//
// The bulk representation packs an exponent vector into one 64-bit key,
// 4 bits per variable, and keeps terms as a key-sorted vector with
// overflow-checked 64-bit integer coefficients. That limits the oracle to
// 16 variables and degree 15; the verification grids stay well inside
// that box, and anything outside it fails loudly instead of wrapping.

namespace nakafock {

/// Multivariate polynomial keyed by exponent vectors of fixed length.
using OraclePoly = std::map<std::vector<int>, Rational>;

/// Same polynomial, packed: key-sorted vector of (exponent key, integer
/// coefficient). Only integer-coefficient functions can be packed.
using PackedPoly = std::vector<std::pair<std::uint64_t, long long>>;

namespace oracle_detail {

inline constexpr int kMaxVars = 16;
inline constexpr int kMaxDegree = 15;

inline void check_box(int nvars, int degree) {
    if (nvars < 0 || nvars > kMaxVars)
        throw std::invalid_argument("oracle: supports at most 16 variables");
    if (degree > kMaxDegree)
        throw std::invalid_argument("oracle: supports degree at most 15");
}

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("oracle: coefficient overflow");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("oracle: coefficient overflow");
    return r;
}

inline std::uint64_t pack(const std::vector<int>& expo) {
    std::uint64_t key = 0;
    for (std::size_t k = 0; k < expo.size(); ++k)
        key |= static_cast<std::uint64_t>(expo[k]) << (4 * k);
    return key;
}

inline std::vector<int> unpack(std::uint64_t key, int nvars) {
    std::vector<int> expo(static_cast<std::size_t>(nvars));
    for (int k = 0; k < nvars; ++k)
        expo[static_cast<std::size_t>(k)] = static_cast<int>((key >> (4 * k)) & 0xf);
    return expo;
}

/// Sort by key, sum runs of equal keys, drop zeros.
inline void normalize(PackedPoly& p) {
    std::sort(p.begin(), p.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < p.size();) {
        const std::uint64_t key = p[r].first;
        long long sum = p[r].second;
        for (++r; r < p.size() && p[r].first == key; ++r)
            sum = checked_add(sum, p[r].second);
        if (sum != 0) p[w++] = {key, sum};
    }
    p.resize(w);
}

/// Exact product of normalized inputs. Exponents add per 4-bit lane; the
/// degree guard at the entry points rules out carries.
inline PackedPoly poly_mul(const PackedPoly& a, const PackedPoly& b) {
    PackedPoly out;
    out.reserve(a.size() * b.size());
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) out.emplace_back(ka + kb, checked_mul(ca, cb));
    normalize(out);
    return out;
}

// m_mu(x_1..x_N): x^tau over the distinct permutations tau of mu padded
// with zeros, scaled by coeff, appended raw to out.
inline void expand_monomial(const Partition& mu, int nvars, long long coeff,
                            PackedPoly& out) {
    if (mu.length() > nvars) return;
    std::vector<int> expo(static_cast<std::size_t>(nvars), 0);
    std::copy(mu.parts().begin(), mu.parts().end(), expo.begin());
    std::sort(expo.begin(), expo.end());
    do {
        out.emplace_back(pack(expo), coeff);
    } while (std::next_permutation(expo.begin(), expo.end()));
}

inline PackedPoly expand_power(int n, int nvars) {
    PackedPoly out;
    out.reserve(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i)
        out.emplace_back(static_cast<std::uint64_t>(n) << (4 * i), 1);
    normalize(out);
    return out;
}

inline PackedPoly expand_elementary(int n, int nvars) {
    // sum over n-subsets of the variables
    PackedPoly out;
    if (n > nvars) return out;
    std::function<void(int, int, std::uint64_t)> rec = [&](int from, int left,
                                                           std::uint64_t key) {
        if (left == 0) {
            out.emplace_back(key, 1);
            return;
        }
        for (int v = from; v <= nvars - left; ++v)
            rec(v + 1, left - 1, key | (std::uint64_t(1) << (4 * v)));
    };
    rec(0, n, 0);
    normalize(out);
    return out;
}

inline PackedPoly expand_complete(int n, int nvars) {
    // sum over all degree-n monomials (multisets of variables)
    PackedPoly out;
    if (n == 0) {
        out.emplace_back(0, 1);
        return out;
    }
    if (nvars == 0) return out;
    std::function<void(int, int, std::uint64_t)> rec = [&](int var, int rest,
                                                           std::uint64_t key) {
        if (var == nvars - 1) {
            out.emplace_back(key | (static_cast<std::uint64_t>(rest) << (4 * var)), 1);
            return;
        }
        for (int d = 0; d <= rest; ++d)
            rec(var + 1, rest - d, key | (static_cast<std::uint64_t>(d) << (4 * var)));
    };
    rec(0, n, 0);
    normalize(out);
    return out;
}

// s_lambda(x_1..x_N) as the content generating function of semistandard
// tableaux: rows weakly increase, columns strictly increase, entries <= N.
inline PackedPoly expand_schur(const Partition& lambda, int nvars) {
    PackedPoly out;
    const auto& rows = lambda.parts();
    if (lambda.length() > nvars) return out;
    if (rows.empty()) {
        out.emplace_back(0, 1);
        return out;
    }
    std::vector<std::vector<int>> tab(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        tab[r].assign(static_cast<std::size_t>(rows[r]), 0);
    std::function<void(std::size_t, std::size_t, std::uint64_t)> rec =
        [&](std::size_t r, std::size_t c, std::uint64_t key) {
            if (r == rows.size()) {
                out.emplace_back(key, 1);
                return;
            }
            std::size_t nr = r, nc = c + 1;
            if (nc >= tab[r].size()) {
                nr = r + 1;
                nc = 0;
            }
            int lo = 1;
            if (c > 0) lo = std::max(lo, tab[r][c - 1]);      // row weakly increasing
            if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);  // column strictly increasing
            for (int v = lo; v <= nvars; ++v) {
                tab[r][c] = v;
                rec(nr, nc, key + (std::uint64_t(1) << (4 * (v - 1))));
            }
        };
    rec(0, 0, 0);
    normalize(out);
    return out;
}

inline void expand_basis_element(Basis basis, const Partition& mu, int nvars,
                                 long long coeff, PackedPoly& out) {
    switch (basis) {
        case Basis::monomial:
            expand_monomial(mu, nvars, coeff, out);
            return;
        case Basis::schur: {
            for (const auto& [key, v] : expand_schur(mu, nvars))
                out.emplace_back(key, checked_mul(coeff, v));
            return;
        }
        case Basis::elementary:
        case Basis::complete:
        case Basis::power: {
            PackedPoly acc;
            acc.emplace_back(0, 1);
            for (int part : mu.parts()) {
                PackedPoly f = basis == Basis::elementary ? expand_elementary(part, nvars)
                             : basis == Basis::complete   ? expand_complete(part, nvars)
                                                          : expand_power(part, nvars);
                acc = poly_mul(acc, f);
            }
            for (const auto& [key, v] : acc) out.emplace_back(key, checked_mul(coeff, v));
            return;
        }
    }
    throw std::logic_error("expand_basis_element: bad basis");
}

inline long long integer_coefficient(const Rational& c) {
    if (!is_integer(c))
        throw std::invalid_argument("oracle: packed expansion needs integer coefficients");
    const Int num = numerator(c);
    if (num > Int(std::numeric_limits<long long>::max()) ||
        num < Int(std::numeric_limits<long long>::min()))
        throw std::overflow_error("oracle: coefficient overflow");
    return static_cast<long long>(num);
}

}  // namespace oracle_detail

/// Image of f under the packed representation; same content as
/// oracle_expand for integer-coefficient f, cheaper to compare in bulk.
inline PackedPoly oracle_expand_packed(const SymFunc& f, int nvars) {
    oracle_detail::check_box(nvars, f.degree());
    PackedPoly out;
    for (const auto& [mu, c] : f.terms())
        oracle_detail::expand_basis_element(f.basis(), mu, nvars,
                                            oracle_detail::integer_coefficient(c), out);
    oracle_detail::normalize(out);
    return out;
}

inline PackedPoly oracle_mul_packed(const PackedPoly& a, const PackedPoly& b) {
    return oracle_detail::poly_mul(a, b);
}

/// Image of f in the polynomial ring on nvars variables, with exact
/// rational coefficients. Faithful on the graded piece when
/// nvars >= degree(f).
inline OraclePoly oracle_expand(const SymFunc& f, int nvars) {
    oracle_detail::check_box(nvars, f.degree());
    OraclePoly out;
    for (const auto& [mu, c] : f.terms()) {
        PackedPoly keys;
        oracle_detail::expand_basis_element(f.basis(), mu, nvars, 1, keys);
        oracle_detail::normalize(keys);
        for (const auto& [key, count] : keys) {
            const Rational value = c * Rational(count);
            auto expo = oracle_detail::unpack(key, nvars);
            auto it = out.find(expo);
            if (it == out.end()) {
                out.emplace(std::move(expo), value);
            } else {
                it->second += value;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

inline OraclePoly oracle_mul(const OraclePoly& a, const OraclePoly& b) {
    OraclePoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            auto it = out.find(e);
            if (it == out.end()) {
                out.emplace(std::move(e), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

}  // namespace nakafock
