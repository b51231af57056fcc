#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"
#include "symfunc.hpp"

namespace nakafock {

/// Coefficient-ring glue for TruncatedSeries. A ring needs +, -, *, ==,
/// a zero and a one, exact division by integers (for exp/log), and an
/// optional inverse used by negative powers.
template <class R>
struct RingOps;

template <>
struct RingOps<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& a) { return a == 0; }
    static Rational div_int(const Rational& a, long long k) {
        return a / Rational(k);
    }
    static Rational mul_int(const Rational& a, long long k) { return a * Rational(k); }
    static std::optional<Rational> try_invert(const Rational& a) {
        if (a == 0) return std::nullopt;
        return Rational(1) / a;
    }
};

// Lambda-valued series keep their coefficients in the power basis, where
// the ring product is the free one.
template <>
struct RingOps<SymFunc> {
    static SymFunc zero() { return SymFunc::zero(Basis::power); }
    static SymFunc one() { return SymFunc::one(Basis::power); }
    static bool is_zero(const SymFunc& a) { return a.is_zero(); }
    static SymFunc div_int(const SymFunc& a, long long k) {
        return a * Rational(Int(1), Int(k));
    }
    static SymFunc mul_int(const SymFunc& a, long long k) { return a * Rational(k); }
    static std::optional<SymFunc> try_invert(const SymFunc& a) {
        if (!a.is_constant() || a.is_zero()) return std::nullopt;
        return SymFunc::basis_element(a.basis(), Partition{},
                                      Rational(1) / a.constant_coeff());
    }
};

/// Formal power series truncated at a fixed order N: arithmetic is exact
/// modulo z^(N+1) and never consults coefficients beyond N.
template <class R>
class TruncatedSeries {
public:
    using Ops = RingOps<R>;

    explicit TruncatedSeries(int order)
        : order_(checked_order(order)),
          coeffs_(static_cast<std::size_t>(order) + 1, Ops::zero()) {}

    static TruncatedSeries constant(int order, R value) {
        TruncatedSeries s(order);
        s.coeffs_[0] = std::move(value);
        return s;
    }

    static TruncatedSeries one(int order) { return constant(order, Ops::one()); }

    int order() const { return order_; }

    const R& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

    void set(int k, R value) {
        coeffs_.at(static_cast<std::size_t>(k)) = std::move(value);
    }

    bool operator==(const TruncatedSeries& o) const {
        return order_ == o.order_ && coeffs_ == o.coeffs_;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        require_same_order(o);
        for (int k = 0; k <= order_; ++k)
            coeffs_[static_cast<std::size_t>(k)] =
                coeffs_[static_cast<std::size_t>(k)] + o.coeffs_[static_cast<std::size_t>(k)];
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        require_same_order(o);
        for (int k = 0; k <= order_; ++k)
            coeffs_[static_cast<std::size_t>(k)] =
                coeffs_[static_cast<std::size_t>(k)] - o.coeffs_[static_cast<std::size_t>(k)];
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        return a += b;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
        return a -= b;
    }
    friend TruncatedSeries operator-(TruncatedSeries a) {
        for (auto& c : a.coeffs_) c = Ops::zero() - c;
        return a;
    }

    /// Cauchy product truncated at the shared order.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_order(b);
        TruncatedSeries out(a.order_);
        for (int i = 0; i <= a.order_; ++i) {
            if (Ops::is_zero(a[i])) continue;
            for (int j = 0; i + j <= a.order_; ++j) {
                if (Ops::is_zero(b[j])) continue;
                out.coeffs_[static_cast<std::size_t>(i + j)] =
                    out.coeffs_[static_cast<std::size_t>(i + j)] + a[i] * b[j];
            }
        }
        return out;
    }

    /// exp(a) for a with zero constant term.
    TruncatedSeries exp() const {
        if (!Ops::is_zero(coeffs_[0]))
            throw std::domain_error("TruncatedSeries::exp: constant term must be 0");
        TruncatedSeries acc = one(order_);
        TruncatedSeries term = one(order_);
        for (int k = 1; k <= order_; ++k) {
            term = term * (*this);
            for (auto& c : term.coeffs_) c = Ops::div_int(c, k);
            acc += term;
        }
        return acc;
    }

    /// log(a) for a with constant term 1.
    TruncatedSeries log() const {
        if (!(coeffs_[0] == Ops::one()))
            throw std::domain_error("TruncatedSeries::log: constant term must be 1");
        TruncatedSeries u = *this;
        u.coeffs_[0] = Ops::zero();
        TruncatedSeries acc(order_);
        TruncatedSeries upow = one(order_);
        for (int k = 1; k <= order_; ++k) {
            upow = upow * u;
            TruncatedSeries term = upow;
            for (auto& c : term.coeffs_) {
                c = Ops::div_int(c, k);
                if (k % 2 == 0) c = Ops::zero() - c;
            }
            acc += term;
        }
        return acc;
    }

    /// d/dz; the order drops by one.
    TruncatedSeries derivative() const {
        if (order_ < 1)
            throw std::invalid_argument("TruncatedSeries::derivative: order must be >= 1");
        TruncatedSeries out(order_ - 1);
        for (int k = 0; k < order_; ++k)
            out.coeffs_[static_cast<std::size_t>(k)] =
                Ops::mul_int(coeffs_[static_cast<std::size_t>(k) + 1], k + 1);
        return out;
    }

    /// Multiplicative inverse; needs an invertible constant term.
    TruncatedSeries inverse() const {
        auto c0 = Ops::try_invert(coeffs_[0]);
        if (!c0)
            throw std::domain_error(
                "TruncatedSeries::inverse: constant term is not invertible");
        TruncatedSeries out(order_);
        out.coeffs_[0] = *c0;
        for (int k = 1; k <= order_; ++k) {
            R acc = Ops::zero();
            for (int j = 1; j <= k; ++j)
                acc = acc + coeffs_[static_cast<std::size_t>(j)] *
                                out.coeffs_[static_cast<std::size_t>(k - j)];
            out.coeffs_[static_cast<std::size_t>(k)] = (Ops::zero() - acc) * *c0;
        }
        return out;
    }

    /// Integer power by repeated squaring; negative exponents go through
    /// inverse() and therefore need an invertible constant term.
    TruncatedSeries pow(long long k) const {
        if (k < 0) return inverse().pow(-k);
        TruncatedSeries acc = one(order_);
        TruncatedSeries base = *this;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

private:
    static int checked_order(int order) {
        if (order < 0)
            throw std::invalid_argument("TruncatedSeries: order must be >= 0");
        return order;
    }

    void require_same_order(const TruncatedSeries& o) const {
        if (order_ != o.order_)
            throw std::invalid_argument("TruncatedSeries: order mismatch (" +
                                        std::to_string(order_) + " vs " +
                                        std::to_string(o.order_) + ")");
    }

    int order_;
    std::vector<R> coeffs_;
};

using RationalSeries = TruncatedSeries<Rational>;
using LambdaSeries = TruncatedSeries<SymFunc>;

}  // namespace nakafock
