#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace nakafock {

// Dimension and grading bookkeeping for the moduli spaces M(n) of rank-r
// framed sheaves with fixed first Chern class: dim M(n) = 2rn + b with
// b = -(r-1) * (c^2 integral).

struct ModuliParams {
    int rank = 1;
    long long c_squared = 0;
    long long n = 0;

    ModuliParams(int rank_, long long c_squared_, long long n_)
        : rank(rank_), c_squared(c_squared_), n(n_) {
        if (rank < 1) throw std::invalid_argument("ModuliParams: rank must be >= 1");
    }

    long long b() const { return -static_cast<long long>(rank - 1) * c_squared; }
};

inline long long moduli_dim(const ModuliParams& p) {
    return 2ll * p.rank * p.n + p.b();
}

/// Fiber dimension of the Hilbert-Chow style projection over a point with
/// the given punctual multiplicities: sum_j (r m_j - 1), which must agree
/// with r * (sum m_j) - (number of points).
inline long long quot_fiber_dim(int r, const std::vector<int>& multiplicities) {
    if (r < 1) throw std::invalid_argument("quot_fiber_dim: r must be >= 1");
    long long total = 0, sum = 0;
    for (int m : multiplicities) {
        if (m < 1) throw std::invalid_argument("quot_fiber_dim: multiplicities must be >= 1");
        total += static_cast<long long>(r) * m - 1;
        sum += m;
    }
    const long long alt = r * sum - static_cast<long long>(multiplicities.size());
    if (total != alt) throw std::logic_error("quot_fiber_dim: dual expressions disagree");
    return total;
}

enum class CycleMode { family, fixed };

/// Dimension of the length-k curve-supported cycle: 2rs + rk over the
/// whole regular stratum, rk with the double dual fixed.
inline long long cycle_dims(int r, int s, int k, CycleMode mode) {
    if (r < 1 || s < 0 || k < 0)
        throw std::invalid_argument("cycle_dims: need r >= 1, s >= 0, k >= 0");
    return mode == CycleMode::family ? 2ll * r * s + static_cast<long long>(r) * k
                                     : static_cast<long long>(r) * k;
}

struct DegreeShift {
    int i = 0;          // operator index, nonzero
    int alpha_deg = 0;  // homology degree of the decorating class, even
};

/// Homology degree as an affine-linear function of the moduli index n.
struct LinearDegree {
    long long n_coeff = 0;
    long long constant = 0;

    bool operator==(const LinearDegree& o) const {
        return n_coeff == o.n_coeff && constant == o.constant;
    }

    std::string str() const {
        return std::to_string(n_coeff) + "n" + (constant < 0 ? "" : "+") +
               std::to_string(constant);
    }
};

struct ShiftReport {
    int rank = 1;
    int i = 0;
    int alpha_deg = 0;
    long long shift = 0;          // j-shift of the correspondence
    LinearDegree source_middle;   // middle degree of M(n+i), as a function of n
    LinearDegree image;           // where the middle degree lands in M(n)
    LinearDegree target_middle;   // middle degree of M(n)
    bool preserved = false;
};

/// The index-i operator maps H_j(M(n+i)) to H_(j + alpha_deg - 2ri - 2)(M(n)),
/// for either sign of i. Checked symbolically in n: the middle degree
/// 2r(n+i) lands on 2rn exactly when alpha_deg = 2.
inline ShiftReport degree_shift_check(int r, int i, int alpha_deg) {
    if (r < 1) throw std::invalid_argument("degree_shift_check: r must be >= 1");
    if (i == 0) throw std::invalid_argument("degree_shift_check: i must be nonzero");
    if (alpha_deg < 0 || alpha_deg % 2 != 0)
        throw std::invalid_argument("degree_shift_check: alpha_deg must be even and >= 0");
    ShiftReport rep;
    rep.rank = r;
    rep.i = i;
    rep.alpha_deg = alpha_deg;
    rep.shift = static_cast<long long>(alpha_deg) - 2ll * r * i - 2;
    rep.source_middle = {2ll * r, 2ll * r * i};
    rep.image = {rep.source_middle.n_coeff, rep.source_middle.constant + rep.shift};
    rep.target_middle = {2ll * r, 0};
    rep.preserved = rep.image == rep.target_middle;
    return rep;
}

/// Dimension as a function of n and b: coeff_n * n + coeff_b * b + constant.
struct CorrespondenceDim {
    long long n_coeff = 0;
    long long b_coeff = 0;
    long long constant = 0;

    bool operator==(const CorrespondenceDim& o) const {
        return n_coeff == o.n_coeff && b_coeff == o.b_coeff && constant == o.constant;
    }

    std::string str() const {
        return std::to_string(n_coeff) + "n+" + std::to_string(b_coeff) + "b" +
               (constant < 0 ? "" : "+") + std::to_string(constant);
    }
};

struct CorrespondenceDimReport {
    int rank = 1;
    int i = 0;
    CorrespondenceDim stated;      // 2rn + b + r + 1 for i > 0, 2rn + b - r|i| + 1 for i < 0
    CorrespondenceDim consistent;  // 2rn + b + ri + 1, forced by the degree shifts
    bool agree = false;
};

/// The stated dimension of the index-i correspondence cycle disagrees with
/// the one the degree shifts force whenever i > 1; this surfaces both
/// instead of committing to either.
inline CorrespondenceDimReport correspondence_dim_check(int r, int i) {
    if (r < 1) throw std::invalid_argument("correspondence_dim_check: r must be >= 1");
    if (i == 0) throw std::invalid_argument("correspondence_dim_check: i must be nonzero");
    CorrespondenceDimReport rep;
    rep.rank = r;
    rep.i = i;
    rep.stated = {2ll * r, 1,
                  i > 0 ? static_cast<long long>(r) + 1 : static_cast<long long>(r) * i + 1};
    rep.consistent = {2ll * r, 1, static_cast<long long>(r) * i + 1};
    rep.agree = rep.stated == rep.consistent;
    return rep;
}

}  // namespace nakafock
