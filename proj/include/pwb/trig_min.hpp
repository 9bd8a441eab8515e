#pragma once

#include <cstdint>
#include <vector>

#include "pwb/poly.hpp"

namespace pwb {

struct TrigTerm {
    int frequency = 0;
    cplx coefficient{};
};

/// T(x) = Re sum_j c_j e^{i m_j x} with m_0 = 0, c_0 = 1 and strictly
/// increasing frequencies. Terms with c_j = 0 are allowed past the first.
class TrigTail {
public:
    /// Throws FormatError when the invariants above do not hold.
    explicit TrigTail(std::vector<TrigTerm> terms);

    const std::vector<TrigTerm>& terms() const { return terms_; }
    int max_frequency() const { return terms_.back().frequency; }
    bool is_constant() const { return terms_.size() == 1; }

    double operator()(double x) const;

    /// sum_j m_j^order |c_j|; order 1 is the Lipschitz constant of T.
    double derivative_bound(int order) const;

private:
    std::vector<TrigTerm> terms_;
};

struct MinResult {
    double lower_bound = 0.0;   ///< certified: min_x T(x) >= lower_bound
    double witness_x = 0.0;     ///< in [0, 2 pi)
    double witness_value = 0.0; ///< T(witness_x)
    double gap = 0.0;           ///< witness_value - lower_bound
    bool converged = false;     ///< gap <= requested tolerance
    int rounds = 0;
    std::int64_t evaluations = 0;
};

/// Tail sum_{j=0}^{n-v} (a_{j+v}/a_v) t^{k_{j+v}-k_v} restricted to t = e^{ix}.
/// Throws RangeError unless 0 <= nu <= n.
TrigTail from_ratio_tail(const SparsePolynomial& p, int nu);

/// Certified lower bound for min over [0, 2 pi) of T.
///
/// Starts from a uniform grid of 8 (max frequency + 1) cells and bisects
/// every cell whose bound is not yet within reach of the best sample, for at
/// most 40 rounds. A cell of width h with endpoint values f_a, f_b is bounded
/// below by the larger of (f_a + f_b)/2 - L h/2 (L = sum m|c|) and
/// min(f_a, f_b) - M_2 h^2/8 (M_2 = sum m^2|c|). Once T'' is certified
/// positive on a cell, the cell minimum is located by safeguarded Newton and
/// bounded through strong convexity, which makes the reported bound
/// insensitive to where the grid happens to fall. Every bound is reduced by
/// a floating-point evaluation allowance.
///
/// On non-convergence the result carries converged = false with the best
/// bounds found. Throws DomainError for tol <= 0.
MinResult certified_min(const TrigTail& t, double tol);

/// Minimum of Re sum_j (a_{j+v}/a_v) t^{k_{j+v}-k_v} over `samples` seeded
/// points t drawn uniformly by area from the open unit disk.
double interior_spot_check(const SparsePolynomial& p, int nu, int samples, std::uint64_t seed);

}  // namespace pwb
