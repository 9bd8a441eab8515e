#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "pwb/poly.hpp"
#include "pwb/trig_min.hpp"

namespace pwb {

enum class Verdict { Certified, CertifiedTight, Rejected, Inconclusive };

std::string_view to_string(Verdict v);

struct NuResult {
    int nu = 0;
    MinResult min;
};

/// Outcome of checking min_{|t|<=1} Re tail_v(t) >= 1/2 for every v.
///
/// Verdicts, in order of precedence:
///   Rejected       some witness_value < 1/2 - tolerance (a concrete point)
///   Inconclusive   some minimization did not converge
///   Certified      margin >= tolerance
///   CertifiedTight |margin| < tolerance
///   Inconclusive   otherwise
struct Certificate {
    std::vector<NuResult> per_nu;
    double margin = 0.0;  ///< min_v lower_bound - 1/2
    Verdict verdict = Verdict::Inconclusive;
    double tolerance_used = 0.0;
    std::vector<int> inconclusive_nu;

    bool accepted() const {
        return verdict == Verdict::Certified || verdict == Verdict::CertifiedTight;
    }
};

inline constexpr double kDefaultTolerance = 1e-9;

Certificate check_condition(const SparsePolynomial& p, double tol = kDefaultTolerance);

struct ConvexityVerdict {
    bool passes = false;
    std::optional<int> failing_index;
    std::vector<double> second_differences;
};

/// Convex-coefficient sufficient test: a_0 >= a_1 >= ... >= a_n > 0 and
/// D2(a_v) >= 0 with D2(a_v) = a_{v+2} - 2a_{v+1} + a_v (v <= n-2),
/// a_{n-1} - 2a_n (v = n-1), a_n (v = n). failing_index is the first v at
/// which either monotonicity or convexity breaks.
///
/// Throws NotApplicable unless exponents are 0..n and coefficients real and
/// positive.
ConvexityVerdict check_convexity_corollary(const SparsePolynomial& p);

/// sum_{k=0}^{n} (n + 1 - k) z^k. Throws RangeError for n < 2.
SparsePolynomial build_fejer_family(int n);

/// max_{0<=k<n} a_k / a_{k+1}; every zero of a polynomial with positive
/// coefficients lies in |z| <= this value. Throws NotApplicable unless P is
/// dense with real positive coefficients and degree >= 1.
double enestrom_kakeya_bound(const SparsePolynomial& p);

}  // namespace pwb
