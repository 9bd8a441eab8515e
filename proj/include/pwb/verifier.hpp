#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pwb/certifier.hpp"
#include "pwb/poly.hpp"

namespace pwb {

struct Violation {
    cplx z{};
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Result of sampling one inequality lhs(z) <= rhs(z).
struct VerificationReport {
    std::string check_name;
    int samples = 0;
    double worst_ratio = 0.0;  ///< max lhs/rhs over samples with rhs > 0
    cplx worst_witness{};
    std::vector<Violation> violations;  ///< first kMaxStoredViolations only
    int violation_count = 0;
    bool passed = true;
    /// min over samples of rhs - lhs; reported by the strict-inequality check.
    std::optional<double> margin;
    /// Samples where lhs reaches rhs within the absolute tolerance.
    int equality_witnesses = 0;
};

inline constexpr std::size_t kMaxStoredViolations = 100;

/// Absolute slack used by the sampled checks: 1e-10 (1 + sum |a_v|).
double absolute_tolerance(const SparsePolynomial& p);

/// Landmarks {0, 1, -1, i, -i, -1/2} scaled by `radius`, a circle grid of
/// samples/8 points at `radius`, and the rest uniform by area in the disk of
/// that radius. Deterministic for a given seed.
std::vector<cplx> disk_samples(int samples, std::uint64_t seed, double radius = 1.0);

/// |zP'(z)| <= k_n |P(z)| on the closed disk. A zero of P away from the
/// origin is reported as a violation.
VerificationReport verify_pointwise_bernstein(const SparsePolynomial& p, int samples,
                                              std::uint64_t seed);

struct GridRow {
    double x, y;
    double lhs;    ///< |zP'(z)|
    double rhs;    ///< k_n |P(z)|
    double ratio;  ///< lhs / rhs, 0 when both vanish
};

/// Per-sample values behind verify_pointwise_bernstein, for CSV export.
std::vector<GridRow> pointwise_bernstein_grid(const SparsePolynomial& p, int samples,
                                              std::uint64_t seed);

/// |P'(z)| < k_n |P(z)| on |z| <= 1 - 1e-6. Requires k_0 = 0 and n >= 1;
/// throws NotApplicable otherwise. `margin` holds min (k_n|P| - |P'|).
VerificationReport verify_strict_interior(const SparsePolynomial& p, int samples,
                                          std::uint64_t seed);

/// |zP'| <= |k_n P - zP'| on the closed disk. Throws NotApplicable when P
/// has a zero of modulus < 1.
VerificationReport verify_aziz(const SparsePolynomial& p, int samples, std::uint64_t seed);

/// |zP'| <= min(|k_n P - zP'|, k_n |P|) on the closed disk. Applicable when
/// every zero has modulus >= 2, or when P passes check_condition (a
/// precomputed certificate may be supplied). Throws NotApplicable otherwise.
VerificationReport verify_combined_min(const SparsePolynomial& p, int samples, std::uint64_t seed,
                                       const Certificate* certificate = nullptr);

/// |P| = |rho_0| >= |rho_1| >= ... >= |rho_{k_n}| = |a_n z^{k_n}| at each
/// sample; the sparse chain over rho_{k_v} is a subsequence of this one.
VerificationReport verify_tail_chain(const SparsePolynomial& p, int samples, std::uint64_t seed);

/// max_T |P'| <= k_n max_T |P| on a grid of `samples` circle points.
VerificationReport verify_circle_bernstein(const SparsePolynomial& p, int samples,
                                           std::uint64_t seed);

/// (|p - q| <= |p|, Re(p/q) >= 1/2). Throws DomainError for q = 0.
std::pair<bool, bool> lemma1_equiv(cplx p, cplx q);

/// Divided-difference bound at (z, w) over the dense embedding of P.
/// Throws DomainError for z = 0 and RangeError for deg P < 1.
DividedDifferenceBound lemma2_check(const SparsePolynomial& p, cplx z, cplx w);

/// lemma2_check on `samples` seeded pairs with |z|, |w| <= 2.
VerificationReport verify_lemma2(const SparsePolynomial& p, int samples, std::uint64_t seed);

}  // namespace pwb
