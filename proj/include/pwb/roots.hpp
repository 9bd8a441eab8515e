#pragma once

#include <cstdint>

#include "pwb/errors.hpp"
#include "pwb/poly.hpp"

namespace pwb {

struct RootFindReport {
    RootSet roots;
    double max_residual = 0.0;  ///< max_k |P(z_k)|
    int iterations = 0;
    bool converged = false;
};

/// Thrown by find_roots when the iteration cap is reached; carries the
/// partial result.
class RootNonConvergence : public NonConvergence {
public:
    RootNonConvergence(const std::string& what, RootFindReport partial)
        : NonConvergence(what), partial_(std::move(partial)) {}
    const RootFindReport& partial() const { return partial_; }

private:
    RootFindReport partial_;
};

/// Roots within this distance (times max(1, |z|)) are merged into one root
/// of higher multiplicity.
inline constexpr double kClusterRadius = 1e-6;

/// Zeros of P with multiplicity. The factor z^{k_0} is split off exactly; the
/// dense cofactor is solved by Aberth-Ehrlich simultaneous iteration started
/// on the circle of radius 1 + max |a_v / a_n|. Requires deg P >= 1.
RootFindReport find_roots(const SparsePolynomial& p, double tol = 1e-12, int max_iterations = 500);

struct DiskCount {
    int count = 0;                  ///< zeros of modulus < radius, with multiplicity
    double winding = 0.0;           ///< unrounded quadrature of (1/2pi) int Re(zP'/P) dtheta
    double mean_abs_log_derivative = 0.0;  ///< quadrature of int |zP'/P| d sigma
    double max_abs_log_derivative = 0.0;   ///< max of |zP'/P| on the quadrature grid
    bool sandwich_holds = false;    ///< count <= mean <= max (within 1e-6)
};

/// Argument-principle zero count on |z| = radius by the trapezoidal rule.
/// On the unit circle |zP'/P| = |P'/P|, so the companion quantities give the
/// integral bound  #{|z_k| < 1} <= int |P'/P| d sigma <= max |P'/P|.
///
/// Throws RangeError when quad_points < 4 deg P and ContourError when a root
/// lies within 1e-3 of the contour.
DiskCount count_roots_in_disk(const SparsePolynomial& p, double radius, int quad_points);

class ContourError : public std::runtime_error {
public:
    ContourError(const std::string& what, cplx root)
        : std::runtime_error(what), root_(root) {}
    cplx root() const { return root_; }

private:
    cplx root_;
};

inline constexpr double kContourGuard = 1e-3;

struct GovilReport {
    int degree = 0;
    double largest_root_modulus = 0.0;
    double lower = 0.0;        ///< n / (1 + |z_m|)
    double sampled_min = 0.0;  ///< min over samples of |P'/P| on the circle
    double sampled_max = 0.0;
    bool lower_holds = false;  ///< lower <= sampled_min + tol
    bool middle_holds = false; ///< sampled_min <= n + tol
    bool upper_holds = false;  ///< n <= sampled_max + tol
    bool passed() const { return lower_holds && middle_holds && upper_holds; }
};

/// n/(1+|z_m|) <= min_T |P'/P| <= n <= max_T |P'/P| for P with every zero in
/// the open unit disk, estimated on `samples` circle points (uniform grid
/// with a seeded random phase). Throws NotApplicable if some zero has
/// modulus >= 1.
GovilReport govil_chain_check(const SparsePolynomial& p, int samples, std::uint64_t seed,
                              double tol = 1e-6);

}  // namespace pwb
