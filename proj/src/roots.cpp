#include "pwb/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

namespace pwb {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct HornerResult {
    cplx value;
    cplx slope;
    double magnitude;  // sum |c_j| |z|^j, for the rounding-level residual test
};

HornerResult horner(const std::vector<cplx>& c, cplx z) {
    cplx v{}, d{};
    double mag = 0.0;
    const double az = std::abs(z);
    for (std::size_t j = c.size(); j-- > 0;) {
        d = d * z + v;
        v = v * z + c[j];
        mag = mag * az + std::abs(c[j]);
    }
    return {v, d, mag};
}

/// An r-fold root of Q is a simple root of Q^{(r-1)}; a few Newton steps on
/// that derivative from the cluster mean recover digits lost to the split.
cplx polish_cluster(std::vector<cplx> c, cplx center, int mult, double spread) {
    if (mult < 2) return center;
    for (int r = 1; r < mult; ++r) {
        for (std::size_t j = 1; j < c.size(); ++j) c[j - 1] = static_cast<double>(j) * c[j];
        c.pop_back();
    }
    const double eps = std::numeric_limits<double>::epsilon();
    cplx x = center;
    for (int it = 0; it < 20; ++it) {
        const HornerResult h = horner(c, x);
        if (h.slope == cplx{0.0, 0.0}) break;
        const cplx step = h.value / h.slope;
        x -= step;
        if (std::abs(step) <= 4.0 * eps * std::max(1.0, std::abs(x))) break;
    }
    // Keep the mean if Newton wandered off the cluster.
    if (!(std::abs(x - center) <= spread)) return center;
    return x;
}

bool root_order(const Root& x, const Root& y) {
    const double mx = std::abs(x.location), my = std::abs(y.location);
    if (mx != my) return mx < my;
    return std::arg(x.location) < std::arg(y.location);
}

}  // namespace

RootFindReport find_roots(const SparsePolynomial& p, double tol, int max_iterations) {
    if (p.degree() < 1) throw RangeError("find_roots: polynomial degree must be >= 1");
    if (!(tol > 0.0)) throw DomainError("find_roots: tolerance must be positive");

    const int k0 = p.lowest_exponent();
    std::vector<cplx> c;
    for (int j = k0; j <= p.degree(); ++j) c.push_back(0.0);
    for (const Term& t : p.terms()) c[static_cast<std::size_t>(t.exponent - k0)] = t.coefficient;
    const int d = static_cast<int>(c.size()) - 1;
    const double eps = std::numeric_limits<double>::epsilon();

    RootFindReport report;
    std::vector<cplx> z(static_cast<std::size_t>(d));
    bool all_done = true;
    if (d > 0) {
        double radius = 0.0;
        for (int j = 0; j < d; ++j) radius = std::max(radius, std::abs(c[j] / c[d]));
        radius += 1.0;
        for (int k = 0; k < d; ++k)
            z[k] = std::polar(radius, kTwoPi * k / d + 0.4 / d + 0.25);

        std::vector<char> done(static_cast<std::size_t>(d), 0);
        int it = 0;
        for (; it < max_iterations; ++it) {
            all_done = true;
            for (int k = 0; k < d; ++k) {
                if (done[k]) continue;
                const HornerResult h = horner(c, z[k]);
                if (std::abs(h.value) <= 4.0 * (d + 1) * eps * h.magnitude) {
                    done[k] = 1;
                    continue;
                }
                all_done = false;
                const cplx newton = h.value / h.slope;
                cplx repulsion{};
                for (int j = 0; j < d; ++j)
                    if (j != k) repulsion += 1.0 / (z[k] - z[j]);
                const cplx step = newton / (1.0 - newton * repulsion);
                z[k] -= step;
                if (std::abs(step) <= tol * std::max(1.0, std::abs(z[k]))) done[k] = 1;
            }
            if (all_done) break;
        }
        report.iterations = it + (all_done ? 1 : 0);
    }

    // Inclusion radii d |Q(z_k)| / |a_d prod_{j != k} (z_k - z_j)|, with the
    // residual padded to rounding level. A multiple root splits into a ring of
    // width ~ eps^{1/r} whose disks overlap.
    std::vector<double> incl(static_cast<std::size_t>(d), 0.0);
    for (int k = 0; k < d; ++k) {
        const HornerResult h = horner(c, z[k]);
        double denom = std::abs(c[d]);
        for (int j = 0; j < d; ++j)
            if (j != k && std::abs(z[k] - z[j]) > kClusterRadius * std::max(1.0, std::abs(z[k])))
                denom *= std::abs(z[k] - z[j]);
        incl[k] = d * (std::abs(h.value) + 2.0 * (d + 1) * eps * h.magnitude) / denom;
    }

    // Cluster cofactor roots into multiplicities (single linkage over
    // overlapping disks or points closer than kClusterRadius).
    std::vector<int> group(static_cast<std::size_t>(d), -1);
    int groups = 0;
    for (int k = 0; k < d; ++k) {
        if (group[k] >= 0) continue;
        group[k] = groups;
        std::vector<int> stack{k};
        while (!stack.empty()) {
            const int a = stack.back();
            stack.pop_back();
            for (int b = 0; b < d; ++b) {
                if (group[b] >= 0) continue;
                const double gap = std::abs(z[a] - z[b]);
                if (gap <= kClusterRadius * std::max(1.0, std::abs(z[a])) || gap <= incl[a] + incl[b]) {
                    group[b] = groups;
                    stack.push_back(b);
                }
            }
        }
        ++groups;
    }
    for (int g = 0; g < groups; ++g) {
        cplx sum{};
        int mult = 0;
        for (int k = 0; k < d; ++k)
            if (group[k] == g) {
                sum += z[k];
                ++mult;
            }
        const cplx center = sum / static_cast<double>(mult);
        double spread = 0.0;
        for (int k = 0; k < d; ++k)
            if (group[k] == g) spread = std::max(spread, std::abs(z[k] - center) + incl[k]);
        report.roots.roots.push_back({polish_cluster(c, center, mult, spread), mult, mult > 1});
    }
    if (k0 > 0) report.roots.roots.push_back({cplx{0.0, 0.0}, k0, false});
    std::sort(report.roots.roots.begin(), report.roots.roots.end(), root_order);

    for (const Root& r : report.roots.roots)
        report.max_residual = std::max(report.max_residual, std::abs(eval(p, r.location)));
    report.converged = all_done;
    if (!all_done)
        throw RootNonConvergence("find_roots: iteration cap of " + std::to_string(max_iterations) +
                                     " reached",
                                 report);
    return report;
}

DiskCount count_roots_in_disk(const SparsePolynomial& p, double radius, int quad_points) {
    if (!(radius > 0.0)) throw DomainError("count_roots_in_disk: radius must be positive");
    const int n = p.degree();
    if (n < 0) throw RangeError("count_roots_in_disk: zero polynomial");
    if (quad_points < std::max(4 * n, 1))
        throw RangeError("count_roots_in_disk: need at least 4 deg P quadrature points, got " +
                         std::to_string(quad_points));
    if (n >= 1) {
        const RootFindReport roots = find_roots(p);
        for (const Root& r : roots.roots.roots)
            if (std::abs(std::abs(r.location) - radius) < kContourGuard)
                throw ContourError("count_roots_in_disk: root at (" +
                                       std::to_string(r.location.real()) + ", " +
                                       std::to_string(r.location.imag()) +
                                       ") lies within 1e-3 of the contour",
                                   r.location);
    }

    const SparsePolynomial dp = derivative(p);
    double re_sum = 0.0, abs_sum = 0.0, abs_max = 0.0;
    for (int j = 0; j < quad_points; ++j) {
        const cplx z = std::polar(radius, kTwoPi * j / quad_points);
        const cplx q = z * eval(dp, z) / eval(p, z);
        re_sum += q.real();
        const double a = std::abs(q);
        abs_sum += a;
        abs_max = std::max(abs_max, a);
    }
    DiskCount out;
    out.winding = re_sum / quad_points;
    out.count = static_cast<int>(std::lround(out.winding));
    out.mean_abs_log_derivative = abs_sum / quad_points;
    out.max_abs_log_derivative = abs_max;
    out.sandwich_holds = out.count <= out.mean_abs_log_derivative + 1e-6 &&
                         out.mean_abs_log_derivative <= out.max_abs_log_derivative + 1e-6;
    return out;
}

GovilReport govil_chain_check(const SparsePolynomial& p, int samples, std::uint64_t seed,
                              double tol) {
    if (samples < 1) throw RangeError("govil_chain_check: samples must be >= 1");
    const RootFindReport roots = find_roots(p);
    GovilReport r;
    r.degree = p.degree();
    for (const Root& root : roots.roots.roots) {
        const double m = std::abs(root.location);
        if (m >= 1.0)
            throw NotApplicable("govil_chain_check: zero of modulus " + std::to_string(m) +
                                " outside the open unit disk");
        r.largest_root_modulus = std::max(r.largest_root_modulus, m);
    }
    r.lower = r.degree / (1.0 + r.largest_root_modulus);

    std::mt19937_64 rng(seed);
    const double phase = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const SparsePolynomial dp = derivative(p);
    r.sampled_min = std::numeric_limits<double>::infinity();
    r.sampled_max = 0.0;
    for (int j = 0; j < samples; ++j) {
        const cplx z = std::polar(1.0, kTwoPi * (j + phase) / samples);
        const double v = std::abs(eval(dp, z) / eval(p, z));
        r.sampled_min = std::min(r.sampled_min, v);
        r.sampled_max = std::max(r.sampled_max, v);
    }
    r.lower_holds = r.lower <= r.sampled_min + tol;
    r.middle_holds = r.sampled_min <= r.degree + tol;
    r.upper_holds = r.degree <= r.sampled_max + tol;
    return r;
}

}  // namespace pwb
