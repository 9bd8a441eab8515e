#include "pwb/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "pwb/errors.hpp"
#include "pwb/roots.hpp"

namespace pwb {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Folds samples of lhs <= rhs + tol into a report.
class Tally {
public:
    Tally(std::string name, double tol) : tol_(tol) { report_.check_name = std::move(name); }

    void add(cplx z, double lhs, double rhs) {
        ++report_.samples;
        if (rhs > 0.0) {
            const double ratio = lhs / rhs;
            if (ratio > report_.worst_ratio || !seen_ratio_) {
                report_.worst_ratio = ratio;
                report_.worst_witness = z;
                seen_ratio_ = true;
            }
        }
        if (rhs > 0.0 && lhs >= rhs - tol_) ++report_.equality_witnesses;
        if (lhs > rhs + tol_) violate(z, lhs, rhs);
    }

    void violate(cplx z, double lhs, double rhs) {
        ++report_.violation_count;
        if (report_.violations.size() < kMaxStoredViolations)
            report_.violations.push_back({z, lhs, rhs});
    }

    VerificationReport finish() {
        report_.passed = report_.violation_count == 0;
        return std::move(report_);
    }

private:
    VerificationReport report_;
    double tol_;
    bool seen_ratio_ = false;
};

double min_root_modulus(const SparsePolynomial& p) {
    if (p.degree() < 1) return std::numeric_limits<double>::infinity();
    const RootFindReport r = find_roots(p);
    return std::abs(r.roots.roots.front().location);
}

// Slack for deciding that a computed root is on or outside a circle.
constexpr double kRootModulusSlack = 1e-9;

}  // namespace

double absolute_tolerance(const SparsePolynomial& p) {
    return 1e-10 * (1.0 + p.coefficient_mass());
}

std::vector<cplx> disk_samples(int samples, std::uint64_t seed, double radius) {
    if (samples < 1) throw RangeError("samples must be >= 1");
    const cplx landmarks[] = {{0.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0},
                              {0.0, 1.0}, {0.0, -1.0}, {-0.5, 0.0}};
    std::vector<cplx> out;
    out.reserve(static_cast<std::size_t>(samples));
    for (cplx l : landmarks) {
        if (static_cast<int>(out.size()) == samples) return out;
        out.push_back(radius * l);
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int circle = std::min(samples / 8, samples - static_cast<int>(out.size()));
    const double phase = unit(rng);
    for (int j = 0; j < circle; ++j)
        out.push_back(std::polar(radius, kTwoPi * (j + phase) / circle));
    while (static_cast<int>(out.size()) < samples) {
        const double r = radius * std::sqrt(unit(rng));
        const double theta = kTwoPi * unit(rng);
        out.push_back(std::polar(r, theta));
    }
    return out;
}

std::vector<GridRow> pointwise_bernstein_grid(const SparsePolynomial& p, int samples,
                                              std::uint64_t seed) {
    const SparsePolynomial dp = derivative(p);
    const double kn = std::max(p.degree(), 0);
    std::vector<GridRow> rows;
    for (cplx z : disk_samples(samples, seed)) {
        const double lhs = std::abs(z * eval(dp, z));
        const double rhs = kn * std::abs(eval(p, z));
        const double ratio = rhs > 0.0 ? lhs / rhs : (lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
        rows.push_back({z.real(), z.imag(), lhs, rhs, ratio});
    }
    return rows;
}

VerificationReport verify_pointwise_bernstein(const SparsePolynomial& p, int samples,
                                              std::uint64_t seed) {
    const double tol = absolute_tolerance(p);
    Tally tally("pointwise_bernstein", tol);
    for (const GridRow& row : pointwise_bernstein_grid(p, samples, seed)) {
        const cplx z{row.x, row.y};
        const double kn = std::max(p.degree(), 0);
        const bool zero_of_p = kn > 0 ? row.rhs / kn < kZeroGuard : std::abs(eval(p, z)) < kZeroGuard;
        if (z != cplx{0.0, 0.0} && zero_of_p) {
            // P vanishes away from the origin: zero-freeness fails.
            tally.violate(z, row.lhs, row.rhs);
            continue;
        }
        tally.add(z, row.lhs, row.rhs);
    }
    return tally.finish();
}

VerificationReport verify_strict_interior(const SparsePolynomial& p, int samples,
                                          std::uint64_t seed) {
    if (p.is_zero() || p.lowest_exponent() != 0 || p.term_count() < 2)
        throw NotApplicable("strict interior check needs k_0 = 0 and n >= 1");
    const SparsePolynomial dp = derivative(p);
    const double kn = p.degree();
    Tally tally("strict_interior", 0.0);
    double margin = std::numeric_limits<double>::infinity();
    for (cplx z : disk_samples(samples, seed, 1.0 - 1e-6)) {
        const double lhs = std::abs(eval(dp, z));
        const double rhs = kn * std::abs(eval(p, z));
        margin = std::min(margin, rhs - lhs);
        tally.add(z, lhs, rhs);
        // Strict: equality is already a failure.
        if (!(lhs < rhs) && !(lhs > rhs)) tally.violate(z, lhs, rhs);
    }
    VerificationReport r = tally.finish();
    r.margin = margin;
    r.passed = r.passed && margin > 0.0;
    return r;
}

VerificationReport verify_aziz(const SparsePolynomial& p, int samples, std::uint64_t seed) {
    const double m = min_root_modulus(p);
    if (m < 1.0 - kRootModulusSlack)
        throw NotApplicable("Aziz inequality needs every zero in |z| >= 1; found modulus " +
                            std::to_string(m));
    const SparsePolynomial dp = derivative(p);
    const double kn = std::max(p.degree(), 0);
    Tally tally("aziz", absolute_tolerance(p));
    for (cplx z : disk_samples(samples, seed)) {
        const cplx pz = eval(p, z);
        const cplx zdp = z * eval(dp, z);
        tally.add(z, std::abs(zdp), std::abs(kn * pz - zdp));
    }
    return tally.finish();
}

VerificationReport verify_combined_min(const SparsePolynomial& p, int samples, std::uint64_t seed,
                                       const Certificate* certificate) {
    bool applicable = min_root_modulus(p) >= 2.0 - kRootModulusSlack;
    // Certification only supplies zero-freeness away from an origin zero of order k_0.
    if (!applicable && p.lowest_exponent() == 0) {
        if (certificate)
            applicable = certificate->accepted();
        else
            applicable = check_condition(p).accepted();
    }
    if (!applicable)
        throw NotApplicable("combined bound needs zeros in |z| >= 2, or a certified polynomial with k_0 = 0");
    const SparsePolynomial dp = derivative(p);
    const double kn = std::max(p.degree(), 0);
    Tally tally("combined_min", absolute_tolerance(p));
    for (cplx z : disk_samples(samples, seed)) {
        const cplx pz = eval(p, z);
        const cplx zdp = z * eval(dp, z);
        tally.add(z, std::abs(zdp), std::min(std::abs(kn * pz - zdp), kn * std::abs(pz)));
    }
    return tally.finish();
}

VerificationReport verify_tail_chain(const SparsePolynomial& p, int samples, std::uint64_t seed) {
    Tally tally("tail_chain", absolute_tolerance(p));
    if (p.is_zero()) return tally.finish();
    const std::vector<cplx> c = p.dense();
    const std::size_t top = c.size();
    std::vector<double> chain(top);
    std::vector<cplx> powers(top);
    for (cplx z : disk_samples(samples, seed)) {
        cplx zj{1.0, 0.0};
        for (std::size_t j = 0; j < top; ++j) {
            powers[j] = zj;
            zj *= z;
        }
        // chain[j] = |rho_j(P)(z)|, suffix sums from the top exponent down.
        cplx suffix{};
        for (std::size_t j = top; j-- > 0;) {
            suffix += c[j] * powers[j];
            chain[j] = std::abs(suffix);
        }
        // One sample per point: the worst consecutive step.
        std::size_t worst = 0;
        double worst_excess = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j + 1 < top; ++j) {
            const double excess = chain[j + 1] - chain[j];
            if (excess > worst_excess) {
                worst_excess = excess;
                worst = j;
            }
        }
        if (top == 1)
            tally.add(z, chain[0], chain[0]);
        else
            tally.add(z, chain[worst + 1], chain[worst]);
    }
    return tally.finish();
}

VerificationReport verify_circle_bernstein(const SparsePolynomial& p, int samples,
                                           std::uint64_t seed) {
    if (samples < 1) throw RangeError("samples must be >= 1");
    const SparsePolynomial dp = derivative(p);
    std::mt19937_64 rng(seed);
    const double phase = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    double max_p = 0.0, max_dp = 0.0;
    cplx witness{};
    for (int j = 0; j < samples; ++j) {
        const cplx z = std::polar(1.0, kTwoPi * (j + phase) / samples);
        max_p = std::max(max_p, std::abs(eval(p, z)));
        const double d = std::abs(eval(dp, z));
        if (d > max_dp || j == 0) {
            max_dp = d;
            witness = z;
        }
    }
    const double kn = std::max(p.degree(), 0);
    Tally tally("circle_bernstein", absolute_tolerance(p));
    tally.add(witness, max_dp, kn * max_p);
    VerificationReport r = tally.finish();
    r.samples = samples;
    return r;
}

std::pair<bool, bool> lemma1_equiv(cplx p, cplx q) {
    if (q == cplx{0.0, 0.0}) throw DomainError("lemma1_equiv: q must be nonzero");
    return {std::abs(p - q) <= std::abs(p), (p / q).real() >= 0.5};
}

DividedDifferenceBound lemma2_check(const SparsePolynomial& p, cplx z, cplx w) {
    if (z == cplx{0.0, 0.0}) throw DomainError("lemma2_check: z must be nonzero");
    if (p.degree() < 1) throw RangeError("lemma2_check: degree must be >= 1");
    DividedDifferenceBound b;
    b.lhs = std::abs(divided_difference(p, z, w));
    b.factor = lemma2_factor(z, w, p.degree());
    b.tail_max = partial_sum_tail_max(p, z);
    return b;
}

VerificationReport verify_lemma2(const SparsePolynomial& p, int samples, std::uint64_t seed) {
    if (samples < 1) throw RangeError("samples must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto draw = [&] { return std::polar(2.0 * std::sqrt(unit(rng)), kTwoPi * unit(rng)); };
    Tally tally("divided_difference", 1e-10);
    for (int s = 0; s < samples; ++s) {
        cplx z = draw();
        const cplx w = draw();
        if (z == cplx{0.0, 0.0}) z = cplx{1.0, 0.0};
        const DividedDifferenceBound b = lemma2_check(p, z, w);
        tally.add(z, b.lhs, b.rhs());
    }
    return tally.finish();
}

}  // namespace pwb
