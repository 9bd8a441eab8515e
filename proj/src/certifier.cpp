#include "pwb/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pwb/errors.hpp"

namespace pwb {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "Certified";
        case Verdict::CertifiedTight: return "CertifiedTight";
        case Verdict::Rejected: return "Rejected";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

Certificate check_condition(const SparsePolynomial& p, double tol) {
    if (p.is_zero()) throw DomainError("check_condition: zero polynomial");
    if (!(tol > 0.0)) throw DomainError("check_condition: tolerance must be positive");

    Certificate cert;
    cert.tolerance_used = tol;
    double floor = std::numeric_limits<double>::infinity();
    bool rejected = false;
    for (int nu = 0; nu < p.term_count(); ++nu) {
        MinResult m = certified_min(from_ratio_tail(p, nu), tol);
        floor = std::min(floor, m.lower_bound);
        if (m.witness_value < 0.5 - tol) rejected = true;
        if (!m.converged) cert.inconclusive_nu.push_back(nu);
        cert.per_nu.push_back({nu, m});
    }
    cert.margin = floor - 0.5;

    if (rejected)
        cert.verdict = Verdict::Rejected;
    else if (!cert.inconclusive_nu.empty())
        cert.verdict = Verdict::Inconclusive;
    else if (cert.margin >= tol)
        cert.verdict = Verdict::Certified;
    else if (std::abs(cert.margin) < tol)
        cert.verdict = Verdict::CertifiedTight;
    else
        cert.verdict = Verdict::Inconclusive;
    return cert;
}

ConvexityVerdict check_convexity_corollary(const SparsePolynomial& p) {
    if (p.is_zero() || !p.is_dense())
        throw NotApplicable("convexity test needs exponents 0, 1, ..., n");
    std::vector<double> a;
    for (const Term& t : p.terms()) {
        if (t.coefficient.imag() != 0.0 || !(t.coefficient.real() > 0.0))
            throw NotApplicable("convexity test needs real positive coefficients");
        a.push_back(t.coefficient.real());
    }
    const int n = static_cast<int>(a.size()) - 1;

    ConvexityVerdict out;
    for (int v = 0; v <= n; ++v) {
        double d2;
        if (v <= n - 2)
            d2 = a[v + 2] - 2.0 * a[v + 1] + a[v];
        else if (v == n - 1)
            d2 = a[n - 1] - 2.0 * a[n];
        else
            d2 = a[n];
        out.second_differences.push_back(d2);
        const bool monotone = v == n || a[v] >= a[v + 1];
        if ((d2 < 0.0 || !monotone) && !out.failing_index) out.failing_index = v;
    }
    out.passes = !out.failing_index.has_value();
    return out;
}

SparsePolynomial build_fejer_family(int n) {
    if (n < 2) throw RangeError("build_fejer_family: n must be >= 2, got " + std::to_string(n));
    std::vector<Term> terms;
    for (int k = 0; k <= n; ++k) terms.push_back({k, cplx(n + 1 - k, 0.0)});
    return SparsePolynomial(std::move(terms));
}

double enestrom_kakeya_bound(const SparsePolynomial& p) {
    if (p.degree() < 1 || !p.is_dense())
        throw NotApplicable("Enestrom-Kakeya bound needs a dense polynomial of degree >= 1");
    double r = 0.0;
    for (std::size_t k = 0; k < p.terms().size(); ++k) {
        const cplx c = p[k].coefficient;
        if (c.imag() != 0.0 || !(c.real() > 0.0))
            throw NotApplicable("Enestrom-Kakeya bound needs real positive coefficients");
        if (k > 0) r = std::max(r, p[k - 1].coefficient.real() / c.real());
    }
    return r;
}

}  // namespace pwb
