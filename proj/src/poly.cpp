#include "pwb/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pwb/errors.hpp"

namespace pwb {

SparsePolynomial::SparsePolynomial(std::vector<Term> terms) : terms_(std::move(terms)) {
    for (std::size_t v = 0; v < terms_.size(); ++v) {
        const Term& t = terms_[v];
        if (t.exponent < 0)
            throw FormatError("term " + std::to_string(v) + ": negative exponent");
        if (t.coefficient == cplx{0.0, 0.0})
            throw FormatError("term " + std::to_string(v) + ": zero coefficient");
        if (!std::isfinite(t.coefficient.real()) || !std::isfinite(t.coefficient.imag()))
            throw FormatError("term " + std::to_string(v) + ": non-finite coefficient");
        if (v > 0 && t.exponent <= terms_[v - 1].exponent)
            throw FormatError("term " + std::to_string(v) + ": exponents must be strictly increasing");
    }
}

SparsePolynomial SparsePolynomial::from_dense(std::span<const cplx> coefficients) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < coefficients.size(); ++j)
        if (coefficients[j] != cplx{0.0, 0.0})
            terms.push_back({static_cast<int>(j), coefficients[j]});
    return SparsePolynomial(std::move(terms));
}

SparsePolynomial SparsePolynomial::from_roots(std::span<const cplx> roots, cplx leading) {
    std::vector<cplx> c{leading};
    for (cplx r : roots) {
        // multiply by (z - r)
        c.push_back(0.0);
        for (std::size_t j = c.size() - 1; j > 0; --j)
            c[j] = c[j - 1] - r * c[j];
        c[0] = -r * c[0];
    }
    return from_dense(c);
}

std::vector<cplx> SparsePolynomial::dense() const {
    std::vector<cplx> c(static_cast<std::size_t>(degree() + 1), cplx{});
    for (const Term& t : terms_)
        c[static_cast<std::size_t>(t.exponent)] = t.coefficient;
    return c;
}

bool SparsePolynomial::is_dense() const {
    for (std::size_t v = 0; v < terms_.size(); ++v)
        if (terms_[v].exponent != static_cast<int>(v)) return false;
    return true;
}

double SparsePolynomial::coefficient_mass() const {
    double s = 0.0;
    for (const Term& t : terms_) s += std::abs(t.coefficient);
    return s;
}

int RootSet::total_multiplicity() const {
    int s = 0;
    for (const Root& r : roots) s += r.multiplicity;
    return s;
}

double DividedDifferenceBound::ratio() const {
    const double r = rhs();
    if (r > 0.0) return lhs / r;
    return lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

cplx ipow(cplx z, int k) {
    cplx result{1.0, 0.0};
    cplx base = z;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

cplx eval(const SparsePolynomial& p, cplx z) {
    const auto& t = p.terms();
    if (t.empty()) return 0.0;
    // Horner across exponent gaps, highest term first.
    cplx acc = t.back().coefficient;
    for (std::size_t v = t.size() - 1; v > 0; --v) {
        acc = acc * ipow(z, t[v].exponent - t[v - 1].exponent) + t[v - 1].coefficient;
    }
    return acc * ipow(z, t.front().exponent);
}

SparsePolynomial derivative(const SparsePolynomial& p) {
    std::vector<Term> out;
    out.reserve(p.terms().size());
    for (const Term& t : p.terms()) {
        if (t.exponent == 0) continue;
        out.push_back({t.exponent - 1, static_cast<double>(t.exponent) * t.coefficient});
    }
    return SparsePolynomial(std::move(out));
}

SparsePolynomial tail(const SparsePolynomial& p, int k) {
    if (p.is_zero() || k < 0 || k > p.degree())
        throw RangeError("tail index " + std::to_string(k) + " outside [0, " +
                         std::to_string(p.degree()) + "]");
    std::vector<Term> out;
    for (const Term& t : p.terms())
        if (t.exponent >= k) out.push_back(t);
    return SparsePolynomial(std::move(out));
}

cplx log_derivative(const SparsePolynomial& p, cplx z) {
    const cplx value = eval(p, z);
    if (!(std::abs(value) >= kZeroGuard))
        throw PoleError("log_derivative: P vanishes at the evaluation point", z);
    return z * eval(derivative(p), z) / value;
}

double partial_fraction_real(const RootSet& roots, int n, cplx z) {
    const double z2 = std::norm(z);
    double sum = 0.0;
    for (const Root& r : roots.roots) {
        const double d2 = std::norm(z - r.location);
        if (!(d2 >= kZeroGuard))
            throw PoleError("partial_fraction_real: z coincides with a root", z);
        sum += r.multiplicity * (z2 - std::norm(r.location)) / d2;
    }
    return 0.5 * n + 0.5 * sum;
}

cplx divided_difference(const SparsePolynomial& p, cplx z, cplx w) {
    if (z == cplx{0.0, 0.0}) throw DomainError("divided_difference: z must be nonzero");
    if (z == w) return z * eval(derivative(p), z);
    return z * (eval(p, z) - eval(p, w)) / (z - w);
}

namespace {

/// P(z) - S_k(z) = sum_{j>k} c_j z^j for k = 0..n-1, accumulated from the top
/// so that small tails keep their relative accuracy.
std::vector<cplx> partial_sum_tails(const SparsePolynomial& p, cplx z) {
    const std::vector<cplx> c = p.dense();
    const int n = p.degree();
    std::vector<cplx> zp(static_cast<std::size_t>(n + 1));
    zp[0] = 1.0;
    for (int j = 1; j <= n; ++j) zp[j] = zp[j - 1] * z;
    std::vector<cplx> tails(static_cast<std::size_t>(std::max(n, 0)));
    cplx acc{0.0, 0.0};
    for (int k = n - 1; k >= 0; --k) {
        acc += c[static_cast<std::size_t>(k + 1)] * zp[k + 1];
        tails[k] = acc;
    }
    return tails;
}

}  // namespace

cplx divided_difference_expansion(const SparsePolynomial& p, cplx z, cplx w) {
    if (z == cplx{0.0, 0.0}) throw DomainError("divided_difference_expansion: z must be nonzero");
    if (p.degree() < 1) return 0.0;
    const std::vector<cplx> tails = partial_sum_tails(p, z);
    const cplx q = w / z;
    cplx acc{0.0, 0.0};
    for (std::size_t k = tails.size(); k-- > 0;) acc = acc * q + tails[k];
    return acc;
}

double partial_sum_tail_max(const SparsePolynomial& p, cplx z) {
    double best = 0.0;
    if (p.degree() < 1) return best;
    for (cplx t : partial_sum_tails(p, z)) best = std::max(best, std::abs(t));
    return best;
}

double lemma2_factor(cplx z, cplx w, int n) {
    if (z == cplx{0.0, 0.0}) throw DomainError("lemma2_factor: z must be nonzero");
    if (n < 1) throw RangeError("lemma2_factor: n must be >= 1");
    const double az = std::abs(z);
    const double aw = std::abs(w);
    if (az == aw) return n;
    // Geometric-sum form of (|z|^n - |w|^n) / (|z|^{n-1}(|z| - |w|)); avoids
    // cancellation when |w| is close to |z|.
    const double q = aw / az;
    double s = 0.0;
    double qk = 1.0;
    for (int k = 0; k < n; ++k) {
        s += qk;
        qk *= q;
    }
    return s;
}

}  // namespace pwb
