#include "pwb/trig_min.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "pwb/errors.hpp"

namespace pwb {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxRounds = 40;
constexpr std::size_t kCellBudget = std::size_t{1} << 21;
// Cells are refined past the requested tolerance down to this slack, so that
// the bound does not depend on where grid points happen to fall.
constexpr double kTightSlack = 1e-13;

struct Sample {
    double f;   // T(x)
    double d1;  // T'(x)
    double d2;  // T''(x)
};

/// Dense Horner evaluation of T, T', T'' at x.
class Evaluator {
public:
    explicit Evaluator(const TrigTail& t) {
        coeffs_.assign(static_cast<std::size_t>(t.max_frequency() + 1), cplx{});
        for (const TrigTerm& term : t.terms())
            coeffs_[static_cast<std::size_t>(term.frequency)] = term.coefficient;
    }

    Sample operator()(double x) {
        ++count_;
        const cplx z = std::polar(1.0, x);
        cplx s0{}, s1{}, s2{};
        for (std::size_t m = coeffs_.size(); m-- > 0;) {
            const double dm = static_cast<double>(m);
            s0 = s0 * z + coeffs_[m];
            s1 = s1 * z + dm * coeffs_[m];
            s2 = s2 * z + dm * dm * coeffs_[m];
        }
        // d/dx Re(c e^{imx}) = Re(i m c e^{imx}) = -Im(m c e^{imx})
        return {s0.real(), -s1.imag(), -s2.real()};
    }

    std::int64_t count() const { return count_; }

private:
    std::vector<cplx> coeffs_;
    std::int64_t count_ = 0;
};

struct Cell {
    double a, b;
    double fa, fb;
    double lb;  // excludes the evaluation allowance
};

}  // namespace

TrigTail::TrigTail(std::vector<TrigTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw FormatError("TrigTail: empty term list");
    if (terms_.front().frequency != 0 || terms_.front().coefficient != cplx{1.0, 0.0})
        throw FormatError("TrigTail: first term must be frequency 0 with coefficient 1");
    for (std::size_t j = 1; j < terms_.size(); ++j) {
        if (terms_[j].frequency <= terms_[j - 1].frequency)
            throw FormatError("TrigTail: frequencies must be strictly increasing (term " +
                              std::to_string(j) + ")");
        const cplx c = terms_[j].coefficient;
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw FormatError("TrigTail: non-finite coefficient (term " + std::to_string(j) + ")");
    }
}

double TrigTail::operator()(double x) const {
    double s = 0.0;
    for (const TrigTerm& t : terms_)
        s += (t.coefficient * std::polar(1.0, t.frequency * x)).real();
    return s;
}

double TrigTail::derivative_bound(int order) const {
    double s = 0.0;
    for (const TrigTerm& t : terms_)
        s += std::pow(static_cast<double>(t.frequency), order) * std::abs(t.coefficient);
    return s;
}

TrigTail from_ratio_tail(const SparsePolynomial& p, int nu) {
    const int n = p.term_count() - 1;
    if (nu < 0 || nu > n)
        throw RangeError("from_ratio_tail: nu " + std::to_string(nu) + " outside [0, " +
                         std::to_string(n) + "]");
    const Term& base = p[static_cast<std::size_t>(nu)];
    std::vector<TrigTerm> terms{{0, cplx{1.0, 0.0}}};
    for (int j = nu + 1; j <= n; ++j) {
        const Term& t = p[static_cast<std::size_t>(j)];
        terms.push_back({t.exponent - base.exponent, t.coefficient / base.coefficient});
    }
    return TrigTail(std::move(terms));
}

MinResult certified_min(const TrigTail& t, double tol) {
    if (!(tol > 0.0)) throw DomainError("certified_min: tolerance must be positive");

    if (t.is_constant()) {
        const double v = t.terms().front().coefficient.real();
        return {v, 0.0, v, 0.0, true, 0, 0};
    }

    const int max_freq = t.max_frequency();
    const double mass = t.derivative_bound(0);
    const double lip1 = t.derivative_bound(1);
    const double lip2 = t.derivative_bound(2);
    const double lip3 = t.derivative_bound(3);

    // Rounding in Horner and in the angle itself.
    const double eps = std::numeric_limits<double>::epsilon();
    const double scale = 4.0 * (max_freq + 2) * eps;
    const double allow0 = scale * mass + 4.0 * eps * lip1;
    const double allow1 = scale * lip1 + 4.0 * eps * lip2;
    const double allow2 = scale * lip2 + 4.0 * eps * lip3;

    const double tight = std::min(tol, kTightSlack);

    Evaluator eval(t);

    double best = std::numeric_limits<double>::infinity();
    double best_x = 0.0;
    auto record = [&](double x, double f) {
        if (f < best) {
            best = f;
            best_x = x;
        }
    };

    auto cell_bound = [&](double a, double b, double fa, double fb) {
        const double h = b - a;
        const double first = 0.5 * (fa + fb) - 0.5 * lip1 * h;
        const double second = std::min(fa, fb) - lip2 * h * h / 8.0;
        return std::max(first, second);
    };

    // Minimum over [a, b] of a function with T'' >= mu, located by a
    // bracketed Newton iteration on T'.
    auto convex_cell_bound = [&](double a, double b, double mu) {
        const Sample sa = eval(a);
        const Sample sb = eval(b);
        double x;
        if (sa.d1 >= 0.0) {
            x = a;
        } else if (sb.d1 <= 0.0) {
            x = b;
        } else {
            double lo = a, hi = b;
            x = 0.5 * (a + b);
            for (int it = 0; it < 100; ++it) {
                const Sample s = eval(x);
                if (s.d1 == 0.0) break;
                if (s.d1 < 0.0) lo = x; else hi = x;
                double next = x - s.d1 / s.d2;
                if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
                if (std::abs(next - x) <= 2.0 * eps * std::max(1.0, std::abs(x)) ||
                    hi - lo <= 4.0 * eps * std::max(1.0, std::abs(x))) {
                    x = next;
                    break;
                }
                x = next;
            }
        }
        const Sample sx = eval(x);
        record(x, sx.f);
        double lb = std::numeric_limits<double>::infinity();
        for (double g : {sx.d1 - allow1, sx.d1 + allow1}) {
            const double y = std::clamp(x - g / mu, a, b);
            const double d = y - x;
            lb = std::min(lb, sx.f + g * d + 0.5 * mu * d * d);
        }
        return lb;
    };

    const std::size_t n0 = 8 * static_cast<std::size_t>(max_freq + 1);
    std::vector<double> xs(n0 + 1), fs(n0 + 1);
    for (std::size_t i = 0; i <= n0; ++i) {
        xs[i] = i == n0 ? kTwoPi : kTwoPi * static_cast<double>(i) / static_cast<double>(n0);
        fs[i] = i == n0 ? fs[0] : eval(xs[i]).f;
        if (i < n0) record(xs[i], fs[i]);
    }
    std::vector<Cell> active;
    active.reserve(n0);
    for (std::size_t i = 0; i < n0; ++i)
        active.push_back({xs[i], xs[i + 1], fs[i], fs[i + 1],
                          cell_bound(xs[i], xs[i + 1], fs[i], fs[i + 1])});

    double settled_floor = std::numeric_limits<double>::infinity();
    int rounds = 0;
    std::vector<Cell> next;
    while (!active.empty() && rounds < kMaxRounds) {
        ++rounds;
        next.clear();
        for (const Cell& c : active) {
            if (c.lb >= best - tight) {
                settled_floor = std::min(settled_floor, c.lb);
                continue;
            }
            const double h = c.b - c.a;
            const double m = 0.5 * (c.a + c.b);
            const Sample sm = eval(m);
            record(m, sm.f);
            const double mu = sm.d2 - 0.5 * lip3 * h - allow2;
            if (mu > 0.0) {
                settled_floor = std::min(settled_floor, convex_cell_bound(c.a, c.b, mu));
                continue;
            }
            next.push_back({c.a, m, c.fa, sm.f, cell_bound(c.a, m, c.fa, sm.f)});
            next.push_back({m, c.b, sm.f, c.fb, cell_bound(m, c.b, sm.f, c.fb)});
        }
        active.swap(next);

        double floor = settled_floor;
        for (const Cell& c : active) floor = std::min(floor, c.lb);
        if (active.size() > kCellBudget && best - floor <= tol) break;
        if (active.size() > 2 * kCellBudget) break;
    }
    // Cells still pending after the loop, including those that pass the
    // pruning test only against the final best value.
    double floor = settled_floor;
    for (const Cell& c : active) floor = std::min(floor, c.lb);

    MinResult r;
    r.lower_bound = floor - allow0;
    r.witness_x = best_x >= kTwoPi ? 0.0 : best_x;
    r.witness_value = best;
    r.gap = r.witness_value - r.lower_bound;
    r.converged = r.gap <= tol;
    r.rounds = rounds;
    r.evaluations = eval.count();
    return r;
}

double interior_spot_check(const SparsePolynomial& p, int nu, int samples, std::uint64_t seed) {
    if (samples < 1) throw RangeError("interior_spot_check: samples must be >= 1");
    const TrigTail t = from_ratio_tail(p, nu);
    std::vector<Term> terms;
    for (const TrigTerm& term : t.terms())
        terms.push_back({term.frequency, term.coefficient});
    const SparsePolynomial analytic(std::move(terms));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double best = std::numeric_limits<double>::infinity();
    for (int s = 0; s < samples; ++s) {
        const double r = std::sqrt(unit(rng));
        const double theta = kTwoPi * unit(rng);
        best = std::min(best, eval(analytic, std::polar(r, theta)).real());
    }
    return best;
}

}  // namespace pwb
