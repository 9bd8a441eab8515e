#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pwb/certifier.hpp"
#include "pwb/errors.hpp"
#include "pwb/roots.hpp"
#include "pwb/verifier.hpp"

using namespace pwb;

namespace {

/// |a_{v+1}/a_v| <= ratio < 1/3 with random phases: the tail sums are
/// dominated by a geometric series, so the condition holds with margin.
SparsePolynomial random_contracting(oracle::Rng& rng, int n, double ratio, bool sparse) {
    std::vector<Term> terms;
    cplx a = rng.gaussian();
    int k = sparse ? rng.integer(0, 2) : 0;
    for (int v = 0; v <= n; ++v) {
        terms.push_back({k, a});
        a *= std::polar(rng.uniform(0.2, 1.0) * ratio, rng.uniform(0.0, 2.0 * oracle::kTwoPi));
        k += sparse ? rng.integer(1, 4) : 1;
    }
    return SparsePolynomial(std::move(terms));
}

SparsePolynomial rotate(const SparsePolynomial& p, double theta) {
    std::vector<Term> terms = p.terms();
    for (Term& t : terms) t.coefficient *= std::polar(1.0, t.exponent * theta);
    return SparsePolynomial(std::move(terms));
}

SparsePolynomial scale(const SparsePolynomial& p, cplx c) {
    std::vector<Term> terms = p.terms();
    for (Term& t : terms) t.coefficient *= c;
    return SparsePolynomial(std::move(terms));
}

}  // namespace

TEST_CASE("check_condition closed-form cases") {
    const Certificate mono = check_condition(SparsePolynomial({{3, {2.0, -1.0}}}));
    CHECK(mono.verdict == Verdict::Certified);
    CHECK(mono.margin == 0.5);
    REQUIRE(mono.per_nu.size() == 1);

    const Certificate one_plus_z = check_condition(SparsePolynomial({{0, 1.0}, {1, 1.0}}));
    CHECK(one_plus_z.verdict == Verdict::Rejected);
    CHECK(one_plus_z.per_nu[0].min.witness_value == doctest::Approx(0.0).scale(1.0));

    for (int n = 2; n <= 12; ++n) {
        const Certificate c = check_condition(build_fejer_family(n));
        CHECK(c.verdict == Verdict::CertifiedTight);
        CHECK(std::abs(c.margin) < c.tolerance_used);
        CHECK(c.per_nu.size() == static_cast<std::size_t>(n + 1));
    }

    CHECK_THROWS_AS(check_condition(SparsePolynomial{}), DomainError);
    CHECK_THROWS_AS(check_condition(build_fejer_family(2), 0.0), DomainError);
}

TEST_CASE("check_condition verdict bands") {
    // 1 + a z has tail minimum 1 - |a|: Certified for |a| < 1/2, Rejected above.
    CHECK(check_condition(SparsePolynomial({{0, 1.0}, {1, 0.4}})).verdict == Verdict::Certified);
    CHECK(check_condition(SparsePolynomial({{0, 1.0}, {1, 0.6}})).verdict == Verdict::Rejected);
    const Certificate edge = check_condition(SparsePolynomial({{0, 2.0}, {1, 1.0}}));
    CHECK(edge.verdict == Verdict::CertifiedTight);
    // Within the band but not provably above 1/2 - tol on a witness: still tight.
    const Certificate close = check_condition(SparsePolynomial({{0, 1.0}, {1, 0.5 + 1e-11}}));
    CHECK(close.verdict == Verdict::CertifiedTight);
}

TEST_CASE("check_condition is scale invariant") {
    oracle::Rng rng(201);
    for (int trial = 0; trial < 10; ++trial) {
        const auto p = random_contracting(rng, rng.integer(1, 6), 0.45, trial % 2 == 0);
        const Certificate base = check_condition(p);
        // Multipliers that keep every ratio a_{j+v}/a_v bit-identical.
        for (cplx c : {cplx{0.0, 1.0}, cplx{-2.0, 0.0}, cplx{0.0, 0.5}}) {
            const Certificate other = check_condition(scale(p, c));
            CHECK(other.verdict == base.verdict);
            for (std::size_t v = 0; v < base.per_nu.size(); ++v) {
                CHECK(other.per_nu[v].min.lower_bound == base.per_nu[v].min.lower_bound);
                CHECK(other.per_nu[v].min.witness_x == base.per_nu[v].min.witness_x);
            }
        }
        // General multipliers perturb the ratios at rounding level only.
        const Certificate general = check_condition(scale(p, rng.gaussian()));
        CHECK(general.verdict == base.verdict);
        for (std::size_t v = 0; v < base.per_nu.size(); ++v)
            CHECK(std::abs(general.per_nu[v].min.lower_bound - base.per_nu[v].min.lower_bound) <= 1e-12);
    }
}

TEST_CASE("check_condition is rotation covariant") {
    oracle::Rng rng(202);
    for (int trial = 0; trial < 10; ++trial) {
        const auto p = random_contracting(rng, rng.integer(1, 6), 0.6, trial % 2 == 1);
        const Certificate base = check_condition(p);
        const Certificate rot = check_condition(rotate(p, rng.uniform(0.0, oracle::kTwoPi)));
        for (std::size_t v = 0; v < base.per_nu.size(); ++v)
            CHECK(std::abs(rot.per_nu[v].min.lower_bound - base.per_nu[v].min.lower_bound) <= 1e-12);
    }
}

TEST_CASE("certified polynomials satisfy the zero-free and pointwise conclusions") {
    oracle::Rng rng(203);
    int certified = 0;
    for (int trial = 0; trial < 12; ++trial) {
        const auto p = random_contracting(rng, rng.integer(1, 7), 0.32, trial % 3 == 0);
        const Certificate c = check_condition(p);
        REQUIRE(c.verdict == Verdict::Certified);
        ++certified;
        CHECK(verify_pointwise_bernstein(p, 20'000, 300 + trial).passed);
        if (p.degree() >= 1) {
            for (const Root& r : find_roots(p).roots.roots) {
                if (r.location == cplx{0.0, 0.0}) continue;
                CHECK(std::abs(r.location) > 1.0);
            }
        }
        for (int nu = 0; nu < p.term_count(); ++nu)
            CHECK(interior_spot_check(p, nu, 2'000, 400 + nu) >= c.per_nu[nu].min.lower_bound - 1e-9);
    }
    CHECK(certified == 12);
}

TEST_CASE("check_convexity_corollary") {
    const ConvexityVerdict fejer = check_convexity_corollary(build_fejer_family(4));
    CHECK(fejer.passes);
    CHECK_FALSE(fejer.failing_index.has_value());
    CHECK(fejer.second_differences == std::vector<double>{0.0, 0.0, 0.0, 0.0, 1.0});

    const ConvexityVerdict flat = check_convexity_corollary(SparsePolynomial({{0, 1.0}, {1, 1.0}, {2, 1.0}}));
    CHECK_FALSE(flat.passes);
    REQUIRE(flat.failing_index.has_value());
    CHECK(*flat.failing_index == 1);
    CHECK(flat.second_differences[1] == -1.0);

    const SparsePolynomial p421({{0, 4.0}, {1, 2.0}, {2, 1.0}});
    const ConvexityVerdict v421 = check_convexity_corollary(p421);
    CHECK(v421.passes);
    CHECK(v421.second_differences == std::vector<double>{1.0, 0.0, 1.0});
    CHECK(check_condition(p421).accepted());

    // Increasing coefficients break monotonicity at the first rise.
    const ConvexityVerdict rising = check_convexity_corollary(SparsePolynomial({{0, 5.0}, {1, 6.0}, {2, 1.0}}));
    CHECK_FALSE(rising.passes);
    CHECK(*rising.failing_index == 0);

    CHECK_THROWS_AS(check_convexity_corollary(SparsePolynomial({{0, 2.0}, {2, 1.0}})), NotApplicable);
    CHECK_THROWS_AS(check_convexity_corollary(SparsePolynomial({{1, 2.0}, {2, 1.0}})), NotApplicable);
    CHECK_THROWS_AS(check_convexity_corollary(SparsePolynomial({{0, 2.0}, {1, {1.0, 0.1}}})), NotApplicable);
    CHECK_THROWS_AS(check_convexity_corollary(SparsePolynomial({{0, 2.0}, {1, -1.0}})), NotApplicable);

    SUBCASE("a pass never coexists with a rejection") {
        oracle::Rng rng(204);
        for (int trial = 0; trial < 20; ++trial) {
            const auto p = oracle::random_convex(rng, rng.integer(1, 10));
            CHECK(check_convexity_corollary(p).passes);
            CHECK(check_condition(p).verdict != Verdict::Rejected);
        }
    }
}

TEST_CASE("build_fejer_family") {
    CHECK(build_fejer_family(2) == SparsePolynomial({{0, 3.0}, {1, 2.0}, {2, 1.0}}));
    CHECK(build_fejer_family(3) == SparsePolynomial({{0, 4.0}, {1, 3.0}, {2, 2.0}, {3, 1.0}}));
    for (int n = 2; n <= 20; ++n) {
        const auto p = build_fejer_family(n);
        CHECK(p.terms().back().coefficient == cplx(1.0, 0.0));
        CHECK(p.terms().front().coefficient == cplx(n + 1.0, 0.0));
    }
    CHECK_THROWS_AS(build_fejer_family(1), RangeError);
}

TEST_CASE("enestrom_kakeya_bound") {
    for (int n = 2; n <= 12; ++n) CHECK(enestrom_kakeya_bound(build_fejer_family(n)) == 2.0);
    CHECK(enestrom_kakeya_bound(SparsePolynomial({{0, 1.0}, {1, 1.0}, {2, 1.0}, {3, 1.0}})) == 1.0);

    oracle::Rng rng(205);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = rng.integer(1, 10);
        std::vector<cplx> a(static_cast<std::size_t>(n + 1));
        double v = rng.uniform(1.0, 5.0);
        for (auto& c : a) {
            c = v;
            v *= rng.uniform(0.3, 1.0);
        }
        const auto p = SparsePolynomial::from_dense(a);
        const double r = enestrom_kakeya_bound(p);
        for (const Root& root : find_roots(p).roots.roots) CHECK(std::abs(root.location) <= r + 1e-8);
    }

    CHECK_THROWS_AS(enestrom_kakeya_bound(SparsePolynomial({{0, 1.0}})), NotApplicable);
    CHECK_THROWS_AS(enestrom_kakeya_bound(SparsePolynomial({{0, 1.0}, {2, 1.0}})), NotApplicable);
    CHECK_THROWS_AS(enestrom_kakeya_bound(SparsePolynomial({{0, 1.0}, {1, -1.0}})), NotApplicable);
}
