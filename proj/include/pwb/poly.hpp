#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace pwb {

using cplx = std::complex<double>;

/// One monomial a z^k of a sparse polynomial.
struct Term {
    int exponent = 0;
    cplx coefficient{};

    friend bool operator==(const Term&, const Term&) = default;
};

/// P(z) = sum_v a_v z^{k_v} with k_0 < k_1 < ... < k_n and every a_v != 0.
///
/// The empty term list is the zero polynomial; it only arises as the
/// derivative of a constant. Construction validates ordering and nonzero
/// coefficients and throws FormatError otherwise.
class SparsePolynomial {
public:
    SparsePolynomial() = default;
    explicit SparsePolynomial(std::vector<Term> terms);
    SparsePolynomial(std::initializer_list<Term> terms)
        : SparsePolynomial(std::vector<Term>(terms)) {}

    /// Dense coefficients c_0..c_d; zero entries are skipped.
    static SparsePolynomial from_dense(std::span<const cplx> coefficients);
    /// leading * prod_k (z - root_k).
    static SparsePolynomial from_roots(std::span<const cplx> roots, cplx leading = 1.0);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// k_n; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.back().exponent; }
    /// n + 1.
    int term_count() const { return static_cast<int>(terms_.size()); }
    int lowest_exponent() const { return terms_.empty() ? 0 : terms_.front().exponent; }

    const Term& operator[](std::size_t v) const { return terms_[v]; }

    /// c_j for j = 0..k_n with zero fill at absent exponents.
    std::vector<cplx> dense() const;

    /// True when k_v = v for every v.
    bool is_dense() const;

    /// Sum of |a_v|.
    double coefficient_mass() const;

    friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

private:
    std::vector<Term> terms_;
};

/// A zero of multiplicity r; `inferred` marks multiplicities obtained by
/// clustering numerically close simple roots.
struct Root {
    cplx location{};
    int multiplicity = 1;
    bool inferred = false;
};

/// Roots ordered by nondecreasing modulus. Order among equal moduli is not
/// part of the contract.
struct RootSet {
    std::vector<Root> roots;

    int total_multiplicity() const;
};

/// Pieces of the divided-difference estimate |z(P(z)-P(w))/(z-w)| <= A(z,w) max_k |P(z) - S_k(z)|.
struct DividedDifferenceBound {
    double lhs = 0.0;
    double factor = 0.0;
    double tail_max = 0.0;

    double rhs() const { return factor * tail_max; }
    bool holds(double tolerance = 1e-10) const { return lhs <= rhs() + tolerance; }
    /// lhs / rhs, or 0 when both vanish.
    double ratio() const;
};

/// |P(z)| below this is treated as a zero of P.
inline constexpr double kZeroGuard = 1e-300;

cplx ipow(cplx z, int k);

cplx eval(const SparsePolynomial& p, cplx z);
SparsePolynomial derivative(const SparsePolynomial& p);

/// rho_k(P): the terms of exponent >= k. Throws RangeError unless 0 <= k <= deg P.
SparsePolynomial tail(const SparsePolynomial& p, int k);

/// z P'(z) / P(z). Throws PoleError when |P(z)| < kZeroGuard.
cplx log_derivative(const SparsePolynomial& p, cplx z);

/// n/2 + 1/2 sum_k r_k (|z|^2 - |z_k|^2) / |z - z_k|^2, the real part of
/// z P'/P written through the zeros. Throws PoleError when z hits a root.
double partial_fraction_real(const RootSet& roots, int n, cplx z);

/// z (P(z) - P(w)) / (z - w), with the limit z P'(z) at z = w.
/// Throws DomainError for z = 0.
cplx divided_difference(const SparsePolynomial& p, cplx z, cplx w);

/// sum_{k=0}^{n-1} (P(z) - sum_{j<=k} c_j z^j) (w/z)^k over the dense
/// embedding; equals divided_difference by summation by parts.
cplx divided_difference_expansion(const SparsePolynomial& p, cplx z, cplx w);

/// max_{k=0..n-1} |P(z) - sum_{j<=k} c_j z^j| over the dense embedding.
double partial_sum_tail_max(const SparsePolynomial& p, cplx z);

/// A(z,w) = (|z|^n - |w|^n) / (|z|^{n-1} (|z| - |w|)), or n when |z| = |w|.
double lemma2_factor(cplx z, cplx w, int n);

}  // namespace pwb
