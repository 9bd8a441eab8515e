#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace pwb {

/// Argument outside the mathematical domain of an operation (z = 0, q = 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Integer index or size argument outside its admissible range.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Evaluation hit a zero of the denominator polynomial.
class PoleError : public std::runtime_error {
public:
    PoleError(const std::string& what, std::complex<double> at)
        : std::runtime_error(what), point_(at) {}

    std::complex<double> point() const { return point_; }

private:
    std::complex<double> point_;
};

/// Preconditions of a check do not hold; distinct from the check failing.
class NotApplicable : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Iterative method hit its iteration cap.
class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial file or JSON document.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pwb
