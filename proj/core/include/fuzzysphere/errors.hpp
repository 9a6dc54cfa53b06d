#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace fuzzysphere {

/// A series failed to reach the requested tolerance. Carries the partial sum
/// and the number of terms evaluated so callers can inspect what was achieved.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::complex<double> partial, long terms)
        : std::runtime_error(what), partial_sum(partial), terms_used(terms) {}

    std::complex<double> partial_sum;
    long terms_used;
};

/// The Fock-space cutoff is too small for the requested computation.
class TruncationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid (l, m) or similar quantum-number combination.
class QuantumNumberError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operands live on different bases / different lambda and cannot be combined.
class MismatchError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Hypergeometric parameters outside the supported (terminating) family.
class UnsupportedParametersError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Not enough extrema in a sampled trace to estimate fringe visibility.
class InsufficientSamplingError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace fuzzysphere
