#pragma once

#include <stdexcept>
#include <string>

namespace torusquake {

/// A point or parameter outside the domain of a chart, formula or realization.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Intermediate magnitudes exceed what the available precision tiers can resolve.
class NumericHorizonError : public std::overflow_error {
public:
    NumericHorizonError(const std::string& what, double magnitude)
        : std::overflow_error(what), magnitude_(magnitude) {}

    double magnitude() const noexcept { return magnitude_; }

private:
    double magnitude_;
};

}  // namespace torusquake
