#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vhh {

// Thrown when a quadrature or enumeration cannot honor the requested size
// without producing garbage; carries the size that would have been needed.
// Mapped to exit code 3 by the CLI.
class NumericRefusal : public std::runtime_error {
public:
    NumericRefusal(const std::string& what, long long required)
        : std::runtime_error(what), required_(required) {}
    long long required() const noexcept { return required_; }
private:
    long long required_;
};

// Inconsistent structural input (bad field assignment, malformed tree, ...).
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Round-trip decimal formatting for IEEE-754 doubles (17 significant digits).
std::string fmt17(double x);

// Least-squares line fit of y against x.
struct LinFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};
LinFit linfit(const std::vector<double>& x, const std::vector<double>& y);

// Compensated accumulator; used wherever a sum must not depend on
// platform-specific vectorization of a naive loop.
struct Kahan {
    double sum = 0.0;
    double carry = 0.0;
    void add(double v) {
        double y = v - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// Integer power of a double, exact exponent arithmetic (e may be negative).
double powi(double base, long long e);

std::uint64_t fnv1a64(const std::string& s);

std::string trim(const std::string& s);

} // namespace vhh
