#include "mdlab/gcdsum.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

#include "mdlab/errors.hpp"

namespace mdlab::gcdsum {

namespace {

// binary GCD; arguments positive
uint64_t binary_gcd(uint64_t a, uint64_t b) {
    if (a == 0) return b;
    if (b == 0) return a;
    int shift = std::countr_zero(a | b);
    a >>= std::countr_zero(a);
    while (b != 0) {
        b >>= std::countr_zero(b);
        if (a > b) std::swap(a, b);
        b -= a;
    }
    return a << shift;
}

void validate_weights(const std::vector<double>& w) {
    if (w.empty()) throw parameter_error("weight vector must be nonempty");
    if (w.size() > (std::size_t(1) << 14))
        throw resource_error("gcd_sum: G > 2^14 exceeds the O(G^2) evaluation cap");
    for (double u : w)
        if (!(u >= 0.0) || !std::isfinite(u))
            throw parameter_error("weights must be finite and nonnegative");
}

}  // namespace

double gcd_sum(const std::vector<double>& weights) {
    validate_weights(weights);
    const std::size_t g = weights.size();
    double sum = 0.0, carry = 0.0;
    auto add = [&](double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    };
    for (std::size_t j1 = 1; j1 <= g; ++j1) {
        if (weights[j1 - 1] == 0.0) continue;
        add(weights[j1 - 1] * weights[j1 - 1]);  // diagonal: gcd(j,j)/j = 1
        for (std::size_t j2 = j1 + 1; j2 <= g; ++j2) {
            if (weights[j2 - 1] == 0.0) continue;
            double kernel = double(binary_gcd(j1, j2)) / std::sqrt(double(j1) * double(j2));
            add(2.0 * weights[j1 - 1] * weights[j2 - 1] * kernel);
        }
    }
    return sum;
}

long long collision_count(long long j1, long long j2, long long h) {
    if (j1 < 1 || j2 < 1 || h < 1)
        throw parameter_error("collision_count: j1, j2, H must be >= 1");
    long long g = (long long)binary_gcd((uint64_t)j1, (uint64_t)j2);
    return (long long)((__int128)h * g / (j1 > j2 ? j1 : j2));
}

HilberdinkReport hilberdink_report(const std::vector<double>& weights, double c) {
    if (weights.size() < 3)
        throw parameter_error("hilberdink_report: G must be >= 3 (log log G)");
    double s = gcd_sum(weights);
    double l2 = 0.0;
    for (double u : weights) l2 += u * u;
    double g = double(weights.size());
    double bound = std::exp(c * std::sqrt(std::log(g) / std::log(std::log(g)))) * l2;
    return {s, l2, l2 > 0.0 ? s / l2 : 0.0, bound, s <= bound};
}

}  // namespace mdlab::gcdsum
