#include "mdlab/interval.hpp"

#include <algorithm>
#include <cmath>

#include "mdlab/errors.hpp"

namespace mdlab::dilation {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double sin_2pi(const Rat& y) { return std::sin(2.0 * kPi * frac(y).get_d()); }
double cos_2pi(const Rat& y) { return std::cos(2.0 * kPi * frac(y).get_d()); }

}  // namespace

IntervalUnion IntervalUnion::make(std::vector<Interval> raw) {
    for (const Interval& iv : raw)
        if (iv.a < 0 || iv.a >= iv.b || iv.b > 1)
            throw parameter_error("interval endpoints must satisfy 0 <= a < b <= 1");
    std::sort(raw.begin(), raw.end(),
              [](const Interval& x, const Interval& y) { return x.a < y.a; });

    IntervalUnion u;
    for (Interval& iv : raw) {
        if (!u.comps_.empty() && iv.a <= u.comps_.back().b) {
            if (iv.b > u.comps_.back().b) u.comps_.back().b = iv.b;
        } else {
            u.comps_.push_back(std::move(iv));
        }
    }
    for (const Interval& iv : u.comps_) u.measure_ += iv.b - iv.a;
    u.measure_.canonicalize();
    return u;
}

double IntervalUnion::measure() const { return measure_.get_d(); }

bool IntervalUnion::contains(const Rat& x) const {
    // last component with a <= x
    auto it = std::upper_bound(comps_.begin(), comps_.end(), x,
                               [](const Rat& v, const Interval& iv) { return v < iv.a; });
    if (it == comps_.begin()) return false;
    --it;
    return x < it->b;
}

FourierPair indicator_fourier(const IntervalUnion& r, long j) {
    if (j < 1) throw parameter_error("indicator_fourier: j must be >= 1");
    double u = 0.0, v = 0.0;
    for (const Interval& iv : r.components()) {
        Rat ja = Rat((long)j) * iv.a;
        Rat jb = Rat((long)j) * iv.b;
        u += sin_2pi(jb) - sin_2pi(ja);
        v += cos_2pi(ja) - cos_2pi(jb);
    }
    double scale = kPi * double(j);
    return {j, u / scale, v / scale};
}

double fourier_partial_sum(const IntervalUnion& r, long g, const Rat& x) {
    if (g < 1) throw parameter_error("fourier_partial_sum: G must be >= 1");
    double sum = 0.0, carry = 0.0;
    auto add = [&](double t) {
        double y = t - carry;
        double s = sum + y;
        carry = (s - sum) - y;
        sum = s;
    };
    Rat jx = 0;  // {j x}, advanced exactly
    for (long j = 1; j <= g; ++j) {
        jx = frac(jx + x);
        FourierPair f = indicator_fourier(r, j);
        double ang = 2.0 * kPi * jx.get_d();
        add(f.u * std::cos(ang) + f.v * std::sin(ang));
    }
    return sum;
}

double centered_l2(const IntervalUnion& r) {
    Rat m = r.measure_exact();
    Rat out = m * (1 - m);
    out.canonicalize();
    return out.get_d();
}

}  // namespace mdlab::dilation
