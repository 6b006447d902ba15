#include "mdlab/arith.hpp"

#include <algorithm>
#include <queue>

#include "mdlab/errors.hpp"
#include "mdlab/expsum.hpp"

namespace mdlab::arith {

namespace {

void check_budget(std::size_t x) {
    if (x != 0 && x > expsum::pair_budget() / x)
        throw resource_error("repr_histogram: X^2 exceeds the pair budget; lower X");
}

}  // namespace

ReprCount count_repr(const std::vector<Int>& f_values, const Int& n, ReprMode mode) {
    if (f_values.empty()) throw parameter_error("count_repr: X must be >= 1");
    std::vector<Int> sorted = f_values;
    std::sort(sorted.begin(), sorted.end());

    std::size_t count = 0;
    for (const Int& fx : f_values) {
        Int target = (mode == ReprMode::Sum) ? Int(n - fx) : Int(fx - n);
        auto [lo, hi] = std::equal_range(sorted.begin(), sorted.end(), target);
        count += std::size_t(hi - lo);
    }
    return {n, count, mode};
}

ReprHistogram repr_histogram(const std::vector<Int>& f_values, ReprMode mode) {
    if (f_values.empty()) throw parameter_error("repr_histogram: X must be >= 1");
    check_budget(f_values.size());

    // rows f(x) + b_j over the sorted second operand; diff mode negates it
    std::vector<Int> second = f_values;
    if (mode == ReprMode::Diff)
        for (Int& v : second) v = -v;
    std::sort(second.begin(), second.end());

    struct Node {
        Int val;
        std::size_t row, col;
    };
    auto after = [](const Node& a, const Node& b) {
        int c = cmp(a.val, b.val);
        return c != 0 ? c > 0 : a.row > b.row;
    };
    std::priority_queue<Node, std::vector<Node>, decltype(after)> heap(after);
    for (std::size_t i = 0; i < f_values.size(); ++i)
        heap.push({f_values[i] + second[0], i, 0});

    ReprHistogram hist;
    while (!heap.empty()) {
        Int cur = heap.top().val;
        std::size_t run = 0;
        while (!heap.empty() && heap.top().val == cur) {
            Node nd = heap.top();
            heap.pop();
            ++run;
            if (nd.col + 1 < second.size())
                heap.push({f_values[nd.row] + second[nd.col + 1], nd.row, nd.col + 1});
        }
        if (run > hist.max_count && !(mode == ReprMode::Diff && cur == 0)) {
            hist.max_count = run;
            hist.argmax = cur;
        }
        hist.counts.emplace_back(std::move(cur), run);
    }
    return hist;
}

Int BivariatePoly::coeff(std::size_t r, std::size_t s) const {
    return (r + s < antidiag.size()) ? antidiag[r + s] : Int(0);
}

Int BivariatePoly::eval(const Int& x, const Int& y) const {
    // sum_k c_{k+1} * (x^k + x^{k-1} y + ... + y^k)
    Int acc = 0, xp = 1;
    std::vector<Int> xpow(antidiag.size());
    for (std::size_t k = 0; k < antidiag.size(); ++k) {
        xpow[k] = xp;
        xp *= x;
    }
    for (std::size_t k = 0; k < antidiag.size(); ++k) {
        Int block = 0, yp = 1;
        for (std::size_t s = 0; s <= k; ++s) {
            block += xpow[k - s] * yp;
            yp *= y;
        }
        acc += antidiag[k] * block;
    }
    return acc;
}

BivariatePoly divide_difference(const sequences::IntPolynomial& p) {
    if (p.degree() < 1)
        throw parameter_error("divide_difference: polynomial must have degree >= 1");
    BivariatePoly q;
    q.antidiag.assign(p.coeffs.begin() + 1, p.coeffs.end());
    return q;
}

long long divisor_count(long long n) {
    if (n == 0) throw parameter_error("divisor_count: n must be nonzero");
    unsigned long long m = n < 0 ? (unsigned long long)(-(n + 1)) + 1ull : (unsigned long long)n;
    long long count = 0;
    for (unsigned long long d = 1; d * d <= m; ++d) {
        if (m % d == 0) count += (d * d == m) ? 1 : 2;
    }
    return count;
}

}  // namespace mdlab::arith
