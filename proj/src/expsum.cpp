#include "mdlab/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "mdlab/errors.hpp"
#include "mdlab/fft.hpp"

namespace mdlab::expsum {

namespace {

constexpr double kTwoPi = 6.28318530717958647692528676655900577;

std::size_t g_pair_budget = std::size_t(1) << 28;

struct Kahan {
    double sum = 0.0, carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

void check_pair_budget(std::size_t n, const char* op) {
    if (n != 0 && n > g_pair_budget / n)
        throw resource_error(std::string(op) + ": N^2 = " + std::to_string(n) + "^2 exceeds the pair budget " +
                             std::to_string(g_pair_budget) + "; lower N or raise the budget");
}

// run-length counting over the multiset {base[i] + offset[j]}, both sorted:
// an N-way merge whose heap never holds more than one node per row.
template <typename T, typename Cmp = std::less<T>>
Int merged_square_sum(const std::vector<T>& base, const std::vector<T>& offset, Cmp cmp = {}) {
    struct Node {
        T val;
        std::size_t row, col;
    };
    auto node_after = [&](const Node& a, const Node& b) {
        if (cmp(a.val, b.val)) return false;
        if (cmp(b.val, a.val)) return true;
        return a.row > b.row;  // deterministic tie order
    };
    std::priority_queue<Node, std::vector<Node>, decltype(node_after)> heap(node_after);
    for (std::size_t i = 0; i < base.size(); ++i)
        heap.push({base[i] + offset[0], i, 0});

    Int energy = 0;
    while (!heap.empty()) {
        T cur = heap.top().val;
        unsigned long run = 0;
        while (!heap.empty() && !cmp(cur, heap.top().val) && !cmp(heap.top().val, cur)) {
            Node nd = heap.top();
            heap.pop();
            ++run;
            if (nd.col + 1 < offset.size())
                heap.push({base[nd.row] + offset[nd.col + 1], nd.row, nd.col + 1});
        }
        energy += Int(run) * run;
    }
    return energy;
}

}  // namespace

void set_pair_budget(std::size_t pairs) { g_pair_budget = pairs; }
std::size_t pair_budget() { return g_pair_budget; }

std::complex<double> eval_point(const std::vector<Int>& terms, const Rat& x) {
    const Int& num = x.get_num();
    const Int& den = x.get_den();
    Kahan re, im;
    Int r;
    for (const Int& a : terms) {
        r = a * num;
        mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t());
        double ang = kTwoPi * ratio_as_double(r, den);
        re.add(std::cos(ang));
        im.add(std::sin(ang));
    }
    return {re.sum, im.sum};
}

std::vector<long long> fold_counts(const std::vector<Int>& terms, std::size_t grid) {
    if (grid == 0) throw parameter_error("fold_counts: grid size must be >= 1");
    if (grid > (std::size_t(1) << 26)) throw resource_error("fold_counts: grid larger than 2^26");
    std::vector<long long> counts(grid, 0);
    for (const Int& a : terms)
        ++counts[mpz_fdiv_ui(a.get_mpz_t(), (unsigned long)grid)];
    return counts;
}

ExpSumGrid grid_modulus_fft(const std::vector<Int>& terms, std::size_t grid) {
    std::vector<long long> counts = fold_counts(terms, grid);
    std::vector<std::complex<double>> v(grid);
    for (std::size_t m = 0; m < grid; ++m) v[m] = double(counts[m]);
    fftutil::fft(v, +1);
    v[0] = double(terms.size());  // DC bin is the plain count, keep it exact
    return {grid, std::move(v)};
}

L1Estimate l1_estimate(const std::vector<Int>& terms, std::size_t grid) {
    if (grid < 2) throw parameter_error("l1_estimate: grid size must be >= 2");
    ExpSumGrid g = grid_modulus_fft(terms, grid);
    Kahan acc;
    for (const auto& s : g.values) acc.add(std::abs(s));
    Int coeff_sum = 0;
    for (const Int& a : terms) coeff_sum += abs(a);
    double lipschitz_err = (kTwoPi / 2.0) * coeff_sum.get_d() / double(grid);
    return {acc.sum / double(grid), lipschitz_err};
}

Int collision_l2(const std::vector<Int>& terms) {
    std::vector<Int> sorted = terms;
    std::sort(sorted.begin(), sorted.end());
    Int total = 0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        total += Int(j - i) * (unsigned long)(j - i);
        i = j;
    }
    return total;
}

Int additive_energy(const std::vector<Int>& terms) {
    if (terms.empty()) return 0;
    check_pair_budget(terms.size(), "additive_energy");

    // fast path when every sum fits in int64
    bool small = true;
    for (const Int& a : terms)
        if (!a.fits_slong_p() || std::llabs((long long)a.get_si()) > (1ll << 61)) {
            small = false;
            break;
        }
    if (small) {
        std::vector<long long> v;
        v.reserve(terms.size());
        for (const Int& a : terms) v.push_back(a.get_si());
        std::sort(v.begin(), v.end());
        return merged_square_sum(v, v);
    }
    std::vector<Int> v = terms;
    std::sort(v.begin(), v.end());
    return merged_square_sum(v, v);
}

double holder_lower_bound(const std::vector<Int>& terms) {
    double l2 = collision_l2(terms).get_d();
    double l4 = additive_energy(terms).get_d();
    return std::pow(l2, 1.5) / std::sqrt(l4);
}

NormBundle norm_bundle(const std::vector<Int>& terms, std::size_t grid) {
    L1Estimate l1 = l1_estimate(terms, grid);
    Int l2 = collision_l2(terms);
    Int l4 = additive_energy(terms);
    double holder = std::pow(l2.get_d(), 1.5) / std::sqrt(l4.get_d());
    return {l1.estimate, l1.error_bound, l2, l4, holder};
}

}  // namespace mdlab::expsum
