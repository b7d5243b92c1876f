#include "doctest.h"

#include "wgreedy/random.hpp"
#include "wgreedy/tga.hpp"

#include <cmath>

using namespace wgreedy;

namespace {

SparseVector random_vector(Rng& rng, std::uint64_t dim, bool ties) {
    std::vector<SparseVector::Entry> es;
    for (std::uint64_t n = 1; n <= dim; ++n) {
        double v = ties ? static_cast<double>(1 + rng.below(3)) : rng.uniform(0.1, 4.0);
        if (rng.coin()) v = -v;
        if (rng.coin(0.15)) v = 0.0;
        es.push_back({n, v});
    }
    return SparseVector(es);
}

// all m-subsets of {1..dim} passing the threshold inequality
std::vector<IndexSet> brute_force_greedy(const SparseVector& x, std::uint64_t dim, std::uint64_t m) {
    std::vector<IndexSet> out;
    const IndexSet u = IndexSet::range(1, dim);
    for (std::uint64_t mask = 0; mask < (1ULL << dim); ++mask) {
        const IndexSet a = u.subset_by_mask(mask);
        if (a.size() != m) continue;
        double in = INFINITY, outside = 0.0;
        for (const auto& n : u) {
            const double c = std::abs(x.coefficient(n));
            if (a.contains(n)) in = std::min(in, c);
            else outside = std::max(outside, c);
        }
        if (in >= outside) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("greedy sets on small vectors") {
    const SparseVector x{{1, 3.0}, {2, 1.0}, {3, 2.0}};
    auto s = greedy_sets(x, 2, GreedyMode::all);
    REQUIRE(s.size() == 1);
    CHECK(s[0].set == IndexSet{1, 3});
    CHECK(s[0].threshold_in == 2.0);
    CHECK(s[0].threshold_out == 1.0);

    const SparseVector tie{{1, 1.0}, {2, -1.0}, {3, 1.0}};
    s = greedy_sets(tie, 1, GreedyMode::all);
    REQUIRE(s.size() == 3);
    CHECK(s[0].set == IndexSet{1});
    CHECK(s[1].set == IndexSet{2});
    CHECK(s[2].set == IndexSet{3});
    CHECK(s[0].tie_class == IndexSet{1, 2, 3});

    const SparseVector twos{{1, 2.0}, {2, 2.0}, {3, 1.0}};
    s = greedy_sets(twos, 1, GreedyMode::one_deterministic);
    REQUIRE(s.size() == 1);
    CHECK(s[0].set == IndexSet{1});

    CHECK_THROWS_AS(greedy_sets(x, -1, GreedyMode::all), std::invalid_argument);
    s = greedy_sets(x, 0, GreedyMode::all);
    CHECK(s[0].set.empty());
    CHECK(s[0].threshold_out == 3.0);
}

TEST_CASE("greedy sets beyond the support") {
    const SparseVector x{{2, 5.0}, {7, -1.0}};
    auto s = greedy_sets(x, 4, GreedyMode::one_deterministic);
    CHECK(s[0].set == IndexSet{1, 2, 3, 7});
    s = greedy_sets(x, 4, GreedyMode::all);
    // {1..7} minus support leaves 5 zero slots for 2 places
    CHECK(s.size() == 10);
    for (const auto& g : s) CHECK(is_greedy_set(x, g.set));
    s = greedy_sets(x, 3, GreedyMode::all, IndexSet{2, 7, 100});
    REQUIRE(s.size() == 1);
    CHECK(s[0].set == IndexSet{2, 7, 100});
    CHECK_THROWS_AS(greedy_sets(x, 4, GreedyMode::all, IndexSet{2, 7, 100}), std::out_of_range);

    const SparseVector far{{Index::power(3, 40), 1.0}};
    CHECK_THROWS_AS(greedy_sets(far, 3, GreedyMode::all), std::length_error);
    CHECK(greedy_sets(far, 3, GreedyMode::one_deterministic)[0].set.size() == 3);
}

TEST_CASE("enumerated greedy sets match brute force") {
    Rng rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        const std::uint64_t dim = 1 + rng.below(10);
        const SparseVector x = random_vector(rng, dim, trial % 2 == 0);
        const std::uint64_t m = rng.below(dim + 1);
        const auto got = greedy_sets(x, static_cast<std::int64_t>(m), GreedyMode::all, IndexSet::range(1, dim));
        const auto expect = brute_force_greedy(x, dim, m);
        REQUIRE(got.size() == expect.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].set == expect[i]);
            CHECK(got[i].threshold_in >= got[i].threshold_out);
            CHECK(got[i].set.size() == m);
        }
    }
}

TEST_CASE("greedy and partial sums") {
    const SparseVector x{{1, 3.0}, {2, 1.0}, {3, 2.0}};
    CHECK(greedy_sum(x, IndexSet{}).is_zero());
    CHECK(greedy_sum(x, x.support()) == x);
    CHECK(greedy_sum(x, IndexSet{1, 3}) == SparseVector{{1, 3.0}, {3, 2.0}});
    CHECK_THROWS_AS(greedy_sum(x, IndexSet{2}), std::invalid_argument);

    const SparseVector y{{2, 5.0}, {10, 1.0}};
    CHECK(partial_sum(y, 0).is_zero());
    CHECK(partial_sum(y, 10) == y);
    CHECK(partial_sum(y, 3) == SparseVector{{2, 5.0}});
}

TEST_CASE("truncation") {
    const SparseVector x{{1, 5.0}, {2, -3.0}, {3, 1.0}};
    CHECK(truncate(x, 5.0) == x);
    CHECK(truncate(x, 2.0) == SparseVector{{1, 2.0}, {2, -2.0}, {3, 1.0}});
    CHECK(truncate(SparseVector{{1, 5.0}}, 5.0) == SparseVector{{1, 5.0}});
    CHECK_THROWS_AS(truncate(x, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(truncate(x, -1.0), std::invalid_argument);
}

TEST_CASE("truncation and sign estimates on lattice spaces") {
    Rng rng(5);
    for (const char* name : {"l1", "l2", "linf", "m3"}) {
        const auto space = parse_space(name);
        for (int i = 0; i < 100; ++i) {
            const SparseVector x = random_vector(rng, 8, i % 3 == 0);
            const double alpha = rng.uniform(0.05, 4.5);
            CHECK(space.norm(truncate(x, alpha)) <= space.norm(x) + 1e-9);
            if (x.is_zero()) continue;
            const auto m = static_cast<std::int64_t>(1 + rng.below(x.size()));
            for (const auto& g : greedy_sets(x, m, GreedyMode::all)) {
                double lo = INFINITY;
                for (const auto& n : g.set) lo = std::min(lo, std::abs(x.coefficient(n)));
                CHECK(lo * space.norm(signed_indicator(g.set, SignPattern::of(x, g.set))) <= 2 * space.norm(x) + 1e-9);
            }
        }
    }
}

TEST_CASE("Chebyshev sums") {
    const auto l1 = parse_space("l1");
    const SparseVector x{{1, 3.0}, {2, -2.0}, {3, 1.0}};
    auto r = chebyshev_sum(l1, x, IndexSet{1});
    CHECK(r.residual_norm == 3.0);
    CHECK(r.certified_gap == 0.0);
    CHECK(r.exact);
    CHECK(chebyshev_sum(l1, x, x.support()).residual_norm == 0.0);

    const auto summing = summing_space();
    r = chebyshev_sum(summing, SparseVector{{1, 1.0}, {2, 1.0}}, IndexSet{1}, 1e-12);
    CHECK(r.residual_norm <= 1.0 + 1e-12);
    CHECK(r.residual_norm >= 1.0 - 1e-12);
    CHECK(r.coefficients.support().is_subset_of(IndexSet{1}));
}

TEST_CASE("Chebyshev never loses to the greedy sum") {
    const auto summing = summing_space();
    Rng rng(77);
    for (int i = 0; i < 40; ++i) {
        const SparseVector x = random_vector(rng, 6, false);
        if (x.is_zero()) continue;
        const auto m = static_cast<std::int64_t>(1 + rng.below(x.size()));
        const auto g = greedy_sets(x, m, GreedyMode::one_deterministic)[0];
        const auto r = chebyshev_sum(summing, x, g.set, 1e-10);
        CHECK(r.residual_norm <= summing.norm(x - greedy_sum(x, g)) + 1e-10);
        CHECK(r.coefficients.support().is_subset_of(g.set));
        CHECK(summing.norm(x - r.coefficients) == r.residual_norm);
    }
}

TEST_CASE("Chebyshev matches a grid search on a non-lattice norm") {
    const auto summing = summing_space();
    const SparseVector x{{1, 1.0}, {2, -0.5}, {3, 2.0}};
    const IndexSet lam{2};
    double grid = INFINITY;
    for (int i = -40000; i <= 40000; ++i) {
        const double a = i * 1e-4;
        grid = std::min(grid, summing.norm(x - SparseVector::unit(2, a)));
    }
    const auto r = chebyshev_sum(summing, x, lam, 1e-12);
    CHECK(r.residual_norm <= grid + 1e-9);
    CHECK(r.residual_norm >= grid - 1e-4);
}
