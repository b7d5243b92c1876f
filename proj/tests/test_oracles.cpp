#include "doctest.h"

#include "wgreedy/oracles.hpp"
#include "wgreedy/random.hpp"
#include "wgreedy/tga.hpp"

#include <cmath>

using namespace wgreedy;

namespace {

SparseVector distinct_vector(Rng& rng, std::uint64_t dim) {
    std::vector<SparseVector::Entry> es;
    for (std::uint64_t n = 1; n <= dim; ++n) es.push_back({n, (rng.coin() ? 1 : -1) * rng.uniform(0.1, 5.0)});
    return SparseVector(es);
}

}  // namespace

TEST_CASE("best m-term errors") {
    const auto l1 = parse_space("l1");
    const SparseVector x{{1, 3.0}, {2, 2.0}, {3, 1.0}};
    CHECK(sigma_m(l1, x, 0).value == 6.0);
    CHECK(sigma_m(l1, x, 1).value == 3.0);
    CHECK(sigma_m(l1, x, 1).witness.set == IndexSet{1});
    CHECK(sigma_tilde_m(l1, x, 1).value == 3.0);
    OracleOptions on_support;
    on_support.universe = x.support();
    CHECK(sigma_m(l1, x, 3, on_support).value == 0.0);
    CHECK_THROWS_AS(sigma_m(l1, x, 4, on_support), std::out_of_range);
    OracleOptions missing;
    missing.universe = IndexSet{1, 2};
    CHECK_THROWS_AS(sigma_m(l1, x, 1, missing), std::invalid_argument);
}

TEST_CASE("weighted errors") {
    const auto l1 = parse_space("l1");
    const auto l2 = parse_space("l2");
    const auto card = SetWeight::cardinality();
    const SparseVector x{{1, 3.0}, {2, 2.0}, {3, 1.0}};
    CHECK(sigma_omega(l1, card, x, IndexSet{1}).value == 3.0);
    CHECK(sigma_omega(l1, card, x, IndexSet{}).value == 6.0);
    CHECK(sigma_tilde_omega(l1, SetWeight::geometric(0.5), x, IndexSet{}).value == 6.0);
    const auto r = sigma_tilde_omega(l2, card, SparseVector{{1, 2.0}, {2, 1.0}}, IndexSet{1});
    CHECK(r.value == 1.0);
    CHECK(r.witness.set == IndexSet{1});
    CHECK(r.exact);
}

TEST_CASE("cardinality weight reduces to the best k-term errors") {
    const auto l2 = parse_space("l2");
    const auto card = SetWeight::cardinality();
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint64_t dim = 1 + rng.below(8);
        const SparseVector x = distinct_vector(rng, dim);
        const std::uint64_t m = rng.below(dim + 1);
        const IndexSet b = greedy_sets(x, static_cast<std::int64_t>(m), GreedyMode::one_deterministic)[0].set;
        OracleOptions opt;
        opt.universe = x.support();
        double best = INFINITY;
        for (std::uint64_t k = 0; k <= m; ++k) best = std::min(best, sigma_m(l2, x, k, opt).value);
        CHECK(sigma_omega(l2, card, x, b, opt).value == doctest::Approx(best).epsilon(1e-12));
    }
}

TEST_CASE("oracle invariants") {
    Rng rng(9);
    const auto card = SetWeight::cardinality();
    const auto w = parse_weight("norm:m3");
    for (const char* name : {"l1", "l2", "m3"}) {
        const auto space = parse_space(name);
        for (int trial = 0; trial < 20; ++trial) {
            const std::uint64_t dim = 1 + rng.below(6);
            const SparseVector x = distinct_vector(rng, dim);
            const std::uint64_t m = rng.below(dim + 1);
            OracleOptions opt;
            opt.universe = x.support();
            CHECK(sigma_m(space, x, m, opt).value == doctest::Approx(sigma_tilde_m(space, x, m, opt).value).epsilon(1e-12));
            for (const auto& g : greedy_sets(x, static_cast<std::int64_t>(m), GreedyMode::all)) {
                const auto tilde = sigma_tilde_omega(space, w, x, g.set);
                const auto plain = sigma_omega(space, w, x, g.set);
                CHECK(space.norm(x - greedy_sum(x, g)) >= tilde.value - 1e-12);
                CHECK(tilde.value >= plain.value - 1e-12);
                CHECK(replay(space, x, tilde) == doctest::Approx(tilde.value).epsilon(1e-12));
                CHECK(replay(space, x, plain) == doctest::Approx(plain.value).epsilon(1e-12));
                OracleOptions wide;
                wide.universe = x.support().unite(IndexSet{20, 21});
                CHECK(sigma_omega(space, card, x, g.set, wide).value <= sigma_omega(space, card, x, g.set).value + 1e-15);
            }
        }
    }
}

TEST_CASE("non-lattice oracles report the window") {
    const auto summing = summing_space();
    const SparseVector x{{1, 1.0}, {2, -1.0}};
    const auto r = sigma_m(summing, x, 1);
    CHECK_FALSE(r.exact);
    CHECK(r.universe.size() == 2 + 8);
    CHECK(replay(summing, x, r) == r.value);
}

TEST_CASE("universe cap") {
    std::vector<SparseVector::Entry> es;
    for (std::uint64_t n = 1; n <= 23; ++n) es.push_back({n, 1.0 / static_cast<double>(n)});
    CHECK_THROWS_AS(sigma_tilde_m(parse_space("l1"), SparseVector(es), 2), std::length_error);
}

TEST_CASE("partial-sum error") {
    const auto l1 = parse_space("l1");
    const auto card = SetWeight::cardinality();
    const SparseVector x{{1, 1.0}, {2, -4.0}, {3, 0.5}, {4, 2.0}};
    auto r = sigma_bar_omega(l1, card, x, IndexSet{}, 4);
    CHECK(r.value == 7.5);
    CHECK(*r.witness.k == 0);
    // A = {1,2}: k <= 2 feasible
    r = sigma_bar_omega(l1, card, x, IndexSet{1, 2}, 4);
    CHECK(r.value == 2.5);
    CHECK(*r.witness.k == 2);
    r = sigma_bar_omega(l1, card, x, IndexSet{1, 2, 3, 4}, 4);
    CHECK(r.value == 0.0);
    CHECK(replay(l1, x, r) == 0.0);
    CHECK_THROWS_AS(sigma_bar_omega(l1, card, x, IndexSet{9}, 4), std::invalid_argument);
}

TEST_CASE("partial-sum error agrees with direct k enumeration") {
    Rng rng(14);
    const auto l2 = parse_space("l2");
    for (const char* wname : {"card", "seq:geom:0.5", "norm:m3", "seq:const:2"}) {
        const auto w = parse_weight(wname);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<SparseVector::Entry> es;
            for (std::uint64_t n = 1; n <= 9; ++n)
                if (rng.coin(0.6)) es.push_back({n, rng.uniform(-3, 3)});
            const SparseVector x(es);
            std::vector<Index> ai;
            for (std::uint64_t n = 1; n <= 9; ++n)
                if (rng.coin(0.4)) ai.emplace_back(n);
            const IndexSet a(ai);
            double best = l2.norm(x);
            for (std::uint64_t k = 1; k <= 12; ++k) {
                const IndexSet lk = IndexSet::range(1, k);
                if (w(lk.minus(a)) <= w(a.minus(lk))) best = std::min(best, l2.norm(x - partial_sum(x, k)));
            }
            CHECK(sigma_bar_omega(l2, w, x, a, 12).value == best);
        }
    }
}

TEST_CASE("partial-sum error with huge indices") {
    const auto m3 = counterexample_space();
    const SparseVector x{{2, 1.0}, {Index::power(3, 30), 0.5}};
    const auto r = sigma_bar_omega(m3, SetWeight::cardinality(), x, IndexSet{1, 2}, Index::power(3, 30));
    CHECK(r.value == 0.5);
}

TEST_CASE("oracle results do not depend on the worker count") {
    const auto space = counterexample_space();
    const auto w = parse_weight("norm:m3");
    Rng rng(3);
    const SparseVector x = distinct_vector(rng, 10);
    OracleOptions one, many;
    one.workers = 1;
    many.workers = 7;
    const IndexSet b{1, 2, 3};
    const auto r1 = sigma_tilde_omega(space, w, x, b, one);
    const auto r7 = sigma_tilde_omega(space, w, x, b, many);
    CHECK(r1.value == r7.value);
    CHECK(r1.witness.set == r7.witness.set);
}
