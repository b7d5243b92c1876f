#include "doctest.h"

#include "wgreedy/constants.hpp"

#include <cmath>

using namespace wgreedy;

namespace {

double root_sum(unsigned n) {
    double s = 0.0;
    for (unsigned k = 1; k <= n; ++k) s += 1.0 / std::sqrt(static_cast<double>(k));
    return s;
}

double harmonic(unsigned from, unsigned to) {
    double s = 0.0;
    for (unsigned k = from; k <= to; ++k) s += 1.0 / k;
    return s;
}

const ConstantEstimate& find(const std::vector<ConstantEstimate>& all, const std::string& name) {
    for (const auto& e : all)
        if (e.name == name) return e;
    throw std::runtime_error("missing " + name);
}

}  // namespace

TEST_CASE("certified constants for catalog combinations") {
    const auto l1 = certify(parse_space("l1"), SetWeight::cardinality());
    for (const char* n : {"K_s", "K_u", "K_b", "C_l", "C_b_omega", "C_d_disjoint", "C_sd_disjoint", "C_pslc",
                          "C_g_omega", "C_al_omega", "C_p_omega"}) {
        REQUIRE(l1.get(n));
        CHECK(l1.get(n)->value == 1.0);
        CHECK(l1.get(n)->kind == "exact");
    }
    CHECK(l1.get("C_s_omega")->value == 5.0);

    const auto m3card = certify(counterexample_space(), SetWeight::cardinality());
    CHECK(m3card.get("K_s")->value == 1.0);
    CHECK_FALSE(m3card.get("C_b_omega"));
    CHECK_FALSE(m3card.get("C_g_omega"));

    const auto m3w = certify(counterexample_space(), parse_weight("norm:m3"));
    CHECK(m3w.get("C_d_disjoint")->kind == "exact");
    CHECK(m3w.get("C_b_omega")->value == 2.0);
    CHECK(m3w.get("C_b_omega")->kind == "upper_bound");
    CHECK(m3w.get("C_g_omega")->value == 2.0);

    const auto sup = certify(parse_space("linf"), SetWeight::geometric(0.5));
    CHECK(sup.get("C_b_omega")->value == 1.0);
    CHECK(sup.get("C_g_omega")->value == 1.0);

    const auto summing = certify(summing_space(), SetWeight::cardinality());
    CHECK(summing.get("K_b")->value == 1.0);
    CHECK_FALSE(summing.get("K_s"));

    CHECK(cardinality_equivalent(parse_weight("norm:l2")));
    CHECK_FALSE(cardinality_equivalent(parse_weight("norm:linf")));
    CHECK_FALSE(cardinality_equivalent(parse_weight("norm:m3")));
}

TEST_CASE("l1 with cardinality weight: every estimate is 1") {
    const auto space = parse_space("l1");
    const auto f = default_family(space, 6, 0, 30);
    const auto all = estimate_all(space, SetWeight::cardinality(), f);
    CHECK(all.size() == 16);
    for (const auto& e : all) {
        INFO(e.name);
        CHECK(e.lower_bound == doctest::Approx(1.0).epsilon(1e-12));
        REQUIRE(e.certified);
        CHECK(e.lower_bound <= e.certified->value + 1e-9);
        CHECK(replay(space, e) == doctest::Approx(e.lower_bound).epsilon(1e-9));
    }
}

TEST_CASE("summing norm is not suppression unconditional on alternating vectors") {
    const auto space = summing_space();
    const auto e = estimate_K_s(space, default_family(space, 8, 0, 10));
    CHECK(e.lower_bound > 1.0);
    CHECK(replay(space, e) == doctest::Approx(e.lower_bound).epsilon(1e-9));
}

TEST_CASE("counterexample space: democracy and conservativeness blow up") {
    const auto space = counterexample_space();
    const auto card = SetWeight::cardinality();
    const auto f16 = default_family(space, 16, 0, 20);
    const auto d = estimate_disjoint_superdemocracy(space, card, f16, true, false);
    CHECK(d.lower_bound == doctest::Approx(root_sum(16) / harmonic(1, 16)).epsilon(1e-12));
    CHECK(d.lower_bound == doctest::Approx(1.97117089881627737079).epsilon(1e-12));
    CHECK_FALSE(d.certified);
    // the norm only sees sorted magnitudes per class, so ||1_B|| = H_16 for B = {3^17..3^32}
    CHECK(space.norm(indicator(IndexSet::powers(3, 17, 32))) == doctest::Approx(harmonic(1, 16)).epsilon(1e-15));
    const auto c = estimate_conservative_variants(space, card, f16, false);
    CHECK(c.lower_bound == doctest::Approx(1.97117089881627737079).epsilon(1e-12));
    CHECK(replay(space, c) == doctest::Approx(c.lower_bound).epsilon(1e-9));

    double previous = 0.0;
    for (std::size_t n : {4, 8, 16, 32}) {
        const auto e = estimate_disjoint_superdemocracy(space, card, default_family(space, n, 0, 10), true, false);
        CHECK(e.lower_bound > previous);
        previous = e.lower_bound;
    }
}

TEST_CASE("ordering of democracy-type estimates on a shared family") {
    for (const char* sname : {"l2", "m3", "summing"}) {
        const auto space = parse_space(sname);
        for (const char* wname : {"card", "norm:m3", "seq:geom:0.7"}) {
            const auto w = parse_weight(wname);
            const auto f = default_family(space, 6, 3, 25);
            const double a = estimate_property_A(space, w, f).lower_bound;
            const double sd = estimate_disjoint_superdemocracy(space, w, f, true, true).lower_bound;
            const double dd = estimate_disjoint_superdemocracy(space, w, f, true, false).lower_bound;
            INFO(sname << " " << wname);
            CHECK(a >= sd);
            CHECK(sd >= dd);
        }
    }
}

TEST_CASE("counterexample space with its own norm as weight stays within certified bounds") {
    const auto space = counterexample_space();
    const auto w = parse_weight("norm:m3");
    const auto f = default_family(space, 8, 1, 30);
    for (const auto& e : estimate_all(space, w, f)) {
        INFO(e.name);
        if (e.certified) CHECK(e.lower_bound <= e.certified->value + 1e-9);
        CHECK(replay(space, e) == doctest::Approx(e.lower_bound).epsilon(1e-9));
    }
    CHECK(estimate_disjoint_superdemocracy(space, w, f).lower_bound <= 1.0);
}

TEST_CASE("property (A) with the induced weight exceeds 1 on a small witness") {
    // e_2 + e_3 against e_2 + e_4: weights of {3} and {4} are both 1
    const auto space = counterexample_space();
    FamilyConfig f;
    f.pool = {2, 3, 4};
    f.pairs = 0;
    f.explicit_pairs = {{IndexSet{3}, IndexSet{4}}};
    f.vectors_per_pair = 0;
    const auto e = estimate_property_A(space, parse_weight("norm:m3"), f);
    CHECK(e.lower_bound == 1.0);
    SparseVector x{{2, 1.0}};
    const double r = space.norm(x + indicator(IndexSet{3})) / space.norm(x + indicator(IndexSet{4}));
    CHECK(r == doctest::Approx(2.0 / (1.0 + 1.0 / std::sqrt(2.0))).epsilon(1e-15));
    CHECK(r > 1.17);
    CHECK(r <= certify(space, parse_weight("norm:m3")).get("C_b_omega")->value);
}

TEST_CASE("unbounded ratios are surfaced") {
    // weight zero on even singletons breaks positivity: x = e_1 + ... with competitor
    // sets absorbing even indices for free can drive the oracle to 0
    const auto space = parse_space("l1");
    const auto broken = SetWeight::custom("zero-on-evens",
        [](const IndexSet& a) {
            double s = 0.0;
            for (const auto& n : a) s += n.to_u64() % 2 ? 1.0 : 0.0;
            return s;
        }, false);
    const FamilyConfig f = default_family(space, 4, 0, 10);
    try {
        estimate_greedy_type_constants(space, broken, f, GreedyType::g);
        FAIL("expected an unbounded ratio");
    } catch (const UnboundedRatio& e) {
        CHECK(e.constant() == "C_g_omega");
        CHECK(space.norm(e.witness().denominator) == 0.0);
        CHECK(space.norm(e.witness().numerator) > 0.0);
    }
    CHECK(ratio(0.0, 0.0) == 1.0);
    CHECK(std::isinf(ratio(1.0, 0.0)));
}

TEST_CASE("estimates are identical across worker counts") {
    const auto space = counterexample_space();
    const auto w = parse_weight("norm:m3");
    auto f1 = default_family(space, 6, 5, 20);
    auto f4 = f1;
    f1.workers = 1;
    f4.workers = 4;
    const auto a = estimate_all(space, w, f1);
    const auto b = estimate_all(space, w, f4);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].lower_bound == b[i].lower_bound);
        CHECK(a[i].witness.description == b[i].witness.description);
    }
}
