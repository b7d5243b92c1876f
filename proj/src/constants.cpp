#include "wgreedy/constants.hpp"

#include "wgreedy/oracles.hpp"
#include "wgreedy/parallel.hpp"
#include "wgreedy/random.hpp"
#include "wgreedy/tga.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>

namespace wgreedy {

std::optional<CertifiedValue> CertifiedConstants::get(std::string_view name) const {
    for (const auto& [n, v] : values)
        if (n == name) return v;
    return std::nullopt;
}

void CertifiedConstants::set(std::string name, CertifiedValue v) {
    for (auto& [n, old] : values) {
        if (n == name) {
            old = std::move(v);
            return;
        }
    }
    values.emplace_back(std::move(name), std::move(v));
}

bool cardinality_equivalent(const SetWeight& weight) {
    if (weight.counts_elements()) return true;
    // ||1_A||_p = |A|^(1/p) is increasing in |A|
    if (weight.kind() == WeightKind::norm_induced && weight.induced_space()) {
        const auto& n = weight.induced_space()->name();
        return n == "l1" || n == "l2" || n.starts_with("lp:");
    }
    return false;
}

namespace {

CertifiedValue exact_one(std::string basis) { return {1.0, "exact", std::move(basis)}; }

bool is_finite_lp(const NormSpace& s) {
    return s.name() == "l1" || s.name() == "l2" || s.name().starts_with("lp:");
}

}  // namespace

CertifiedConstants certify(const NormSpace& space, const SetWeight& weight) {
    CertifiedConstants c;
    const auto& fl = space.flags();
    if (fl.known_K_s) c.set("K_s", {*fl.known_K_s, "exact", "declared by the space"});
    if (fl.known_K_u) c.set("K_u", {*fl.known_K_u, "exact", "declared by the space"});
    if (fl.known_K_b) c.set("K_b", {*fl.known_K_b, "exact", "declared by the space"});
    if (fl.known_C_l) c.set("C_l", {*fl.known_C_l, "exact", "declared by the space"});

    static const char* const democracy_family[] = {"C_b_omega",      "C_d_disjoint",        "C_sd_disjoint",
                                                   "C_d",            "C_sd",                "C_conservative",
                                                   "C_superconservative", "C_pslc"};
    if (space.name() == "linf") {
        for (const char* n : democracy_family)
            c.set(n, exact_one("sup-norm: any nonempty B gives ||x + 1_B||_inf = 1 >= the left side"));
    } else if (is_finite_lp(space) && cardinality_equivalent(weight)) {
        for (const char* n : democracy_family)
            c.set(n, exact_one("l_p additivity over disjoint supports; the weight constraint is |A| <= |B|"));
    } else if (space.lattice() && weight.kind() == WeightKind::norm_induced && weight.induced_space() &&
               weight.induced_space()->name() == space.name()) {
        const char* basis = "w(A) <= w(B) is ||1_A|| <= ||1_B||, signs are free in a lattice norm";
        for (const char* n : {"C_d_disjoint", "C_sd_disjoint", "C_d", "C_sd", "C_conservative", "C_superconservative"})
            c.set(n, exact_one(basis));
        const double ks = fl.known_K_s.value_or(1.0), ku = fl.known_K_u.value_or(1.0);
        const CertifiedValue b{ks + ku * ku * 1.0, "upper_bound", "K_s + K_u^2 C_d_disjoint"};
        c.set("C_b_omega", b);
        c.set("C_pslc", {b.value, "upper_bound", "restriction of Property (A): <= C_b_omega"});
    }

    auto product = [&](const char* out, const char* a, const char* b, const char* basis) {
        const auto x = c.get(a), y = c.get(b);
        if (!x || !y) return;
        const double v = x->value * y->value;
        const bool exact = x->kind == "exact" && y->kind == "exact" && v == 1.0;
        c.set(out, {v, exact ? "exact" : "upper_bound", basis});
    };
    product("C_g_omega", "K_s", "C_b_omega", "K_s C_b_omega");
    product("C_al_omega", "C_l", "C_b_omega", "C_l C_b_omega");
    product("C_p_omega", "C_l", "C_pslc", "C_l C_pslc");
    if (const auto l = c.get("C_l"), sd = c.get("C_sd_disjoint"); l && sd)
        c.set("C_s_omega", {l->value * (1.0 + 4.0 * sd->value * l->value), "upper_bound",
                            "C_l (1 + 4 C_sd_disjoint C_l)"});
    return c;
}

double ratio(double numerator, double denominator) {
    if (denominator == 0.0) {
        if (numerator == 0.0) return 1.0;
        return std::numeric_limits<double>::infinity();
    }
    return numerator / denominator;
}

double replay(const NormSpace& space, const ConstantEstimate& e) {
    return ratio(space.norm(e.witness.numerator), space.norm(e.witness.denominator));
}

UnboundedRatio::UnboundedRatio(std::string constant, ConstantWitness witness)
    : std::runtime_error("unbounded ratio for " + constant + ": " + witness.description),
      constant_(std::move(constant)),
      witness_(std::move(witness)) {}

FamilyConfig default_family(const NormSpace& space, std::size_t dim, std::uint64_t seed, std::size_t family_size) {
    FamilyConfig f;
    f.seed = seed;
    f.vectors = family_size;
    f.pairs = family_size;
    if (space.name() == "m3") {
        std::vector<Index> merged;
        for (unsigned k = 1; merged.size() < 4 * dim + 4; ++k) {
            merged.push_back(Index::power(2, k));
            merged.push_back(Index::power(3, k));
        }
        std::sort(merged.begin(), merged.end());
        merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(dim), merged.end());
        f.pool = std::move(merged);
        for (unsigned n = 1; n <= dim; ++n) {
            f.explicit_pairs.push_back({IndexSet::powers(2, 1, n), IndexSet::powers(3, 1, n)});
            f.conservative_pairs.push_back({IndexSet::powers(2, 1, n), IndexSet::powers(3, n + 1, 2 * n)});
        }
    } else {
        for (std::uint64_t n = 1; n <= dim; ++n) f.pool.emplace_back(n);
    }
    return f;
}

namespace {

struct Instance {
    SparseVector numerator;
    SparseVector denominator;
    std::string description;
};

// Max ratio over count instances; exact ties keep the smallest id.
ConstantEstimate reduce(std::string name, const NormSpace& space, const SetWeight* weight, const FamilyConfig& f,
                        std::string family, std::size_t count, const std::function<Instance(std::size_t)>& make) {
    double best = -1.0;
    std::size_t best_id = 0;
    std::size_t unbounded_id = std::numeric_limits<std::size_t>::max();
    std::mutex merge;
    parallel_chunks(count, f.workers, [&](std::uint64_t begin, std::uint64_t end) {
        double local = -1.0;
        std::size_t local_id = 0;
        std::size_t local_unbounded = std::numeric_limits<std::size_t>::max();
        for (std::uint64_t i = begin; i < end; ++i) {
            const Instance inst = make(i);
            const double r = ratio(space.norm(inst.numerator), space.norm(inst.denominator));
            if (std::isinf(r)) {
                local_unbounded = std::min<std::size_t>(local_unbounded, i);
                continue;
            }
            if (r > local) {
                local = r;
                local_id = i;
            }
        }
        std::lock_guard lock(merge);
        unbounded_id = std::min(unbounded_id, local_unbounded);
        if (local > best || (local == best && local_id < best_id)) {
            best = local;
            best_id = local_id;
        }
    });
    if (unbounded_id != std::numeric_limits<std::size_t>::max()) {
        Instance inst = make(unbounded_id);
        throw UnboundedRatio(name, {std::move(inst.numerator), std::move(inst.denominator), std::move(inst.description)});
    }
    ConstantEstimate e;
    e.name = name;
    e.family = std::move(family);
    e.seed = f.seed;
    e.instances = count;
    if (weight) e.certified = certify(space, *weight).get(name);
    else {
        CertifiedConstants c = certify(space, SetWeight::cardinality());
        e.certified = c.get(name);
    }
    if (best >= 0.0) {
        Instance inst = make(best_id);
        e.lower_bound = best;
        e.witness = {std::move(inst.numerator), std::move(inst.denominator), std::move(inst.description)};
    }
    return e;
}

SparseVector random_on(Rng& rng, const std::vector<Index>& domain, double scale) {
    std::vector<SparseVector::Entry> es;
    for (const auto& n : domain) es.push_back({n, draw_coefficient(rng, scale)});
    return SparseVector(std::move(es));
}

// Vectors for unweighted norm constants: seeded random vectors with ties and
// alternating +-1 vectors on pool prefixes.
std::vector<SparseVector> norm_vectors(const FamilyConfig& f) {
    std::vector<SparseVector> out;
    Rng rng(mix_seed(f.seed, 1, 0));
    for (std::size_t i = 0; i < f.vectors; ++i) {
        const std::size_t size = 1 + rng.below(f.pool.size());
        out.push_back(random_on(rng, random_subset(rng, f.pool, size), 1.0 + rng.below(4)));
    }
    std::vector<Index> sorted = f.pool;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 1; k <= std::min<std::size_t>(sorted.size(), 8); ++k) {
        std::vector<SparseVector::Entry> es;
        for (std::size_t i = 0; i < k; ++i) es.push_back({sorted[i], i % 2 ? -1.0 : 1.0});
        out.emplace_back(std::move(es));
    }
    return out;
}

struct SignChoice {
    std::uint64_t code = 0;  // 0 is all plus
    bool enumerated = true;
};

SignPattern make_signs(const IndexSet& domain, const SignChoice& s) {
    if (s.enumerated) return SignPattern::from_bits(domain, s.code);
    if (s.code == 0) return SignPattern::constant(domain);
    Rng rng(s.code);
    std::map<Index, int> m;
    for (const auto& n : domain) m[n] = rng.coin() ? -1 : 1;
    return SignPattern(std::move(m));
}

std::vector<SignChoice> sign_choices(const FamilyConfig& f, std::size_t domain_size, std::uint64_t salt) {
    std::vector<SignChoice> out;
    if (domain_size <= f.sign_cap) {
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << domain_size); ++b) out.push_back({b, true});
    } else {
        out.push_back({0, false});
        for (std::size_t i = 0; i < f.sign_samples; ++i) out.push_back({mix_seed(f.seed, 7, salt * 1000 + i) | 1, false});
    }
    return out;
}

struct PairTuple {
    std::size_t pair;
    std::size_t sign;
    std::size_t vector;  // 0 is x = 0
};

struct PairFamily {
    std::vector<std::pair<IndexSet, IndexSet>> pairs;
    std::vector<std::vector<SignChoice>> signs;     // per pair, over A ∪ B
    std::vector<std::vector<SparseVector>> vectors; // per pair, first is zero
};

void add_signs_and_vectors(PairFamily& fam, const FamilyConfig& f, bool below_only) {
    for (std::size_t i = 0; i < fam.pairs.size(); ++i) {
        const auto& [a, b] = fam.pairs[i];
        fam.signs.push_back(sign_choices(f, a.size() + b.size(), i));
        std::vector<Index> free;
        const IndexSet ab = a.unite(b);
        for (const auto& n : f.pool) {
            if (ab.contains(n)) continue;
            if (below_only && !a.empty() && n <= a.max()) continue;
            free.push_back(n);
        }
        std::sort(free.begin(), free.end());
        std::vector<SparseVector> xs{SparseVector{}};
        Rng rng(mix_seed(f.seed, 3, i));
        if (!free.empty())
            for (std::size_t j = 0; j < f.vectors_per_pair; ++j)
                xs.push_back(random_on(rng, random_subset(rng, free, 1 + rng.below(free.size())), 1.0));
        fam.vectors.push_back(std::move(xs));
    }
}

PairFamily disjoint_pairs(const SetWeight& w, const FamilyConfig& f) {
    PairFamily fam;
    for (const auto& [a, b] : f.explicit_pairs) {
        if (a.intersects(b)) continue;
        if (w(a) <= w(b)) fam.pairs.push_back({a, b});
        if (w(b) <= w(a) && !(a == b)) fam.pairs.push_back({b, a});
    }
    Rng rng(mix_seed(f.seed, 2, 0));
    for (std::size_t i = 0; i < f.pairs; ++i) {
        const std::size_t sa = rng.below(f.max_set_size + 1);
        const std::size_t sb = 1 + rng.below(f.max_set_size);
        auto picked = random_subset(rng, f.pool, sa + sb);
        std::vector<Index> av(picked.begin(), picked.begin() + std::min(sa, picked.size()));
        std::vector<Index> bv(picked.begin() + std::min(sa, picked.size()), picked.end());
        IndexSet a(av), b(bv);
        if (!(w(a) <= w(b))) std::swap(a, b);
        if (w(a) <= w(b)) fam.pairs.push_back({a, b});
    }
    add_signs_and_vectors(fam, f, false);
    return fam;
}

PairFamily ordered_pairs(const SetWeight& w, const FamilyConfig& f) {
    PairFamily fam;
    for (const auto& [a, b] : f.conservative_pairs)
        if (a.precedes(b) && !a.empty() && w(a) <= w(b)) fam.pairs.push_back({a, b});
    std::vector<Index> sorted = f.pool;
    std::sort(sorted.begin(), sorted.end());
    Rng rng(mix_seed(f.seed, 4, 0));
    if (sorted.size() >= 2) {
        for (std::size_t i = 0; i < f.pairs; ++i) {
            const std::size_t split = 1 + rng.below(sorted.size() - 1);
            std::vector<Index> lo(sorted.begin(), sorted.begin() + split), hi(sorted.begin() + split, sorted.end());
            std::vector<Index> av = random_subset(rng, lo, 1 + rng.below(f.max_set_size));
            const IndexSet b(random_subset(rng, hi, 1 + rng.below(f.max_set_size)));
            std::sort(av.begin(), av.end());
            // shrink A from the top until the weight constraint holds
            while (!av.empty() && !(w(IndexSet(av)) <= w(b))) av.pop_back();
            if (!av.empty()) fam.pairs.push_back({IndexSet(av), b});
        }
    }
    add_signs_and_vectors(fam, f, true);
    return fam;
}

std::vector<PairTuple> tuples(const PairFamily& fam, bool with_vectors, bool with_signs) {
    std::vector<PairTuple> out;
    for (std::size_t p = 0; p < fam.pairs.size(); ++p) {
        const std::size_t ns = with_signs ? fam.signs[p].size() : 1;
        const std::size_t nv = with_vectors ? fam.vectors[p].size() : 1;
        for (std::size_t v = 0; v < nv; ++v)
            for (std::size_t s = 0; s < ns; ++s) out.push_back({p, s, v});
    }
    return out;
}

std::string pair_text(const IndexSet& a, const IndexSet& b) { return "A=" + a.to_string() + " B=" + b.to_string(); }

Instance pair_instance(const PairFamily& fam, const PairTuple& t, bool with_signs) {
    const auto& [a, b] = fam.pairs[t.pair];
    const SignChoice s = with_signs ? fam.signs[t.pair][t.sign] : SignChoice{0, true};
    const SignPattern eps = make_signs(a.unite(b), s);
    const SparseVector& x = fam.vectors[t.pair][t.vector];
    Instance inst;
    inst.numerator = x + signed_indicator(a, eps);
    inst.denominator = x + signed_indicator(b, eps);
    inst.description = pair_text(a, b) + " x=" + x.to_string() + " signs=" + std::to_string(s.code);
    return inst;
}

std::string describe_pool(const FamilyConfig& f) {
    std::vector<Index> sorted = f.pool;
    std::sort(sorted.begin(), sorted.end());
    std::string s = "pool of " + std::to_string(f.pool.size()) + " indices";
    if (!sorted.empty()) s += " in [" + sorted.front().to_string() + ", " + sorted.back().to_string() + "]";
    return s;
}

}  // namespace

ConstantEstimate estimate_K_s(const NormSpace& space, const FamilyConfig& f) {
    const auto vs = norm_vectors(f);
    struct Job {
        std::size_t v;
        IndexSet a;
    };
    std::vector<Job> jobs;
    Rng rng(mix_seed(f.seed, 5, 0));
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto supp = vs[i].support();
        if (supp.size() <= 8) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << supp.size()); ++mask)
                jobs.push_back({i, supp.subset_by_mask(mask)});
        } else {
            for (int j = 0; j < 16; ++j) jobs.push_back({i, supp.subset_by_mask(rng.bits())});
        }
    }
    return reduce("K_s", space, nullptr, f, describe_pool(f) + "; ||P_A x|| / ||x||", jobs.size(), [&](std::size_t id) {
        const auto& j = jobs[id];
        return Instance{vs[j.v].project(j.a), vs[j.v], "x=" + vs[j.v].to_string() + " A=" + j.a.to_string()};
    });
}

ConstantEstimate estimate_K_u(const NormSpace& space, const FamilyConfig& f) {
    const auto vs = norm_vectors(f);
    std::vector<std::pair<SparseVector, SparseVector>> jobs;
    Rng rng(mix_seed(f.seed, 6, 0));
    for (const auto& b : vs) {
        for (int j = 0; j < 8; ++j) {
            std::vector<SparseVector::Entry> es;
            for (const auto& e : b.entries()) {
                const double t = j == 0 ? 1.0 : draw_coefficient(rng, 1.0);
                es.push_back({e.index, t * e.value});
            }
            jobs.push_back({SparseVector(std::move(es)), b});
        }
    }
    return reduce("K_u", space, nullptr, f, describe_pool(f) + "; ||a|| / ||b|| with |a_n| <= |b_n|", jobs.size(),
                  [&](std::size_t id) {
                      return Instance{jobs[id].first, jobs[id].second,
                                      "a=" + jobs[id].first.to_string() + " b=" + jobs[id].second.to_string()};
                  });
}

ConstantEstimate estimate_K_b(const NormSpace& space, const FamilyConfig& f) {
    const auto vs = norm_vectors(f);
    std::vector<std::pair<std::size_t, Index>> jobs;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (const auto& e : vs[i].entries()) jobs.push_back({i, e.index});
    return reduce("K_b", space, nullptr, f, describe_pool(f) + "; ||S_k x|| / ||x||", jobs.size(), [&](std::size_t id) {
        const auto& [v, k] = jobs[id];
        return Instance{partial_sum(vs[v], k), vs[v], "x=" + vs[v].to_string() + " k=" + k.to_string()};
    });
}

ConstantEstimate estimate_C_l(const NormSpace& space, const FamilyConfig& f) {
    const auto vs = norm_vectors(f);
    std::vector<std::pair<std::size_t, IndexSet>> jobs;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto supp = vs[i].support();
        for (std::size_t m = 0; m <= supp.size(); ++m) {
            for (auto& g : greedy_sets(vs[i], static_cast<std::int64_t>(m), GreedyMode::all, supp, 4096))
                jobs.push_back({i, std::move(g.set)});
        }
    }
    return reduce("C_l", space, nullptr, f, describe_pool(f) + "; ||x - G_m x|| / ||x|| over all greedy sets",
                  jobs.size(), [&](std::size_t id) {
                      const auto& [v, g] = jobs[id];
                      return Instance{vs[v].project_out(g), vs[v], "x=" + vs[v].to_string() + " greedy=" + g.to_string()};
                  });
}

ConstantEstimate estimate_property_A(const NormSpace& space, const SetWeight& w, const FamilyConfig& f) {
    const PairFamily fam = disjoint_pairs(w, f);
    const auto ts = tuples(fam, true, true);
    return reduce("C_b_omega", space, &w, f,
                  describe_pool(f) + "; " + std::to_string(fam.pairs.size()) +
                      " disjoint pairs with w(A) <= w(B), x = 0 and seeded ||x||_inf <= 1",
                  ts.size(), [&](std::size_t id) { return pair_instance(fam, ts[id], true); });
}

ConstantEstimate estimate_disjoint_superdemocracy(const NormSpace& space, const SetWeight& w, const FamilyConfig& f,
                                                  bool disjoint, bool signed_variant) {
    PairFamily fam;
    if (disjoint) {
        fam = disjoint_pairs(w, f);
    } else {
        // overlapping pairs: disjoint ones with a shared core added
        fam = disjoint_pairs(w, f);
        Rng rng(mix_seed(f.seed, 8, 0));
        PairFamily over;
        for (const auto& [a, b] : fam.pairs) {
            const IndexSet core(random_subset(rng, f.pool, 1 + rng.below(2)));
            const IndexSet a2 = a.unite(core), b2 = b.unite(core);
            if (w(a2) <= w(b2)) over.pairs.push_back({a2, b2});
            over.pairs.push_back({a, b});
        }
        over.pairs.push_back({IndexSet{f.pool.front()}, IndexSet{f.pool.front()}});
        add_signs_and_vectors(over, f, false);
        fam = std::move(over);
    }
    const auto ts = tuples(fam, false, signed_variant);
    std::string name = std::string(signed_variant ? "C_sd" : "C_d") + (disjoint ? "_disjoint" : "");
    return reduce(name, space, &w, f,
                  describe_pool(f) + "; " + std::to_string(fam.pairs.size()) + (disjoint ? " disjoint" : " overlapping") +
                      " pairs with w(A) <= w(B)" + (signed_variant ? ", signs" : ""),
                  ts.size(), [&](std::size_t id) { return pair_instance(fam, ts[id], signed_variant); });
}

ConstantEstimate estimate_conservative_variants(const NormSpace& space, const SetWeight& w, const FamilyConfig& f,
                                                bool signed_variant) {
    const PairFamily fam = ordered_pairs(w, f);
    const auto ts = tuples(fam, false, signed_variant);
    return reduce(signed_variant ? "C_superconservative" : "C_conservative", space, &w, f,
                  describe_pool(f) + "; " + std::to_string(fam.pairs.size()) + " pairs A < B, A nonempty, w(A) <= w(B)",
                  ts.size(), [&](std::size_t id) { return pair_instance(fam, ts[id], signed_variant); });
}

ConstantEstimate estimate_pslc(const NormSpace& space, const SetWeight& w, const FamilyConfig& f) {
    const PairFamily fam = ordered_pairs(w, f);
    const auto ts = tuples(fam, true, true);
    return reduce("C_pslc", space, &w, f,
                  describe_pool(f) + "; " + std::to_string(fam.pairs.size()) +
                      " pairs with A < supp(x) ∪ B, x = 0 and seeded ||x||_inf <= 1",
                  ts.size(), [&](std::size_t id) { return pair_instance(fam, ts[id], true); });
}

ConstantEstimate estimate_greedy_type_constants(const NormSpace& space, const SetWeight& w, const FamilyConfig& f,
                                                GreedyType which) {
    std::vector<SparseVector> vs;
    Rng rng(mix_seed(f.seed, 9, 0));
    const std::size_t cap = std::min(f.max_greedy_dim, f.pool.size());
    for (std::size_t i = 0; i < f.vectors; ++i) {
        const std::size_t size = 1 + rng.below(cap);
        auto v = random_on(rng, random_subset(rng, f.pool, size), 1.0 + rng.below(3));
        if (!v.is_zero()) vs.push_back(std::move(v));
    }
    std::vector<std::pair<std::size_t, IndexSet>> jobs;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto supp = vs[i].support();
        for (std::size_t m = 0; m <= supp.size(); ++m)
            for (auto& g : greedy_sets(vs[i], static_cast<std::int64_t>(m), GreedyMode::all, supp, 4096))
                jobs.push_back({i, std::move(g.set)});
    }
    OracleOptions opt;
    opt.window = f.oracle_window;
    opt.workers = 1;  // the outer reduction is already parallel
    const char* names[] = {"C_g_omega", "C_al_omega", "C_s_omega", "C_p_omega"};
    const char* oracle[] = {"sigma^w", "tilde sigma^w", "sigma^w (Chebyshev numerator)", "bar sigma^w"};
    const auto idx = static_cast<std::size_t>(which);
    return reduce(names[idx], space, &w, f,
                  describe_pool(f) + "; ||x - G_m x|| / " + oracle[idx] + " over all greedy sets of " +
                      std::to_string(vs.size()) + " seeded vectors",
                  jobs.size(), [&](std::size_t id) {
                      const auto& [v, g] = jobs[id];
                      const SparseVector& x = vs[v];
                      Instance inst;
                      inst.description = "x=" + x.to_string() + " greedy=" + g.to_string();
                      if (which == GreedyType::s) {
                          inst.numerator = x - chebyshev_sum(space, x, g, 1e-12).coefficients;
                      } else {
                          inst.numerator = x.project_out(g);
                      }
                      OracleResult r;
                      switch (which) {
                          case GreedyType::g:
                          case GreedyType::s: r = sigma_omega(space, w, x, g, opt); break;
                          case GreedyType::al: r = sigma_tilde_omega(space, w, x, g, opt); break;
                          case GreedyType::p: {
                              const IndexSet both = x.support().unite(g);
                              r = sigma_bar_omega(space, w, x, g, both.max(), opt);
                              break;
                          }
                      }
                      if (r.witness.k) {
                          inst.denominator = *r.witness.k == 0 ? x : x - partial_sum(x, Index(*r.witness.k));
                          inst.description += " k=" + r.witness.k->str();
                      } else if (r.witness.coefficients) {
                          inst.denominator = x - *r.witness.coefficients;
                          inst.description += " competitor=" + r.witness.set.to_string();
                      } else {
                          inst.denominator = x.project_out(r.witness.set);
                          inst.description += " competitor=" + r.witness.set.to_string();
                      }
                      return inst;
                  });
}

std::vector<ConstantEstimate> estimate_all(const NormSpace& space, const SetWeight& w, const FamilyConfig& f) {
    std::vector<ConstantEstimate> out;
    out.push_back(estimate_K_s(space, f));
    out.push_back(estimate_K_u(space, f));
    out.push_back(estimate_K_b(space, f));
    out.push_back(estimate_C_l(space, f));
    out.push_back(estimate_property_A(space, w, f));
    out.push_back(estimate_disjoint_superdemocracy(space, w, f, true, false));
    out.push_back(estimate_disjoint_superdemocracy(space, w, f, true, true));
    out.push_back(estimate_disjoint_superdemocracy(space, w, f, false, false));
    out.push_back(estimate_disjoint_superdemocracy(space, w, f, false, true));
    out.push_back(estimate_conservative_variants(space, w, f, false));
    out.push_back(estimate_conservative_variants(space, w, f, true));
    out.push_back(estimate_pslc(space, w, f));
    for (auto t : {GreedyType::g, GreedyType::al, GreedyType::s, GreedyType::p})
        out.push_back(estimate_greedy_type_constants(space, w, f, t));
    return out;
}

}  // namespace wgreedy
