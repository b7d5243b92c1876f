#include "wgreedy/theorems.hpp"

#include "wgreedy/oracles.hpp"
#include "wgreedy/parallel.hpp"
#include "wgreedy/random.hpp"
#include "wgreedy/tga.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

namespace wgreedy {

std::string to_string(SuiteStatus s) {
    switch (s) {
        case SuiteStatus::pass: return "pass";
        case SuiteStatus::violation: return "violation";
        case SuiteStatus::skipped: return "skipped";
        case SuiteStatus::aborted: return "aborted";
    }
    return "?";
}

bool SuiteReport::ok() const {
    if (status == SuiteStatus::skipped) return true;
    if (status != SuiteStatus::pass) return false;
    return std::all_of(negative_controls.begin(), negative_controls.end(),
                       [](const NegativeControl& c) { return c.fired(); });
}

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Outcome {
    std::size_t checks = 0;
    std::vector<SuiteViolation> violations;

    void absorb(Outcome&& o) {
        checks += o.checks;
        for (auto& v : o.violations) violations.push_back(std::move(v));
    }
};

// Records checks for one instance; the description is built only on failure.
class Checker {
public:
    Checker(std::size_t instance, double tol, Outcome& out) : instance_(instance), tol_(tol), out_(out) {}

    std::function<std::string()> describe;

    bool leq(const std::string& step, double lhs, double rhs) { return leq(step, lhs, rhs, tol_); }
    bool leq(const std::string& step, double lhs, double rhs, double tol) {
        ++out_.checks;
        if (lhs <= rhs + tol) return true;
        fail(step, lhs, rhs);
        return false;
    }
    bool holds(const std::string& step, bool ok) {
        ++out_.checks;
        if (!ok) fail(step, 0.0, 0.0);
        return ok;
    }
    bool same(const std::string& step, const SparseVector& a, const SparseVector& b, double tol = 0.0) {
        ++out_.checks;
        double worst = 0.0;
        if (tol == 0.0) {
            if (a == b) return true;
            worst = std::numeric_limits<double>::infinity();
        } else {
            const SparseVector d = a - b;
            worst = d.sup_norm();
            if (worst <= tol * (1.0 + std::max(a.sup_norm(), b.sup_norm()))) return true;
        }
        fail(step, worst, tol);
        return false;
    }

private:
    void fail(const std::string& step, double lhs, double rhs) {
        out_.violations.push_back({step, instance_, lhs, rhs, describe ? describe() : std::string()});
    }

    std::size_t instance_;
    double tol_;
    Outcome& out_;
};

// Runs body(i, checker) for i in [0, count) and merges in instance order.
Outcome run_instances(std::size_t count, unsigned workers, double tol,
                      const std::function<void(std::size_t, Checker&)>& body) {
    std::map<std::uint64_t, Outcome> parts;
    std::mutex merge;
    parallel_chunks(count, workers, [&](std::uint64_t begin, std::uint64_t end) {
        Outcome local;
        for (std::uint64_t i = begin; i < end; ++i) {
            Checker ck(i, tol, local);
            body(i, ck);
        }
        std::lock_guard lock(merge);
        parts.emplace(begin, std::move(local));
    });
    Outcome all;
    for (auto& [b, o] : parts) all.absorb(std::move(o));
    return all;
}

void finalize(SuiteReport& r, Outcome&& main, const SuiteOptions& o) {
    r.checks += main.checks;
    r.violation_count += main.violations.size();
    for (auto& v : main.violations) r.violations.push_back(std::move(v));
    for (const auto& c : r.negative_controls) {
        if (!c.fired()) {
            ++r.violation_count;
            r.violations.push_back({"negative control did not fire: " + c.name, 0, 0.0, 0.0, c.detail});
        }
    }
    std::stable_sort(r.violations.begin(), r.violations.end(),
                     [](const SuiteViolation& a, const SuiteViolation& b) { return a.instance < b.instance; });
    if (r.violations.size() > o.max_reported) r.violations.resize(o.max_reported);
    r.status = r.violation_count == 0 ? SuiteStatus::pass : SuiteStatus::violation;
}

SuiteReport start(std::string suite, std::string theorem, const std::string& space, const std::string& weight,
                  const SuiteOptions& o) {
    SuiteReport r;
    r.suite = std::move(suite);
    r.theorem = std::move(theorem);
    r.space = space;
    r.weight = weight;
    r.seed = o.seed;
    r.tol = o.tol;
    return r;
}

// Looks up certified constants, recording them; on a miss the report is marked aborted.
class Constants {
public:
    Constants(SuiteReport& r, CertifiedConstants c) : r_(r), c_(std::move(c)) {}

    std::optional<double> need(const std::string& name) {
        const auto v = c_.get(name);
        if (!v) {
            missing_.push_back(name);
            return std::nullopt;
        }
        r_.constants_used.push_back({name, v->value, v->kind});
        return v->value;
    }
    bool abort_if_missing() {
        if (missing_.empty()) return false;
        r_.status = SuiteStatus::aborted;
        std::string s = "no certified value for";
        for (const auto& m : missing_) s += " " + m;
        r_.notes.push_back(s);
        return true;
    }

private:
    SuiteReport& r_;
    CertifiedConstants c_;
    std::vector<std::string> missing_;
};

void note_pretended(NegativeControl& c, SuiteReport& r, const std::string& name, double v) {
    r.constants_used.push_back({name + " (" + c.name + ")", v, "pretended"});
}

// Seeded vector on a subset of the pool; instance 0 is the zero vector.
SparseVector family_vector(const std::vector<Index>& pool, std::uint64_t seed, std::size_t i) {
    if (i == 0 || pool.empty()) return {};
    Rng rng(mix_seed(seed, 101, i));
    const std::size_t size = 1 + rng.below(pool.size());
    const double scale = 0.5 + static_cast<double>(rng.below(6)) * 0.5;
    std::vector<SparseVector::Entry> es;
    for (const auto& n : random_subset(rng, pool, size)) es.push_back({n, draw_coefficient(rng, scale)});
    return SparseVector(std::move(es));
}

SignPattern random_signs(Rng& rng, const IndexSet& a) {
    std::map<Index, int> s;
    for (const auto& n : a) s.emplace(n, rng.coin() ? 1 : -1);
    return SignPattern(std::move(s));
}

// max over sign patterns delta of ||base + 1_{delta A}||.
double sup_signs(const NormSpace& space, const SparseVector& base, const IndexSet& a) {
    if (a.size() > 16) throw std::length_error("sign enumeration over more than 16 indices");
    double best = 0.0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << a.size()); ++bits)
        best = std::max(best, space.norm(base + signed_indicator(a, SignPattern::from_bits(a, bits))));
    return best;
}

SparseVector signs_times(const SparseVector& x, const IndexSet& a, double alpha) {
    std::vector<SparseVector::Entry> es;
    for (const auto& n : a) es.push_back({n, alpha * sgn(x.coefficient(n))});
    return SparseVector(std::move(es));
}

std::vector<IndexSet> all_subsets(const IndexSet& u) {
    std::vector<IndexSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << u.size()); ++mask) out.push_back(u.subset_by_mask(mask));
    return out;
}

std::vector<GreedySelection> all_greedy(const SparseVector& x, const IndexSet& universe) {
    std::vector<GreedySelection> out;
    for (std::size_t m = 0; m <= universe.size(); ++m) {
        auto g = greedy_sets(x, static_cast<std::int64_t>(m), GreedyMode::all, universe);
        for (auto& s : g) out.push_back(std::move(s));
    }
    return out;
}

double sum_pow(unsigned n, double p) {
    long double s = 0.0L;
    for (unsigned k = 1; k <= n; ++k) s += std::pow(static_cast<long double>(k), static_cast<long double>(-p));
    return static_cast<double>(s);
}

IndexSet power_set(unsigned base, unsigned first, unsigned last) { return IndexSet::powers(base, first, last); }

std::vector<Index> pool_for(const NormSpace& space, const SuiteOptions& o) {
    return default_family(space, o.dim, o.seed, o.vectors).pool;
}

std::string describe_xs(const SparseVector& x, const IndexSet& a, const IndexSet& b) {
    return "x=" + x.to_string() + " greedy=" + a.to_string() + " competitor=" + b.to_string();
}

// The instance x = 1_{3^1..3^N} + c 1_{2^1..2^N} with greedy set the powers of 3 and the
// powers of 2 as an equal-size competitor, on the counterexample space.
struct PowerInstance {
    SparseVector x;
    IndexSet greedy;
    IndexSet competitor;
};

PowerInstance power_instance(unsigned n, double c) {
    const IndexSet threes = power_set(3, 1, n);
    const IndexSet twos = power_set(2, 1, n);
    return {indicator(threes) + c * indicator(twos), threes, twos};
}

// ---- replay chains shared by the greedy and almost greedy suites ----

struct LemmaStep {
    double alpha;
    SparseVector rhs_vector;  // x - P_A x - P_{B\A} x + alpha sum_{A\B} sgn(x_n) e_n
};

LemmaStep lemma_step(const SparseVector& x, const IndexSet& a, const IndexSet& b) {
    double alpha = std::numeric_limits<double>::infinity();
    for (const auto& n : a) alpha = std::min(alpha, std::abs(x.coefficient(n)));
    const IndexSet a_minus_b = a.minus(b);
    SparseVector v = x.project_out(a).project_out(b.minus(a));
    if (!a_minus_b.empty()) v = v + signs_times(x, a_minus_b, alpha);
    return {alpha, v};
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteReport check_property_a_reformulation(const NormSpace& space, const SetWeight& w, const SuiteOptions& o) {
    SuiteReport r = start("property-a-reformulation",
                          "Property (A) <=> ||x|| <= C ||x - P_A x + 1_{eps B}|| for ||x||_inf <= 1, w(A) <= w(B), "
                          "B disjoint from A and supp x",
                          space.name(), w.name(), o);
    Constants k(r, certify(space, w));
    const auto cb = k.need("C_b_omega");
    if (k.abort_if_missing()) return r;
    const std::vector<Index> pool = pool_for(space, o);
    r.instances = o.tuples;

    Outcome main = run_instances(o.tuples, o.workers, o.tol, [&](std::size_t i, Checker& ck) {
        Rng rng(mix_seed(o.seed, 201, i));
        const bool forward = i % 2 == 0;
        auto shuffled = random_subset(rng, pool, pool.size());
        const std::size_t nb = rng.below(std::min<std::size_t>(4, shuffled.size() + 1));
        IndexSet b(std::vector<Index>(shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(nb)));
        std::vector<Index> rest(shuffled.begin() + static_cast<std::ptrdiff_t>(nb), shuffled.end());
        IndexSet a;
        for (int attempt = 0; attempt < 20; ++attempt) {
            const std::size_t na = rng.below(std::min<std::size_t>(4, rest.size() + 1));
            IndexSet cand(random_subset(rng, rest, na));
            if (w(cand) <= w(b)) {
                a = cand;
                break;
            }
        }
        // forward tuples let supp x meet A; reverse tuples keep x, A, B disjoint
        std::vector<Index> xdom;
        for (const auto& n : rest)
            if (forward || !a.contains(n)) xdom.push_back(n);
        std::vector<SparseVector::Entry> es;
        if (i % 10 != 1) {
            for (const auto& n : random_subset(rng, xdom, rng.below(xdom.size() + 1)))
                es.push_back({n, draw_coefficient(rng, 1.0)});
        }
        const SparseVector x(std::move(es));
        const SignPattern eps = random_signs(rng, forward ? b : a);
        ck.describe = [&] { return "x=" + x.to_string() + " A=" + a.to_string() + " B=" + b.to_string(); };

        if (forward) {
            const SparseVector u = x.project_out(a);
            const SparseVector rhs = u + signed_indicator(b, eps);
            const double sup = sup_signs(space, u, a);
            ck.leq("convex hull of sign completions", space.norm(x), sup);
            ck.leq("Property (A) on x - P_A x", sup, *cb * space.norm(rhs));
            ck.leq("reformulated inequality", space.norm(x), *cb * space.norm(rhs));
        } else {
            const SignPattern delta = random_signs(rng, b);
            const SparseVector y = x + signed_indicator(a, eps);
            const SparseVector yrhs = y.project_out(a) + signed_indicator(b, delta);
            ck.same("substitution y - P_A y + 1_{delta B} = x + 1_{delta B}", yrhs, x + signed_indicator(b, delta));
            ck.leq("reformulated inequality on y = Property (A) on x", space.norm(y), *cb * space.norm(yrhs));
        }
    });

    if (o.negative_controls) {
        NegativeControl c{"reversed weight constraint on unbalanced counterexample sets", 0, 0, ""};
        const NormSpace m3 = counterexample_space();
        const SetWeight wm3 = SetWeight::norm_induced(m3);
        const double pretend = certify(m3, wm3).get("C_b_omega")->value;
        note_pretended(c, r, "C_b_omega", pretend);
        for (unsigned n : {8u, 16u, 32u, 64u}) {
            const IndexSet a = power_set(2, 1, n);
            const IndexSet b = power_set(3, 1, n);
            if (!(wm3(a) >= wm3(b))) continue;
            ++c.instances;
            const SparseVector x = indicator(a);
            const double lhs = m3.norm(x);
            const double rhs = pretend * m3.norm(x.project_out(a) + indicator(b));
            if (lhs > rhs + o.tol) {
                ++c.violations;
                if (c.detail.empty()) c.detail = "N=" + std::to_string(n) + " lhs=" + num(lhs) + " rhs=" + num(rhs);
            }
        }
        r.negative_controls.push_back(c);
    }
    finalize(r, std::move(main), o);
    return r;
}

// ---------------------------------------------------------------------------

namespace {

// Direction (2) for every greedy set and every feasible competitor, plus the oracle bound.
void greedy_direction_two(const NormSpace& space, const SetWeight& w, const SparseVector& x, const IndexSet& universe,
                          double ks, double cb, bool almost, double cl, Checker& ck) {
    const auto subsets = all_subsets(universe);
    for (const auto& g : all_greedy(x, universe)) {
        const IndexSet& a = g.set;
        const double lhs = space.norm(x.project_out(a));
        for (const auto& b : subsets) {
            if (!weight_feasible(w, b, a)) continue;
            ck.describe = [&] { return describe_xs(x, a, b); };
            const LemmaStep ls = lemma_step(x, a, b);
            ck.leq("Property (A) reformulation step", lhs, cb * space.norm(ls.rhs_vector));
            const SparseVector off = x.project_out(a.unite(b));
            const SparseVector clipped = a.minus(b).empty() ? off : off + signs_times(x, a.minus(b), ls.alpha);
            ck.same("rewrite as P_{(A u B)^c} x + alpha sum_{A\\B} sgn(x_n) e_n", ls.rhs_vector, clipped);
            if (!almost) {
                std::vector<SparseVector> coefficient_choices;
                coefficient_choices.push_back(chebyshev_sum(space, x, b).coefficients);
                coefficient_choices.push_back(0.5 * x.project(b));
                for (const auto& bc : coefficient_choices) {
                    const SparseVector d = x - bc;
                    bool dominated = true;
                    for (const auto& e : ls.rhs_vector.entries()) {
                        const double dn = d.coefficient(e.index);
                        if (!(e.value * dn >= 0.0 && std::abs(e.value) <= std::abs(dn))) dominated = false;
                    }
                    ck.holds("sign-compatible domination premise", dominated);
                    ck.leq("domination step", space.norm(ls.rhs_vector), ks * space.norm(d));
                    ck.leq("greedy inequality", lhs, ks * cb * space.norm(d));
                }
            } else {
                const SparseVector v = x.project_out(b);
                if (a.empty()) {
                    ck.same("truncation identity", ls.rhs_vector, v);
                } else if (ls.alpha == 0.0) {
                    ck.holds("truncation identity (alpha = 0)", ls.rhs_vector.is_zero());
                } else {
                    const SparseVector t = truncate(v, ls.alpha);
                    ck.same("truncation identity C_b ||T_alpha(P_{(A u B)^c} x + P_{A\\B} x)||", ls.rhs_vector, t);
                    ck.leq("truncation bound", space.norm(t), cl * space.norm(v));
                }
                ck.leq("almost greedy inequality", lhs, cl * cb * space.norm(v));
            }
        }
        ck.describe = [&] { return "x=" + x.to_string() + " greedy=" + a.to_string(); };
        OracleOptions oo;
        oo.universe = universe;
        oo.workers = 1;
        const double sigma = almost ? sigma_tilde_omega(space, w, x, a, oo).value : sigma_omega(space, w, x, a, oo).value;
        ck.leq(almost ? "bound by projection oracle" : "bound by free-coefficient oracle", lhs,
               (almost ? cl * cb : ks * cb) * sigma);
    }
}

NegativeControl power_control(const std::string& name, double pretend, bool almost, double tol) {
    NegativeControl c{name, 0, 0, ""};
    const NormSpace m3 = counterexample_space();
    for (unsigned n : {4u, 8u, 16u}) {
        const PowerInstance p = power_instance(n, 0.99);
        ++c.instances;
        const double lhs = m3.norm(p.x.project_out(p.greedy));
        const SparseVector comp = almost ? p.x.project(p.competitor) : chebyshev_sum(m3, p.x, p.competitor).coefficients;
        const double rhs = pretend * m3.norm(p.x - comp);
        if (lhs > rhs + tol) {
            ++c.violations;
            if (c.detail.empty()) c.detail = "N=" + std::to_string(n) + " lhs=" + num(lhs) + " rhs=" + num(rhs);
        }
    }
    return c;
}

}  // namespace

SuiteReport check_greedy_characterization(const NormSpace& space, const SetWeight& w, const SuiteOptions& o) {
    SuiteReport r = start("greedy-characterization",
                          "greedy = suppression unconditional + Property (A), constant K_s C_b", space.name(), w.name(), o);
    Constants k(r, certify(space, w));
    const auto ks = k.need("K_s");
    const auto cb = k.need("C_b_omega");
    if (k.abort_if_missing()) return r;
    const double cg = *ks * *cb;
    r.constants_used.push_back({"K_s C_b_omega", cg, "product"});
    r.notes.push_back("direction (1) constructions use alpha = 2||x||_inf + 1 and the certified product K_s C_b_omega");
    const std::vector<Index> pool = pool_for(space, o);
    const IndexSet universe(pool);
    r.instances = o.vectors;

    Outcome main = run_instances(o.vectors, o.workers, o.tol, [&](std::size_t i, Checker& ck) {
        const SparseVector x = family_vector(pool, o.seed, i);
        greedy_direction_two(space, w, x, universe, *ks, *cb, false, 0.0, ck);

        Rng rng(mix_seed(o.seed, 202, i));
        OracleOptions oo;
        oo.universe = universe;
        oo.workers = 1;
        // suppression from greediness
        for (int t = 0; t < 4; ++t) {
            const IndexSet b(random_subset(rng, pool, rng.below(pool.size() + 1)));
            const double alpha = 2.0 * x.sup_norm() + 1.0;
            std::vector<SparseVector::Entry> es;
            for (const auto& n : b) es.push_back({n, alpha + x.coefficient(n)});
            const SparseVector y = SparseVector(std::move(es)) + x.project_out(b);
            ck.describe = [&] { return "x=" + x.to_string() + " B=" + b.to_string(); };
            ck.holds("B greedy for y", is_greedy_set(y, b));
            ck.same("y - P_B y = P_{B^c} x", y.project_out(b), x.project_out(b));
            const double sigma = sigma_omega(space, w, y, b, oo).value;
            ck.leq("competitor B with coefficients alpha", sigma, space.norm(y - alpha * indicator(b)));
            ck.leq("greedy step", space.norm(y.project_out(b)), cg * sigma);
            ck.leq("suppression bound", space.norm(x.project_out(b)), cg * space.norm(x));
        }
        // Property (A) from greediness
        for (int t = 0; t < 4; ++t) {
            auto sh = random_subset(rng, pool, pool.size());
            const std::size_t nb = rng.below(std::min<std::size_t>(4, sh.size()) + 1);
            const IndexSet b(std::vector<Index>(sh.begin(), sh.begin() + static_cast<std::ptrdiff_t>(nb)));
            std::vector<Index> rest(sh.begin() + static_cast<std::ptrdiff_t>(nb), sh.end());
            const std::size_t na = rng.below(std::min<std::size_t>(nb, rest.size()) + 1);
            const IndexSet a(std::vector<Index>(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(na)));
            if (!(w(a) <= w(b))) continue;
            std::vector<SparseVector::Entry> es;
            for (auto it = rest.begin() + static_cast<std::ptrdiff_t>(na); it != rest.end(); ++it)
                es.push_back({*it, draw_coefficient(rng, 1.0)});
            const SparseVector xs(std::move(es));
            const SignPattern eps = random_signs(rng, a);
            const SignPattern delta = random_signs(rng, b);
            const SparseVector y = xs + signed_indicator(a, eps) + signed_indicator(b, delta);
            ck.describe = [&] { return "x=" + xs.to_string() + " A=" + a.to_string() + " B=" + b.to_string(); };
            ck.holds("B greedy for y", is_greedy_set(y, b));
            ck.same("y - P_B y = x + 1_{eps A}", y.project_out(b), xs + signed_indicator(a, eps));
            ck.holds("A feasible against B", weight_feasible(w, a, b));
            const double sigma = sigma_omega(space, w, y, b, oo).value;
            ck.leq("competitor A", sigma, space.norm(y.project_out(a)));
            ck.leq("greedy step", space.norm(y.project_out(b)), cg * sigma);
            ck.leq("Property (A) bound", space.norm(xs + signed_indicator(a, eps)),
                   cg * space.norm(xs + signed_indicator(b, delta)));
        }
    });

    if (o.negative_controls) {
        NegativeControl c = power_control("counterexample space with cardinality weight and pretended constant 1", 1.0,
                                          false, o.tol);
        note_pretended(c, r, "K_s C_b_omega", 1.0);
        r.negative_controls.push_back(c);
    }
    finalize(r, std::move(main), o);
    return r;
}

SuiteReport check_almost_greedy_characterization(const NormSpace& space, const SetWeight& w, const SuiteOptions& o) {
    SuiteReport r = start("almost-greedy-characterization",
                          "almost greedy = quasi-greedy + Property (A), constant C_l C_b", space.name(), w.name(), o);
    Constants k(r, certify(space, w));
    const auto cl = k.need("C_l");
    const auto cb = k.need("C_b_omega");
    if (k.abort_if_missing()) return r;
    r.constants_used.push_back({"C_l C_b_omega", *cl * *cb, "product"});
    const std::vector<Index> pool = pool_for(space, o);
    const IndexSet universe(pool);
    r.instances = o.vectors;
    Outcome main = run_instances(o.vectors, o.workers, o.tol, [&](std::size_t i, Checker& ck) {
        greedy_direction_two(space, w, family_vector(pool, o.seed, i), universe, 0.0, *cb, true, *cl, ck);
    });
    if (o.negative_controls) {
        NegativeControl c = power_control("counterexample space with cardinality weight and pretended constant 1", 1.0,
                                          true, o.tol);
        note_pretended(c, r, "C_l C_b_omega", 1.0);
        r.negative_controls.push_back(c);
    }
    finalize(r, std::move(main), o);
    return r;
}

// ---------------------------------------------------------------------------

namespace {

// ||1_A|| <= ||1_B|| over disjoint pairs of the pool with w(A) <= w(B); returns violations.
Outcome disjoint_democracy_by_definition(const NormSpace& space, const SetWeight& w, const std::vector<Index>& pool,
                                         std::size_t first_instance, std::size_t* pairs) {
    Outcome out;
    const std::size_t n = pool.size();
    std::size_t count = 0;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<Index> a, b;
        std::uint64_t c = code;
        for (std::size_t i = 0; i < n; ++i, c /= 3) {
            if (c % 3 == 1) a.push_back(pool[i]);
            if (c % 3 == 2) b.push_back(pool[i]);
        }
        const IndexSet sa(a), sb(b);
        if (!(w(sa) <= w(sb))) continue;
        Checker ck(first_instance + count, 0.0, out);
        ck.describe = [&] { return "A=" + sa.to_string() + " B=" + sb.to_string(); };
        ck.leq("disjoint democracy from the weight definition", space.norm(indicator(sa)), space.norm(indicator(sb)));
        ++count;
    }
    *pairs = count;
    return out;
}

}  // namespace

SuiteReport check_norm_induced_weight(const NormSpace& space, const SuiteOptions& o) {
    const SetWeight w = SetWeight::norm_induced(space);
    if (!space.flags().known_K_s) {
        SuiteReport r = start("norm-induced-weight", "unconditional => greedy for w(A) = ||1_A||", space.name(), w.name(), o);
        r.status = SuiteStatus::skipped;
        r.notes.push_back("premise not met: space not flagged unconditional");
        return r;
    }
    SuiteOptions inner = o;
    inner.negative_controls = false;
    inner.max_reported = std::numeric_limits<std::size_t>::max();
    SuiteReport r = check_greedy_characterization(space, w, inner);
    r.suite = "norm-induced-weight";
    r.theorem = "unconditional => greedy for w(A) = ||1_A||";
    if (r.status == SuiteStatus::aborted) return r;

    const std::vector<Index> pool = pool_for(space, o);
    std::size_t pairs = 0;
    Outcome extra = disjoint_democracy_by_definition(space, w, pool, r.instances, &pairs);
    r.instances += pairs;
    if (o.negative_controls) {
        NegativeControl c{"cardinality weight on the counterexample space", 0, 0, ""};
        const NormSpace m3 = counterexample_space();
        std::vector<Index> mixed;
        for (unsigned k = 1; k <= 4; ++k) {
            mixed.push_back(Index::power(2, k));
            mixed.push_back(Index::power(3, k));
        }
        std::size_t np = 0;
        Outcome bad = disjoint_democracy_by_definition(m3, SetWeight::cardinality(), mixed, 0, &np);
        c.instances = np;
        c.violations = bad.violations.size();
        if (!bad.violations.empty()) c.detail = bad.violations.front().detail;
        r.negative_controls.push_back(c);
    }
    // re-run finalize over the combined counts
    Outcome all;
    all.checks = extra.checks;
    for (auto& v : r.violations) all.violations.push_back(v);
    for (auto& v : extra.violations) all.violations.push_back(v);
    r.violations.clear();
    r.violation_count = 0;
    finalize(r, std::move(all), o);
    return r;
}

// ---------------------------------------------------------------------------

double democracy_ratio(unsigned n) {
    const NormSpace m3 = counterexample_space();
    return m3.norm(indicator(power_set(2, 1, n))) / m3.norm(indicator(power_set(3, 1, n)));
}

SuiteReport check_counterexample(const SuiteOptions& o) {
    SuiteReport r = start("counterexample",
                          "unconditional, not democratic: ||1_{2..2^N}|| / ||1_{3..3^N}|| ~ sqrt(N)/ln(N); "
                          "||sum_{k<=N} e_{n_k}|| >= H_N",
                          "m3", "-", o);
    r.notes.push_back(
        "statements quantified over all weight sequences are not machine-checkable; only their witnesses "
        "(non-democracy, non-conservativeness, harmonic lower bound) are evaluated");
    if (o.n_list.empty() || !std::is_sorted(o.n_list.begin(), o.n_list.end()) ||
        std::adjacent_find(o.n_list.begin(), o.n_list.end()) != o.n_list.end() || o.n_list.front() < 1) {
        r.status = SuiteStatus::aborted;
        r.notes.push_back("N list must be strictly increasing positive integers");
        return r;
    }
    const NormSpace m3 = counterexample_space();
    Outcome main;
    SuiteTable table{"democracy ratio", {"N", "ratio_norm", "ratio_direct", "sqrtN_over_lnN"}, {}};
    double prev = -1.0;
    for (std::size_t i = 0; i < o.n_list.size(); ++i) {
        const unsigned n = o.n_list[i];
        Checker ck(i, o.tol, main);
        ck.describe = [n] { return "N=" + std::to_string(n); };
        const double rn = democracy_ratio(n);
        const double rd = sum_pow(n, 0.5) / sum_pow(n, 1.0);
        ck.leq("agreement with direct partial sums", std::abs(rn - rd), 0.0, 1e-12);
        if (i > 0) ck.holds("strict growth", rn > prev);
        prev = rn;
        table.rows.push_back({double(n), rn, rd, n > 1 ? std::sqrt(double(n)) / std::log(double(n)) : 0.0});
    }
    r.tables.push_back(table);

    const double h = sum_pow(static_cast<unsigned>(o.subsequence_length), 1.0);
    Outcome sub = run_instances(o.subsequences, o.workers, o.tol, [&](std::size_t i, Checker& ck) {
        Rng rng(mix_seed(o.seed, 301, i));
        std::vector<Index> seq;
        Index::value_type cur = 1 + rng.below(8);
        for (std::size_t k = 0; k < o.subsequence_length; ++k) {
            seq.emplace_back(cur);
            switch (rng.below(3)) {
                case 0: {  // next power of two above cur
                    Index::value_type p = 1;
                    while (p <= cur) p <<= 1;
                    cur = p;
                    break;
                }
                case 1: cur = cur * 3; break;
                default: cur += 1 + rng.below(1000);
            }
        }
        const IndexSet s(seq);
        ck.describe = [&] { return "subsequence " + s.to_string(); };
        ck.leq("harmonic lower bound", h, m3.norm(indicator(s)));
    });
    for (auto& v : sub.violations) v.instance += o.n_list.size();
    main.absorb(std::move(sub));
    r.instances = o.n_list.size() + o.subsequences;

    if (o.negative_controls) {
        NegativeControl c{"growth assertion on l2", 0, 0, ""};
        const NormSpace l2 = lp_space(2.0);
        double last = -1.0;
        for (unsigned n : o.n_list) {
            const double rn = l2.norm(indicator(power_set(2, 1, n))) / l2.norm(indicator(power_set(3, 1, n)));
            if (last >= 0.0) {
                ++c.instances;
                if (!(rn > last)) {
                    ++c.violations;
                    if (c.detail.empty()) c.detail = "N=" + std::to_string(n) + " ratio=" + num(rn);
                }
            }
            last = rn;
        }
        r.negative_controls.push_back(c);
    }
    finalize(r, std::move(main), o);
    return r;
}

// ---------------------------------------------------------------------------

namespace {

struct SummableParts {
    Outcome out;
    std::size_t instances = 0;
};

// Bounded indicator sums along `seq` when the weight is summable there: the head/tail split with the
// x = e_{seq[0]} + 1_{eps B2} replay.
SummableParts summable_replay(const NormSpace& space, const SetWeight& w, const std::vector<Index>& seq, double kb,
                              double cs, double c2, const SuiteOptions& o, std::uint64_t salt, std::size_t first_id,
                              std::string* head_note) {
    SummableParts res;
    const double w1 = w.singleton(seq.front());
    // smallest head length N with w(seq tail after N) < w_{seq[0]}
    std::size_t head = seq.size();
    for (std::size_t n = 1; n <= seq.size(); ++n) {
        const IndexSet tail(std::vector<Index>(seq.begin() + static_cast<std::ptrdiff_t>(n), seq.end()));
        if (w(tail) < w1) {
            head = n;
            break;
        }
    }
    *head_note = std::to_string(head);
    const double bound = static_cast<double>(head) * c2 + (kb + 1.0) * cs * c2;
    const std::size_t count = 2 * seq.size();
    res.instances = count;
    res.out = run_instances(count, o.workers, o.tol, [&](std::size_t i, Checker& ck) {
        Rng rng(mix_seed(o.seed, salt, i));
        std::vector<Index> bs;
        if (i < seq.size()) {
            bs.assign(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i + 1));  // prefixes
        } else {
            bs = random_subset(rng, seq, 1 + rng.below(std::min<std::size_t>(12, seq.size())));
        }
        const IndexSet b(bs);
        const SignPattern eps = random_signs(rng, b);
        std::vector<Index> h1, t1;
        for (const auto& n : b) {
            const auto pos = std::lower_bound(seq.begin(), seq.end(), n) - seq.begin();
            (static_cast<std::size_t>(pos) < head ? h1 : t1).push_back(n);
        }
        const IndexSet b1(h1), b2(t1);
        ck.describe = [&] { return "B=" + b.to_string() + " head=" + std::to_string(head); };
        const double nb = space.norm(signed_indicator(b, eps));
        const double nb1 = space.norm(signed_indicator(b1, eps));
        const double nb2 = space.norm(signed_indicator(b2, eps));
        ck.leq("split into head and tail", nb, nb1 + nb2);
        ck.leq("head bound N c2", nb1, static_cast<double>(head) * c2);
        if (!b2.empty() && b2.size() <= 16) {
            const Index& first = seq.front();
            const SparseVector x = SparseVector::unit(first) + signed_indicator(b2, eps);
            const IndexSet one{first};
            ck.holds("first index greedy for x", is_greedy_set(x, one));
            const ChebyshevResult cg = chebyshev_sum(space, x, one);
            const double res_norm = space.norm(x - cg.coefficients);
            ck.leq("partial-sum step", nb2, (kb + 1.0) * res_norm, o.tol + (kb + 1.0) * cg.certified_gap);
            OracleOptions oo;
            oo.universe = one.unite(b2);
            oo.workers = 1;
            const double sigma = sigma_omega(space, w, x, one, oo).value;
            ck.leq("semi-greedy step", res_norm, cs * sigma);
            ck.holds("tail feasible against the first index", weight_feasible(w, b2, one));
            ck.leq("competitor tail", sigma, space.norm(SparseVector::unit(first)));
            ck.leq("unit vector bound", space.norm(SparseVector::unit(first)), c2);
        }
        ck.leq("bounded indicator sums", nb, bound);
    });
    for (auto& v : res.out.violations) v.instance += first_id;
    return res;
}

}  // namespace

SuiteReport check_semi_greedy_necessity(const NormSpace& space, const SetWeight& w, const SuiteOptions& o) {
    SuiteReport r = start("semi-greedy-necessity",
                          "semi-greedy with structured weight: ||1_{eps B}|| <= 2 K_b C_s c2 when w(B) <= limsup w_n; "
                          "c0 behaviour when sum w_n < inf, sup w_n = inf or inf w_n = 0",
                          space.name(), w.name(), o);
    const CertifiedConstants cert = certify(space, w);
    if (!cert.get("C_s_omega") || !cert.get("K_b")) {
        r.status = SuiteStatus::skipped;
        r.notes.push_back("premise not met: no certified semi-greedy constant for this space and weight");
        return r;
    }
    Constants k(r, cert);
    const double kb = *k.need("K_b");
    const double cs = *k.need("C_s_omega");
    const double c2 = space.flags().c2;
    r.constants_used.push_back({"c2", c2, "exact"});
    const std::uint64_t range = std::max<std::uint64_t>(o.structured_range, 8);
    const StructuredWeightReport sw = check_structured(w, o.structured_check_range, 8);
    r.notes.push_back("structured-weight verdicts on 1.." + std::to_string(o.structured_check_range) + ": a=" + to_string(sw.a.verdict) +
                      " b=" + to_string(sw.b.verdict) + " c=" + to_string(sw.c.verdict) + " d=" +
                      to_string(sw.d.verdict) + " e=" + to_string(sw.e.verdict) + " f=" + to_string(sw.f.verdict));
    r.notes.push_back("limsup, sums and infima are range-relative over 1.." + std::to_string(range));

    double limsup = 0.0, total_tail = 0.0, maxw = 0.0, minw = std::numeric_limits<double>::infinity();
    for (std::uint64_t n = 1; n <= range; ++n) {
        const double wn = w.singleton(n);
        maxw = std::max(maxw, wn);
        minw = std::min(minw, wn);
        if (n >= range / 2) limsup = std::max(limsup, wn);
        if (n > range / 2) total_tail += wn;
    }
    const double w1 = w.singleton(1);
    const bool summable = total_tail < 1e-6 * w1;
    const bool unbounded = maxw >= 1e6 * w1;
    const bool vanishing = minw < 1e-6 * w1;

    // part (1)
    const double bound1 = 2.0 * kb * cs * c2;
    std::vector<IndexSet> tested;
    for (std::uint64_t n = 1; n + 2 <= range; ++n)
        if (w.singleton(n) <= limsup) tested.push_back(IndexSet{Index(n)});
    {
        Rng rng(mix_seed(o.seed, 401, 0));
        std::vector<Index> dom;
        for (std::uint64_t n = 1; n + 2 <= range; ++n) dom.emplace_back(n);
        for (std::size_t t = 0; t < 4 * o.vectors; ++t) {
            IndexSet b(random_subset(rng, dom, 1 + rng.below(4)));
            if (w(b) <= limsup || unbounded) tested.push_back(std::move(b));
        }
    }
    // separation margin min_{m != c} w({c, m}) - w_m for each c in range
    std::vector<double> margin(range + 1, 0.0);
    for (std::uint64_t c = 1; c <= range; ++c) {
        double mg = std::numeric_limits<double>::infinity();
        for (std::uint64_t m = 1; m <= range; ++m)
            if (m != c) mg = std::min(mg, w(IndexSet{Index(c), Index(m)}) - w.singleton(m));
        margin[c] = mg;
    }
    std::size_t replay_skipped = 0;
    std::mutex note_mutex;
    Outcome main = run_instances(tested.size(), o.workers, o.tol, [&](std::size_t i, Checker& ck) {
        const IndexSet& b = tested[i];
        Rng rng(mix_seed(o.seed, 402, i));
        const SignPattern eps = random_signs(rng, b);
        const SparseVector ind = signed_indicator(b, eps);
        ck.describe = [&] { return "B=" + b.to_string(); };
        ck.leq("bound 2 K_b C_s c2", space.norm(ind), bound1);
        // N1 > max B with a positive separation margin, N2 > N1 with w({N1, N2}) > w(B)
        const std::uint64_t mb = b.max().to_u64();
        std::optional<std::uint64_t> n1, n2;
        for (std::uint64_t c = mb + 1; c <= range && !n1; ++c)
            if (margin[c] > 0.0) n1 = c;
        if (n1)
            for (std::uint64_t c = *n1 + 1; c <= range && !n2; ++c)
                if (w(IndexSet{Index(*n1), Index(c)}) > w(b)) n2 = c;
        if (!n2) {
            std::lock_guard lock(note_mutex);
            ++replay_skipped;
            return;
        }
        const IndexSet pair{Index(*n1), Index(*n2)};
        const SparseVector x = ind + indicator(pair);
        ck.holds("{N1, N2} greedy for x", is_greedy_set(x, pair));
        const ChebyshevResult cg = chebyshev_sum(space, x, pair);
        const double rn = space.norm(x - cg.coefficients);
        ck.leq("partial-sum step", space.norm(ind), kb * rn, o.tol + kb * cg.certified_gap);
        OracleOptions oo;
        oo.universe = b.unite(pair);
        oo.workers = 1;
        const double sigma = sigma_omega(space, w, x, pair, oo).value;
        ck.leq("semi-greedy step", rn, cs * sigma);
        ck.holds("B feasible against {N1, N2}", weight_feasible(w, b, pair));
        ck.leq("competitor B", sigma, space.norm(indicator(pair)));
        ck.leq("two unit vectors", space.norm(indicator(pair)), 2.0 * c2);
    });
    r.instances = tested.size();
    if (replay_skipped)
        r.notes.push_back(std::to_string(replay_skipped) + " sets without N1, N2 inside the range: bound checked, replay skipped");

    std::vector<Index> full;
    for (std::uint64_t n = 1; n <= range; ++n) full.emplace_back(n);
    if (summable) {
        std::string head;
        SummableParts p = summable_replay(space, w, full, kb, cs, c2, o, 403, r.instances, &head);
        r.instances += p.instances;
        main.absorb(std::move(p.out));
        r.notes.push_back("summable on range: head length " + head);
    }
    if (unbounded) r.notes.push_back("unbounded on range: the 2 K_b C_s c2 bound was checked for all tested sets");
    if (vanishing) {
        // subsequence with w_{n_k} <= 2^-k w_1
        std::vector<Index> sub{Index(1)};
        for (std::uint64_t n = 2; n <= range; ++n)
            if (w.singleton(n) <= std::ldexp(w1, -static_cast<int>(sub.size()))) sub.emplace_back(n);
        std::string head;
        SummableParts p = summable_replay(space, w, sub, kb, cs, c2, o, 404, r.instances, &head);
        r.instances += p.instances;
        main.absorb(std::move(p.out));
        r.notes.push_back("subsequence of length " + std::to_string(sub.size()) + " extracted, head length " + head);
    }
    if (!summable && !unbounded && !vanishing) r.notes.push_back("parts (2) and (3) not applicable on range");

    if (o.negative_controls) {
        NegativeControl c{"l1 with weight 2^-n and pretended semi-greedy constant 5", 0, 0, ""};
        note_pretended(c, r, "C_s_omega", 5.0);
        const NormSpace l1 = lp_space(1.0);
        const SetWeight g = SetWeight::geometric(0.5);
        std::vector<Index> seq;
        for (std::uint64_t n = 1; n <= 24; ++n) seq.emplace_back(n);
        SuiteOptions q = o;
        q.workers = 1;
        std::string head;
        SummableParts p = summable_replay(l1, g, seq, 1.0, 5.0, 1.0, q, 405, 0, &head);
        c.instances = p.instances;
        c.violations = p.out.violations.size();
        if (!p.out.violations.empty()) c.detail = p.out.violations.front().step + ": " + p.out.violations.front().detail;
        r.negative_controls.push_back(c);
    }
    finalize(r, std::move(main), o);
    return r;
}

// ---------------------------------------------------------------------------

namespace {

// Truncated-vector construction for one competitor y supported on a: each link of the chain.
void z_chain(const NormSpace& space, const SparseVector& x, const IndexSet& lam, const IndexSet& a,
             const SparseVector& y, double alpha, double cl, double csd, double c, double lhs, double slack,
             Checker& ck) {
    const SparseVector b = x - y;
    const SparseVector tb = truncate(b, alpha);
    const SparseVector z35 = tb.project(lam) + x.project_out(lam);
    std::vector<SparseVector::Entry> es;
    for (const auto& n : a.minus(lam)) es.push_back({n, x.coefficient(n) - tb.coefficient(n)});
    const SparseVector d(std::move(es));
    ck.same("z as truncated residual plus correction on A \\ greedy", z35, tb + d, 1e-12);
    ck.holds("x - z supported in the greedy set", (x - z35).support().is_subset_of(lam));
    const double nb = space.norm(b);
    ck.leq("truncation step (37)", space.norm(tb), cl * nb);
    const IndexSet a_out = a.minus(lam);
    const IndexSet l_out = lam.minus(a);
    if (!a_out.empty()) {
        bool coeff_ok = true;
        for (const auto& e : d.entries()) coeff_ok = coeff_ok && std::abs(e.value) <= 2.0 * alpha * (1.0 + 1e-15);
        ck.holds("|x_n - T_alpha(b_n)| <= 2 alpha on A \\ greedy", coeff_ok);
        const double sup = sup_signs(space, {}, a_out);
        ck.leq("convexity", space.norm(d), 2.0 * alpha * sup);
        if (ck.holds("greedy \\ A nonempty", !l_out.empty())) {
            double mn = std::numeric_limits<double>::infinity();
            for (const auto& n : l_out) mn = std::min(mn, std::abs(b.coefficient(n)));
            ck.leq("alpha <= min over greedy \\ A of |b_n|", alpha, mn);
            const double n_lout = space.norm(signed_indicator(l_out, SignPattern::of(b, l_out)));
            ck.leq("disjoint superdemocracy", sup, csd * n_lout);
            std::vector<Index> big;
            for (const auto& e : b.entries())
                if (std::abs(e.value) >= mn) big.push_back(e.index);
            const IndexSet bp(big);
            ck.holds("level set greedy for x - y", is_greedy_set(b, bp));
            const double n_bp = space.norm(signed_indicator(bp, SignPattern::of(b, bp)));
            ck.leq("suppression of the sign vector", n_lout, cl * n_bp);
            ck.leq("sign estimate", mn * n_bp, 2.0 * cl * nb);
        }
        ck.leq("correction bound (47)", space.norm(d), 4.0 * csd * cl * cl * nb);
    }
    ck.leq("bound on z (48)", space.norm(z35), c * nb);
    ck.leq("Chebyshev optimality against z", lhs, space.norm(z35), slack);
}

}  // namespace

SuiteReport check_semi_greedy_equivalence(const NormSpace& space, const SetWeight& w, const SuiteOptions& o) {
    SuiteReport r = start("semi-greedy-equivalence",
                          "quasi-greedy + disjoint superdemocratic => ||x - CG_m x|| <= C_l (1 + 4 C_sd C_l) sigma^w",
                          space.name(), w.name(), o);
    const StructuredWeightReport sw = check_structured(w, o.structured_check_range, 8);
    if (!sw.all_acceptable()) {
        r.status = SuiteStatus::skipped;
        r.notes.push_back("premise not met: weight not structured on the checked range");
        return r;
    }
    Constants k(r, certify(space, w));
    const auto cl = k.need("C_l");
    const auto csd = k.need("C_sd_disjoint");
    if (k.abort_if_missing()) return r;
    const double c = *cl * (1.0 + 4.0 * *csd * *cl);
    r.constants_used.push_back({"C_l (1 + 4 C_sd_disjoint C_l)", c, "product"});
    const std::vector<Index> pool = pool_for(space, o);
    const IndexSet universe(pool);
    r.instances = o.vectors;
    std::atomic<std::size_t> alpha_zero{0};
    const auto subsets = all_subsets(universe);

    Outcome main = run_instances(o.vectors, o.workers, o.tol, [&](std::size_t i, Checker& ck) {
        const SparseVector x = family_vector(pool, o.seed, i);
        OracleOptions oo;
        oo.universe = universe;
        oo.workers = 1;
        for (const auto& g : all_greedy(x, universe)) {
            const IndexSet& lam = g.set;
            const OracleResult orc = sigma_omega(space, w, x, lam, oo);
            const double sigma = orc.value;
            const ChebyshevResult cg = chebyshev_sum(space, x, lam);
            const double lhs = space.norm(x - cg.coefficients);
            ck.describe = [&] { return "x=" + x.to_string() + " greedy=" + lam.to_string(); };
            ck.leq("semi-greedy bound", lhs, c * (sigma + o.tol), o.tol + cg.certified_gap);

            double alpha = 0.0;
            for (const auto& e : x.entries())
                if (!lam.contains(e.index)) alpha = std::max(alpha, std::abs(e.value));
            if (alpha == 0.0) {
                alpha_zero.fetch_add(1);
                ck.leq("alpha = 0: w = x", lhs, 0.0, o.tol + cg.certified_gap);
                continue;
            }
            // the construction bounds ||x - CG_m x|| by C ||x - y|| for every feasible competitor y
            std::vector<std::pair<IndexSet, SparseVector>> competitors;
            competitors.emplace_back(orc.witness.set, orc.witness.coefficients.value_or(x.project(orc.witness.set)));
            for (const auto& a : subsets) {
                if (!weight_feasible(w, a, lam)) continue;
                competitors.emplace_back(a, chebyshev_sum(space, x, a).coefficients);
                competitors.emplace_back(a, 0.5 * x.project(a));
            }
            for (const auto& [a, y] : competitors) {
                ck.describe = [&] {
                    return "x=" + x.to_string() + " greedy=" + lam.to_string() + " competitor=" + a.to_string() +
                           " y=" + y.to_string();
                };
                z_chain(space, x, lam, a, y, alpha, *cl, *csd, c, lhs, o.tol + cg.certified_gap, ck);
            }
        }
    });
    r.notes.push_back("alpha = 0 branch exercised " + std::to_string(alpha_zero.load()) + " times");

    if (o.negative_controls) {
        NegativeControl ctl{"counterexample space with cardinality weight and pretended constant 5", 0, 0, ""};
        note_pretended(ctl, r, "C_l (1 + 4 C_sd_disjoint C_l)", 5.0);
        const NormSpace m3 = counterexample_space();
        for (unsigned n : {400u, 800u}) {
            const PowerInstance p = power_instance(n, 0.99);
            ++ctl.instances;
            const double lhs = m3.norm(p.x.project_out(p.greedy));
            // the equal-size competitor bounds sigma from above
            const double sigma_upper = m3.norm(p.x.project_out(p.competitor));
            if (lhs > 5.0 * (sigma_upper + o.tol)) {
                ++ctl.violations;
                if (ctl.detail.empty())
                    ctl.detail = "N=" + std::to_string(n) + " residual=" + num(lhs) + " sigma<=" + num(sigma_upper);
            }
        }
        r.negative_controls.push_back(ctl);
    }
    finalize(r, std::move(main), o);
    return r;
}

// ---------------------------------------------------------------------------

SuiteReport check_partially_greedy(const NormSpace& space, const SetWeight& w, const SuiteOptions& o) {
    SuiteReport r = start("partially-greedy",
                          "quasi-greedy + PSLC => ||x - G_m x|| <= C_l C_pslc bar-sigma^w", space.name(), w.name(), o);
    Constants k(r, certify(space, w));
    const auto cl = k.need("C_l");
    const auto cp = k.need("C_pslc");
    if (k.abort_if_missing()) return r;
    const double c = *cl * *cp;
    r.constants_used.push_back({"C_l C_pslc", c, "product"});
    const std::vector<Index> pool = pool_for(space, o);
    const IndexSet universe(pool);
    const Index kmax = universe.empty() ? Index(1) : universe.max();
    r.instances = o.vectors;

    Outcome main = run_instances(o.vectors, o.workers, o.tol, [&](std::size_t i, Checker& ck) {
        const SparseVector x = family_vector(pool, o.seed, i);
        OracleOptions oo;
        oo.workers = 1;
        for (const auto& g : all_greedy(x, universe)) {
            ck.describe = [&] { return "x=" + x.to_string() + " greedy=" + g.set.to_string(); };
            const double sb = sigma_bar_omega(space, w, x, g.set, kmax, oo).value;
            ck.leq("partially greedy bound", space.norm(x.project_out(g.set)), c * sb);
        }
    });

    // non-conservative witness on the counterexample space
    const NormSpace m3 = counterexample_space();
    SuiteTable table{"non-conservative ratio", {"N", "ratio_norm", "ratio_direct"}, {}};
    std::size_t id = o.vectors;
    double prev = -1.0;
    for (unsigned n : o.n_list) {
        Checker ck(id++, o.tol, main);
        ck.describe = [n] { return "N=" + std::to_string(n); };
        const double rn = m3.norm(indicator(power_set(2, 1, n))) / m3.norm(indicator(power_set(3, n + 1, 2 * n)));
        const double rd = sum_pow(n, 0.5) / sum_pow(n, 1.0);
        ck.leq("agreement with direct partial sums", std::abs(rn - rd), 0.0, 1e-12);
        if (prev >= 0.0) ck.holds("strict growth", rn > prev);
        prev = rn;
        table.rows.push_back({double(n), rn, rd});
    }
    r.tables.push_back(table);

    // feasibility of L_k against A for s(n) = 2^-n
    const SetWeight geo = SetWeight::geometric(0.5);
    const std::uint64_t top = 16;
    Outcome deg = run_instances(64, o.workers, o.tol, [&](std::size_t i, Checker& ck) {
        Rng rng(mix_seed(o.seed, 501, i));
        IndexSet a;
        if (i == 0) {
            a = IndexSet{Index(1)};
        } else {
            std::vector<Index> dom;
            for (std::uint64_t n = 1; n <= 12; ++n) dom.emplace_back(n);
            a = IndexSet(random_subset(rng, dom, 1 + rng.below(8)));
        }
        ck.describe = [&] { return "A=" + a.to_string(); };
        for (std::uint64_t kk = 0; kk <= top; ++kk) {
            const IndexSet lk = IndexSet::range(1, kk);
            const bool feasible = weight_feasible(geo, lk, a);
            ck.holds("feasible exactly when L_k is inside A (k=" + std::to_string(kk) + ")", feasible == lk.is_subset_of(a));
        }
    });
    for (auto& v : deg.violations) v.instance += id;
    main.absorb(std::move(deg));
    r.instances = id + 64;
    r.notes.push_back("with s(n) = 2^-n a window L_k is feasible against A exactly when L_k is contained in A");

    if (o.negative_controls) {
        NegativeControl ctl{"reversed window constraint", 0, 0, ""};
        note_pretended(ctl, r, "C_l C_pslc", c);
        std::vector<SparseVector> xs{SparseVector{{1, 0.1}, {2, 5.0}}};
        for (std::size_t i = 1; i < o.vectors; ++i) xs.push_back(family_vector(pool, o.seed, i));
        for (const auto& x : xs) {
            const IndexSet uni = x.support().unite(universe);
            for (const auto& g : all_greedy(x, uni)) {
                ++ctl.instances;
                double best = std::numeric_limits<double>::infinity();
                const Index top_k = uni.empty() ? Index(1) : uni.max();
                for (std::uint64_t kk = 0; kk <= std::min<std::uint64_t>(top_k.to_u64(), 64); ++kk) {
                    const IndexSet lk = IndexSet::range(1, kk);
                    if (weight_feasible(w, g.set, lk)) best = std::min(best, space.norm(x - partial_sum(x, kk)));
                }
                const double lhs = space.norm(x.project_out(g.set));
                if (lhs > c * best + o.tol) {
                    ++ctl.violations;
                    if (ctl.detail.empty()) ctl.detail = "x=" + x.to_string() + " greedy=" + g.set.to_string();
                }
            }
        }
        r.negative_controls.push_back(ctl);
    }
    finalize(r, std::move(main), o);
    return r;
}

// ---------------------------------------------------------------------------

SuiteReport check_superdemocracy_equivalence(const NormSpace& space, const SetWeight& w, const SuiteOptions& o) {
    SuiteReport r = start("superdemocracy-equivalence",
                          "disjoint superdemocracy => superdemocracy with constant C_sd^2 (c2/c1 K_b + 1)", space.name(),
                          w.name(), o);
    const StructuredWeightReport sw = check_structured(w, o.structured_check_range, 8);
    if (!sw.all_acceptable()) {
        r.status = SuiteStatus::skipped;
        r.notes.push_back("premise not met: weight not structured on the checked range");
        return r;
    }
    Constants k(r, certify(space, w));
    const auto csd = k.need("C_sd_disjoint");
    const auto kb = k.need("K_b");
    if (k.abort_if_missing()) return r;
    const double c1 = space.flags().c1, c2 = space.flags().c2;
    r.constants_used.push_back({"c1", c1, "exact"});
    r.constants_used.push_back({"c2", c2, "exact"});
    const double q = c2 / c1 * *kb + 1.0;
    const double bound = *csd * *csd * q;
    r.constants_used.push_back({"C_sd_disjoint^2 (c2/c1 K_b + 1)", bound, "product"});
    const std::uint64_t range = std::max<std::uint64_t>(o.structured_range, 8);
    double limsup = 0.0;
    for (std::uint64_t n = range / 2; n <= range; ++n) limsup = std::max(limsup, w.singleton(n));
    r.notes.push_back("limsup w_n taken over " + std::to_string(range / 2) + ".." + std::to_string(range) +
                      " (range-relative)");
    const std::vector<Index> pool = pool_for(space, o);
    r.instances = o.tuples;

    Outcome main = run_instances(o.tuples, o.workers, o.tol, [&](std::size_t i, Checker& ck) {
        Rng rng(mix_seed(o.seed, 601, i));
        IndexSet a, b;
        for (int attempt = 0; attempt < 50; ++attempt) {
            auto sh = random_subset(rng, pool, pool.size());
            const std::size_t common = 1 + rng.below(std::min<std::size_t>(2, sh.size()));
            std::vector<Index> av(sh.begin(), sh.begin() + static_cast<std::ptrdiff_t>(common));
            std::vector<Index> bv = av;
            for (std::size_t j = common; j < sh.size(); ++j) {
                const auto roll = rng.below(3);
                if (roll == 0 && av.size() < 4) av.push_back(sh[j]);
                if (roll == 1 && bv.size() < 5) bv.push_back(sh[j]);
            }
            if (i % 25 == 0) bv = av;
            a = IndexSet(av);
            b = IndexSet(bv);
            if (w(a) <= w(b)) break;
            std::swap(a, b);
            if (w(a) <= w(b)) break;
        }
        const SignPattern eps = random_signs(rng, a);
        const SignPattern delta = i % 25 == 0 ? eps : random_signs(rng, b);
        const double na = space.norm(signed_indicator(a, eps));
        const double nbv = space.norm(signed_indicator(b, delta));
        ck.describe = [&] { return "A=" + a.to_string() + " B=" + b.to_string(); };
        ck.holds("overlapping pair", a.intersects(b));
        ck.leq("superdemocracy bound", na, bound * nbv);
        if (!(w(a) > limsup)) return;
        // E after A u B with w(E) <= w(A) < w(E u {N})
        Index::value_type cur = a.unite(b).max().value() + 1;
        std::vector<Index> ev;
        std::optional<Index> last;
        for (int steps = 0; steps < 4096; ++steps) {
            const Index n(cur);
            std::vector<Index> trial = ev;
            trial.push_back(n);
            if (w(IndexSet(trial)) > w(a)) {
                last = n;
                break;
            }
            ev = std::move(trial);
            cur += 1;
        }
        if (!last || ev.empty()) return;
        const IndexSet e(ev);
        const IndexSet f = e.with(*last);
        const double ne = space.norm(indicator(e));
        const double nf = space.norm(indicator(f));
        const double nu = space.norm(SparseVector::unit(e.min()));
        ck.holds("w(A) <= w(F) and w(E) <= w(B)", w(a) <= w(f) && w(e) <= w(b));
        ck.leq("disjoint superdemocracy A against F", na, *csd * nf);
        ck.leq("(46) tail", nf, ne + c2);
        ck.leq("(46) unit vector", c2, c2 / c1 * nu);
        ck.leq("(46) partial sum", nu, *kb * ne);
        ck.leq("(46)", nf, q * ne);
        ck.leq("disjoint superdemocracy E against B", ne, *csd * nbv);
    });

    if (o.negative_controls) {
        NegativeControl ctl{"counterexample space with cardinality weight and pretended C_sd = 1", 0, 0, ""};
        note_pretended(ctl, r, "C_sd_disjoint", 1.0);
        const NormSpace m3 = counterexample_space();
        for (unsigned n : {32u, 64u}) {
            const IndexSet a = power_set(2, 1, n).with(5);
            const IndexSet b = power_set(3, 1, n).with(5);
            ++ctl.instances;
            const double lhs = m3.norm(indicator(a));
            const double rhs = 2.0 * m3.norm(indicator(b));
            if (lhs > rhs + o.tol) {
                ++ctl.violations;
                if (ctl.detail.empty()) ctl.detail = "N=" + std::to_string(n) + " lhs=" + num(lhs) + " rhs=" + num(rhs);
            }
        }
        r.negative_controls.push_back(ctl);
    }
    finalize(r, std::move(main), o);
    return r;
}

// ---------------------------------------------------------------------------

const std::vector<SuiteEntry>& suite_catalog() {
    static const std::vector<SuiteEntry> c{
        {"property-a-reformulation", {"l1"}, true, true},
        {"greedy-characterization", {"m1"}, true, true},
        {"almost-greedy-characterization", {"m2", "m5"}, true, true},
        {"norm-induced-weight", {"cc"}, true, false},
        {"counterexample", {"m3", "m3-counterexample"}, false, false},
        {"semi-greedy-necessity", {"p42"}, true, true},
        {"semi-greedy-equivalence", {"m8", "h1"}, true, true},
        {"partially-greedy", {"m9"}, true, true},
        {"superdemocracy-equivalence", {"p50"}, true, true},
    };
    return c;
}

std::string resolve_suite(const std::string& name) {
    for (const auto& e : suite_catalog()) {
        if (e.name == name) return e.name;
        for (const auto& a : e.aliases)
            if (a == name) return e.name;
    }
    std::string msg = "unknown suite '" + name + "'; catalog:";
    for (const auto& e : suite_catalog()) {
        msg += " " + e.name;
        for (const auto& a : e.aliases) msg += "|" + a;
    }
    throw std::invalid_argument(msg);
}

SuiteReport run_suite(const std::string& name, const NormSpace& space, const SetWeight& w, const SuiteOptions& o) {
    const std::string n = resolve_suite(name);
    if (n == "property-a-reformulation") return check_property_a_reformulation(space, w, o);
    if (n == "greedy-characterization") return check_greedy_characterization(space, w, o);
    if (n == "almost-greedy-characterization") return check_almost_greedy_characterization(space, w, o);
    if (n == "norm-induced-weight") return check_norm_induced_weight(space, o);
    if (n == "counterexample") return check_counterexample(o);
    if (n == "semi-greedy-necessity") return check_semi_greedy_necessity(space, w, o);
    if (n == "semi-greedy-equivalence") return check_semi_greedy_equivalence(space, w, o);
    if (n == "partially-greedy") return check_partially_greedy(space, w, o);
    return check_superdemocracy_equivalence(space, w, o);
}

}  // namespace wgreedy
