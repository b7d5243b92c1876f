#include "wgreedy/tga.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wgreedy {

namespace {

struct Candidate {
    Index index;
    double magnitude;
};

constexpr std::uint64_t kMaterializeCap = 1u << 20;

// binomial(n, k) saturating at cap + 1
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    long double r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
        if (r > static_cast<long double>(cap)) return cap + 1;
    }
    return static_cast<std::uint64_t>(std::llround(r));
}

GreedySelection finish(const std::vector<Candidate>& cands, std::vector<Index> chosen, double boundary,
                       bool has_boundary) {
    GreedySelection s;
    s.set = IndexSet(std::move(chosen));
    s.threshold_in = std::numeric_limits<double>::infinity();
    s.threshold_out = 0.0;
    std::vector<Index> ties;
    for (const auto& c : cands) {
        if (s.set.contains(c.index)) s.threshold_in = std::min(s.threshold_in, c.magnitude);
        else s.threshold_out = std::max(s.threshold_out, c.magnitude);
        if (has_boundary && c.magnitude == boundary) ties.push_back(c.index);
    }
    s.tie_class = IndexSet(std::move(ties));
    return s;
}

}  // namespace

std::vector<GreedySelection> greedy_sets(const SparseVector& x, std::int64_t m, GreedyMode mode,
                                         const std::optional<IndexSet>& universe, std::size_t max_sets) {
    if (m < 0) throw std::invalid_argument("greedy set order must be >= 0");
    const auto order = static_cast<std::uint64_t>(m);

    std::vector<Candidate> cands;
    for (const auto& e : x.entries()) cands.push_back({e.index, std::abs(e.value)});
    const IndexSet supp = x.support();

    if (order > cands.size()) {
        const std::uint64_t missing = order - cands.size();
        if (universe) {
            for (const auto& n : universe->minus(supp)) cands.push_back({n, 0.0});
        } else if (mode == GreedyMode::one_deterministic) {
            Index n(1);
            for (std::uint64_t added = 0; added < missing; n = n.next()) {
                if (supp.contains(n)) continue;
                cands.push_back({n, 0.0});
                ++added;
            }
        } else {
            Index top(std::max<std::uint64_t>(order, 1));
            if (!supp.empty() && supp.max() > top) top = supp.max();
            if (!top.fits_u64() || top.to_u64() > kMaterializeCap)
                throw std::length_error("ambient universe {1.." + top.to_string() + "} is too large to enumerate");
            for (const auto& n : IndexSet::range(1, top.to_u64()).minus(supp)) cands.push_back({n, 0.0});
        }
        if (order > cands.size())
            throw std::out_of_range("greedy set order " + std::to_string(order) + " exceeds the " +
                                    std::to_string(cands.size()) + " available indices");
    }

    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.magnitude != b.magnitude) return a.magnitude > b.magnitude;
        return a.index < b.index;
    });

    if (order == 0) {
        GreedySelection s = finish(cands, {}, 0.0, false);
        return {s};
    }

    const double boundary = cands[order - 1].magnitude;
    if (mode == GreedyMode::one_deterministic) {
        std::vector<Index> chosen;
        for (std::uint64_t i = 0; i < order; ++i) chosen.push_back(cands[i].index);
        return {finish(cands, std::move(chosen), boundary, true)};
    }

    std::vector<Index> above, ties;
    for (const auto& c : cands) {
        if (c.magnitude > boundary) above.push_back(c.index);
        else if (c.magnitude == boundary) ties.push_back(c.index);
    }
    std::sort(ties.begin(), ties.end());
    const std::uint64_t need = order - above.size();
    if (binomial_capped(ties.size(), need, max_sets) > max_sets)
        throw std::length_error("more than " + std::to_string(max_sets) + " greedy sets in the tie class");

    std::vector<GreedySelection> out;
    std::vector<std::size_t> pick(need);
    for (std::size_t i = 0; i < need; ++i) pick[i] = i;
    while (true) {
        std::vector<Index> chosen = above;
        for (auto i : pick) chosen.push_back(ties[i]);
        out.push_back(finish(cands, std::move(chosen), boundary, true));
        // next combination
        std::size_t i = need;
        while (i > 0 && pick[i - 1] == ties.size() - need + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < need; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::sort(out.begin(), out.end(), [](const GreedySelection& a, const GreedySelection& b) { return a.set < b.set; });
    return out;
}

bool is_greedy_set(const SparseVector& x, const IndexSet& a) {
    double in = std::numeric_limits<double>::infinity();
    double out = 0.0;
    for (const auto& n : a) in = std::min(in, std::abs(x.coefficient(n)));
    for (const auto& e : x.entries())
        if (!a.contains(e.index)) out = std::max(out, std::abs(e.value));
    return in >= out;
}

SparseVector greedy_sum(const SparseVector& x, const IndexSet& a) {
    if (!is_greedy_set(x, a)) throw std::invalid_argument(a.to_string() + " is not a greedy set of " + x.to_string());
    return x.project(a);
}

SparseVector greedy_sum(const SparseVector& x, const GreedySelection& s) { return greedy_sum(x, s.set); }

SparseVector partial_sum(const SparseVector& x, const Index& k) {
    std::vector<SparseVector::Entry> es;
    for (const auto& e : x.entries()) {
        if (e.index > k) break;
        es.push_back(e);
    }
    return SparseVector(std::move(es));
}

SparseVector partial_sum(const SparseVector& x, std::uint64_t k) {
    if (k == 0) return {};
    return partial_sum(x, Index(k));
}

SparseVector truncate(const SparseVector& x, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("truncation level must be > 0");
    std::vector<SparseVector::Entry> es;
    for (const auto& e : x.entries()) {
        const double v = std::abs(e.value) > alpha ? sgn(e.value) * alpha : e.value;
        es.push_back({e.index, v});
    }
    return SparseVector(std::move(es));
}

namespace {

class ResidualObjective {
public:
    ResidualObjective(const NormSpace& space, const SparseVector& x, const IndexSet& lambda)
        : space_(space), x_(x), lambda_(lambda.items()), a_(lambda.size()) {
        for (std::size_t i = 0; i < lambda_.size(); ++i) a_[i] = x.coefficient(lambda_[i]);
    }

    std::size_t dim() const { return a_.size(); }
    std::vector<double>& point() { return a_; }

    SparseVector residual(const std::vector<double>& a) const {
        std::vector<SparseVector::Entry> es;
        std::size_t j = 0;
        for (const auto& e : x_.entries()) {
            while (j < lambda_.size() && lambda_[j] < e.index) {
                es.push_back({lambda_[j], -a[j]});
                ++j;
            }
            if (j < lambda_.size() && lambda_[j] == e.index) {
                es.push_back({e.index, e.value - a[j]});
                ++j;
            } else {
                es.push_back(e);
            }
        }
        for (; j < lambda_.size(); ++j) es.push_back({lambda_[j], -a[j]});
        return SparseVector(std::move(es));
    }

    double value(const std::vector<double>& a) const { return space_.norm(residual(a)); }

    SparseVector coefficients() const {
        std::vector<SparseVector::Entry> es;
        for (std::size_t i = 0; i < a_.size(); ++i) es.push_back({lambda_[i], a_[i]});
        return SparseVector(std::move(es));
    }

private:
    const NormSpace& space_;
    const SparseVector& x_;
    std::vector<Index> lambda_;
    std::vector<double> a_;
};

// Minimizes the convex g on [lo, hi]; returns (argmin, min).
template <class G>
std::pair<double, double> golden_section(G&& g, double lo, double hi, double width_tol) {
    constexpr double inv_phi = 0.6180339887498948482;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double gc = g(c), gd = g(d);
    for (int it = 0; it < 200 && hi - lo > width_tol; ++it) {
        if (gc <= gd) {
            hi = d;
            d = c;
            gd = gc;
            c = hi - inv_phi * (hi - lo);
            gc = g(c);
        } else {
            lo = c;
            c = d;
            gc = gd;
            d = lo + inv_phi * (hi - lo);
            gd = g(d);
        }
    }
    return gc <= gd ? std::pair{c, gc} : std::pair{d, gd};
}

}  // namespace

ChebyshevResult chebyshev_sum(const NormSpace& space, const SparseVector& x, const IndexSet& lambda, double tol,
                              std::size_t max_sweeps) {
    if (!(tol > 0.0)) throw std::invalid_argument("Chebyshev tolerance must be > 0");
    ChebyshevResult r;
    if (space.lattice() || lambda.empty()) {
        r.coefficients = x.project(lambda);
        r.residual_norm = space.norm(x.project_out(lambda));
        r.exact = true;
        return r;
    }

    ResidualObjective f(space, x, lambda);
    auto& a = f.point();
    const double radius = space.flags().c2_star * space.norm(x);
    std::vector<double> centre = a;
    const double width_tol = std::max(tol * 1e-3, 1e-15 * (1.0 + radius));

    double best = f.value(a);
    const std::size_t n = f.dim();
    // coordinate directions, then e_i + e_j and e_i - e_j
    std::vector<std::pair<std::size_t, int>> pair_dirs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            pair_dirs.push_back({i * n + j, 1});
            pair_dirs.push_back({i * n + j, -1});
        }

    double improvement = 0.0;
    r.converged = false;
    for (r.sweeps = 1; r.sweeps <= max_sweeps; ++r.sweeps) {
        const double start = best;
        for (std::size_t i = 0; i < n; ++i) {
            const double keep = a[i];
            auto g = [&](double t) {
                a[i] = t;
                return f.value(a);
            };
            auto [t, v] = golden_section(g, centre[i] - radius, centre[i] + radius, width_tol);
            if (v < best) {
                a[i] = t;
                best = v;
            } else {
                a[i] = keep;
            }
        }
        for (const auto& [code, s] : pair_dirs) {
            const std::size_t i = code / n, j = code % n;
            const double ki = a[i], kj = a[j];
            // keep both coordinates inside their boxes
            const double lo = std::max(centre[i] - radius - ki, s > 0 ? centre[j] - radius - kj : kj - centre[j] - radius);
            const double hi = std::min(centre[i] + radius - ki, s > 0 ? centre[j] + radius - kj : kj - centre[j] + radius);
            if (!(hi > lo)) continue;
            auto g = [&](double t) {
                a[i] = ki + t;
                a[j] = kj + s * t;
                return f.value(a);
            };
            auto [t, v] = golden_section(g, lo, hi, width_tol);
            if (v < best) {
                a[i] = ki + t;
                a[j] = kj + s * t;
                best = v;
            } else {
                a[i] = ki;
                a[j] = kj;
            }
        }
        improvement = start - best;
        if (improvement < tol) {
            r.converged = true;
            break;
        }
    }
    if (r.sweeps > max_sweeps) r.sweeps = max_sweeps;
    r.coefficients = f.coefficients();
    r.residual_norm = best;
    r.certified_gap = improvement;
    r.exact = false;
    return r;
}

}  // namespace wgreedy
