#include "wgreedy/oracles.hpp"

#include "wgreedy/parallel.hpp"
#include "wgreedy/tga.hpp"

#include <limits>
#include <mutex>
#include <stdexcept>

namespace wgreedy {

IndexSet default_universe(const NormSpace& space, const SparseVector& x, const IndexSet& extra,
                          std::size_t min_size, std::size_t window) {
    IndexSet u = x.support().unite(extra);
    std::size_t want = std::max(min_size, u.size());
    if (!space.lattice()) want += window;
    std::vector<Index> items = u.items();
    for (Index n(1); items.size() < want; n = n.next())
        if (!u.contains(n)) items.push_back(n);
    return IndexSet(std::move(items));
}

namespace {

struct Candidate {
    double value = std::numeric_limits<double>::infinity();
    IndexSet set;
    std::optional<SparseVector> coefficients;
    bool found = false;
};

bool better(const Candidate& a, const Candidate& b) {
    if (!a.found) return false;
    if (!b.found) return true;
    if (a.value != b.value) return a.value < b.value;
    return a.set < b.set;
}

enum class Approximant { chebyshev, projection };

// Exhaustive search over subsets of universe accepted by feasible().
template <class Feasible>
Candidate search(const NormSpace& space, const SparseVector& x, const IndexSet& universe, Approximant kind,
                 const OracleOptions& opt, Feasible&& feasible) {
    if (universe.size() > opt.max_universe)
        throw std::length_error("oracle universe of " + std::to_string(universe.size()) + " indices exceeds the cap of " +
                                std::to_string(opt.max_universe));
    const std::uint64_t total = std::uint64_t{1} << universe.size();
    Candidate best;
    std::mutex merge;
    parallel_chunks(total, opt.workers, [&](std::uint64_t begin, std::uint64_t end) {
        Candidate local;
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            IndexSet a = universe.subset_by_mask(mask);
            if (!feasible(a)) continue;
            Candidate c;
            c.found = true;
            if (kind == Approximant::projection) {
                c.value = space.norm(x.project_out(a));
            } else {
                auto r = chebyshev_sum(space, x, a, opt.chebyshev_tol);
                c.value = r.residual_norm;
                c.coefficients = std::move(r.coefficients);
            }
            c.set = std::move(a);
            if (better(c, local)) local = std::move(c);
        }
        std::lock_guard lock(merge);
        if (better(local, best)) best = std::move(local);
    });
    return best;
}

OracleResult to_result(Candidate c, IndexSet universe, bool exact, Approximant kind) {
    if (!c.found) throw std::logic_error("oracle found no feasible set");
    OracleResult r;
    r.value = c.value;
    r.witness.set = std::move(c.set);
    r.witness.coefficients = std::move(c.coefficients);
    r.universe = std::move(universe);
    r.exact = exact;
    r.approximant = kind == Approximant::projection ? "projection" : "chebyshev";
    return r;
}

IndexSet checked_universe(const OracleOptions& opt, IndexSet fallback, const IndexSet& must_contain) {
    if (!opt.universe) return fallback;
    if (!must_contain.is_subset_of(*opt.universe))
        throw std::invalid_argument("oracle universe must contain " + must_contain.to_string());
    return *opt.universe;
}

OracleResult sigma_fixed_size(const NormSpace& space, const SparseVector& x, std::uint64_t m, const OracleOptions& opt,
                              Approximant kind) {
    const bool padded_window = kind == Approximant::chebyshev;
    IndexSet universe = checked_universe(
        opt,
        padded_window ? default_universe(space, x, {}, m, opt.window)
                      : default_universe(lp_space(1.0), x, {}, m, 0),
        x.support());
    if (m > universe.size())
        throw std::out_of_range("m = " + std::to_string(m) + " exceeds the universe size " + std::to_string(universe.size()));
    auto c = search(space, x, universe, kind, opt, [m](const IndexSet& a) { return a.size() == m; });
    const bool exact = kind == Approximant::projection || space.lattice();
    return to_result(std::move(c), std::move(universe), exact, kind);
}

OracleResult sigma_weighted(const NormSpace& space, const SetWeight& w, const SparseVector& x, const IndexSet& b,
                            const OracleOptions& opt, Approximant kind) {
    const bool window = kind == Approximant::chebyshev;
    IndexSet universe = checked_universe(
        opt,
        window ? default_universe(space, x, b, 0, opt.window) : default_universe(lp_space(1.0), x, b, 0, 0),
        x.support().unite(b));
    auto c = search(space, x, universe, kind, opt, [&](const IndexSet& a) { return weight_feasible(w, a, b); });
    const bool exact = w.inclusion_monotone() && (kind == Approximant::projection || space.lattice());
    return to_result(std::move(c), std::move(universe), exact, kind);
}

}  // namespace

OracleResult sigma_m(const NormSpace& space, const SparseVector& x, std::uint64_t m, const OracleOptions& opt) {
    return sigma_fixed_size(space, x, m, opt, Approximant::chebyshev);
}

OracleResult sigma_tilde_m(const NormSpace& space, const SparseVector& x, std::uint64_t m, const OracleOptions& opt) {
    return sigma_fixed_size(space, x, m, opt, Approximant::projection);
}

OracleResult sigma_omega(const NormSpace& space, const SetWeight& w, const SparseVector& x, const IndexSet& b,
                         const OracleOptions& opt) {
    return sigma_weighted(space, w, x, b, opt, Approximant::chebyshev);
}

OracleResult sigma_tilde_omega(const NormSpace& space, const SetWeight& w, const SparseVector& x, const IndexSet& b,
                               const OracleOptions& opt) {
    return sigma_weighted(space, w, x, b, opt, Approximant::projection);
}

OracleResult sigma_bar_omega(const NormSpace& space, const SetWeight& w, const SparseVector& x, const IndexSet& a,
                             const Index& k_max, const OracleOptions& opt) {
    const IndexSet involved = x.support().unite(a);
    if (!involved.empty() && involved.max() > k_max)
        throw std::invalid_argument("k_max " + k_max.to_string() + " is below max(support ∪ A) = " +
                                    involved.max().to_string());

    // The residual only changes at support indices. For monotone weights the
    // smallest k of each constant stretch is the most feasible one.
    std::vector<Index::value_type> ks{0};
    if (w.inclusion_monotone()) {
        for (const auto& s : x.support()) ks.push_back(s.value());
    } else {
        if (!k_max.fits_u64() || k_max.to_u64() > opt.max_k_candidates)
            throw std::length_error("k_max " + k_max.to_string() + " is too large to enumerate");
        for (std::uint64_t k = 1; k <= k_max.to_u64(); ++k) ks.push_back(k);
    }

    auto lower_minus = [&](const Index::value_type& k) {
        // w(L_k \ A)
        if (k == 0) return 0.0;
        if (w.counts_elements()) {
            std::size_t inside = 0;
            for (const auto& n : a)
                if (n.value() <= k) ++inside;
            const Index::value_type count = k - inside;
            return w.singleton(Index(1)) * count.convert_to<double>();
        }
        if (k > opt.max_k_candidates)
            throw std::length_error("L_k with k = " + k.str() + " is too large to materialize");
        return w(IndexSet::range(1, static_cast<std::uint64_t>(k)).minus(a));
    };
    auto upper_part = [&](const Index::value_type& k) {
        std::vector<Index> items;
        for (const auto& n : a)
            if (n.value() > k) items.push_back(n);
        return w(IndexSet(std::move(items)));
    };

    OracleResult best;
    best.value = std::numeric_limits<double>::infinity();
    best.approximant = "partial_sum";
    best.exact = true;
    std::vector<Index> cand_indices;
    for (const auto& k : ks) {
        if (k != 0) cand_indices.emplace_back(k);
        if (!(lower_minus(k) <= upper_part(k))) continue;
        const double v = k == 0 ? space.norm(x) : space.norm(x - partial_sum(x, Index(k)));
        if (v < best.value) {
            best.value = v;
            best.witness.k = k;
        }
    }
    best.universe = IndexSet(std::move(cand_indices));
    return best;
}

double replay(const NormSpace& space, const SparseVector& x, const OracleResult& r) {
    if (r.witness.k) {
        if (*r.witness.k == 0) return space.norm(x);
        return space.norm(x - partial_sum(x, Index(*r.witness.k)));
    }
    if (r.witness.coefficients) return space.norm(x - *r.witness.coefficients);
    return space.norm(x.project_out(r.witness.set));
}

}  // namespace wgreedy
