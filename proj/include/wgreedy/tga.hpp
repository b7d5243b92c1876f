#pragma once

#include "wgreedy/core.hpp"
#include "wgreedy/spaces.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace wgreedy {

enum class GreedyMode { one_deterministic, all };

struct GreedySelection {
    IndexSet set;
    double threshold_in = 0.0;   // min |x_n| over set, +inf for the empty set
    double threshold_out = 0.0;  // max |x_n| outside set
    IndexSet tie_class;          // candidates whose magnitude equals the boundary magnitude
};

/// Greedy sets of order m.
///
/// Candidates are support(x) plus an ambient universe of zero coordinates used
/// when m exceeds the support. Without an explicit universe the deterministic
/// mode pads with the smallest off-support naturals, and the enumerating mode
/// uses {1..max(max support index, m)}. Ties are broken by smallest index in
/// deterministic mode; mode all returns every greedy set in lexicographic order.
///
/// Throws std::invalid_argument for m < 0, std::out_of_range when m exceeds the
/// candidates, std::length_error when the tie enumeration exceeds max_sets.
std::vector<GreedySelection> greedy_sets(const SparseVector& x, std::int64_t m, GreedyMode mode,
                                         const std::optional<IndexSet>& universe = std::nullopt,
                                         std::size_t max_sets = 1'000'000);

/// min_{n in a} |x_n| >= max_{n not in a} |x_n|.
bool is_greedy_set(const SparseVector& x, const IndexSet& a);

/// P_a(x); throws std::invalid_argument when a is not a greedy set of x.
SparseVector greedy_sum(const SparseVector& x, const IndexSet& a);
SparseVector greedy_sum(const SparseVector& x, const GreedySelection& s);

/// S_k(x) = P_{1..k}(x).
SparseVector partial_sum(const SparseVector& x, std::uint64_t k);
SparseVector partial_sum(const SparseVector& x, const Index& k);

/// Clips every |x_n| > alpha to sgn(x_n) alpha. Throws for alpha <= 0.
SparseVector truncate(const SparseVector& x, double alpha);

struct ChebyshevResult {
    SparseVector coefficients;  // supported in the set
    double residual_norm = 0.0;
    double certified_gap = 0.0;
    bool converged = true;
    bool exact = false;
    std::size_t sweeps = 0;
};

/// min over coefficients a supported on lambda of ||x - sum a_n e_n||.
///
/// Lattice spaces: the projection is optimal, gap 0. Otherwise coordinate
/// descent with golden-section line search, starting from the projection.
/// Each coordinate is searched in [x_n - c2* ||x||, x_n + c2* ||x||]: an
/// optimum has residual at most ||x|| (a = 0 is admissible), and the n-th
/// residual coefficient is bounded by c2* times the residual norm.
/// Sweeps repeat until one improves by less than tol; certified_gap is the
/// improvement of the final sweep.
ChebyshevResult chebyshev_sum(const NormSpace& space, const SparseVector& x, const IndexSet& lambda,
                              double tol = 1e-12, std::size_t max_sweeps = 500);

}  // namespace wgreedy
