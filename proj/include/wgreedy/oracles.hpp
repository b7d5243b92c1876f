#pragma once

// Brute-force error functionals with witnesses.

#include "wgreedy/core.hpp"
#include "wgreedy/spaces.hpp"
#include "wgreedy/weights.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace wgreedy {

struct OracleWitness {
    IndexSet set;
    std::optional<SparseVector> coefficients;  // free-coefficient functionals
    std::optional<Index::value_type> k;        // partial-sum functional (k = 0 allowed)
};

struct OracleResult {
    double value = 0.0;
    OracleWitness witness;
    IndexSet universe;          // searched sets, or the candidate k values for the partial-sum functional
    bool exact = true;          // inner minimization exact and universe truncation lossless
    std::string approximant;    // "chebyshev", "projection" or "partial_sum"
};

struct OracleOptions {
    std::optional<IndexSet> universe;  // default: see default_universe
    std::size_t window = 8;            // extra indices for non-lattice spaces
    std::size_t max_universe = 22;
    double chebyshev_tol = 1e-12;
    unsigned workers = 0;
    std::uint64_t max_k_candidates = 1u << 22;
};

/// support(x) ∪ extra, padded with the smallest absent naturals to at least
/// min_size elements; for non-lattice spaces `window` more absent naturals.
IndexSet default_universe(const NormSpace& space, const SparseVector& x, const IndexSet& extra,
                          std::size_t min_size, std::size_t window);

/// inf over |A| = m of the Chebyshev residual on A.
OracleResult sigma_m(const NormSpace& space, const SparseVector& x, std::uint64_t m, const OracleOptions& opt = {});
/// inf over |A| = m of ||x - P_A x||.
OracleResult sigma_tilde_m(const NormSpace& space, const SparseVector& x, std::uint64_t m,
                           const OracleOptions& opt = {});

/// inf of the Chebyshev residual over A with w(A\B) <= w(B\A).
OracleResult sigma_omega(const NormSpace& space, const SetWeight& w, const SparseVector& x, const IndexSet& b,
                         const OracleOptions& opt = {});
/// inf of ||x - P_A x|| over A with w(A\B) <= w(B\A).
OracleResult sigma_tilde_omega(const NormSpace& space, const SetWeight& w, const SparseVector& x,
                               const IndexSet& b, const OracleOptions& opt = {});

/// min over k <= k_max with w(L_k\A) <= w(A\L_k) of ||x - S_k x||, L_k = {1..k}.
/// Throws std::invalid_argument when k_max < max(support(x) ∪ A).
OracleResult sigma_bar_omega(const NormSpace& space, const SetWeight& w, const SparseVector& x,
                             const IndexSet& a, const Index& k_max, const OracleOptions& opt = {});

/// Re-evaluates the witness: ||x - coefficients||, ||x - P_set x|| or ||x - S_k x||.
double replay(const NormSpace& space, const SparseVector& x, const OracleResult& r);

}  // namespace wgreedy
