#pragma once

#include "wgreedy/core.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wgreedy {

/// Structural metadata a norm carries alongside its evaluator.
///
/// Constants are the exact analytic values when known. c1/c2 bound ||e_n||,
/// c1_star/c2_star bound the coordinate functionals.
struct SpaceFlags {
    bool lattice_monotone = false;
    std::optional<double> known_K_s;  // suppression unconditional
    std::optional<double> known_K_u;  // domination |a_n| <= |b_n|
    std::optional<double> known_K_b;  // partial sums
    std::optional<double> known_C_l;  // suppression quasi-greedy
    double c1 = 1.0;
    double c2 = 1.0;
    double c1_star = 1.0;
    double c2_star = 1.0;
    bool dual_constants_estimated = false;
    /// Not part of the theory being exercised; present to stress non-lattice code paths.
    bool beyond_paper = false;
};

class NormSpace {
public:
    using Evaluator = std::function<double(const SparseVector&)>;

    NormSpace(std::string name, Evaluator evaluate, SpaceFlags flags);

    const std::string& name() const { return name_; }
    const SpaceFlags& flags() const { return flags_; }
    bool lattice() const { return flags_.lattice_monotone; }

    double norm(const SparseVector& x) const { return evaluate_(x); }
    double operator()(const SparseVector& x) const { return evaluate_(x); }

private:
    std::string name_;
    Evaluator evaluate_;
    SpaceFlags flags_;
};

/// l_p for p in [1, inf); pass +infinity for the sup-norm. Throws for p < 1.
NormSpace lp_space(double p);

/// Norm of the non-democratic unconditional example:
///   ||x|| = sum_j a_j u_j + sum_j b_j v_j,  a_j = j^{-1/2}, b_j = 1/j,
/// with u (resp. v) the decreasing rearrangement of |x_i| over i in P = {2^k : k >= 1}
/// (resp. over i not in P). Pairing sorted magnitudes with the decreasing weights
/// attains the supremum over bijections.
NormSpace counterexample_space();

/// max(||x||_inf, sup_k |sum_{n <= k} x_n|). Conditional; exercises the Chebyshev solver.
NormSpace summing_space();

/// "l1", "l2", "linf", "lp:<p>", "m3", "summing". Throws std::invalid_argument
/// listing the catalog for unknown names.
NormSpace parse_space(std::string_view name);
std::vector<std::string> space_catalog();

/// A user-supplied norm. Semi-normalization constants are estimated on the
/// given indices and the dual constants flagged as estimates.
NormSpace custom_space(std::string name, NormSpace::Evaluator evaluate, bool lattice_monotone,
                       std::span<const Index> probe_indices);

struct AxiomViolation {
    std::string axiom;  // "zero", "positivity", "homogeneity", "triangle", "lattice", "semi-normalization"
    std::vector<SparseVector> witness;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct AxiomReport {
    std::string space;
    std::size_t samples = 0;
    std::size_t checks = 0;
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks norm axioms over all samples and sample pairs within tol (relative to
/// the magnitudes involved). Requires a nonempty sample list.
AxiomReport check_norm_axioms(const NormSpace& space, std::span<const SparseVector> samples,
                              double tol);

}  // namespace wgreedy
