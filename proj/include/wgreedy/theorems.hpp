#pragma once

// Property suites: each checks a characterization pointwise on enumerated
// instances, replays the intermediate inequalities of its proof, and runs
// negative controls that must produce violations.

#include "wgreedy/constants.hpp"
#include "wgreedy/core.hpp"
#include "wgreedy/spaces.hpp"
#include "wgreedy/weights.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wgreedy {

enum class SuiteStatus { pass, violation, skipped, aborted };
std::string to_string(SuiteStatus s);

struct SuiteViolation {
    std::string step;      // which link of the chain broke
    std::size_t instance = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    std::string detail;
};

struct ConstantUse {
    std::string name;
    double value = 0.0;
    std::string kind;  // "exact", "upper_bound", or "pretended" inside negative controls
};

struct NegativeControl {
    std::string name;
    std::size_t instances = 0;
    std::size_t violations = 0;
    std::string detail;
    bool fired() const { return violations > 0; }
};

struct SuiteTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct SuiteReport {
    std::string suite;
    std::string theorem;
    std::string space;
    std::string weight;
    SuiteStatus status = SuiteStatus::pass;
    std::size_t instances = 0;
    std::size_t checks = 0;
    std::size_t violation_count = 0;
    std::vector<SuiteViolation> violations;  // first max_reported, sorted by instance
    std::vector<ConstantUse> constants_used;
    std::uint64_t seed = 0;
    double tol = 0.0;
    std::vector<std::string> notes;
    std::vector<NegativeControl> negative_controls;
    std::vector<SuiteTable> tables;

    /// No violations (or skipped) and every negative control fired.
    bool ok() const;
};

struct SuiteOptions {
    std::size_t dim = 6;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    std::size_t vectors = 40;      // seeded vectors for greedy-type suites
    std::size_t tuples = 500;      // tuples for the reformulation suite
    std::vector<unsigned> n_list = {4, 16, 64, 100};
    std::size_t subsequences = 100;
    std::size_t subsequence_length = 32;
    std::uint64_t structured_range = 64;          // index range for limsup, sums and infima of w_n
    std::uint64_t structured_check_range = 1000;  // range for the structured-weight premise
    unsigned workers = 0;
    std::size_t max_reported = 50;
    bool negative_controls = true;
};

/// Property (A) and its reformulation ||x|| <= C ||x - P_A x + 1_{eps B}||, both directions.
SuiteReport check_property_a_reformulation(const NormSpace& space, const SetWeight& w, const SuiteOptions& o);
/// Greedy = unconditional + Property (A): direction (2) with competitor enumeration and the
/// four-step chain; direction (1) constructions (suppression and Property (A) from greediness).
SuiteReport check_greedy_characterization(const NormSpace& space, const SetWeight& w, const SuiteOptions& o);
/// Almost greedy = quasi-greedy + Property (A), with the truncation-operator chain.
SuiteReport check_almost_greedy_characterization(const NormSpace& space, const SetWeight& w, const SuiteOptions& o);
/// Unconditional bases are greedy for the weight w(A) = ||1_A||.
SuiteReport check_norm_induced_weight(const NormSpace& space, const SuiteOptions& o);
/// The non-democratic unconditional example: ratio table, harmonic lower bound.
SuiteReport check_counterexample(const SuiteOptions& o);
/// Bounds on ||1_{eps B}|| forced by semi-greediness for structured weights.
SuiteReport check_semi_greedy_necessity(const NormSpace& space, const SetWeight& w, const SuiteOptions& o);
/// ||x - CG_m x|| <= C_l (1 + 4 C_sd C_l) sigma^w with the truncated-vector construction.
SuiteReport check_semi_greedy_equivalence(const NormSpace& space, const SetWeight& w, const SuiteOptions& o);
/// ||x - G_m x|| <= C_l C_pl bar sigma^w, non-conservative ratios, the 2^-n degeneracy.
SuiteReport check_partially_greedy(const NormSpace& space, const SetWeight& w, const SuiteOptions& o);
/// Superdemocracy on overlapping pairs from disjoint superdemocracy, with the E/F replay.
SuiteReport check_superdemocracy_equivalence(const NormSpace& space, const SetWeight& w, const SuiteOptions& o);

/// Suite names with their aliases, for the command line.
struct SuiteEntry {
    std::string name;
    std::vector<std::string> aliases;
    bool needs_space;   // false for the counterexample suite
    bool needs_weight;  // false for the norm-induced and counterexample suites
};
const std::vector<SuiteEntry>& suite_catalog();
/// Canonical name for a name or alias; throws std::invalid_argument listing the catalog.
std::string resolve_suite(const std::string& name);
SuiteReport run_suite(const std::string& name, const NormSpace& space, const SetWeight& w, const SuiteOptions& o);

/// r(N) = ||1_{2^1..2^N}|| / ||1_{3^1..3^N}|| in the counterexample norm.
double democracy_ratio(unsigned n);

}  // namespace wgreedy
