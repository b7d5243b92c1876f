#pragma once

#include "wgreedy/core.hpp"
#include "wgreedy/spaces.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wgreedy {

enum class WeightKind { sequential, cardinality, norm_induced, custom };

/// Weight on finite index sets: w(empty) = 0, values in [0, +inf].
/// +inf is a legal value and compares equal to itself.
class SetWeight {
public:
    using SetEvaluator = std::function<double(const IndexSet&)>;
    using SequenceEvaluator = std::function<double(const Index&)>;

    static SetWeight cardinality();
    /// w(A) = sum_{n in A} s(n), summed in increasing index order.
    static SetWeight sequential(std::string name, SequenceEvaluator s);
    /// s(n) = r^n.
    static SetWeight geometric(double r);
    /// s(n) = c.
    static SetWeight constant(double c);
    /// s(n) = values[n-1]; indices past the list throw std::out_of_range.
    static SetWeight listed(std::string name, std::vector<double> values);
    /// w(A) = ||1_A|| in the given space.
    static SetWeight norm_induced(const NormSpace& space);
    /// inclusion_monotone declares A ⊆ B => w(A) <= w(B).
    static SetWeight custom(std::string name, SetEvaluator evaluate, bool inclusion_monotone);

    const std::string& name() const { return name_; }
    WeightKind kind() const { return kind_; }
    bool inclusion_monotone() const { return inclusion_monotone_; }
    /// Set when the weight is the cardinality or a positive constant sequence.
    bool counts_elements() const { return counts_elements_; }
    const std::optional<NormSpace>& induced_space() const { return space_; }

    double operator()(const IndexSet& a) const;
    /// w_n = w({n}).
    double singleton(const Index& n) const;

private:
    SetWeight(std::string name, WeightKind kind, SetEvaluator evaluate, bool monotone);

    std::string name_;
    WeightKind kind_;
    SetEvaluator evaluate_;
    SequenceEvaluator sequence_;
    bool inclusion_monotone_ = false;
    bool counts_elements_ = false;
    std::optional<NormSpace> space_;
};

/// "card", "seq:geom:<r>", "seq:const:<c>", "seq:list:<file>", "norm:<space>".
SetWeight parse_weight(std::string_view spec);
std::vector<std::string> weight_catalog();

/// Which side's exclusive part is lighter: a_side when w(A\B) < w(B\A),
/// b_side when w(A\B) > w(B\A), equal otherwise.
enum class Lighter { a_side, b_side, equal };
Lighter weight_comparison(const SetWeight& w, const IndexSet& a, const IndexSet& b);

/// The competitor constraint w(A\B) <= w(B\A).
bool weight_feasible(const SetWeight& w, const IndexSet& a, const IndexSet& b);

enum class Verdict {
    pass,                 // checked exactly on the whole range
    fail,                 // exact counterexample on the range
    consistent,           // limit condition supported by sampled families
    consistent_vacuous,   // sampled families never enter the regime the limit talks about
    violated_on_samples,  // sampled families contradict (or cannot exhibit) the limit
};

std::string to_string(Verdict v);
bool acceptable(Verdict v);

struct ConditionResult {
    Verdict verdict = Verdict::pass;
    std::string detail;
};

/// (singleton mass sum_{n in A} w_n, w(A)) for one sampled set.
struct MassSample {
    double mass = 0.0;
    double weight = 0.0;
    std::string set;
};

/// Threshold table row: for (d) the max weight over sets with mass <= threshold,
/// for (e) the min weight over sets with mass >= threshold.
struct ThresholdRow {
    double threshold = 0.0;
    std::size_t population = 0;
    double extreme_weight = 0.0;
};

struct SeparationWitness {
    std::uint64_t n = 0;
    double margin = 0.0;  // min over m != n in range of w({n,m}) - w_m
};

struct StructuredWeightReport {
    std::string weight;
    std::uint64_t index_bound = 0;
    std::size_t sampled_sets = 0;
    ConditionResult a, b, c, d, e, f;
    std::vector<ThresholdRow> d_table;
    std::vector<ThresholdRow> e_table;
    std::vector<SeparationWitness> f_witnesses;

    bool all_acceptable() const;
};

/// Range-relative check of the structured-weight conditions on indices 1..index_bound.
/// (a)-(c) are evaluated exactly on singletons and sampled sets, (d) and (e) from
/// sampled families (prefix, tail, window and seeded random sets), (f) by exhaustive
/// search over the range.
StructuredWeightReport check_structured(const SetWeight& w, std::uint64_t index_bound,
                                        std::size_t prefix_samples);

}  // namespace wgreedy
