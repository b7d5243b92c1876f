#pragma once

// Certified constants where closed forms exist, and lower-bound estimators
// over deterministic test families.

#include "wgreedy/core.hpp"
#include "wgreedy/spaces.hpp"
#include "wgreedy/weights.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wgreedy {

struct CertifiedValue {
    double value = 1.0;
    std::string kind;   // "exact" or "upper_bound"
    std::string basis;  // why the value holds
};

/// Constant names: K_s, K_u, K_b, C_l, C_b_omega, C_d_disjoint, C_sd_disjoint,
/// C_d, C_sd, C_conservative, C_superconservative, C_pslc, C_g_omega,
/// C_al_omega, C_s_omega, C_p_omega.
struct CertifiedConstants {
    std::vector<std::pair<std::string, CertifiedValue>> values;

    std::optional<CertifiedValue> get(std::string_view name) const;
    void set(std::string name, CertifiedValue v);
};

/// Closed-form values for catalog combinations; empty where none is known.
CertifiedConstants certify(const NormSpace& space, const SetWeight& weight);

/// True when w(A\B) <= w(B\A) is equivalent to |A\B| <= |B\A|.
bool cardinality_equivalent(const SetWeight& weight);

struct ConstantWitness {
    SparseVector numerator;
    SparseVector denominator;
    std::string description;
};

struct ConstantEstimate {
    std::string name;
    double lower_bound = 0.0;
    std::optional<CertifiedValue> certified;
    ConstantWitness witness;
    std::string family;
    std::uint64_t seed = 0;
    std::size_t instances = 0;
};

/// Ratio convention: 0/0 counts as 1; positive/0 throws UnboundedRatio.
double ratio(double numerator, double denominator);
/// norm(numerator) / norm(denominator) under the same convention.
double replay(const NormSpace& space, const ConstantEstimate& e);

class UnboundedRatio : public std::runtime_error {
public:
    UnboundedRatio(std::string constant, ConstantWitness witness);
    const std::string& constant() const { return constant_; }
    const ConstantWitness& witness() const { return witness_; }

private:
    std::string constant_;
    ConstantWitness witness_;
};

struct FamilyConfig {
    std::vector<Index> pool;        // indices the random instances live on
    std::size_t vectors = 60;       // random vectors for norm/greedy families
    std::size_t pairs = 60;         // random set pairs
    std::size_t vectors_per_pair = 3;
    std::uint64_t seed = 0;
    std::size_t max_set_size = 4;
    std::size_t sign_cap = 8;       // all sign patterns when |A|+|B| <= sign_cap
    std::size_t sign_samples = 16;  // otherwise this many seeded patterns plus all-plus
    std::size_t oracle_window = 2;  // extra indices for non-lattice oracles
    std::size_t max_greedy_dim = 6; // support size cap for greedy-type families
    std::vector<std::pair<IndexSet, IndexSet>> explicit_pairs;       // disjoint pairs, tested in each feasible orientation
    std::vector<std::pair<IndexSet, IndexSet>> conservative_pairs;   // (A, B) with A < B
    unsigned workers = 0;
};

/// Default family: indices 1..dim, or for the counterexample space the
/// first dim elements of {2^k} ∪ {3^k} together with the power pairs
/// ({2..2^N}, {3..3^N}) and ({2..2^N}, {3^(N+1)..3^(2N)}) for N <= dim.
FamilyConfig default_family(const NormSpace& space, std::size_t dim, std::uint64_t seed, std::size_t family_size);

ConstantEstimate estimate_K_s(const NormSpace& space, const FamilyConfig& f);
ConstantEstimate estimate_K_u(const NormSpace& space, const FamilyConfig& f);
ConstantEstimate estimate_K_b(const NormSpace& space, const FamilyConfig& f);
ConstantEstimate estimate_C_l(const NormSpace& space, const FamilyConfig& f);
ConstantEstimate estimate_property_A(const NormSpace& space, const SetWeight& w, const FamilyConfig& f);
/// disjoint selects the ⊔ variants, signed the super variants.
ConstantEstimate estimate_disjoint_superdemocracy(const NormSpace& space, const SetWeight& w, const FamilyConfig& f,
                                                  bool disjoint = true, bool signed_variant = true);
ConstantEstimate estimate_conservative_variants(const NormSpace& space, const SetWeight& w, const FamilyConfig& f,
                                                bool signed_variant);
ConstantEstimate estimate_pslc(const NormSpace& space, const SetWeight& w, const FamilyConfig& f);

enum class GreedyType { g, al, s, p };
ConstantEstimate estimate_greedy_type_constants(const NormSpace& space, const SetWeight& w, const FamilyConfig& f,
                                                GreedyType which);

/// Every estimator above, in a fixed order.
std::vector<ConstantEstimate> estimate_all(const NormSpace& space, const SetWeight& w, const FamilyConfig& f);

}  // namespace wgreedy
