#pragma once

// Sequence-space coordinates: unbounded natural indices, finite index sets,
// finitely supported coefficient vectors and sign patterns.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wgreedy {

/// Basis index n >= 1. Arbitrary precision so that indices like 3^200 stay exact.
class Index {
public:
    using value_type = boost::multiprecision::cpp_int;

    Index(std::uint64_t n);  // NOLINT: implicit from small literals is intended
    explicit Index(value_type n);

    /// Parses a decimal string without sign or leading zeros.
    static Index parse(std::string_view decimal);
    /// base^k for k >= 0 (k = 0 gives 1).
    static Index power(unsigned base, unsigned k);

    const value_type& value() const { return value_; }
    std::string to_string() const { return value_.str(); }

    /// True iff n = base^k for some k >= 1.
    bool is_power_of(unsigned base) const;
    bool is_power_of_two() const;

    /// Lossy conversion, +inf when out of double range.
    double to_double() const;
    /// Exact conversion when n fits, otherwise false.
    bool fits_u64() const;
    std::uint64_t to_u64() const;

    Index next() const { return Index(value_type(value_ + 1)); }

    friend bool operator==(const Index& a, const Index& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Index& a, const Index& b) {
        const int c = a.value_.compare(b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    value_type value_;
};

/// Finite set of indices, kept sorted and duplicate-free.
class IndexSet {
public:
    using const_iterator = std::vector<Index>::const_iterator;

    IndexSet() = default;
    IndexSet(std::initializer_list<Index> items);
    explicit IndexSet(std::vector<Index> items);

    /// {first, ..., last}; empty when last < first.
    static IndexSet range(std::uint64_t first, std::uint64_t last);
    /// {base^k : k = first..last}.
    static IndexSet powers(unsigned base, unsigned first, unsigned last);

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const_iterator begin() const { return items_.begin(); }
    const_iterator end() const { return items_.end(); }
    const Index& operator[](std::size_t i) const { return items_[i]; }
    const Index& min() const;
    const Index& max() const;
    const std::vector<Index>& items() const { return items_; }

    bool contains(const Index& n) const;
    bool intersects(const IndexSet& other) const;
    bool is_subset_of(const IndexSet& other) const;
    /// Every element of *this is strictly below every element of other (A < B).
    bool precedes(const IndexSet& other) const;

    IndexSet unite(const IndexSet& other) const;
    IndexSet intersect(const IndexSet& other) const;
    IndexSet minus(const IndexSet& other) const;
    IndexSet with(const Index& n) const;

    /// Subset selected by the bits of mask (bit i keeps items_[i]); size() <= 64.
    IndexSet subset_by_mask(std::uint64_t mask) const;

    std::string to_string() const;

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    /// Lexicographic order on the sorted element lists; the canonical witness tie-break.
    friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b);

private:
    std::vector<Index> items_;
};

/// Finitely supported real coefficient sequence; zeros are never stored.
class SparseVector {
public:
    struct Entry {
        Index index;
        double value;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    SparseVector() = default;
    SparseVector(std::initializer_list<std::pair<Index, double>> entries);
    /// Entries in any order; duplicate indices are rejected, zeros pruned.
    explicit SparseVector(std::vector<Entry> entries);

    /// e_n.
    static SparseVector unit(const Index& n, double value = 1.0);

    std::size_t size() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }
    std::span<const Entry> entries() const { return entries_; }

    double coefficient(const Index& n) const;
    IndexSet support() const;
    double sup_norm() const;
    const Index& max_index() const;

    SparseVector project(const IndexSet& a) const;
    /// P over the complement of a.
    SparseVector project_out(const IndexSet& a) const;
    SparseVector scaled(double s) const;

    friend SparseVector operator+(const SparseVector& a, const SparseVector& b);
    friend SparseVector operator-(const SparseVector& a, const SparseVector& b);
    friend SparseVector operator*(double s, const SparseVector& a) { return a.scaled(s); }
    friend bool operator==(const SparseVector&, const SparseVector&) = default;

    std::string to_string() const;

private:
    std::vector<Entry> entries_;  // sorted by index, no zero values
};

/// Signs in {+1, -1} over a finite index domain.
class SignPattern {
public:
    SignPattern() = default;
    explicit SignPattern(std::map<Index, int> signs);

    static SignPattern constant(const IndexSet& domain, int sign = 1);
    /// sgn of each coefficient of x over domain (sgn(0) = +1).
    static SignPattern of(const SparseVector& x, const IndexSet& domain);
    /// Pattern over domain whose bit i (for domain[i]) selects -1.
    static SignPattern from_bits(const IndexSet& domain, std::uint64_t bits);

    bool covers(const IndexSet& a) const;
    /// Throws std::invalid_argument when n is outside the domain.
    int at(const Index& n) const;
    const std::map<Index, int>& signs() const { return signs_; }

private:
    std::map<Index, int> signs_;
};

/// +1 for c >= 0, -1 otherwise.
constexpr int sgn(double c) { return c < 0.0 ? -1 : 1; }

inline double coefficient(const SparseVector& x, const Index& n) { return x.coefficient(n); }
inline SparseVector project(const SparseVector& x, const IndexSet& a) { return x.project(a); }
inline IndexSet support(const SparseVector& x) { return x.support(); }

/// 1_{eps A}; throws std::invalid_argument if eps misses an element of A.
SparseVector signed_indicator(const IndexSet& a, const SignPattern& eps);
/// 1_A.
SparseVector indicator(const IndexSet& a);

}  // namespace wgreedy

template <>
struct std::hash<wgreedy::Index> {
    std::size_t operator()(const wgreedy::Index& n) const noexcept;
};
