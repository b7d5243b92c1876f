#include "wgreedy/core.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace wgreedy {

namespace mp = boost::multiprecision;

Index::Index(std::uint64_t n) : value_(n) {
    if (n == 0) throw std::invalid_argument("index must be >= 1");
}

Index::Index(value_type n) : value_(std::move(n)) {
    if (value_ < 1) throw std::invalid_argument("index must be >= 1");
}

Index Index::parse(std::string_view decimal) {
    if (decimal.empty()) throw std::invalid_argument("empty index string");
    if (decimal.size() > 1 && decimal.front() == '0')
        throw std::invalid_argument("index has leading zeros: " + std::string(decimal));
    for (char c : decimal) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("index is not a decimal natural: " + std::string(decimal));
    }
    return Index(value_type(std::string(decimal)));
}

Index Index::power(unsigned base, unsigned k) {
    return Index(value_type(mp::pow(value_type(base), k)));
}

bool Index::is_power_of_two() const {
    return value_ > 1 && mp::msb(value_) == mp::lsb(value_);
}

bool Index::is_power_of(unsigned base) const {
    if (base < 2) throw std::invalid_argument("base must be >= 2");
    if (base == 2) return is_power_of_two();
    if (value_ < base) return false;
    value_type v = value_;
    while (v > 1) {
        value_type q, r;
        mp::divide_qr(v, value_type(base), q, r);
        if (r != 0) return false;
        v = std::move(q);
    }
    return true;
}

double Index::to_double() const {
    if (mp::msb(value_) >= 1024) return std::numeric_limits<double>::infinity();
    return value_.convert_to<double>();
}

bool Index::fits_u64() const { return mp::msb(value_) < 64; }

std::uint64_t Index::to_u64() const {
    if (!fits_u64()) throw std::out_of_range("index exceeds 64 bits: " + to_string());
    return value_.convert_to<std::uint64_t>();
}

// ---------------------------------------------------------------------------

IndexSet::IndexSet(std::initializer_list<Index> items) : IndexSet(std::vector<Index>(items)) {}

IndexSet::IndexSet(std::vector<Index> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

IndexSet IndexSet::range(std::uint64_t first, std::uint64_t last) {
    if (first == 0) throw std::invalid_argument("index range must start at >= 1");
    IndexSet s;
    if (last < first) return s;
    s.items_.reserve(last - first + 1);
    for (std::uint64_t n = first; n <= last; ++n) s.items_.emplace_back(n);
    return s;
}

IndexSet IndexSet::powers(unsigned base, unsigned first, unsigned last) {
    IndexSet s;
    for (unsigned k = first; k <= last; ++k) s.items_.push_back(Index::power(base, k));
    std::sort(s.items_.begin(), s.items_.end());
    s.items_.erase(std::unique(s.items_.begin(), s.items_.end()), s.items_.end());
    return s;
}

const Index& IndexSet::min() const {
    if (items_.empty()) throw std::logic_error("min of empty index set");
    return items_.front();
}

const Index& IndexSet::max() const {
    if (items_.empty()) throw std::logic_error("max of empty index set");
    return items_.back();
}

bool IndexSet::contains(const Index& n) const {
    return std::binary_search(items_.begin(), items_.end(), n);
}

bool IndexSet::intersects(const IndexSet& other) const {
    auto a = items_.begin();
    auto b = other.items_.begin();
    while (a != items_.end() && b != other.items_.end()) {
        if (*a < *b) ++a;
        else if (*b < *a) ++b;
        else return true;
    }
    return false;
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

bool IndexSet::precedes(const IndexSet& other) const {
    if (items_.empty() || other.items_.empty()) return true;
    return items_.back() < other.items_.front();
}

IndexSet IndexSet::unite(const IndexSet& other) const {
    IndexSet r;
    r.items_.reserve(items_.size() + other.items_.size());
    std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                   std::back_inserter(r.items_));
    return r;
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
    IndexSet r;
    std::set_intersection(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                          std::back_inserter(r.items_));
    return r;
}

IndexSet IndexSet::minus(const IndexSet& other) const {
    IndexSet r;
    std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                        std::back_inserter(r.items_));
    return r;
}

IndexSet IndexSet::with(const Index& n) const {
    IndexSet r = *this;
    auto it = std::lower_bound(r.items_.begin(), r.items_.end(), n);
    if (it == r.items_.end() || *it != n) r.items_.insert(it, n);
    return r;
}

IndexSet IndexSet::subset_by_mask(std::uint64_t mask) const {
    if (items_.size() > 64) throw std::length_error("subset_by_mask needs at most 64 elements");
    IndexSet r;
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (mask >> i & 1U) r.items_.push_back(items_[i]);
    }
    return r;
}

std::string IndexSet::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) s += ",";
        s += items_[i].to_string();
    }
    return s + "}";
}

std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
    return std::lexicographical_compare_three_way(a.items_.begin(), a.items_.end(),
                                                  b.items_.begin(), b.items_.end());
}

// ---------------------------------------------------------------------------

SparseVector::SparseVector(std::initializer_list<std::pair<Index, double>> entries) {
    std::vector<Entry> v;
    v.reserve(entries.size());
    for (const auto& [n, c] : entries) v.push_back({n, c});
    *this = SparseVector(std::move(v));
}

SparseVector::SparseVector(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.index < b.index; });
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i].index == entries_[i - 1].index)
            throw std::invalid_argument("duplicate index " + entries_[i].index.to_string());
    }
    for (const auto& e : entries_) {
        if (!std::isfinite(e.value))
            throw std::invalid_argument("non-finite coefficient at " + e.index.to_string());
    }
    std::erase_if(entries_, [](const Entry& e) { return e.value == 0.0; });
}

SparseVector SparseVector::unit(const Index& n, double value) {
    return SparseVector({{n, value}});
}

double SparseVector::coefficient(const Index& n) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), n,
                               [](const Entry& e, const Index& k) { return e.index < k; });
    return (it != entries_.end() && it->index == n) ? it->value : 0.0;
}

IndexSet SparseVector::support() const {
    std::vector<Index> idx;
    idx.reserve(entries_.size());
    for (const auto& e : entries_) idx.push_back(e.index);
    return IndexSet(std::move(idx));
}

double SparseVector::sup_norm() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, std::abs(e.value));
    return m;
}

const Index& SparseVector::max_index() const {
    if (entries_.empty()) throw std::logic_error("max_index of zero vector");
    return entries_.back().index;
}

SparseVector SparseVector::project(const IndexSet& a) const {
    SparseVector r;
    auto it = a.begin();
    for (const auto& e : entries_) {
        while (it != a.end() && *it < e.index) ++it;
        if (it == a.end()) break;
        if (*it == e.index) r.entries_.push_back(e);
    }
    return r;
}

SparseVector SparseVector::project_out(const IndexSet& a) const {
    SparseVector r;
    auto it = a.begin();
    for (const auto& e : entries_) {
        while (it != a.end() && *it < e.index) ++it;
        if (it == a.end() || *it != e.index) r.entries_.push_back(e);
    }
    return r;
}

SparseVector SparseVector::scaled(double s) const {
    if (s == 0.0) return {};
    SparseVector r = *this;
    for (auto& e : r.entries_) e.value *= s;
    std::erase_if(r.entries_, [](const Entry& e) { return e.value == 0.0; });
    return r;
}

namespace {

template <class Op>
SparseVector merge(const SparseVector& a, const SparseVector& b, Op op) {
    std::vector<SparseVector::Entry> out;
    auto ea = a.entries();
    auto eb = b.entries();
    std::size_t i = 0, j = 0;
    while (i < ea.size() || j < eb.size()) {
        if (j == eb.size() || (i < ea.size() && ea[i].index < eb[j].index)) {
            out.push_back({ea[i].index, op(ea[i].value, 0.0)});
            ++i;
        } else if (i == ea.size() || eb[j].index < ea[i].index) {
            out.push_back({eb[j].index, op(0.0, eb[j].value)});
            ++j;
        } else {
            out.push_back({ea[i].index, op(ea[i].value, eb[j].value)});
            ++i;
            ++j;
        }
    }
    return SparseVector(std::move(out));
}

}  // namespace

SparseVector operator+(const SparseVector& a, const SparseVector& b) {
    return merge(a, b, [](double u, double v) { return u + v; });
}

SparseVector operator-(const SparseVector& a, const SparseVector& b) {
    return merge(a, b, [](double u, double v) { return u - v; });
}

std::string SparseVector::to_string() const {
    std::ostringstream os;
    os.precision(17);
    os << "{";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ", ";
        os << entries_[i].index.to_string() << "->" << entries_[i].value;
    }
    os << "}";
    return os.str();
}

// ---------------------------------------------------------------------------

SignPattern::SignPattern(std::map<Index, int> signs) : signs_(std::move(signs)) {
    for (const auto& [n, s] : signs_) {
        if (s != 1 && s != -1) throw std::invalid_argument("sign must be +1 or -1");
    }
}

SignPattern SignPattern::constant(const IndexSet& domain, int sign) {
    std::map<Index, int> m;
    for (const auto& n : domain) m.emplace(n, sign);
    return SignPattern(std::move(m));
}

SignPattern SignPattern::of(const SparseVector& x, const IndexSet& domain) {
    std::map<Index, int> m;
    for (const auto& n : domain) m.emplace(n, sgn(x.coefficient(n)));
    return SignPattern(std::move(m));
}

SignPattern SignPattern::from_bits(const IndexSet& domain, std::uint64_t bits) {
    std::map<Index, int> m;
    for (std::size_t i = 0; i < domain.size(); ++i) m.emplace(domain[i], (bits >> i & 1U) ? -1 : 1);
    return SignPattern(std::move(m));
}

bool SignPattern::covers(const IndexSet& a) const {
    return std::all_of(a.begin(), a.end(), [&](const Index& n) { return signs_.contains(n); });
}

int SignPattern::at(const Index& n) const {
    auto it = signs_.find(n);
    if (it == signs_.end()) throw std::invalid_argument("sign pattern undefined at " + n.to_string());
    return it->second;
}

SparseVector signed_indicator(const IndexSet& a, const SignPattern& eps) {
    std::vector<SparseVector::Entry> v;
    v.reserve(a.size());
    for (const auto& n : a) v.push_back({n, static_cast<double>(eps.at(n))});
    return SparseVector(std::move(v));
}

SparseVector indicator(const IndexSet& a) { return signed_indicator(a, SignPattern::constant(a)); }

}  // namespace wgreedy

std::size_t std::hash<wgreedy::Index>::operator()(const wgreedy::Index& n) const noexcept {
    return boost::hash<wgreedy::Index::value_type>{}(n.value());
}
