#include "wgreedy/weights.hpp"

#include "wgreedy/random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace wgreedy {

SetWeight::SetWeight(std::string name, WeightKind kind, SetEvaluator evaluate, bool monotone)
    : name_(std::move(name)), kind_(kind), evaluate_(std::move(evaluate)), inclusion_monotone_(monotone) {}

SetWeight SetWeight::cardinality() {
    SetWeight w("card", WeightKind::cardinality,
                [](const IndexSet& a) { return static_cast<double>(a.size()); }, true);
    w.sequence_ = [](const Index&) { return 1.0; };
    w.counts_elements_ = true;
    return w;
}

SetWeight SetWeight::sequential(std::string name, SequenceEvaluator s) {
    auto eval = [s](const IndexSet& a) {
        double total = 0.0;
        for (const auto& n : a) total += s(n);
        return total;
    };
    SetWeight w(std::move(name), WeightKind::sequential, std::move(eval), true);
    w.sequence_ = std::move(s);
    return w;
}

namespace {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_number(const std::string& s, std::string_view context) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (s.empty() || used != s.size() || !std::isfinite(v))
        throw std::invalid_argument("bad number '" + s + "' in " + std::string(context));
    return v;
}

}  // namespace

SetWeight SetWeight::geometric(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("geometric weight needs r > 0");
    // r^n underflows to 0 (or overflows) for astronomically large n; the
    // structured-weight checker reports such points under condition (c).
    return sequential("seq:geom:" + format_number(r),
                      [r](const Index& n) { return std::pow(r, n.to_double()); });
}

SetWeight SetWeight::constant(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("constant weight needs c > 0");
    SetWeight w = sequential("seq:const:" + format_number(c), [c](const Index&) { return c; });
    w.counts_elements_ = true;
    return w;
}

SetWeight SetWeight::listed(std::string name, std::vector<double> values) {
    for (double v : values) {
        if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument("listed weights must be positive and finite");
    }
    return sequential(std::move(name), [values = std::move(values)](const Index& n) {
        if (!n.fits_u64() || n.to_u64() > values.size())
            throw std::out_of_range("weight list has no entry for index " + n.to_string());
        return values[n.to_u64() - 1];
    });
}

SetWeight SetWeight::norm_induced(const NormSpace& space) {
    SetWeight w("norm:" + space.name(), WeightKind::norm_induced,
                [space](const IndexSet& a) { return space.norm(indicator(a)); }, space.lattice());
    w.space_ = space;
    return w;
}

SetWeight SetWeight::custom(std::string name, SetEvaluator evaluate, bool inclusion_monotone) {
    return SetWeight(std::move(name), WeightKind::custom, std::move(evaluate), inclusion_monotone);
}

double SetWeight::operator()(const IndexSet& a) const {
    if (a.empty()) return 0.0;
    return evaluate_(a);
}

double SetWeight::singleton(const Index& n) const {
    if (sequence_) return sequence_(n);
    return evaluate_(IndexSet{n});
}

std::vector<std::string> weight_catalog() {
    return {"card", "seq:geom:<r>", "seq:const:<c>", "seq:list:<file>", "norm:<space>"};
}

SetWeight parse_weight(std::string_view spec) {
    if (spec == "card") return SetWeight::cardinality();
    if (spec.starts_with("seq:geom:")) return SetWeight::geometric(parse_number(std::string(spec.substr(9)), spec));
    if (spec.starts_with("seq:const:")) return SetWeight::constant(parse_number(std::string(spec.substr(10)), spec));
    if (spec.starts_with("seq:list:")) {
        const std::string path(spec.substr(9));
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot read weight list file '" + path + "'");
        std::vector<double> values;
        std::string tok;
        while (in >> tok) values.push_back(parse_number(tok, path));
        if (values.empty()) throw std::invalid_argument("weight list file '" + path + "' is empty");
        return SetWeight::listed(std::string(spec), std::move(values));
    }
    if (spec.starts_with("norm:")) return SetWeight::norm_induced(parse_space(spec.substr(5)));
    std::string msg = "unknown weight '" + std::string(spec) + "'; catalog:";
    for (const auto& s : weight_catalog()) msg += " " + s;
    throw std::invalid_argument(msg);
}

Lighter weight_comparison(const SetWeight& w, const IndexSet& a, const IndexSet& b) {
    const double left = w(a.minus(b));
    const double right = w(b.minus(a));
    if (left == right) return Lighter::equal;  // includes inf == inf
    return left < right ? Lighter::a_side : Lighter::b_side;
}

bool weight_feasible(const SetWeight& w, const IndexSet& a, const IndexSet& b) {
    return weight_comparison(w, a, b) != Lighter::b_side;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::consistent: return "consistent";
        case Verdict::consistent_vacuous: return "consistent (vacuous on range)";
        case Verdict::violated_on_samples: return "violated on samples";
    }
    return "?";
}

bool acceptable(Verdict v) {
    return v == Verdict::pass || v == Verdict::consistent || v == Verdict::consistent_vacuous;
}

bool StructuredWeightReport::all_acceptable() const {
    return acceptable(a.verdict) && acceptable(b.verdict) && acceptable(c.verdict) &&
           acceptable(d.verdict) && acceptable(e.verdict) && acceptable(f.verdict);
}

namespace {

struct Sampled {
    IndexSet set;
    double mass;
    double weight;
};

std::vector<std::uint64_t> geometric_points(std::uint64_t bound, std::size_t extra) {
    std::vector<std::uint64_t> pts;
    for (std::uint64_t k = 1; k <= bound; k *= 2) pts.push_back(k);
    pts.push_back(bound);
    for (std::size_t i = 1; i <= extra; ++i) pts.push_back(std::max<std::uint64_t>(1, bound * i / (extra + 1)));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace

StructuredWeightReport check_structured(const SetWeight& w, std::uint64_t index_bound,
                                        std::size_t prefix_samples) {
    if (index_bound < 2) throw std::invalid_argument("structured-weight check needs index_bound >= 2");
    StructuredWeightReport rep;
    rep.weight = w.name();
    rep.index_bound = index_bound;

    std::vector<double> wn(index_bound + 1, 0.0);
    for (std::uint64_t n = 1; n <= index_bound; ++n) wn[n] = w.singleton(Index(n));

    auto mass_of = [&](const IndexSet& a) {
        double m = 0.0;
        for (const auto& n : a) m += wn[n.to_u64()];
        return m;
    };

    // Sampled families: prefixes {1..k}, tails {k..bound}, short windows, seeded random sets.
    std::vector<IndexSet> sets;
    const auto points = geometric_points(index_bound, prefix_samples);
    for (auto k : points) {
        sets.push_back(IndexSet::range(1, k));
        sets.push_back(IndexSet::range(k, index_bound));
        sets.push_back(IndexSet::range(k, std::min(index_bound, k + 3)));
    }
    Rng rng(0x5eed);
    for (std::size_t i = 0; i < prefix_samples; ++i) {
        const std::uint64_t size = 1 + rng.below(std::min<std::uint64_t>(index_bound, 32));
        std::vector<Index> items;
        for (std::uint64_t j = 0; j < size; ++j) items.emplace_back(1 + rng.below(index_bound));
        sets.emplace_back(std::move(items));
    }
    std::vector<Sampled> samples;
    samples.reserve(sets.size());
    for (auto& s : sets) {
        const double m = mass_of(s);
        const double v = w(s);
        samples.push_back({std::move(s), m, v});
    }
    rep.sampled_sets = samples.size();

    // (a)
    if (const double e = w(IndexSet{}); e == 0.0) rep.a = {Verdict::pass, "w(empty) = 0"};
    else rep.a = {Verdict::fail, "w(empty) = " + format_number(e)};

    // (b) and (c)
    std::size_t infinite = 0, nonpositive = 0;
    std::string first_inf, first_nonpos;
    for (std::uint64_t n = 1; n <= index_bound; ++n) {
        if (std::isinf(wn[n]) && infinite++ == 0) first_inf = "{" + std::to_string(n) + "}";
        if (!(wn[n] > 0.0) && nonpositive++ == 0) first_nonpos = "{" + std::to_string(n) + "}";
    }
    for (const auto& s : samples) {
        if (std::isinf(s.weight) && infinite++ == 0) first_inf = s.set.to_string();
        if (!(s.weight > 0.0) && nonpositive++ == 0) first_nonpos = s.set.to_string();
    }
    const std::string tested = std::to_string(index_bound) + " singletons and " +
                               std::to_string(samples.size()) + " sampled sets";
    rep.b = infinite == 0 ? ConditionResult{Verdict::pass, "finite on " + tested}
                          : ConditionResult{Verdict::fail, "infinite weight on " + first_inf};
    rep.c = nonpositive == 0 ? ConditionResult{Verdict::pass, "positive on " + tested}
                             : ConditionResult{Verdict::fail, "non-positive weight on " + first_nonpos};

    // Singletons join the (d)/(e) evidence.
    std::vector<Sampled> evidence = samples;
    for (std::uint64_t n = 1; n <= index_bound; ++n) evidence.push_back({IndexSet{Index(n)}, wn[n], wn[n]});

    // (d): max weight among sets whose singleton mass is at most delta, delta -> 0.
    for (int k = 1; k <= 12; ++k) {
        ThresholdRow row{std::pow(10.0, -k), 0, 0.0};
        for (const auto& s : evidence) {
            if (s.mass <= row.threshold) {
                ++row.population;
                row.extreme_weight = std::max(row.extreme_weight, s.weight);
            }
        }
        if (row.population) rep.d_table.push_back(row);
    }
    if (rep.d_table.empty()) {
        rep.d = {Verdict::consistent_vacuous, "no sampled set has singleton mass <= 0.1"};
    } else if (rep.d_table.size() == 1 ||
               rep.d_table.back().extreme_weight < rep.d_table.front().extreme_weight) {
        rep.d = {Verdict::consistent, "max weight falls from " + format_number(rep.d_table.front().extreme_weight) +
                                          " to " + format_number(rep.d_table.back().extreme_weight) +
                                          " as the mass threshold shrinks"};
    } else {
        rep.d = {Verdict::violated_on_samples, "max weight does not fall as the singleton mass shrinks"};
    }

    // (e): min weight among sets whose singleton mass is at least Delta, Delta -> inf.
    for (int k = 1; k <= 8; ++k) {
        ThresholdRow row{std::pow(10.0, k), 0, std::numeric_limits<double>::infinity()};
        for (const auto& s : evidence) {
            if (s.mass >= row.threshold) {
                ++row.population;
                row.extreme_weight = std::min(row.extreme_weight, s.weight);
            }
        }
        if (row.population) rep.e_table.push_back(row);
    }
    double max_mass = 0.0;
    for (const auto& s : evidence) max_mass = std::max(max_mass, s.mass);
    if (rep.e_table.size() < 2) {
        rep.e = {Verdict::violated_on_samples,
                 "singleton mass never diverges on the range (largest sampled mass " + format_number(max_mass) + ")"};
    } else if (rep.e_table.back().extreme_weight > rep.e_table.front().extreme_weight) {
        rep.e = {Verdict::consistent, "min weight grows from " + format_number(rep.e_table.front().extreme_weight) +
                                          " to " + format_number(rep.e_table.back().extreme_weight) +
                                          " as the mass threshold grows"};
    } else {
        rep.e = {Verdict::violated_on_samples, "min weight does not grow with the singleton mass"};
    }

    // (f): separation margins over the whole range.
    const bool additive = w.kind() == WeightKind::sequential || w.kind() == WeightKind::cardinality;
    for (std::uint64_t big = 1; big <= index_bound; ++big) {
        double margin = std::numeric_limits<double>::infinity();
        for (std::uint64_t n = 1; n <= index_bound; ++n) {
            if (n == big) continue;
            // additive weights: w({N,n}) - w_n = w_N exactly, without cancellation
            const double gain = additive ? wn[big] : w(IndexSet{Index(big), Index(n)}) - wn[n];
            margin = std::min(margin, gain);
        }
        if (margin > 0.0) rep.f_witnesses.push_back({big, margin});
    }
    const bool high_witness = !rep.f_witnesses.empty() && rep.f_witnesses.back().n * 2 >= index_bound;
    if (high_witness) {
        rep.f = {Verdict::consistent, std::to_string(rep.f_witnesses.size()) + " separating indices; largest " +
                                          std::to_string(rep.f_witnesses.back().n) + " with margin " +
                                          format_number(rep.f_witnesses.back().margin)};
    } else {
        rep.f = {Verdict::violated_on_samples, "no separating index in the upper half of the range"};
    }
    return rep;
}

}  // namespace wgreedy
