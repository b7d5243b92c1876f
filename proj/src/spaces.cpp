#include "wgreedy/spaces.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace wgreedy {

NormSpace::NormSpace(std::string name, Evaluator evaluate, SpaceFlags flags)
    : name_(std::move(name)), evaluate_(std::move(evaluate)), flags_(flags) {
    if (!evaluate_) throw std::invalid_argument("norm space needs an evaluator");
}

namespace {

SpaceFlags lattice_flags() {
    SpaceFlags f;
    f.lattice_monotone = true;
    f.known_K_s = 1.0;
    f.known_K_u = 1.0;
    f.known_K_b = 1.0;
    f.known_C_l = 1.0;
    return f;
}

std::string format_p(double p) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", p);
    return buf;
}

}  // namespace

NormSpace lp_space(double p) {
    if (std::isnan(p) || p < 1.0) throw std::invalid_argument("l_p needs p >= 1");
    if (std::isinf(p)) {
        return NormSpace("linf", [](const SparseVector& x) { return x.sup_norm(); }, lattice_flags());
    }
    std::string name = p == 1.0 ? "l1" : (p == 2.0 ? "l2" : "lp:" + format_p(p));
    NormSpace::Evaluator eval;
    if (p == 1.0) {
        eval = [](const SparseVector& x) {
            double s = 0.0;
            for (const auto& e : x.entries()) s += std::abs(e.value);
            return s;
        };
    } else {
        // scaled by the sup-norm to keep the powers in range
        eval = [p](const SparseVector& x) {
            const double m = x.sup_norm();
            if (m == 0.0) return 0.0;
            double s = 0.0;
            for (const auto& e : x.entries()) s += std::pow(std::abs(e.value) / m, p);
            return m * std::pow(s, 1.0 / p);
        };
    }
    return NormSpace(std::move(name), std::move(eval), lattice_flags());
}

NormSpace counterexample_space() {
    auto eval = [](const SparseVector& x) {
        std::vector<double> on_p;
        std::vector<double> off_p;
        for (const auto& e : x.entries()) {
            (e.index.is_power_of_two() ? on_p : off_p).push_back(std::abs(e.value));
        }
        std::sort(on_p.begin(), on_p.end(), std::greater<>());
        std::sort(off_p.begin(), off_p.end(), std::greater<>());
        double s = 0.0;
        for (std::size_t j = 0; j < on_p.size(); ++j) s += on_p[j] / std::sqrt(static_cast<double>(j + 1));
        double t = 0.0;
        for (std::size_t j = 0; j < off_p.size(); ++j) t += off_p[j] / static_cast<double>(j + 1);
        return s + t;
    };
    return NormSpace("m3", std::move(eval), lattice_flags());
}

NormSpace summing_space() {
    auto eval = [](const SparseVector& x) {
        double best = x.sup_norm();
        double partial = 0.0;
        for (const auto& e : x.entries()) {
            partial += e.value;
            best = std::max(best, std::abs(partial));
        }
        return best;
    };
    SpaceFlags f;
    f.lattice_monotone = false;
    // S_m x has the partial sums of x up to m followed by a constant tail.
    f.known_K_b = 1.0;
    f.beyond_paper = true;
    return NormSpace("summing", std::move(eval), f);
}

std::vector<std::string> space_catalog() { return {"l1", "l2", "linf", "lp:<p>", "m3", "summing"}; }

NormSpace parse_space(std::string_view name) {
    if (name == "l1") return lp_space(1.0);
    if (name == "l2") return lp_space(2.0);
    if (name == "linf") return lp_space(std::numeric_limits<double>::infinity());
    if (name == "m3") return counterexample_space();
    if (name == "summing") return summing_space();
    if (name.starts_with("lp:")) {
        const std::string arg(name.substr(3));
        if (arg == "inf") return lp_space(std::numeric_limits<double>::infinity());
        std::size_t used = 0;
        double p = 0.0;
        try {
            p = std::stod(arg, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != arg.size() || arg.empty()) throw std::invalid_argument("bad exponent in space name: " + std::string(name));
        return lp_space(p);
    }
    std::string msg = "unknown space '" + std::string(name) + "'; catalog:";
    for (const auto& s : space_catalog()) msg += " " + s;
    throw std::invalid_argument(msg);
}

NormSpace custom_space(std::string name, NormSpace::Evaluator evaluate, bool lattice_monotone,
                       std::span<const Index> probe_indices) {
    if (probe_indices.empty()) throw std::invalid_argument("custom space needs probe indices");
    SpaceFlags f;
    f.lattice_monotone = lattice_monotone;
    f.c1 = std::numeric_limits<double>::infinity();
    f.c2 = 0.0;
    for (const auto& n : probe_indices) {
        const double v = evaluate(SparseVector::unit(n));
        f.c1 = std::min(f.c1, v);
        f.c2 = std::max(f.c2, v);
    }
    // e_n*(e_n) = 1 gives ||e_n*|| >= 1/||e_n||: sampled lower estimates only.
    f.c1_star = 1.0 / f.c2;
    f.c2_star = 1.0 / f.c1;
    f.dual_constants_estimated = true;
    if (lattice_monotone) {
        f.known_K_s = 1.0;
        f.known_K_u = 1.0;
        f.known_K_b = 1.0;
        f.known_C_l = 1.0;
    }
    return NormSpace(std::move(name), std::move(evaluate), f);
}

AxiomReport check_norm_axioms(const NormSpace& space, std::span<const SparseVector> samples,
                              double tol) {
    if (samples.empty()) throw std::invalid_argument("axiom check needs samples");
    AxiomReport rep;
    rep.space = space.name();
    rep.samples = samples.size();

    auto fail = [&](std::string axiom, std::vector<SparseVector> w, double lhs, double rhs) {
        rep.violations.push_back({std::move(axiom), std::move(w), lhs, rhs});
    };

    ++rep.checks;
    if (const double z = space.norm({}); z != 0.0) fail("zero", {SparseVector{}}, z, 0.0);

    static constexpr std::array<double, 4> scalars{-1.0, 2.0, -0.5, 3.75};
    static constexpr std::array<double, 5> shrink{1.0, 0.5, 0.0, -0.25, -1.0};

    for (const auto& x : samples) {
        const double nx = space.norm(x);
        if (!x.is_zero()) {
            ++rep.checks;
            if (!(nx > 0.0)) fail("positivity", {x}, nx, 0.0);
        }
        for (double s : scalars) {
            ++rep.checks;
            const double lhs = space.norm(s * x);
            const double rhs = std::abs(s) * nx;
            if (std::abs(lhs - rhs) > tol * (1.0 + std::abs(rhs))) fail("homogeneity", {x}, lhs, rhs);
        }
        if (space.lattice()) {
            std::vector<SparseVector::Entry> ys;
            std::size_t k = 0;
            for (const auto& e : x.entries()) ys.push_back({e.index, e.value * shrink[k++ % shrink.size()]});
            const SparseVector y(std::move(ys));
            ++rep.checks;
            const double ny = space.norm(y);
            if (ny > nx + tol * (1.0 + nx)) fail("lattice", {y, x}, ny, nx);
        }
        for (const auto& e : x.entries()) {
            ++rep.checks;
            const double ne = space.norm(SparseVector::unit(e.index));
            const auto& f = space.flags();
            if (ne < f.c1 - tol || ne > f.c2 + tol) fail("semi-normalization", {SparseVector::unit(e.index)}, ne, f.c2);
        }
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = i; j < samples.size(); ++j) {
            ++rep.checks;
            const double lhs = space.norm(samples[i] + samples[j]);
            const double rhs = space.norm(samples[i]) + space.norm(samples[j]);
            if (lhs > rhs + tol * (1.0 + rhs)) fail("triangle", {samples[i], samples[j]}, lhs, rhs);
        }
    }
    return rep;
}

}  // namespace wgreedy
