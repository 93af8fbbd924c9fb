#ifndef MINE_AP_VERIFY_HPP
#define MINE_AP_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mine/energy.hpp"
#include "mine/error.hpp"
#include "mine/klabel.hpp"
#include "mine/rational.hpp"
#include "mine/solvers/brute_force.hpp"
#include "mine/trace.hpp"
#include "mine/w3sat.hpp"

namespace mine {

/// A forward map into energy minimization together with its reverse map and
/// the source problem's feasibility, measure and optimum oracle.
template <class Source, class Solution>
struct ApReduction {
    std::string name;
    std::function<std::pair<EnergyInstance, ReductionTrace>(const Source&)> forward;
    std::function<Solution(const Source&, const ReductionTrace&, const EnergyInstance&, const Labeling&)> sigma;
    std::function<bool(const Source&, const Solution&)> feasible;
    std::function<std::int64_t(const Source&, const Solution&)> measure;
    std::function<std::int64_t(const Source&)> source_optimum;
};

struct ApCounterexample {
    std::size_t instance = 0;
    std::optional<Labeling> y;
    std::string check;
    std::string detail;
};

struct ApInstanceReport {
    std::size_t index = 0;
    std::int64_t source_optimum = 0;
    ExtendedCost target_optimum = kInfinity;
    std::uint64_t solutions = 0;
    bool ratio_undefined = false;
};

struct ApReport {
    std::string reduction;
    Rational alpha = 1;
    std::vector<ApInstanceReport> instances;
    std::vector<ApCounterexample> counterexamples;

    bool ok() const noexcept { return counterexamples.empty(); }
    std::size_t ratio_undefined_count() const {
        std::size_t n = 0;
        for (const auto& r : instances) {
            n += r.ratio_undefined ? 1 : 0;
        }
        return n;
    }
};

/// Checks a reduction on every supplied source instance by enumerating all
/// target labelings: the trace partitions the target, a feasible source
/// yields a feasible target, sigma maps every feasible y to a feasible
/// solution with m1(sigma(y)) <= m2(y), m1* <= m2*, and
///   R1(sigma(y)) <= 1 + alpha (R2(y) - 1)
/// for minimization ratios R = m / m*. Instances whose optimum on either side
/// is not positive are flagged ratio-undefined and skip the ratio check.
template <class Source, class Solution>
ApReport verify_ap_reduction(const ApReduction<Source, Solution>& red, const Rational& alpha,
                             const std::vector<Source>& sources,
                             std::uint64_t limit = kDefaultBruteForceLimit) {
    if (alpha < 1) {
        throw PreconditionError("verify_ap_reduction: alpha must be at least 1");
    }
    ApReport report;
    report.reduction = red.name;
    report.alpha = alpha;
    for (std::size_t idx = 0; idx < sources.size(); ++idx) {
        const Source& s = sources[idx];
        auto fail = [&](std::optional<Labeling> y, std::string check, std::string detail) {
            report.counterexamples.push_back({idx, std::move(y), std::move(check), std::move(detail)});
        };
        ApInstanceReport info;
        info.index = idx;

        auto [target, trace] = red.forward(s);
        if (!trace_partitions(trace, target)) {
            fail(std::nullopt, "well-formed", "trace nodes do not partition the target");
        }
        info.source_optimum = red.source_optimum(s);
        std::vector<std::pair<Labeling, std::int64_t>> feasible;
        for_each_labeling(target, limit, [&](const Labeling& y, ExtendedCost e) {
            ++info.solutions;
            if (e.is_finite()) {
                feasible.emplace_back(y, e.value());
                if (e < info.target_optimum) {
                    info.target_optimum = e;
                }
            }
        });
        if (feasible.empty()) {
            fail(std::nullopt, "feasibility", "target has no finite-energy labeling");
            report.instances.push_back(info);
            continue;
        }
        const std::int64_t m1_star = info.source_optimum;
        const std::int64_t m2_star = info.target_optimum.value();
        if (m1_star > m2_star) {
            fail(std::nullopt, "optimum",
                 "source optimum " + std::to_string(m1_star) + " exceeds target optimum " + std::to_string(m2_star));
        }
        info.ratio_undefined = m1_star <= 0 || m2_star <= 0;

        for (const auto& [y, m2] : feasible) {
            const Solution x = red.sigma(s, trace, target, y);
            if (!red.feasible(s, x)) {
                fail(y, "sigma-feasible", "sigma(y) is not a feasible source solution");
                continue;
            }
            const std::int64_t m1 = red.measure(s, x);
            if (m1 > m2) {
                fail(y, "measure", "m1(sigma(y)) = " + std::to_string(m1) + " > m2(y) = " + std::to_string(m2));
            }
            if (!info.ratio_undefined) {
                // m1 / m1* <= 1 + alpha (m2 / m2* - 1), cleared of denominators.
                const Rational lhs = Rational(m1) * m2_star;
                const Rational rhs = Rational(m1_star) * (Rational(m2_star) + alpha * (m2 - m2_star));
                if (lhs > rhs) {
                    fail(y, "ratio",
                         "R1 = " + std::to_string(m1) + "/" + std::to_string(m1_star) + " exceeds 1 + alpha (R2 - 1) with R2 = " +
                             std::to_string(m2) + "/" + std::to_string(m2_star));
                }
            }
        }
        report.instances.push_back(info);
    }
    return report;
}

/// The identity map on energy instances.
inline ApReduction<EnergyInstance, Labeling> identity_reduction() {
    ApReduction<EnergyInstance, Labeling> r;
    r.name = to_string(ReductionKind::Identity);
    r.forward = [](const EnergyInstance& s) {
        ReductionTrace t;
        t.kind = ReductionKind::Identity;
        t.original_nodes.assign(s.node_ids().begin(), s.node_ids().end());
        t.next_id = s.size() == 0 ? 0 : s.node_ids().back() + 1;
        return std::pair{s, t};
    };
    r.sigma = [](const EnergyInstance&, const ReductionTrace&, const EnergyInstance&, const Labeling& y) { return y; };
    r.feasible = [](const EnergyInstance& s, const Labeling& x) { return evaluate(s, x).is_finite(); };
    r.measure = [](const EnergyInstance& s, const Labeling& x) { return evaluate(s, x).value(); };
    r.source_optimum = [](const EnergyInstance& s) {
        const SolveResult best = solve_brute_force(s);
        if (best.value.is_infinite()) {
            throw PreconditionError("source instance has no finite-energy labeling");
        }
        return best.value.value();
    };
    return r;
}

inline ApReduction<W3SatTriv, TruthAssignment> w3sat_reduction() {
    ApReduction<W3SatTriv, TruthAssignment> r;
    r.name = to_string(ReductionKind::W3satToQpbo);
    r.forward = [](const W3SatTriv& s) { return w3sat_to_qpbo(s); };
    r.sigma = [](const W3SatTriv& s, const ReductionTrace& t, const EnergyInstance& target, const Labeling& y) {
        return w3sat_sigma(s, t, target, y);
    };
    r.feasible = [](const W3SatTriv& s, const TruthAssignment& tau) { return is_feasible(s, tau); };
    r.measure = [](const W3SatTriv& s, const TruthAssignment& tau) { return measure(s, tau); };
    r.source_optimum = [](const W3SatTriv& s) { return w3sat_brute_force(s).first; };
    return r;
}

inline ApReduction<EnergyInstance, Labeling> klabel_reduction(std::size_t k) {
    ApReduction<EnergyInstance, Labeling> r = identity_reduction();
    r.name = to_string(ReductionKind::QpboToKlabel);
    r.forward = [k](const EnergyInstance& s) { return qpbo_to_klabel(s, k); };
    r.sigma = [](const EnergyInstance& s, const ReductionTrace& t, const EnergyInstance& target, const Labeling& y) {
        return klabel_sigma(s, t, target, y);
    };
    return r;
}

} // namespace mine

#endif // MINE_AP_VERIFY_HPP
