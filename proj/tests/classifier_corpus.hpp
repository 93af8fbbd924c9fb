#ifndef MINE_TESTS_CLASSIFIER_CORPUS_HPP
#define MINE_TESTS_CLASSIFIER_CORPUS_HPP

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mine/classifier.hpp"
#include "mine/energy.hpp"
#include "mine/geometry.hpp"

namespace corpus {

using namespace mine;

struct Case {
    std::string name;
    EnergyInstance instance;
    std::optional<Drawing> drawing;
    Verdict expected;
    std::string rule;
};

inline CostTable table(std::size_t k, const std::function<std::int64_t(std::size_t, std::size_t)>& f) {
    CostTable t(k, k);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            t(a, b) = ExtendedCost(f(a, b));
        }
    }
    return t;
}

inline EnergyInstance graph(std::size_t n, std::size_t k, const std::vector<std::pair<NodeId, NodeId>>& edges,
                            const CostTable& t) {
    EnergyInstance inst;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<ExtendedCost> u(k);
        for (std::size_t a = 0; a < k; ++a) {
            u[a] = ExtendedCost(static_cast<std::int64_t>((i + 2 * a) % 3));
        }
        inst.add_node(i, u);
    }
    for (const auto& [a, b] : edges) {
        inst.add_edge(a, b, t);
    }
    return inst;
}

inline Point pt(long long x, long long y) { return Point{Rational(x), Rational(y)}; }

/// Twelve instances with hand-derived verdicts.
inline std::vector<Case> classifier_cases() {
    const auto general3 = table(3, [](auto a, auto b) { return static_cast<std::int64_t>((3 * a + 5 * b) % 7); });
    const auto abs_diff = [](std::size_t k) {
        return table(k, [](auto a, auto b) { return std::llabs(static_cast<long long>(a) - static_cast<long long>(b)); });
    };
    const auto potts3 = table(3, [](auto a, auto b) { return a == b ? 0 : 2; });
    const auto trunc4 = table(4, [](auto a, auto b) {
        return std::min<long long>(std::llabs(static_cast<long long>(a) - static_cast<long long>(b)), 2);
    });
    const CostTable attract{{0, 3}, {3, 0}};
    const CostTable repel{{1, 0}, {0, 1}};
    const std::vector<std::pair<NodeId, NodeId>> tri{{0, 1}, {1, 2}, {0, 2}};
    const std::vector<std::pair<NodeId, NodeId>> cycle4{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    const std::vector<std::pair<NodeId, NodeId>> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    const Drawing tri_d{{0, pt(0, 0)}, {1, pt(2, 0)}, {2, pt(1, 2)}};
    const Drawing square{{0, pt(0, 0)}, {1, pt(1, 0)}, {2, pt(1, 1)}, {3, pt(0, 1)}};

    CostTable potts_inf = potts3;
    potts_inf(0, 2) = kInfinity;
    potts_inf(2, 0) = kInfinity;

    std::vector<Case> cases;
    cases.push_back({"chain general 3-label", graph(4, 3, {{0, 1}, {1, 2}, {2, 3}}, general3), std::nullopt,
                     Verdict::PO, "forest"});
    cases.push_back({"star general 3-label", graph(5, 3, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, general3), std::nullopt,
                     Verdict::PO, "forest"});
    cases.push_back({"isolated node", graph(1, 4, {}, general3), std::nullopt, Verdict::PO, "forest"});
    cases.push_back({"binary attractive triangle", graph(3, 2, tri, attract), std::nullopt, Verdict::PO,
                     "binary-submodular"});
    cases.push_back({"absolute difference cycle", graph(4, 3, cycle4, abs_diff(3)), std::nullopt, Verdict::PO,
                     "lattice-submodular"});
    cases.push_back({"potts triangle", graph(3, 3, tri, potts3), std::nullopt, Verdict::APX, "potts"});
    cases.push_back({"truncated linear cycle", graph(4, 4, cycle4, trunc4), std::nullopt, Verdict::LogAPX, "metric"});
    cases.push_back({"binary repulsive triangle", graph(3, 2, tri, repel), std::nullopt, Verdict::ExpAPXComplete,
                     "general"});
    cases.push_back({"planar binary repulsive triangle", graph(3, 2, tri, repel), tri_d, Verdict::Unknown,
                     "planar-binary-general"});
    cases.push_back({"planar general 3-label triangle", graph(3, 3, tri, general3), tri_d, Verdict::ExpAPXComplete,
                     "planar-general"});
    cases.push_back({"crossing binary K4", graph(4, 2, k4, repel), square, Verdict::ExpAPXComplete, "general"});
    cases.push_back({"potts triangle with infinity", graph(3, 3, tri, potts_inf), std::nullopt,
                     Verdict::ExpAPXComplete, "general"});
    return cases;
}

} // namespace corpus

#endif // MINE_TESTS_CLASSIFIER_CORPUS_HPP
