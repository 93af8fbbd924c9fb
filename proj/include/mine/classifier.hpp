#ifndef MINE_CLASSIFIER_HPP
#define MINE_CLASSIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "mine/energy.hpp"
#include "mine/geometry.hpp"
#include "mine/solvers/interactions.hpp"
#include "mine/solvers/tree_dp.hpp"

namespace mine {

enum class Verdict { PO, APX, LogAPX, ExpAPXComplete, Unknown };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::PO: return "PO";
        case Verdict::APX: return "APX";
        case Verdict::LogAPX: return "log-APX";
        case Verdict::ExpAPXComplete: return "exp-APX-complete-class";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

struct ComplexityReport {
    // structure
    bool forest = false;
    bool drawing_given = false;
    bool planar_by_drawing = false;
    bool binary = false;
    bool uniform_k = false;
    std::optional<std::size_t> k;
    bool finite = false;
    // interactions; false whenever an entry is +inf
    bool submodular_binary = false;
    bool submodular_lattice = false;
    bool potts = false;
    bool metric = false;

    Verdict verdict = Verdict::Unknown;
    std::string rule;
    std::string solver;
    std::string guarantee;
    std::vector<std::string> undetected;
};

/// Places an instance on the complexity axis. The first matching rule wins:
/// forest, binary submodular, lattice submodular, Potts, metric, then the
/// general classes (planar binary instances are left open).
inline ComplexityReport classify(const EnergyInstance& instance, const Drawing* drawing = nullptr) {
    ComplexityReport r;
    r.forest = is_forest(instance);
    r.k = instance.uniform_label_count();
    r.uniform_k = r.k.has_value() || instance.size() == 0;
    r.binary = instance.uniform_labels(2);
    r.finite = instance.all_finite();
    if (drawing != nullptr) {
        r.drawing_given = true;
        r.planar_by_drawing = list_crossings(instance, *drawing).empty();
    }
    if (r.finite) {
        r.submodular_binary = r.binary && is_submodular_binary(instance);
        r.submodular_lattice = is_submodular_lattice(instance);
        if (r.uniform_k) {
            r.potts = is_potts(instance);
            r.metric = is_metric(instance);
        }
    }
    r.undetected = {"outerplanar", "bounded treewidth above 1", "submodular under a label permutation"};

    if (r.forest) {
        r.verdict = Verdict::PO;
        r.rule = "forest";
        r.solver = "tree";
        r.guarantee = "exact: dynamic programming over the forest (Viterbi)";
    } else if (r.binary && r.submodular_binary) {
        r.verdict = Verdict::PO;
        r.rule = "binary-submodular";
        r.solver = "mincut";
        r.guarantee = "exact: one minimum cut; a binary problem is either submodular and in PO or NP-hard";
    } else if (r.submodular_lattice) {
        r.verdict = Verdict::PO;
        r.rule = "lattice-submodular";
        r.solver = "elim";
        r.guarantee = "exact: polynomial for lattice-submodular interactions; solved here by elimination at desk scale";
    } else if (r.potts) {
        r.verdict = Verdict::APX;
        r.rule = "potts";
        r.solver = "alphaexp";
        r.guarantee = "alpha-expansion is a 2-approximate algorithm for the Potts model";
    } else if (r.metric) {
        r.verdict = Verdict::LogAPX;
        r.rule = "metric";
        r.solver = "alphaexp";
        r.guarantee = "metric labeling approximable within O(log k); alpha-expansion is a heuristic here, ratio not guaranteed";
    } else if (r.planar_by_drawing && r.binary) {
        r.verdict = Verdict::Unknown;
        r.rule = "planar-binary-general";
        r.solver = "elim";
        r.guarantee = "approximability of general planar binary instances remains an open question";
    } else {
        r.verdict = Verdict::ExpAPXComplete;
        r.rule = r.planar_by_drawing ? "planar-general" : "general";
        r.solver = "elim";
        r.guarantee = "worst case: the problem class is exp-APX-complete; exact elimination is exponential in induced width";
    }
    return r;
}

} // namespace mine

#endif // MINE_CLASSIFIER_HPP
