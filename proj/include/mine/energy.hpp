#ifndef MINE_ENERGY_HPP
#define MINE_ENERGY_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mine/cost.hpp"
#include "mine/error.hpp"

namespace mine {

using NodeId = std::uint64_t;
using Label = std::uint32_t;

/// Dense row-major table of extended costs, rows indexed by the labels of the
/// first node and columns by the labels of the second.
class CostTable {
public:
    CostTable() = default;
    CostTable(std::size_t rows, std::size_t cols, ExtendedCost fill = ExtendedCost(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    CostTable(std::initializer_list<std::initializer_list<ExtendedCost>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) {
                throw PreconditionError("ragged cost table");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    ExtendedCost operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    ExtendedCost& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    std::span<const ExtendedCost> data() const noexcept { return data_; }
    std::span<ExtendedCost> data() noexcept { return data_; }

    CostTable transposed() const {
        CostTable t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                t(c, r) = (*this)(r, c);
            }
        }
        return t;
    }

    bool all_finite() const {
        return std::all_of(data_.begin(), data_.end(), [](ExtendedCost c) { return c.is_finite(); });
    }

    friend bool operator==(const CostTable&, const CostTable&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<ExtendedCost> data_;
};

/// Pair of dense node indices with first < second.
using EdgeKey = std::pair<std::size_t, std::size_t>;

/// Pairwise energy minimization instance
///   E(x) = constant + sum_u f_u(x_u) + sum_{(u,v)} f_uv(x_u, x_v)
/// over a graph whose nodes carry caller-chosen ids. Node ids must be added in
/// strictly increasing order, so the node sequence is always sorted by id and
/// dense indices agree with id order.
class EnergyInstance {
public:
    /// Appends a node with the given unary table; its size is the label count.
    std::size_t add_node(NodeId id, std::vector<ExtendedCost> unary) {
        if (!ids_.empty() && id <= ids_.back()) {
            throw PreconditionError("node ids must be added in strictly increasing order (id " +
                                    std::to_string(id) + ")");
        }
        if (unary.empty()) {
            throw PreconditionError("node " + std::to_string(id) + " has no labels");
        }
        if (std::none_of(unary.begin(), unary.end(), [](ExtendedCost c) { return c.is_finite(); })) {
            throw PreconditionError("node " + std::to_string(id) + " has no label with finite unary cost");
        }
        ids_.push_back(id);
        unary_.push_back(std::move(unary));
        return ids_.size() - 1;
    }

    /// Adds the pairwise table f_ab; rows follow the labels of `a`.
    void add_edge(NodeId a, NodeId b, CostTable table) {
        const std::size_t ia = index_of(a);
        const std::size_t ib = index_of(b);
        if (ia == ib) {
            throw PreconditionError("self-loop on node " + std::to_string(a));
        }
        if (table.rows() != label_count(ia) || table.cols() != label_count(ib)) {
            throw PreconditionError("pairwise table for (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") has wrong dimensions");
        }
        EdgeKey key = ia < ib ? EdgeKey{ia, ib} : EdgeKey{ib, ia};
        if (edges_.count(key) != 0) {
            throw PreconditionError("duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
        edges_.emplace(key, ia < ib ? std::move(table) : table.transposed());
    }

    void remove_edge(NodeId a, NodeId b) {
        const std::size_t ia = index_of(a);
        const std::size_t ib = index_of(b);
        if (edges_.erase(ia < ib ? EdgeKey{ia, ib} : EdgeKey{ib, ia}) == 0) {
            throw PreconditionError("no edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    }

    void set_constant(std::int64_t c) noexcept { constant_ = c; }

    std::size_t size() const noexcept { return ids_.size(); }
    std::span<const NodeId> node_ids() const noexcept { return ids_; }
    NodeId node_id(std::size_t index) const { return ids_.at(index); }

    std::optional<std::size_t> find(NodeId id) const {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
        if (it == ids_.end() || *it != id) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - ids_.begin());
    }

    bool has_node(NodeId id) const { return find(id).has_value(); }

    std::size_t index_of(NodeId id) const {
        if (auto idx = find(id)) {
            return *idx;
        }
        throw PreconditionError("unknown node id " + std::to_string(id));
    }

    std::size_t label_count(std::size_t index) const { return unary_.at(index).size(); }
    const std::vector<ExtendedCost>& unary(std::size_t index) const { return unary_.at(index); }
    std::vector<ExtendedCost>& unary(std::size_t index) { return unary_.at(index); }

    const std::map<EdgeKey, CostTable>& edges() const noexcept { return edges_; }
    std::map<EdgeKey, CostTable>& edges() noexcept { return edges_; }

    const CostTable* find_edge(std::size_t ia, std::size_t ib) const {
        auto it = edges_.find(ia < ib ? EdgeKey{ia, ib} : EdgeKey{ib, ia});
        return it == edges_.end() ? nullptr : &it->second;
    }

    std::int64_t constant() const noexcept { return constant_; }

    bool all_finite() const {
        for (const auto& u : unary_) {
            if (std::any_of(u.begin(), u.end(), [](ExtendedCost c) { return c.is_infinite(); })) {
                return false;
            }
        }
        return std::all_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.second.all_finite(); });
    }

    /// True when every node has exactly k labels.
    bool uniform_labels(std::size_t k) const {
        return std::all_of(unary_.begin(), unary_.end(), [k](const auto& u) { return u.size() == k; });
    }

    /// Common label count, or nullopt when nodes differ (or there are none).
    std::optional<std::size_t> uniform_label_count() const {
        if (unary_.empty() || !uniform_labels(unary_.front().size())) {
            return std::nullopt;
        }
        return unary_.front().size();
    }

    friend bool operator==(const EnergyInstance&, const EnergyInstance&) = default;

private:
    std::vector<NodeId> ids_;
    std::vector<std::vector<ExtendedCost>> unary_;
    std::map<EdgeKey, CostTable> edges_;
    std::int64_t constant_ = 0;
};

/// One label index per node, aligned with the instance's node order.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::vector<Label> labels) : labels_(std::move(labels)) {}
    Labeling(std::initializer_list<Label> labels) : labels_(labels) {}

    static Labeling zeros(std::size_t n) { return Labeling(std::vector<Label>(n, 0)); }

    std::size_t size() const noexcept { return labels_.size(); }
    Label operator[](std::size_t i) const { return labels_[i]; }
    Label& operator[](std::size_t i) { return labels_[i]; }
    auto begin() const noexcept { return labels_.begin(); }
    auto end() const noexcept { return labels_.end(); }
    const std::vector<Label>& labels() const noexcept { return labels_; }

    friend bool operator==(const Labeling&, const Labeling&) = default;
    friend auto operator<=>(const Labeling&, const Labeling&) = default;

private:
    std::vector<Label> labels_;
};

inline void check_labeling(const EnergyInstance& instance, const Labeling& x) {
    if (x.size() != instance.size()) {
        throw MismatchError("labeling covers " + std::to_string(x.size()) + " nodes, instance has " +
                            std::to_string(instance.size()));
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] >= instance.label_count(i)) {
            throw MismatchError("label " + std::to_string(x[i]) + " out of range at node " +
                                std::to_string(instance.node_id(i)));
        }
    }
}

/// Energy of x: constant + unaries + pairwise terms, +inf if any selected entry is.
inline ExtendedCost evaluate(const EnergyInstance& instance, const Labeling& x) {
    check_labeling(instance, x);
    ExtendedCost total(instance.constant());
    for (std::size_t i = 0; i < instance.size(); ++i) {
        total += instance.unary(i)[x[i]];
    }
    for (const auto& [key, table] : instance.edges()) {
        total += table(x[key.first], x[key.second]);
    }
    return total;
}

namespace detail {

inline std::int64_t sum_abs_finite(const EnergyInstance& instance) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < instance.size(); ++i) {
        for (ExtendedCost c : instance.unary(i)) {
            if (c.is_finite()) {
                sum = checked_add(sum, checked_abs(c.value()));
            }
        }
    }
    for (const auto& [key, table] : instance.edges()) {
        for (ExtendedCost c : table.data()) {
            if (c.is_finite()) {
                sum = checked_add(sum, checked_abs(c.value()));
            }
        }
    }
    return sum;
}

inline std::int64_t big_m_over_finite(const EnergyInstance& instance) {
    return checked_add(checked_add(sum_abs_finite(instance), 1), checked_abs(instance.constant()));
}

} // namespace detail

/// Sum of absolute values of all table entries, plus 1, plus |constant|.
/// Strictly exceeds |evaluate(instance, x)| for every labeling x.
inline std::int64_t big_m(const EnergyInstance& instance) {
    if (!instance.all_finite()) {
        throw PreconditionError("big_m requires an instance without +inf entries");
    }
    return detail::big_m_over_finite(instance);
}

/// Replaces every +inf entry by the big-M of the finite entries.
inline EnergyInstance materialize_infinities(const EnergyInstance& instance) {
    const ExtendedCost m(detail::big_m_over_finite(instance));
    EnergyInstance out = instance;
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (ExtendedCost& c : out.unary(i)) {
            if (c.is_infinite()) {
                c = m;
            }
        }
    }
    for (auto& [key, table] : out.edges()) {
        for (ExtendedCost& c : table.data()) {
            if (c.is_infinite()) {
                c = m;
            }
        }
    }
    return out;
}

/// Neighbor lists by dense index, ascending.
inline std::vector<std::vector<std::size_t>> adjacency(const EnergyInstance& instance) {
    std::vector<std::vector<std::size_t>> adj(instance.size());
    for (const auto& [key, table] : instance.edges()) {
        adj[key.first].push_back(key.second);
        adj[key.second].push_back(key.first);
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
    }
    return adj;
}

} // namespace mine

#endif // MINE_ENERGY_HPP
