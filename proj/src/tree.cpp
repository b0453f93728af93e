#include "cantorlp/tree.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "cantorlp/util.hpp"

namespace cantorlp {

void validate_params(const Params& params) {
    if (params.d < 1) throw ConfigError("d must be a positive integer, got " + std::to_string(params.d));
    if (!(params.p > 2.0)) throw ConfigError("p must exceed 2, got " + std::to_string(params.p));
    if (!(params.p1 > params.p))
        throw ConfigError("p1 must exceed p, got p1=" + std::to_string(params.p1) +
                          " with p=" + std::to_string(params.p));
    if (params.K > params.M.size())
        throw ConfigError("K=" + std::to_string(params.K) + " exceeds the " +
                          std::to_string(params.M.size()) + " available M entries");
    for (std::size_t k = 0; k < params.M.size(); ++k) {
        if (params.M[k] < 2)
            throw ConfigError("M_" + std::to_string(k) + " must be at least 2, got " +
                              std::to_string(params.M[k]));
    }
}

std::uint32_t Tree::max_layer() const {
    return vertices.empty() ? 0 : vertices.back().layer;
}

double child_side(double parent_weight, double parent_side, std::uint32_t parent_layer,
                  std::uint64_t Mk, double p, int d) {
    (void)parent_side;
    const double q = p / (2.0 * d);
    // r_k = (b(Q_k)/M_k)^q / (n(Q_k)+1); b/M is the child weight, so the
    // covering sums over complete layers telescope exactly.
    return std::pow(parent_weight / static_cast<double>(Mk), q) /
           static_cast<double>(parent_layer + 1);
}

std::uint64_t minimal_admissible_M(double parent_weight, double parent_side,
                                   std::uint32_t parent_layer, double p, int d) {
    const double q = p / (2.0 * d);
    // Solve (b/m)^q / (n+1) < l/2 for the smallest integer m >= 2, then nudge
    // for floating-point boundary cases by direct re-evaluation.
    const double bound = parent_weight *
        std::pow((parent_layer + 1) * parent_side / 2.0, -1.0 / q);
    std::uint64_t m = 2;
    if (bound >= 2.0 && std::isfinite(bound)) m = static_cast<std::uint64_t>(bound) + 1;
    while (child_side(parent_weight, parent_side, parent_layer, m, p, d) >= 0.5 * parent_side) ++m;
    while (m > 2 &&
           child_side(parent_weight, parent_side, parent_layer, m - 1, p, d) < 0.5 * parent_side)
        --m;
    return m;
}

Tree build_tree(const Params& params) {
    validate_params(params);

    Tree tree;
    tree.params = params;
    std::size_t total = 1;
    for (std::size_t k = 0; k < params.K; ++k) total += params.M[k];
    tree.vertices.reserve(total);
    tree.vertices.push_back(Vertex{});

    for (std::size_t k = 0; k < params.K; ++k) {
        const std::uint64_t Mk = params.M[k];
        Vertex& parent = tree.vertices[k];
        const double r = child_side(parent.weight, parent.side, parent.layer, Mk, params.p, params.d);
        const double rho = r / parent.side;
        if (!(rho > 0.0 && rho < 0.5)) {
            const std::uint64_t m_min =
                minimal_admissible_M(parent.weight, parent.side, parent.layer, params.p, params.d);
            throw ConfigError("step k=" + std::to_string(k) + ": rho_k = " + std::to_string(rho) +
                              " is outside (0, 1/2); smallest admissible M_" + std::to_string(k) +
                              " is " + std::to_string(m_min));
        }
        parent.first_child = tree.vertices.size();
        parent.n_children = Mk;
        const double w = parent.weight / static_cast<double>(Mk);
        const std::uint32_t layer = parent.layer + 1;
        const auto parent_index = static_cast<std::int64_t>(k);
        for (std::uint64_t c = 0; c < Mk; ++c)
            tree.vertices.push_back(Vertex{parent_index, layer, w, r, 0, 0});
    }
    return tree;
}

double child_side(const Tree& tree, std::size_t k) {
    if (k >= tree.params.K)
        throw ConfigError("vertex " + std::to_string(k) + " is not expanded (K=" +
                          std::to_string(tree.params.K) + ")");
    const Vertex& parent = tree.vertices[k];
    return child_side(parent.weight, parent.side, parent.layer, tree.params.M[k], tree.params.p,
                      tree.params.d);
}

LayerVertices layer_vertices(const Tree& tree, std::uint32_t n) {
    LayerVertices out;
    std::uint64_t last_above = 0;
    bool any_above = false;
    for (std::size_t i = 0; i < tree.vertices.size(); ++i) {
        const std::uint32_t layer = tree.vertices[i].layer;
        if (layer == n) out.indices.push_back(i);
        if (n > 0 && layer == n - 1) {
            last_above = i;
            any_above = true;
        }
        // Layers are monotone in the index, so we may stop once past n.
        if (layer > n) break;
    }
    out.complete = (n == 0) || (any_above && last_above < tree.params.K);
    return out;
}

double layer_mass_sum(const Tree& tree, std::uint32_t n) {
    const auto layer = layer_vertices(tree, n);
    std::vector<double> terms;
    terms.reserve(layer.indices.size());
    for (auto i : layer.indices) terms.push_back(tree.vertices[i].weight);
    return pairwise_sum(terms);
}

double layer_covering_sum(const Tree& tree, std::uint32_t n) {
    const double e = 2.0 * tree.params.d / tree.params.p;
    const auto layer = layer_vertices(tree, n);
    std::vector<double> terms;
    terms.reserve(layer.indices.size());
    for (auto i : layer.indices) terms.push_back(std::pow(tree.vertices[i].side, e));
    return pairwise_sum(terms);
}

}  // namespace cantorlp
