#ifndef CANTORLP_TREE_HPP
#define CANTORLP_TREE_HPP

#include <cstdint>
#include <vector>

namespace cantorlp {

// Branching data for the truncated construction tree. M is indexed from 0;
// step k expands vertex Q_k into M[k] children, for k = 0 .. K-1.
struct Params {
    int d = 1;
    double p = 4.0;
    double p1 = 6.0;
    std::vector<std::uint64_t> M;
    std::size_t K = 0;
    std::uint64_t seed = 1;
};

// Throws ConfigError unless d >= 1, p > 2, p1 > p, every M_k >= 2 and K <= |M|.
void validate_params(const Params& params);

struct Vertex {
    std::int64_t parent = -1;  // -1 for the root
    std::uint32_t layer = 0;
    double weight = 1.0;  // b(Q) = product of 1/M over strict ancestors' steps
    double side = 1.0;    // l(Q); prescribed by the side rule, placement-free
    std::uint64_t first_child = 0;
    std::uint64_t n_children = 0;
};

struct Tree {
    Params params;
    std::vector<Vertex> vertices;

    std::size_t size() const { return vertices.size(); }
    // Vertices are expanded in strict index order, so Q_i is expanded iff i < K.
    bool is_expanded(std::size_t i) const { return i < params.K; }
    std::uint32_t max_layer() const;
};

// Side assigned to the children of Q_k:
//   r_k = M_k^{-p/(2d)} * b(Q_k)^{p/(2d)} / (n(Q_k) + 1).
// The relative ratio rho_k = r_k / l(Q_k) must land in (0, 1/2).
double child_side(double parent_weight, double parent_side, std::uint32_t parent_layer,
                  std::uint64_t Mk, double p, int d);

// Smallest admissible branching factor at step k (makes rho_k < 1/2).
std::uint64_t minimal_admissible_M(double parent_weight, double parent_side,
                                   std::uint32_t parent_layer, double p, int d);

// Builds the K-step truncation. Children of Q_k occupy the contiguous index
// range starting at 1 + M_0 + ... + M_{k-1}. Throws ConfigError on invalid
// params or on any rho_k >= 1/2 (the diagnostic names k and the minimal M_k).
Tree build_tree(const Params& params);

// Convenience accessor matching the side rule above. Requires k < K.
double child_side(const Tree& tree, std::size_t k);

struct LayerVertices {
    std::vector<std::uint64_t> indices;
    // True iff every layer-(n-1) vertex has been expanded; layer 0 is complete.
    bool complete = false;
};

LayerVertices layer_vertices(const Tree& tree, std::uint32_t n);

// Sum of b(Q) over layer n;  equals 1 for complete layers.
double layer_mass_sum(const Tree& tree, std::uint32_t n);

// Covering sum over layer n: sum of l(Q)^{2d/p}; equals n^{-2d/p} for complete
// layers with n >= 1.
double layer_covering_sum(const Tree& tree, std::uint32_t n);

}  // namespace cantorlp

#endif
