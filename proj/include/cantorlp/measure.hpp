#ifndef CANTORLP_MEASURE_HPP
#define CANTORLP_MEASURE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "cantorlp/rng.hpp"
#include "cantorlp/tree.hpp"

namespace cantorlp {

// Finite nonnegative combination of uniform probability measures on
// axis-aligned cubes. Atom i occupies corners[i*d .. i*d+d).
struct CubeMeasure {
    int d = 1;
    std::vector<double> corners;
    std::vector<double> sides;
    std::vector<double> masses;

    std::size_t size() const { return sides.size(); }
    std::span<const double> corner(std::size_t i) const {
        return {corners.data() + i * static_cast<std::size_t>(d), static_cast<std::size_t>(d)};
    }
    void push_atom(std::span<const double> corner, double side, double mass);
    double total_mass() const;
    // Probability mass within 1e-12 and every atom inside [0,1]^d.
    void validate() const;
};

// Unit Lebesgue measure on [0,1]^d.
CubeMeasure unit_cube_measure(int d);

// One realization omega: the relative shift vectors drawn for each expanded
// vertex, keyed by vertex index. Shifts for vertex k are M_k d-vectors stored
// flat, each component in [0, 1-rho_k].
struct ShiftSample {
    std::uint64_t seed = 0;
    std::map<std::uint64_t, std::vector<double>> shifts;
};

// M i.i.d. shift vectors uniform on [0, 1-rho]^d, flattened d at a time.
// Deterministic given the stream state. Rejects rho outside (0, 1/2).
std::vector<double> sample_shifts(std::size_t M, double rho, int d, RngStream& stream);

// Child cubes under the homothety [0,1]^d -> parent: child i gets
// corner = parent_corner + parent_side * shift_i and side r_abs. Appends the
// atoms (mass each) to `out`. Containment in the parent is a hard error.
void place_children(std::span<const double> parent_corner, double parent_side,
                    std::span<const double> shifts, double r_abs, double mass_each,
                    CubeMeasure& out);

// Measure recurrence step: removes the atom at `atom_pos` (which must carry
// mass b_k, the expanded vertex's weight) and appends the children placed from
// `shifts`. Total mass is unchanged.
CubeMeasure step_measure(const CubeMeasure& mu_prev, std::size_t atom_pos, double b_k,
                         std::span<const double> shifts, double r_abs);

// One random subdivision of the given cube: M child cubes of relative side
// rho placed by i.i.d. uniform shifts, each of mass `mass`/M.
CubeMeasure random_subdivision(std::span<const double> corner, double side, double mass,
                               std::size_t M, double rho, int d, RngStream& stream);

// Same for the unit cube with total mass 1 (the measure nu_{M,rho}).
CubeMeasure nu_measure(std::size_t M, double rho, int d, RngStream& stream);

// Density of the expected measure E nu_{M,rho} on the unit cube: the product
// of the one-dimensional piecewise-linear factors f_rho(x_i).
double f_rho(double rho, double t);
double expected_density(double rho, std::span<const double> x);

// Runs the full K-step construction for one omega. Corners are materialized
// vertex by vertex; mu_k is the slice of not-yet-expanded vertices created by
// step k, so snapshots at any stage share one corner table.
class Construction {
public:
    Construction(Tree tree, RngStream base);
    Construction(Tree tree, std::uint64_t seed);

    const Tree& tree() const { return tree_; }
    const ShiftSample& shifts() const { return shifts_; }
    // mu_k for k in [0, K].
    CubeMeasure measure_after(std::size_t k) const;
    CubeMeasure final_measure() const { return measure_after(tree_.params.K); }

private:
    void run();
    Tree tree_;
    RngStream base_;
    ShiftSample shifts_;
    std::vector<double> corners_;           // vertex-indexed, d per vertex
    std::vector<std::uint64_t> created_;    // created_[k] = #vertices after k steps
};

struct SelectionResult {
    bool accepted = false;
    std::size_t tries = 0;
    std::int64_t accepted_index = -1;
    double threshold_p = 0.0, threshold_p1 = 0.0;
    double pilot_mean_p = 0.0, pilot_mean_p1 = 0.0;
    double norm_p = 0.0, norm_p1 = 0.0;    // accepted (or best) candidate
    std::size_t accept_count = 0;          // when exhaustive
    ShiftSample shifts;                    // accepted (or best) candidate
};

}  // namespace cantorlp

#endif
