#include "cantorlp/measure.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cantorlp/util.hpp"

namespace cantorlp {

void CubeMeasure::push_atom(std::span<const double> corner, double side, double mass) {
    corners.insert(corners.end(), corner.begin(), corner.end());
    sides.push_back(side);
    masses.push_back(mass);
}

double CubeMeasure::total_mass() const {
    return pairwise_sum(masses);
}

void CubeMeasure::validate() const {
    if (corners.size() != size() * static_cast<std::size_t>(d))
        throw std::runtime_error("CubeMeasure: corner storage inconsistent with atom count");
    const double mass = total_mass();
    if (std::abs(mass - 1.0) > 1e-12)
        throw std::runtime_error("CubeMeasure: total mass " + std::to_string(mass) + " is not 1");
    for (std::size_t i = 0; i < size(); ++i) {
        if (!(sides[i] > 0.0) || !(masses[i] > 0.0))
            throw std::runtime_error("CubeMeasure: nonpositive side or mass at atom " + std::to_string(i));
        for (double c : corner(i)) {
            if (c < -1e-12 || c + sides[i] > 1.0 + 1e-12)
                throw std::runtime_error("CubeMeasure: atom " + std::to_string(i) +
                                         " escapes the unit cube");
        }
    }
}

CubeMeasure unit_cube_measure(int d) {
    CubeMeasure mu;
    mu.d = d;
    mu.corners.assign(static_cast<std::size_t>(d), 0.0);
    mu.sides.push_back(1.0);
    mu.masses.push_back(1.0);
    return mu;
}

std::vector<double> sample_shifts(std::size_t M, double rho, int d, RngStream& stream) {
    if (!(rho > 0.0 && rho < 0.5))
        throw ConfigError("rho must lie in (0, 1/2), got " + std::to_string(rho));
    std::vector<double> shifts(M * static_cast<std::size_t>(d));
    const double hi = 1.0 - rho;
    for (auto& s : shifts) s = stream.uniform(0.0, hi);
    return shifts;
}

void place_children(std::span<const double> parent_corner, double parent_side,
                    std::span<const double> shifts, double r_abs, double mass_each,
                    CubeMeasure& out) {
    const auto d = static_cast<std::size_t>(out.d);
    if (parent_corner.size() != d || shifts.size() % d != 0)
        throw std::runtime_error("place_children: dimension mismatch");
    const std::size_t M = shifts.size() / d;
    std::vector<double> corner(d);
    for (std::size_t i = 0; i < M; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            corner[j] = parent_corner[j] + parent_side * shifts[i * d + j];
            if (corner[j] < parent_corner[j] - 1e-12 ||
                corner[j] + r_abs > parent_corner[j] + parent_side + 1e-12)
                throw std::runtime_error("place_children: child " + std::to_string(i) +
                                         " escapes its parent (shift out of range)");
        }
        out.push_atom(corner, r_abs, mass_each);
    }
}

CubeMeasure step_measure(const CubeMeasure& mu_prev, std::size_t atom_pos, double b_k,
                         std::span<const double> shifts, double r_abs) {
    if (atom_pos >= mu_prev.size())
        throw std::runtime_error("step_measure: no atom at position " + std::to_string(atom_pos));
    if (std::abs(mu_prev.masses[atom_pos] - b_k) > 1e-12 * std::max(1.0, std::abs(b_k)))
        throw std::runtime_error("step_measure: atom mass " +
                                 std::to_string(mu_prev.masses[atom_pos]) +
                                 " does not match the expanded weight " + std::to_string(b_k) +
                                 " (construction order violated)");
    const auto d = static_cast<std::size_t>(mu_prev.d);
    const std::size_t M = shifts.size() / d;

    CubeMeasure mu;
    mu.d = mu_prev.d;
    mu.corners.reserve(mu_prev.corners.size() + (M - 1) * d);
    mu.sides.reserve(mu_prev.size() + M - 1);
    mu.masses.reserve(mu_prev.size() + M - 1);
    for (std::size_t i = 0; i < mu_prev.size(); ++i) {
        if (i == atom_pos) continue;
        mu.push_atom(mu_prev.corner(i), mu_prev.sides[i], mu_prev.masses[i]);
    }
    place_children(mu_prev.corner(atom_pos), mu_prev.sides[atom_pos], shifts, r_abs,
                   b_k / static_cast<double>(M), mu);
    return mu;
}

CubeMeasure random_subdivision(std::span<const double> corner, double side, double mass,
                               std::size_t M, double rho, int d, RngStream& stream) {
    CubeMeasure mu;
    mu.d = d;
    const auto shifts = sample_shifts(M, rho, d, stream);
    place_children(corner, side, shifts, rho * side, mass / static_cast<double>(M), mu);
    return mu;
}

CubeMeasure nu_measure(std::size_t M, double rho, int d, RngStream& stream) {
    const std::vector<double> origin(static_cast<std::size_t>(d), 0.0);
    return random_subdivision(origin, 1.0, 1.0, M, rho, d, stream);
}

double f_rho(double rho, double t) {
    if (!(rho > 0.0 && rho < 0.5))
        throw ConfigError("rho must lie in (0, 1/2), got " + std::to_string(rho));
    if (t < 0.0 || t > 1.0) return 0.0;
    const double c = rho * (1.0 - rho);
    if (t < rho) return t / c;
    if (t <= 1.0 - rho) return 1.0 / (1.0 - rho);
    return (1.0 - t) / c;
}

double expected_density(double rho, std::span<const double> x) {
    double prod = 1.0;
    for (double t : x) prod *= f_rho(rho, t);
    return prod;
}

Construction::Construction(Tree tree, RngStream base)
    : tree_(std::move(tree)), base_(base) {
    run();
}

Construction::Construction(Tree tree, std::uint64_t seed)
    : Construction(std::move(tree), RngStream(seed)) {}

void Construction::run() {
    const auto& params = tree_.params;
    const auto d = static_cast<std::size_t>(params.d);
    shifts_.seed = base_.seed();
    corners_.assign(tree_.size() * d, 0.0);
    created_.assign(params.K + 1, 1);

    for (std::size_t k = 0; k < params.K; ++k) {
        const Vertex& parent = tree_.vertices[k];
        const double r = tree_.vertices[parent.first_child].side;
        const double rho = r / parent.side;
        RngStream stream = base_.substream("shift", k);
        auto shifts = sample_shifts(parent.n_children, rho, params.d, stream);

        const std::span<const double> pc(corners_.data() + k * d, d);
        for (std::uint64_t c = 0; c < parent.n_children; ++c) {
            const std::size_t child = parent.first_child + c;
            for (std::size_t j = 0; j < d; ++j)
                corners_[child * d + j] = pc[j] + parent.side * shifts[c * d + j];
        }
        created_[k + 1] = created_[k] + parent.n_children;
        shifts_.shifts.emplace(k, std::move(shifts));
    }
}

CubeMeasure Construction::measure_after(std::size_t k) const {
    if (k > tree_.params.K)
        throw ConfigError("measure_after: k=" + std::to_string(k) + " exceeds K=" +
                          std::to_string(tree_.params.K));
    const auto d = static_cast<std::size_t>(tree_.params.d);
    CubeMeasure mu;
    mu.d = tree_.params.d;
    const std::uint64_t hi = created_[k];
    // Alive atoms of mu_k are exactly the created-but-unexpanded vertices.
    mu.corners.reserve((hi - k) * d);
    for (std::uint64_t i = k; i < hi; ++i) {
        mu.push_atom({corners_.data() + i * d, d}, tree_.vertices[i].side,
                     tree_.vertices[i].weight);
    }
    return mu;
}

}  // namespace cantorlp
