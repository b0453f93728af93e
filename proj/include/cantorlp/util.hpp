#ifndef CANTORLP_UTIL_HPP
#define CANTORLP_UTIL_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cantorlp {

// Invalid parameters, malformed config files, out-of-domain requests.
// The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Quadrature refinement failed to settle within tolerance. Exit code 3.
struct NonConvergenceError : std::runtime_error {
    explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Pairwise (cascade) summation. Error grows like log(n)·eps instead of n·eps,
// and the fixed recursion shape makes the result independent of how callers
// chunk their data, which the deterministic parallel reductions rely on.
double pairwise_sum(std::span<const double> xs);

// Splits [0, n) into fixed-size blocks, runs fn(block_index, begin, end) on up
// to `jobs` threads, then hands the per-block results back in block order.
// Block boundaries depend only on n, never on the thread count, so reductions
// over the returned vector are bitwise reproducible.
std::vector<double> map_blocks(std::size_t n, std::size_t block_size, std::size_t jobs,
                               const std::function<double(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace cantorlp

#endif
