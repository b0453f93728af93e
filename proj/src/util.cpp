#include "cantorlp/util.hpp"

#include <algorithm>
#include <thread>

namespace cantorlp {

double pairwise_sum(std::span<const double> xs) {
    const std::size_t n = xs.size();
    if (n <= 8) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

std::vector<double> map_blocks(std::size_t n, std::size_t block_size, std::size_t jobs,
                               const std::function<double(std::size_t, std::size_t, std::size_t)>& fn) {
    if (block_size == 0) block_size = 1;
    const std::size_t n_blocks = (n + block_size - 1) / block_size;
    std::vector<double> out(n_blocks, 0.0);
    if (n == 0) return out;

    if (jobs <= 1 || n_blocks <= 1) {
        for (std::size_t b = 0; b < n_blocks; ++b) {
            const std::size_t lo = b * block_size;
            out[b] = fn(b, lo, std::min(lo + block_size, n));
        }
        return out;
    }

    jobs = std::min(jobs, n_blocks);
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (std::size_t t = 0; t < jobs; ++t) {
        workers.emplace_back([&, t]() {
            for (std::size_t b = t; b < n_blocks; b += jobs) {
                const std::size_t lo = b * block_size;
                out[b] = fn(b, lo, std::min(lo + block_size, n));
            }
        });
    }
    for (auto& w : workers) w.join();
    return out;
}

}  // namespace cantorlp
