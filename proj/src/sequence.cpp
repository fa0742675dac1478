#include "primelab/sequence.hpp"

#include <cmath>
#include <stdexcept>

namespace primelab {

ListSequence::ListSequence(std::vector<std::uint64_t> values)
    : values_(std::move(values)) {
    std::uint64_t prev = 0;
    for (std::uint64_t v : values_) {
        if (v < 1 || v <= prev)
            throw std::invalid_argument(
                "sequence must be strictly increasing with elements >= 1");
        prev = v;
    }
}

void ToySequence::visit(std::uint64_t limit,
                        const std::function<void(std::uint64_t)>& fn) const {
    std::uint64_t prev = 0;
    for (std::uint64_t n = 2;; ++n) {
        const auto xn = static_cast<std::uint64_t>(
            std::floor(static_cast<double>(n) * std::log(static_cast<double>(n))));
        if (xn > limit) break;
        if (xn <= prev) continue;  // collapse the few early collisions
        prev = xn;
        fn(xn);
    }
}

}  // namespace primelab
