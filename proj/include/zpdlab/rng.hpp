#pragma once

#include "zpdlab/linalg.hpp"

#include <cstdint>
#include <random>

namespace zpdlab {

// Deterministic source of small Gaussian-rational test data. mt19937_64's
// output sequence is fixed by the C++ standard; the bounded draws below avoid
// std::uniform_int_distribution, whose mapping is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    long int_in(long lo, long hi) {  // inclusive bounds, |hi-lo| tiny so modulo bias is irrelevant
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(next() % span);
    }

    // numerators in [-3, 3], denominators in {1, 2}
    Scalar small_scalar() {
        const long rn = int_in(-3, 3), rd = int_in(1, 2);
        const long in = int_in(-3, 3), id = int_in(1, 2);
        return Scalar::gaussian(rn, rd, in, id);
    }

    Vec vec(int dim) {
        Vec v;
        v.reserve(static_cast<std::size_t>(dim));
        for (int k = 0; k < dim; ++k) v.push_back(small_scalar());
        return v;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace zpdlab
