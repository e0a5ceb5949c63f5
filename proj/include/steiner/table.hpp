#pragma once

#include <vector>

#include "algebra.hpp"

namespace steiner {

// Rows (minus[k], plus[k]) for k = 0..dim of homogeneous chains of dimension k.
struct SteinerTable {
    int dim = 0;
    std::vector<Chain> minus;
    std::vector<Chain> plus;

    friend bool operator==(const SteinerTable&, const SteinerTable&) = default;
};

} // namespace steiner
