#pragma once

#include <cstdint>
#include <vector>

namespace oir {

bool is_prime(std::uint64_t n);

/// Sparse triplet over the integers; reduced mod p on demand.
struct IntTriplet {
    int row;
    int col;
    std::int64_t value;
};

/// Rank of an integer matrix mod p by Gaussian elimination. Entries are
/// given as triplets; duplicate (row, col) positions accumulate. Dense
/// elimination, adequate for the desk-scale matrices handled here.
int rank_mod_p(int rows, int cols, const std::vector<IntTriplet>& entries, std::uint32_t p);

/// Dense variant; `matrix` is row-major, rows x cols.
int rank_mod_p_dense(std::vector<std::vector<std::int64_t>> matrix, std::uint32_t p);

} // namespace oir
