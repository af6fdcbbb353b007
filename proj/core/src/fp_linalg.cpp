#include "oir/fp_linalg.hpp"

#include <algorithm>

namespace oir {

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t q = 3; q * q <= n; q += 2)
        if (n % q == 0)
            return false;
    return true;
}

namespace {

std::uint32_t reduce_mod(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0)
        r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    // Fermat: p is prime and a != 0 mod p.
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

int eliminate(std::vector<std::vector<std::uint32_t>>& m, std::uint32_t p) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    int rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && m[sel][col] == 0)
            ++sel;
        if (sel == rows)
            continue;
        std::swap(m[sel], m[pivot_row]);
        const std::uint64_t inv = inverse_mod(m[pivot_row][col], p);
        for (std::size_t j = col; j < cols; ++j)
            m[pivot_row][j] = static_cast<std::uint32_t>(m[pivot_row][j] * inv % p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || m[r][col] == 0)
                continue;
            const std::uint64_t factor = m[r][col];
            for (std::size_t j = col; j < cols; ++j) {
                std::uint64_t v = m[r][j] + (p - static_cast<std::uint32_t>(factor * m[pivot_row][j] % p));
                m[r][j] = static_cast<std::uint32_t>(v % p);
            }
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

} // namespace

int rank_mod_p(int rows, int cols, const std::vector<IntTriplet>& entries, std::uint32_t p) {
    if (rows == 0 || cols == 0)
        return 0;
    // Eliminate along the smaller dimension.
    const bool transpose = cols < rows;
    const std::size_t nr = static_cast<std::size_t>(transpose ? cols : rows);
    const std::size_t nc = static_cast<std::size_t>(transpose ? rows : cols);
    std::vector<std::vector<std::uint32_t>> m(nr, std::vector<std::uint32_t>(nc, 0));
    for (const auto& t : entries) {
        const std::size_t r = static_cast<std::size_t>(transpose ? t.col : t.row);
        const std::size_t c = static_cast<std::size_t>(transpose ? t.row : t.col);
        m[r][c] = static_cast<std::uint32_t>((m[r][c] + reduce_mod(t.value, p)) % p);
    }
    return eliminate(m, p);
}

int rank_mod_p_dense(std::vector<std::vector<std::int64_t>> matrix, std::uint32_t p) {
    std::vector<std::vector<std::uint32_t>> m;
    m.reserve(matrix.size());
    for (const auto& row : matrix) {
        std::vector<std::uint32_t> r;
        r.reserve(row.size());
        for (std::int64_t v : row)
            r.push_back(reduce_mod(v, p));
        m.push_back(std::move(r));
    }
    return eliminate(m, p);
}

} // namespace oir
