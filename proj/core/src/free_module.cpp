#include "oir/free_module.hpp"

#include <algorithm>

namespace oir {

FreeOIModuleShape::FreeOIModuleShape(std::vector<int> widths) : generator_widths(std::move(widths)) {
    for (int w : generator_widths)
        if (w < 0)
            throw Error("FreeOIModuleShape: generator widths must be nonnegative");
    std::sort(generator_widths.begin(), generator_widths.end());
}

std::uint64_t free_rank_at_width(const FreeOIModuleShape& shape, int w) {
    std::uint64_t total = 0;
    for (int m : shape.generator_widths)
        total += binomial(w, m);
    return total;
}

FreenessResult shape_from_rank_sequence(const std::vector<std::int64_t>& ranks, int max_width) {
    if (max_width < 0 || static_cast<int>(ranks.size()) != max_width + 1)
        throw Error("shape_from_rank_sequence: need ranks for every width 0..max_width");

    // Newton forward differences at 0: the j-th difference is the number of
    // generators of width j, and it depends only on ranks[0..j].
    std::vector<std::int64_t> row = ranks;
    std::vector<std::int64_t> multiplicity(static_cast<std::size_t>(max_width) + 1, 0);
    for (int j = 0; j <= max_width; ++j) {
        multiplicity[static_cast<std::size_t>(j)] = row[0];
        if (row[0] < 0)
            return FreenessResult::not_free();
        for (std::size_t i = 0; i + 1 < row.size(); ++i)
            row[i] = row[i + 1] - row[i];
        row.pop_back();
    }

    // A nonzero count at max_width itself cannot be confirmed: the table
    // stabilizes only once a zero difference row past the last generator
    // width has been seen.
    if (multiplicity[static_cast<std::size_t>(max_width)] != 0)
        return FreenessResult::insufficient();

    std::vector<int> widths;
    for (int j = 0; j <= max_width; ++j)
        for (std::int64_t c = 0; c < multiplicity[static_cast<std::size_t>(j)]; ++c)
            widths.push_back(j);
    return FreenessResult::free_with(FreeOIModuleShape(std::move(widths)));
}

} // namespace oir
