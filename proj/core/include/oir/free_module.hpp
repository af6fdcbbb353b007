#pragma once

#include <cstdint>
#include <vector>

#include "oir/oi_morphism.hpp"

namespace oir {

/// Shape of a free OI-module: the multiset of generator widths, kept sorted.
/// The width-w component of the module it describes is free of rank
/// sum_i C(w, widths[i]).
struct FreeOIModuleShape {
    std::vector<int> generator_widths; // sorted ascending

    FreeOIModuleShape() = default;
    explicit FreeOIModuleShape(std::vector<int> widths);

    int rank() const { return static_cast<int>(generator_widths.size()); }

    friend bool operator==(const FreeOIModuleShape&, const FreeOIModuleShape&) = default;
};

std::uint64_t free_rank_at_width(const FreeOIModuleShape& shape, int w);

/// Outcome of reading a shape off a rank sequence. The rank data determines
/// the candidate multiplicity of width-j generators as the j-th finite
/// difference of the sequence at 0; a negative multiplicity rules freeness
/// out, and a nonzero multiplicity at the final width means the difference
/// table has not stabilized yet.
struct FreenessResult {
    enum class Kind { Free, NotFree, InsufficientData };
    Kind kind = Kind::NotFree;
    FreeOIModuleShape shape; // meaningful only when kind == Free

    static FreenessResult free_with(FreeOIModuleShape s) {
        return FreenessResult{Kind::Free, std::move(s)};
    }
    static FreenessResult not_free() { return FreenessResult{Kind::NotFree, {}}; }
    static FreenessResult insufficient() { return FreenessResult{Kind::InsufficientData, {}}; }
};

/// Inverse binomial transform: recovers the generator-width multiset from
/// ranks[w] for w = 0..max_width, or reports NotFree / InsufficientData.
/// Requires ranks.size() == max_width + 1.
FreenessResult shape_from_rank_sequence(const std::vector<std::int64_t>& ranks, int max_width);

} // namespace oir
