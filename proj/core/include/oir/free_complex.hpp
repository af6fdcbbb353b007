#pragma once

#include <optional>

#include "oir/resolution.hpp"

namespace oir {

/// Generator of a free OI-module F^{OI,width} shifted to the given internal
/// degree.
struct FreeComplexGenerator {
    int width = 0;
    int degree = 0;
    friend bool operator==(const FreeComplexGenerator&, const FreeComplexGenerator&) = default;
};

/// One summand of a map between free OI-modules: the source generator maps
/// to coefficient * epsilon(target generator), with
/// epsilon: width(target) -> width(source) and the coefficient homogeneous
/// in A(width(source)).
struct CoefficientEntry {
    int source = 0;
    int target = 0;
    OIMorphism epsilon{0, 0, {}};
    MonomialSum coefficient;
};

/// A finitely generated free OI-complex presented by coefficient data:
/// levels of generators and, for each level i >= 1, the entries of the map
/// into level i-1. Evaluation at a width produces the ordinary graded free
/// complex over A(width).
class FreeOIComplex {
public:
    FreeOIComplex(AlgebraSignature signature, std::vector<std::vector<FreeComplexGenerator>> levels,
                  std::vector<std::vector<CoefficientEntry>> maps);

    const AlgebraSignature& signature() const { return signature_; }
    int num_levels() const { return static_cast<int>(levels_.size()); }
    const std::vector<std::vector<FreeComplexGenerator>>& levels() const { return levels_; }
    /// maps()[i] describes the differential from level i+1 into level i.
    const std::vector<std::vector<CoefficientEntry>>& maps() const { return maps_; }

    std::size_t rank(int level) const { return levels_[static_cast<std::size_t>(level)].size(); }
    std::size_t total_rank() const;
    int max_generator_width() const;
    /// Width cap for evaluation-based certification: largest generator
    /// width plus two.
    int default_width_cap() const { return max_generator_width() + 2; }

    /// Checks d^2 = 0 on every evaluation through the cap; throws on
    /// failure. Entry shape and homogeneity are enforced at construction.
    void validate(int width_cap) const;

private:
    AlgebraSignature signature_;
    std::vector<std::vector<FreeComplexGenerator>> levels_;
    std::vector<std::vector<CoefficientEntry>> maps_;
};

/// Minimal map: every coefficient indexed by an identity morphism has zero
/// constant term. map_index i is the differential level i+1 -> level i.
bool is_minimal_map(const FreeOIComplex& cplx, int map_index);
bool is_minimal(const FreeOIComplex& cplx);

/// Width-wise minimal map: every coefficient has zero constant term.
bool is_widthwise_minimal_map(const FreeOIComplex& cplx, int map_index);
bool is_widthwise_minimal(const FreeOIComplex& cplx);

struct TrivialPair {
    int level = 0;  // homological level of the source generator
    int source = 0; // generator index at `level`
    int target = 0; // generator index at `level - 1`
};

/// Splits off the trivial summand witnessed by a unit coefficient at an
/// identity morphism in the map out of `level`, if one exists: performs the
/// two basis changes, removes the generator pair, and adjusts the two
/// adjacent differentials. Returns the pair and the reduced complex, or
/// nullopt when the map out of `level` is minimal. Unit coefficients must
/// be +-1 in this integer presentation.
std::optional<std::pair<TrivialPair, FreeOIComplex>> split_trivial_summand(const FreeOIComplex& cplx,
                                                                           int level);

/// First splittable pair in lexicographic (level, source, target) order.
std::optional<TrivialPair> find_trivial_pair(const FreeOIComplex& cplx);

/// Iterates split_trivial_summand to a fixed point. The result is minimal
/// at every level; total rank strictly decreases with every split.
FreeOIComplex minimize(const FreeOIComplex& cplx);

/// Evaluation at a width: level i has one generator per (generator, pi)
/// pair with pi ranging over Hom(generator width, w) in lexicographic
/// order, and the matrix entry toward (target, rho) collects A(pi)(coeff)
/// over entries with pi . epsilon = rho.
GradedFreeComplex evaluate_at_width(const FreeOIComplex& cplx, int w);

/// Direct sum placing `other` after `cplx` level by level.
FreeOIComplex direct_sum(const FreeOIComplex& cplx, const FreeOIComplex& other);

/// The two-term trivial complex F^{OI,width}[-degree] --id--> same, placed
/// so its source sits at homological level `level`.
FreeOIComplex trivial_complex(const AlgebraSignature& signature, int level, int width, int degree);

} // namespace oir
