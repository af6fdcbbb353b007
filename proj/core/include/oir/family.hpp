#pragma once

#include <map>
#include <mutex>
#include <optional>

#include "oir/free_module.hpp"
#include "oir/resolution.hpp"

namespace oir {

struct NaturalityReport {
    bool pass = true;
    int squares_checked = 0;
    std::string first_failure;
};

/// One commuting square: lower . src_map must equal dst_map . upper, where
/// lower and upper are the basis-to-basis matrices induced by eps one level
/// apart and eps acts on the coefficients of src_map. Returns a description
/// of the first failing column, or empty when the square commutes.
std::string naturality_square_failure(const SparseMatrix& src_map, const SparseMatrix& dst_map,
                                      const SparseMatrix& lower, const SparseMatrix& upper,
                                      const OIMorphism& eps);

struct LevelClassification {
    enum class Kind { Free, FlatNotFree, InsufficientData };
    Kind kind = Kind::InsufficientData;
    FreeOIModuleShape shape; // meaningful only when kind == Free
    int examined_width = 0;  // freeness is certified only against data up to here
};

/// The family of per-width cellular resolutions of a monomial OI-ideal,
/// together with the structure maps induced by OI morphisms (blockwise on
/// box faces, through the algebra map on coefficients). Widths materialize
/// lazily up to a cap; completed widths are immutable, and the induced-map
/// memo is guarded internally so reads after materialization are safe to
/// share.
class FlatOIFamily {
public:
    explicit FlatOIFamily(MonomialOIIdeal ideal, int width_cap = 8);

    const MonomialOIIdeal& ideal() const { return ideal_; }
    int width_cap() const { return width_cap_; }
    BoxMode mode() const { return mode_; }

    void materialize(int w);
    void materialize_up_to(int w);
    bool materialized(int w) const;

    const GradedFreeComplex& complex_at(int w) const;
    /// Null for widths below the generating width (all higher levels are 0).
    const BoxComplex* box_complex_at(int w) const;

    /// Largest homological level index over the materialized widths.
    int top_level() const;
    /// Number of homological levels present (top_level() + 1).
    int levels() const { return top_level() + 1; }

    std::size_t level_rank(int level, int w) const;

    /// The matrix of B_level(eps) over the box-face bases: each basis face
    /// maps to its blockwise image with coefficient one. Throws if an image
    /// face is missing from the target complex (which the construction
    /// rules out).
    SparseMatrix induced_map(int level, const OIMorphism& eps) const;

    /// Checks every square B_{i-1}(eps) . d_i(w) = d_i(w+1) . B_i(eps) for
    /// all eps: w -> w+1 with w < max_w and all levels i >= 1.
    NaturalityReport verify_naturality(int max_w) const;

    /// B(outer . inner) == B(outer) . B(inner) at the given level; both
    /// pairs must be composable and all three widths materialized.
    bool verify_functor_laws(int level, const OIMorphism& outer, const OIMorphism& inner) const;

    /// Widths (with counts) of the new generators at a level: faces not hit
    /// by any induced map from one width below. Level 0 is generated by the
    /// algebra unit in width 0.
    std::vector<std::pair<int, std::int64_t>> generator_widths(int level, int max_w) const;

    /// True when the level acquires no new generators at max_w itself, so
    /// the generator list reported up to max_w is complete evidence.
    bool generators_stabilized(int level, int max_w) const;

    /// Freeness of the level from its rank sequence through max_w.
    LevelClassification classify_level(int level, int max_w) const;

private:
    struct WidthData {
        std::optional<BoxComplex> box;
        GradedFreeComplex complex;
        std::vector<std::map<BoxFace, int>> face_index; // per dimension
    };

    const WidthData& width_data(int w) const;
    /// New-generator test: no morphism from width w-1 maps a face onto this
    /// one, i.e. no skipped column j outside the support gives a face of
    /// the previous complex.
    bool is_new_generator(const BoxFace& face, int w) const;

    MonomialOIIdeal ideal_;
    int width_cap_;
    BoxMode mode_;
    std::map<int, WidthData> widths_;

    mutable std::mutex memo_mutex_;
    mutable std::map<std::pair<int, OIMorphism>, SparseMatrix> induced_memo_;
};

} // namespace oir
