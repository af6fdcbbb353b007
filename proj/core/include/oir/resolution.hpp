#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oir/box_complex.hpp"
#include "oir/monomial.hpp"

namespace oir {

/// A generator of one free module in a graded complex. Cellular complexes
/// carry the face monomial as a multidegree, which verification uses to
/// split coefficient spaces into small blocks.
struct ComplexGenerator {
    int degree = 0;
    std::string label;
    std::optional<Monomial> multidegree;
};

/// Sparse matrix with MonomialSum entries, keyed by (col, row).
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add(int row, int col, const MonomialSum& value);
    MonomialSum at(int row, int col) const;
    /// Entries of one column as (row, value) pairs.
    std::vector<std::pair<int, const MonomialSum*>> column(int col) const;

    const std::map<std::pair<int, int>, MonomialSum>& cells() const { return cells_; }

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::map<std::pair<int, int>, MonomialSum> cells_; // keyed (col, row)
};

/// A chain complex of graded free A(width)-modules,
///   0 -> F_top -> ... -> F_1 -> F_0,
/// with maps[i] the differential F_{i+1} -> F_i. When quotient_generators
/// is set, F_0 is rank one and the complex is meant to resolve
/// A(width)/(quotient_generators).
struct GradedFreeComplex {
    int width = 0;
    AlgebraSignature signature;
    std::vector<std::vector<ComplexGenerator>> levels;
    std::vector<SparseMatrix> maps;
    std::optional<std::vector<Monomial>> quotient_generators;

    int num_levels() const { return static_cast<int>(levels.size()); }
    std::size_t rank(int level) const { return levels[static_cast<std::size_t>(level)].size(); }
    int top_generator_degree() const;
    bool has_multidegrees() const;
};

/// The cellular resolution supported on a box complex: level i >= 1 has one
/// generator e_P per (i-1)-face P in canonical face order, level 0 is the
/// rank-one free module, and the differential entry from e_P to e_Q is
/// sgn(P,Q) * m_P/m_Q.
GradedFreeComplex cellular_resolution(const BoxComplex& complex, const std::vector<Monomial>& gens);

/// The complex with only level 0, resolving A(w) itself (zero ideal).
GradedFreeComplex trivial_quotient_complex(int width, const AlgebraSignature& signature);

struct DSquaredReport {
    bool pass = true;
    std::string first_violation; // "level i: (row, col) -> leftover" when failing
};

/// Exact check that consecutive differentials compose to zero.
DSquaredReport verify_d_squared(const GradedFreeComplex& cplx);

/// Every nonzero entry must be homogeneous of degree
/// deg(column generator) - deg(row generator).
bool verify_homogeneous(const GradedFreeComplex& cplx);

/// True when no differential entry has a nonzero constant term, i.e. the
/// complex tensored down to the base field has zero maps at this width.
bool verify_minimal_width(const GradedFreeComplex& cplx);

struct ExactnessDegreeRow {
    int degree = 0;
    std::vector<std::int64_t> level_dims;
    std::vector<std::int64_t> diff_ranks;    // diff_ranks[i] = rank of maps[i] in this degree
    std::vector<std::int64_t> homology_dims; // homology at levels 1..top
    std::int64_t coker_dim = 0;
    std::int64_t expected_coker = -1; // -1 when no quotient description is attached
};

struct ExactnessReport {
    bool pass = true;
    std::uint32_t prime = 2;
    int degree_bound = 0;
    std::vector<ExactnessDegreeRow> rows;
    std::string failure;

    std::string to_text() const;
};

/// Degreewise exactness over F_p through internal degree D: homology must
/// vanish at every level >= 1, and when a quotient description is attached,
/// the level-0 cokernel dimensions must match the Hilbert-series prediction.
ExactnessReport verify_exact_up_to(const GradedFreeComplex& cplx, int degree_bound, std::uint32_t p);

/// Generator counts by (homological level, internal degree).
std::map<std::pair<int, int>, std::int64_t> betti_table(const GradedFreeComplex& cplx);

std::string betti_table_text(const std::map<std::pair<int, int>, std::int64_t>& table);

/// All monomials of the given total degree in the rows x width variable
/// grid, in a fixed deterministic order.
std::vector<Monomial> monomials_of_degree(int rows, int width, int degree);

/// Dimension of the degree-k piece of the polynomial ring on rows*width
/// variables.
std::int64_t polynomial_space_dim(int rows, int width, int k);

} // namespace oir
