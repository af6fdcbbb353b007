#pragma once

#include <vector>

#include "oir/ideal.hpp"

namespace oir {

/// A box: a product sigma_1 x ... x sigma_d of nonempty vertex sets inside
/// the d-fold product of simplices on [w]. Every vertex of a box kept here
/// is a strictly increasing tuple, which forces max(sigma_j) < min(sigma_j+1).
struct BoxFace {
    std::vector<std::vector<int>> blocks; // each strictly sorted, nonempty

    int dimension() const;
    /// Union of the blocks, sorted.
    std::vector<int> support() const;
    /// The componentwise-largest vertex (max sigma_1, ..., max sigma_d).
    Tuple top_vertex() const;
    /// All vertex tuples of the box, in lexicographic order.
    std::vector<Tuple> vertices() const;

    std::string str() const;

    friend auto operator<=>(const BoxFace&, const BoxFace&) = default;
};

/// Blockwise image of a face under an OI morphism.
BoxFace act_on_face(const OIMorphism& eps, const BoxFace& face);

enum class BoxMode {
    Squarefree, // vertices are squarefree degree-d monomials in one row
    Ferrers,    // vertices are monomials x_{1,i_1}...x_{d,i_d}
};

/// The vertex-induced subcomplex of the product of d simplices on [w]
/// determined by a generating set: a box belongs to the complex exactly
/// when all of its vertices are generator tuples.
class BoxComplex {
public:
    /// Builds the complex for a generating set that passes the class
    /// predicate matching `mode` (an error otherwise).
    static BoxComplex build(const std::vector<Monomial>& gens, BoxMode mode);

    int width() const { return width_; }
    BoxMode mode() const { return mode_; }
    int block_count() const { return block_count_; }
    /// Dimension of the complex, -1 when empty.
    int dimension() const { return static_cast<int>(faces_by_dim_.size()) - 1; }
    const std::vector<std::vector<BoxFace>>& faces_by_dim() const { return faces_by_dim_; }
    const TupleSet& generator_vertices() const { return vertices_; }

    std::vector<std::size_t> f_vector() const;

    bool contains(const BoxFace& face) const;
    /// Membership of a well-shaped box via its top vertex only; agrees with
    /// contains() when the vertex set is an order ideal.
    bool contains_by_top_vertex(const BoxFace& face) const;

    /// The monomial m_P attached to a face: the lcm of its vertex monomials.
    Monomial vertex_monomial(const BoxFace& face) const;

    /// Signed codimension-one boundary of a face of dimension >= 1. Every
    /// emitted face is asserted to lie in the complex. The sign of removing
    /// the k-th smallest element of block i is (-1)^k times
    /// (-1)^{dim sigma_1 + ... + dim sigma_{i-1}}, and the coefficient
    /// recorded with the face is the variable of the removed vertex.
    std::vector<std::tuple<int, Monomial, BoxFace>> boundary(const BoxFace& face) const;

private:
    BoxComplex() = default;

    int width_ = 0;
    BoxMode mode_ = BoxMode::Squarefree;
    int block_count_ = 0;
    TupleSet vertices_;
    std::vector<std::vector<BoxFace>> faces_by_dim_;
};

} // namespace oir
