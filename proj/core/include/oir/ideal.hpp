#pragma once

#include <vector>

#include "oir/monomial.hpp"
#include "oir/tuple_poset.hpp"

namespace oir {

/// Tuple encodings of the monomial classes.
/// Squarefree degree-d monomials in one row <-> strictly increasing tuples
/// of their columns; arbitrary one-row monomials <-> weakly increasing
/// tuples listing each column with its multiplicity; Ferrers monomials
/// x_{1,i_1}...x_{d,i_d} <-> the column tuple (i_1, ..., i_d).
Tuple tuple_from_squarefree(const Monomial& m);
Tuple tuple_from_one_row(const Monomial& m);
Tuple tuple_from_ferrers(const Monomial& m);

Monomial squarefree_from_tuple(int width, const Tuple& t);
Monomial one_row_from_tuple(int width, const Tuple& t);
Monomial ferrers_from_tuple(int width, const Tuple& t);

/// Order-ideal class predicates for a monomial generating set over [n].
/// All generators must have the same total degree; a generator whose shape
/// does not fit the claimed class is an error.
bool is_squarefree_strongly_stable(const std::vector<Monomial>& gens, int n);
bool is_strongly_stable(const std::vector<Monomial>& gens, int n);
bool is_ferrers(const std::vector<Monomial>& gens, int n);

/// A monomial OI-ideal: generators of a single width and a single total
/// degree. The constructor deduplicates and prunes generators divisible by
/// another generator (tracked by pruned_generators()) so the stored set is
/// minimal.
class MonomialOIIdeal {
public:
    MonomialOIIdeal(AlgebraSignature signature, int gen_width, std::vector<Monomial> generators);

    const AlgebraSignature& signature() const { return signature_; }
    int gen_width() const { return gen_width_; }
    const std::vector<Monomial>& generators() const { return generators_; }
    int degree() const { return degree_; }
    int pruned_generators() const { return pruned_; }

    /// Minimal generators of the width-w component: the images of the
    /// generators under every morphism gen_width -> w, deduplicated and
    /// pruned to pairwise non-divisible representatives, canonically sorted.
    /// Empty for w < gen_width.
    std::vector<Monomial> expand(int w) const;

private:
    AlgebraSignature signature_;
    int gen_width_;
    std::vector<Monomial> generators_;
    int degree_ = 0;
    int pruned_ = 0;
};

/// Prunes a monomial list to its pairwise non-divisible minimal elements
/// (duplicates removed). Idempotent.
std::vector<Monomial> minimalize(std::vector<Monomial> monomials);

} // namespace oir
