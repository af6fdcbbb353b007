#pragma once

#include <set>
#include <vector>

#include "oir/oi_morphism.hpp"

namespace oir {

using Tuple = std::vector<int>;
using TupleSet = std::set<Tuple>;

/// The three tuple posets under componentwise (Gale) order:
///   P: strictly increasing d-tuples in [n]
///   Q: weakly increasing d-tuples in [n]
///   R: strictly increasing d-tuples with coordinate bounds m_1 <= ... <= m_d
struct TuplePoset {
    enum class Kind { P, Q, R };

    Kind kind;
    int d;
    int n = 0;               // coordinate bound for P and Q
    std::vector<int> bounds; // per-coordinate bounds for R

    static TuplePoset strictly_increasing(int d, int n) { return {Kind::P, d, n, {}}; }
    static TuplePoset weakly_increasing(int d, int n) { return {Kind::Q, d, n, {}}; }
    static TuplePoset bounded(std::vector<int> bounds);

    bool contains(const Tuple& t) const;
    /// All elements covered by t: decrement one coordinate where the result
    /// stays in the poset.
    std::vector<Tuple> covered_below(const Tuple& t) const;
    /// Every element of the poset, in lexicographic order.
    std::vector<Tuple> elements() const;
};

/// Componentwise comparison a <= b.
bool gale_leq(const Tuple& a, const Tuple& b);

/// Downward closure via covering moves. Throws if some tuple is not a poset
/// element. The empty set is not an order ideal.
bool is_order_ideal(const TupleSet& s, const TuplePoset& poset);

/// Elements of s with no strictly larger element in s. s must be nonempty
/// and contained in the poset.
std::vector<Tuple> maximal_elements(const TupleSet& s, const TuplePoset& poset);

/// Pushes an order ideal in P_w one width up: the set of eps(a) over all
/// a in the ideal and eps: w -> w+1. The result is checked to be an order
/// ideal equal to the union of the intervals [min, m + (1,...,1)] over the
/// maximal elements m of the input.
TupleSet propagate_order_ideal(const TupleSet& ideal_w, int w);

} // namespace oir
