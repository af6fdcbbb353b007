#include "oir/ideal.hpp"

#include <algorithm>
#include <set>

namespace oir {

Tuple tuple_from_squarefree(const Monomial& m) {
    Tuple t;
    for (const auto& e : m.entries()) {
        if (e.row != 1)
            throw Error("tuple_from_squarefree: expected a one-row monomial, got " + m.str());
        if (e.exp != 1)
            throw Error("tuple_from_squarefree: expected a squarefree monomial, got " + m.str());
        t.push_back(e.col);
    }
    if (t.empty())
        throw Error("tuple_from_squarefree: the unit monomial has no tuple");
    return t;
}

Tuple tuple_from_one_row(const Monomial& m) {
    Tuple t;
    for (const auto& e : m.entries()) {
        if (e.row != 1)
            throw Error("tuple_from_one_row: expected a one-row monomial, got " + m.str());
        for (int k = 0; k < e.exp; ++k)
            t.push_back(e.col);
    }
    if (t.empty())
        throw Error("tuple_from_one_row: the unit monomial has no tuple");
    return t;
}

Tuple tuple_from_ferrers(const Monomial& m) {
    const int d = m.degree();
    Tuple t(static_cast<std::size_t>(d), 0);
    for (const auto& e : m.entries()) {
        if (e.exp != 1 || e.row < 1 || e.row > d || t[static_cast<std::size_t>(e.row - 1)] != 0)
            throw Error("tuple_from_ferrers: expected one variable in each row 1.." +
                        std::to_string(d) + ", got " + m.str());
        t[static_cast<std::size_t>(e.row - 1)] = e.col;
    }
    return t;
}

Monomial squarefree_from_tuple(int width, const Tuple& t) {
    std::vector<Monomial::Entry> entries;
    entries.reserve(t.size());
    for (int c : t)
        entries.push_back({1, c, 1});
    return Monomial(width, std::move(entries));
}

Monomial one_row_from_tuple(int width, const Tuple& t) {
    std::vector<Monomial::Entry> entries;
    for (int c : t)
        entries.push_back({1, c, 1});
    return Monomial(width, std::move(entries));
}

Monomial ferrers_from_tuple(int width, const Tuple& t) {
    std::vector<Monomial::Entry> entries;
    for (std::size_t i = 0; i < t.size(); ++i)
        entries.push_back({static_cast<int>(i) + 1, t[i], 1});
    return Monomial(width, std::move(entries));
}

namespace {

int common_degree(const std::vector<Monomial>& gens, const char* context) {
    if (gens.empty())
        throw Error(std::string(context) + ": empty generating set");
    const int d = gens.front().degree();
    for (const Monomial& g : gens)
        if (g.degree() != d)
            throw Error(std::string(context) + ": generators of mixed degree");
    return d;
}

} // namespace

bool is_squarefree_strongly_stable(const std::vector<Monomial>& gens, int n) {
    const int d = common_degree(gens, "is_squarefree_strongly_stable");
    TupleSet tuples;
    for (const Monomial& g : gens)
        tuples.insert(tuple_from_squarefree(g));
    return is_order_ideal(tuples, TuplePoset::strictly_increasing(d, n));
}

bool is_strongly_stable(const std::vector<Monomial>& gens, int n) {
    const int d = common_degree(gens, "is_strongly_stable");
    TupleSet tuples;
    for (const Monomial& g : gens)
        tuples.insert(tuple_from_one_row(g));
    return is_order_ideal(tuples, TuplePoset::weakly_increasing(d, n));
}

bool is_ferrers(const std::vector<Monomial>& gens, int n) {
    const int d = common_degree(gens, "is_ferrers");
    TupleSet tuples;
    for (const Monomial& g : gens) {
        Tuple t = tuple_from_ferrers(g);
        // Not in the bounded strictly-increasing poset at all.
        for (std::size_t i = 0; i < t.size(); ++i)
            if (t[i] > n || (i > 0 && t[i] <= t[i - 1]))
                return false;
        tuples.insert(std::move(t));
    }
    // Downward closure under covering moves; the coordinate bounds do not
    // matter for closure of a set already inside the poset.
    return is_order_ideal(tuples, TuplePoset::strictly_increasing(d, n));
}

std::vector<Monomial> minimalize(std::vector<Monomial> monomials) {
    std::sort(monomials.begin(), monomials.end());
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    std::vector<Monomial> out;
    for (const Monomial& m : monomials) {
        bool redundant = false;
        for (const Monomial& g : monomials) {
            if (!(g == m) && divides(g, m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant)
            out.push_back(m);
    }
    return out;
}

MonomialOIIdeal::MonomialOIIdeal(AlgebraSignature signature, int gen_width,
                                 std::vector<Monomial> generators)
    : signature_(signature), gen_width_(gen_width) {
    if (gen_width_ < 0)
        throw Error("MonomialOIIdeal: generating width must be nonnegative");
    degree_ = common_degree(generators, "MonomialOIIdeal");
    for (const Monomial& g : generators) {
        if (g.width() != gen_width_)
            throw Error("MonomialOIIdeal: generator " + g.str() + " does not have width " +
                        std::to_string(gen_width_));
        if (g.max_row() > signature_.rows)
            throw Error("MonomialOIIdeal: generator " + g.str() + " uses row beyond signature rows " +
                        std::to_string(signature_.rows));
        if (g.is_one())
            throw Error("MonomialOIIdeal: the unit monomial is not a valid generator");
    }
    const std::size_t before = generators.size();
    generators_ = minimalize(std::move(generators));
    pruned_ = static_cast<int>(before - generators_.size());
}

std::vector<Monomial> MonomialOIIdeal::expand(int w) const {
    if (w < 0)
        throw Error("expand: negative width");
    check_width_limit(w, "expand");
    if (w < gen_width_)
        return {};
    std::set<Monomial> images;
    for (const OIMorphism& eps : enumerate_morphisms(gen_width_, w))
        for (const Monomial& g : generators_)
            images.insert(act(eps, g));
    return minimalize(std::vector<Monomial>(images.begin(), images.end()));
}

} // namespace oir
