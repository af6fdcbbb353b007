#include "oir/tuple_poset.hpp"

#include <algorithm>

namespace oir {

TuplePoset TuplePoset::bounded(std::vector<int> bounds) {
    if (bounds.empty())
        throw Error("TuplePoset: bounds must be nonempty");
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
        if (bounds[i] > bounds[i + 1])
            throw Error("TuplePoset: bounds must be weakly increasing");
    TuplePoset p{Kind::R, static_cast<int>(bounds.size()), 0, std::move(bounds)};
    p.n = p.bounds.back();
    return p;
}

bool TuplePoset::contains(const Tuple& t) const {
    if (static_cast<int>(t.size()) != d)
        return false;
    for (int i = 0; i < d; ++i) {
        const int v = t[static_cast<std::size_t>(i)];
        if (v < 1)
            return false;
        const int bound = kind == Kind::R ? bounds[static_cast<std::size_t>(i)] : n;
        if (v > bound)
            return false;
        if (i > 0) {
            const int prev = t[static_cast<std::size_t>(i - 1)];
            if (kind == Kind::Q ? v < prev : v <= prev)
                return false;
        }
    }
    return true;
}

std::vector<Tuple> TuplePoset::covered_below(const Tuple& t) const {
    if (!contains(t))
        throw Error("TuplePoset: tuple outside the poset");
    std::vector<Tuple> out;
    for (int i = 0; i < d; ++i) {
        Tuple s = t;
        --s[static_cast<std::size_t>(i)];
        if (contains(s))
            out.push_back(std::move(s));
    }
    return out;
}

std::vector<Tuple> TuplePoset::elements() const {
    std::vector<Tuple> out;
    Tuple current;
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == d) {
            out.push_back(current);
            return;
        }
        const int bound = kind == Kind::R ? bounds[static_cast<std::size_t>(pos)] : n;
        int lo = 1;
        if (pos > 0) {
            const int prev = current[static_cast<std::size_t>(pos - 1)];
            lo = kind == Kind::Q ? prev : prev + 1;
        }
        for (int v = lo; v <= bound; ++v) {
            current.push_back(v);
            self(self, pos + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

bool gale_leq(const Tuple& a, const Tuple& b) {
    if (a.size() != b.size())
        throw Error("gale_leq: tuple length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

bool is_order_ideal(const TupleSet& s, const TuplePoset& poset) {
    if (s.empty())
        return false;
    for (const Tuple& t : s) {
        if (!poset.contains(t))
            throw Error("is_order_ideal: tuple outside the poset");
        for (const Tuple& below : poset.covered_below(t))
            if (!s.count(below))
                return false;
    }
    return true;
}

std::vector<Tuple> maximal_elements(const TupleSet& s, const TuplePoset& poset) {
    if (s.empty())
        throw Error("maximal_elements: empty set");
    std::vector<Tuple> out;
    for (const Tuple& t : s) {
        if (!poset.contains(t))
            throw Error("maximal_elements: tuple outside the poset");
        bool dominated = false;
        for (const Tuple& u : s) {
            if (u != t && gale_leq(t, u)) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            out.push_back(t);
    }
    return out;
}

TupleSet propagate_order_ideal(const TupleSet& ideal_w, int w) {
    if (ideal_w.empty())
        throw Error("propagate_order_ideal: empty input");
    const int d = static_cast<int>(ideal_w.begin()->size());
    const TuplePoset poset_w = TuplePoset::strictly_increasing(d, w);
    if (!is_order_ideal(ideal_w, poset_w))
        throw Error("propagate_order_ideal: input is not an order ideal");

    TupleSet out;
    for (const OIMorphism& eps : enumerate_morphisms(w, w + 1))
        for (const Tuple& t : ideal_w)
            out.insert(apply_to_tuple(eps, t));

    // Postcondition from the construction: the image is the union of the
    // intervals [min, m + (1,...,1)] over maximal elements m, intersected
    // with the target poset, and in particular is itself an order ideal.
    const TuplePoset poset_next = TuplePoset::strictly_increasing(d, w + 1);
    TupleSet expected;
    const std::vector<Tuple> maxima = maximal_elements(ideal_w, poset_w);
    for (const Tuple& t : poset_next.elements()) {
        for (const Tuple& m : maxima) {
            Tuple top = m;
            for (int& v : top)
                ++v;
            if (gale_leq(t, top)) {
                expected.insert(t);
                break;
            }
        }
    }
    if (out != expected || !is_order_ideal(out, poset_next))
        throw std::logic_error("propagate_order_ideal: postcondition violated");
    return out;
}

} // namespace oir
