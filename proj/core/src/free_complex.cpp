#include "oir/free_complex.hpp"

#include <algorithm>
#include <map>

namespace oir {

FreeOIComplex::FreeOIComplex(AlgebraSignature signature,
                             std::vector<std::vector<FreeComplexGenerator>> levels,
                             std::vector<std::vector<CoefficientEntry>> maps)
    : signature_(signature), levels_(std::move(levels)), maps_(std::move(maps)) {
    if (levels_.empty())
        throw Error("FreeOIComplex: no levels");
    if (maps_.size() + 1 != levels_.size())
        throw Error("FreeOIComplex: expected one map per adjacent level pair");
    for (const auto& level : levels_)
        for (const auto& g : level)
            if (g.width < 0)
                throw Error("FreeOIComplex: negative generator width");
    for (std::size_t i = 0; i < maps_.size(); ++i) {
        for (const CoefficientEntry& e : maps_[i]) {
            if (e.source < 0 || e.source >= static_cast<int>(levels_[i + 1].size()) || e.target < 0 ||
                e.target >= static_cast<int>(levels_[i].size()))
                throw Error("FreeOIComplex: entry indexes a missing generator");
            const FreeComplexGenerator& src = levels_[i + 1][static_cast<std::size_t>(e.source)];
            const FreeComplexGenerator& dst = levels_[i][static_cast<std::size_t>(e.target)];
            if (e.epsilon.source_width() != dst.width || e.epsilon.target_width() != src.width)
                throw Error("FreeOIComplex: epsilon must map the target generator width into the "
                            "source generator width");
            int coeff_degree = 0;
            if (!e.coefficient.homogeneous_degree(coeff_degree))
                throw Error("FreeOIComplex: coefficient is not homogeneous");
            if (!e.coefficient.is_zero() && coeff_degree != src.degree - dst.degree)
                throw Error("FreeOIComplex: coefficient degree breaks homogeneity");
            for (const auto& term : e.coefficient.terms()) {
                if (term.monomial.width() != src.width)
                    throw Error("FreeOIComplex: coefficient lives in the wrong width");
                if (term.monomial.max_row() > signature_.rows)
                    throw Error("FreeOIComplex: coefficient uses a row beyond the signature");
            }
        }
    }
}

std::size_t FreeOIComplex::total_rank() const {
    std::size_t total = 0;
    for (const auto& level : levels_)
        total += level.size();
    return total;
}

int FreeOIComplex::max_generator_width() const {
    int w = 0;
    for (const auto& level : levels_)
        for (const auto& g : level)
            w = std::max(w, g.width);
    return w;
}

void FreeOIComplex::validate(int width_cap) const {
    for (int w = 0; w <= width_cap; ++w) {
        const GradedFreeComplex evaluated = evaluate_at_width(*this, w);
        const DSquaredReport report = verify_d_squared(evaluated);
        if (!report.pass)
            throw Error("FreeOIComplex: d^2 != 0 at width " + std::to_string(w) + ": " +
                        report.first_violation);
    }
}

namespace {

bool entry_sorted_before(const CoefficientEntry& a, const CoefficientEntry& b) {
    return std::tuple(a.source, a.target, a.epsilon) < std::tuple(b.source, b.target, b.epsilon);
}

/// Canonical entry list: sorted, epsilon-duplicates merged, zeros dropped.
std::vector<CoefficientEntry> normalize_entries(std::vector<CoefficientEntry> entries) {
    std::sort(entries.begin(), entries.end(), entry_sorted_before);
    std::vector<CoefficientEntry> out;
    for (CoefficientEntry& e : entries) {
        if (!out.empty() && out.back().source == e.source && out.back().target == e.target &&
            out.back().epsilon == e.epsilon) {
            out.back().coefficient += e.coefficient;
        } else {
            out.push_back(std::move(e));
        }
    }
    std::erase_if(out, [](const CoefficientEntry& e) { return e.coefficient.is_zero(); });
    return out;
}

} // namespace

bool is_minimal_map(const FreeOIComplex& cplx, int map_index) {
    for (const CoefficientEntry& e : cplx.maps()[static_cast<std::size_t>(map_index)])
        if (e.epsilon.is_identity() && e.coefficient.constant_term() != 0)
            return false;
    return true;
}

bool is_minimal(const FreeOIComplex& cplx) {
    for (std::size_t i = 0; i < cplx.maps().size(); ++i)
        if (!is_minimal_map(cplx, static_cast<int>(i)))
            return false;
    return true;
}

bool is_widthwise_minimal_map(const FreeOIComplex& cplx, int map_index) {
    for (const CoefficientEntry& e : cplx.maps()[static_cast<std::size_t>(map_index)])
        if (e.coefficient.constant_term() != 0)
            return false;
    return true;
}

bool is_widthwise_minimal(const FreeOIComplex& cplx) {
    for (std::size_t i = 0; i < cplx.maps().size(); ++i)
        if (!is_widthwise_minimal_map(cplx, static_cast<int>(i)))
            return false;
    return true;
}

namespace {

std::optional<TrivialPair> first_pair_in_map(const FreeOIComplex& cplx, int level) {
    const auto entries = normalize_entries(cplx.maps()[static_cast<std::size_t>(level - 1)]);
    for (const CoefficientEntry& e : entries)
        if (e.epsilon.is_identity() && e.coefficient.constant_term() != 0)
            return TrivialPair{level, e.source, e.target};
    return std::nullopt;
}

} // namespace

std::optional<TrivialPair> find_trivial_pair(const FreeOIComplex& cplx) {
    for (int level = 1; level < cplx.num_levels(); ++level)
        if (auto pair = first_pair_in_map(cplx, level))
            return pair;
    return std::nullopt;
}

std::optional<std::pair<TrivialPair, FreeOIComplex>> split_trivial_summand(const FreeOIComplex& cplx,
                                                                           int level) {
    if (level < 1 || level >= cplx.num_levels())
        throw Error("split_trivial_summand: level out of range");
    const auto pair = first_pair_in_map(cplx, level);
    if (!pair)
        return std::nullopt;
    const int s = pair->source;
    const int t = pair->target;
    const std::size_t map_index = static_cast<std::size_t>(level - 1);

    const auto phi = normalize_entries(cplx.maps()[map_index]);
    std::int64_t a = 0;
    for (const CoefficientEntry& e : phi)
        if (e.source == s && e.target == t && e.epsilon.is_identity())
            a = e.coefficient.constant_term();
    if (a != 1 && a != -1)
        throw Error("split_trivial_summand: unit coefficient " + std::to_string(a) +
                    " is not +-1; non-integral basis changes are not supported");
    const std::int64_t a_inv = a; // +-1 is its own inverse

    // phi(f_s) minus the unit summand: the terms folded into other sources.
    std::vector<CoefficientEntry> residual;
    for (const CoefficientEntry& e : phi)
        if (e.source == s && !(e.target == t && e.epsilon.is_identity()))
            residual.push_back(e);

    // New map out of `level`: drop the split pair's row and column, fold the
    // residual through every entry that used to hit g_t.
    std::vector<CoefficientEntry> new_phi;
    for (const CoefficientEntry& e : phi) {
        if (e.source == s || e.target == t)
            continue;
        new_phi.push_back(e);
    }
    for (const CoefficientEntry& hit : phi) {
        if (hit.source == s || hit.target != t)
            continue;
        for (const CoefficientEntry& r : residual) {
            CoefficientEntry folded;
            folded.source = hit.source;
            folded.target = r.target;
            folded.epsilon = compose(hit.epsilon, r.epsilon);
            folded.coefficient =
                (hit.coefficient * act(hit.epsilon, r.coefficient)).scaled(-a_inv);
            new_phi.push_back(std::move(folded));
        }
    }

    // Map into `level`: the f_s-coordinate must cancel after the basis
    // change; everything else is untouched.
    std::vector<CoefficientEntry> new_psi;
    if (level < cplx.num_levels() - 1) {
        const auto psi = normalize_entries(cplx.maps()[map_index + 1]);
        std::map<std::pair<int, OIMorphism>, MonomialSum> cancellation;
        for (const CoefficientEntry& e : psi) {
            if (e.target == s) {
                cancellation[{e.source, e.epsilon}] += e.coefficient;
            } else {
                new_psi.push_back(e);
                for (const CoefficientEntry& hit : phi) {
                    if (hit.source != e.target || hit.target != t)
                        continue;
                    cancellation[{e.source, compose(e.epsilon, hit.epsilon)}] +=
                        (e.coefficient * act(e.epsilon, hit.coefficient)).scaled(a_inv);
                }
            }
        }
        for (const auto& [key, value] : cancellation)
            if (!value.is_zero())
                throw std::logic_error(
                    "split_trivial_summand: source coordinate fails to cancel; d^2 != 0?");
    }

    // Rebuild levels and reindex.
    std::vector<std::vector<FreeComplexGenerator>> levels = cplx.levels();
    std::vector<std::vector<CoefficientEntry>> maps = cplx.maps();
    auto drop_index = [](int index, int removed) { return index > removed ? index - 1 : index; };

    levels[static_cast<std::size_t>(level)].erase(levels[static_cast<std::size_t>(level)].begin() + s);
    levels[map_index].erase(levels[map_index].begin() + t);

    for (CoefficientEntry& e : new_phi) {
        e.source = drop_index(e.source, s);
        e.target = drop_index(e.target, t);
    }
    maps[map_index] = normalize_entries(std::move(new_phi));

    if (level < cplx.num_levels() - 1) {
        for (CoefficientEntry& e : new_psi)
            e.target = drop_index(e.target, s);
        maps[map_index + 1] = normalize_entries(std::move(new_psi));
    }
    if (map_index > 0) {
        std::vector<CoefficientEntry> below;
        for (const CoefficientEntry& e : cplx.maps()[map_index - 1]) {
            if (e.source == t)
                continue; // the replaced generator maps to zero and is gone
            CoefficientEntry copy = e;
            copy.source = drop_index(copy.source, t);
            below.push_back(std::move(copy));
        }
        maps[map_index - 1] = normalize_entries(std::move(below));
    }

    return std::pair(*pair, FreeOIComplex(cplx.signature(), std::move(levels), std::move(maps)));
}

FreeOIComplex minimize(const FreeOIComplex& cplx) {
    FreeOIComplex current = cplx;
    while (auto pair = find_trivial_pair(current)) {
        auto split = split_trivial_summand(current, pair->level);
        if (!split)
            throw std::logic_error("minimize: reported pair failed to split");
        current = std::move(split->second);
    }
    return current;
}

GradedFreeComplex evaluate_at_width(const FreeOIComplex& cplx, int w) {
    check_width_limit(w, "evaluate_at_width");
    GradedFreeComplex out;
    out.width = w;
    out.signature = cplx.signature();

    // Basis of level i: (generator j, pi) with pi in Hom(width_j, w),
    // ordered by generator then lexicographically by pi.
    struct LevelBasis {
        std::vector<int> offsets;                    // per generator
        std::vector<std::map<OIMorphism, int>> maps; // pi -> position within the generator block
        int total = 0;
    };
    std::vector<LevelBasis> bases;
    for (int lvl = 0; lvl < cplx.num_levels(); ++lvl) {
        LevelBasis basis;
        std::vector<ComplexGenerator> gens;
        for (const FreeComplexGenerator& g : cplx.levels()[static_cast<std::size_t>(lvl)]) {
            basis.offsets.push_back(basis.total);
            std::map<OIMorphism, int> index;
            for (const OIMorphism& pi : enumerate_morphisms(g.width, w)) {
                gens.push_back(ComplexGenerator{
                    g.degree, std::to_string(basis.offsets.size() - 1) + ":" + pi.str(),
                    std::nullopt});
                index.emplace(pi, static_cast<int>(index.size()));
            }
            basis.total += static_cast<int>(index.size());
            basis.maps.push_back(std::move(index));
        }
        out.levels.push_back(std::move(gens));
        bases.push_back(std::move(basis));
    }

    for (std::size_t i = 0; i < cplx.maps().size(); ++i) {
        SparseMatrix m(bases[i].total, bases[i + 1].total);
        for (const CoefficientEntry& e : cplx.maps()[i]) {
            for (const auto& [pi, pos] : bases[i + 1].maps[static_cast<std::size_t>(e.source)]) {
                const OIMorphism rho = compose(pi, e.epsilon);
                const int row = bases[i].offsets[static_cast<std::size_t>(e.target)] +
                                bases[i].maps[static_cast<std::size_t>(e.target)].at(rho);
                const int col = bases[i + 1].offsets[static_cast<std::size_t>(e.source)] + pos;
                m.add(row, col, act(pi, e.coefficient));
            }
        }
        out.maps.push_back(std::move(m));
    }
    return out;
}

FreeOIComplex direct_sum(const FreeOIComplex& cplx, const FreeOIComplex& other) {
    if (!(cplx.signature() == other.signature()))
        throw Error("direct_sum: signature mismatch");
    const int num_levels = std::max(cplx.num_levels(), other.num_levels());
    std::vector<std::vector<FreeComplexGenerator>> levels(static_cast<std::size_t>(num_levels));
    std::vector<std::vector<CoefficientEntry>> maps(static_cast<std::size_t>(num_levels) - 1);
    std::vector<int> offsets(static_cast<std::size_t>(num_levels), 0);
    for (int lvl = 0; lvl < num_levels; ++lvl) {
        if (lvl < cplx.num_levels()) {
            const auto& gens = cplx.levels()[static_cast<std::size_t>(lvl)];
            levels[static_cast<std::size_t>(lvl)] = gens;
            offsets[static_cast<std::size_t>(lvl)] = static_cast<int>(gens.size());
        }
        if (lvl < other.num_levels())
            for (const FreeComplexGenerator& g : other.levels()[static_cast<std::size_t>(lvl)])
                levels[static_cast<std::size_t>(lvl)].push_back(g);
    }
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(num_levels); ++i) {
        if (i < cplx.maps().size())
            maps[i] = cplx.maps()[i];
        if (i < other.maps().size()) {
            for (CoefficientEntry e : other.maps()[i]) {
                e.source += offsets[i + 1];
                e.target += offsets[i];
                maps[i].push_back(std::move(e));
            }
        }
    }
    return FreeOIComplex(cplx.signature(), std::move(levels), std::move(maps));
}

FreeOIComplex trivial_complex(const AlgebraSignature& signature, int level, int width, int degree) {
    if (level < 1)
        throw Error("trivial_complex: source level must be >= 1");
    std::vector<std::vector<FreeComplexGenerator>> levels(static_cast<std::size_t>(level) + 1);
    std::vector<std::vector<CoefficientEntry>> maps(static_cast<std::size_t>(level));
    levels[static_cast<std::size_t>(level)].push_back({width, degree});
    levels[static_cast<std::size_t>(level - 1)].push_back({width, degree});
    maps[static_cast<std::size_t>(level - 1)].push_back(
        {0, 0, OIMorphism::identity(width), MonomialSum::constant(width, 1)});
    return FreeOIComplex(signature, std::move(levels), std::move(maps));
}

} // namespace oir
