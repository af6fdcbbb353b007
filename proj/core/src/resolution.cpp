#include "oir/resolution.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "oir/fp_linalg.hpp"

namespace oir {

void SparseMatrix::add(int row, int col, const MonomialSum& value) {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
        throw Error("SparseMatrix: position out of range");
    if (value.is_zero())
        return;
    auto [it, inserted] = cells_.try_emplace({col, row}, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero())
            cells_.erase(it);
    }
}

MonomialSum SparseMatrix::at(int row, int col) const {
    auto it = cells_.find({col, row});
    return it == cells_.end() ? MonomialSum::zero() : it->second;
}

std::vector<std::pair<int, const MonomialSum*>> SparseMatrix::column(int col) const {
    std::vector<std::pair<int, const MonomialSum*>> out;
    auto lo = cells_.lower_bound({col, INT_MIN});
    auto hi = cells_.lower_bound({col + 1, INT_MIN});
    for (auto it = lo; it != hi; ++it)
        out.emplace_back(it->first.second, &it->second);
    return out;
}

int GradedFreeComplex::top_generator_degree() const {
    int top = 0;
    for (const auto& level : levels)
        for (const auto& g : level)
            top = std::max(top, g.degree);
    return top;
}

bool GradedFreeComplex::has_multidegrees() const {
    for (const auto& level : levels)
        for (const auto& g : level)
            if (!g.multidegree)
                return false;
    return true;
}

GradedFreeComplex cellular_resolution(const BoxComplex& complex, const std::vector<Monomial>& gens) {
    if (gens.size() != complex.generator_vertices().size())
        throw Error("cellular_resolution: generator count does not match the complex vertex set");
    GradedFreeComplex out;
    out.width = complex.width();
    out.signature =
        AlgebraSignature(complex.mode() == BoxMode::Ferrers ? complex.block_count() : 1, 2);
    out.quotient_generators = gens;

    out.levels.push_back({ComplexGenerator{0, "1", Monomial::one(out.width)}});
    std::vector<std::map<BoxFace, int>> index_by_dim;
    for (const auto& dim_faces : complex.faces_by_dim()) {
        std::vector<ComplexGenerator> level;
        std::map<BoxFace, int> index;
        for (const BoxFace& face : dim_faces) {
            index[face] = static_cast<int>(level.size());
            Monomial label_monomial = complex.vertex_monomial(face);
            level.push_back(
                ComplexGenerator{label_monomial.degree(), face.str(), std::move(label_monomial)});
        }
        out.levels.push_back(std::move(level));
        index_by_dim.push_back(std::move(index));
    }

    for (int i = 0; i + 1 < out.num_levels(); ++i) {
        SparseMatrix m(static_cast<int>(out.rank(i)), static_cast<int>(out.rank(i + 1)));
        const auto& faces = complex.faces_by_dim()[static_cast<std::size_t>(i)];
        for (std::size_t col = 0; col < faces.size(); ++col) {
            if (i == 0) {
                // Augmentation row: each vertex maps to its monomial.
                m.add(0, static_cast<int>(col),
                      MonomialSum(1, complex.vertex_monomial(faces[col])));
            } else {
                for (const auto& [sign, ratio, sub] : complex.boundary(faces[col])) {
                    const int row = index_by_dim[static_cast<std::size_t>(i - 1)].at(sub);
                    m.add(row, static_cast<int>(col), MonomialSum(sign, ratio));
                }
            }
        }
        out.maps.push_back(std::move(m));
    }
    return out;
}

GradedFreeComplex trivial_quotient_complex(int width, const AlgebraSignature& signature) {
    GradedFreeComplex out;
    out.width = width;
    out.signature = signature;
    out.levels.push_back({ComplexGenerator{0, "1", Monomial::one(width)}});
    out.quotient_generators = std::vector<Monomial>{};
    return out;
}

DSquaredReport verify_d_squared(const GradedFreeComplex& cplx) {
    for (std::size_t i = 0; i + 1 < cplx.maps.size(); ++i) {
        const SparseMatrix& inner = cplx.maps[i];      // level i+1 -> level i
        const SparseMatrix& outer = cplx.maps[i + 1];  // level i+2 -> level i+1
        for (int col = 0; col < outer.cols(); ++col) {
            std::map<int, MonomialSum> acc;
            for (const auto& [mid, v2] : outer.column(col))
                for (const auto& [row, v1] : inner.column(mid))
                    acc[row] += (*v1) * (*v2);
            for (const auto& [row, value] : acc) {
                if (!value.is_zero()) {
                    std::ostringstream os;
                    os << "d_" << i + 1 << " o d_" << i + 2 << " at (row " << row << ", col " << col
                       << "): " << value.str();
                    return DSquaredReport{false, os.str()};
                }
            }
        }
    }
    return DSquaredReport{};
}

bool verify_homogeneous(const GradedFreeComplex& cplx) {
    for (std::size_t i = 0; i < cplx.maps.size(); ++i) {
        for (const auto& [pos, value] : cplx.maps[i].cells()) {
            const auto& [col, row] = pos;
            const int expected = cplx.levels[i + 1][static_cast<std::size_t>(col)].degree -
                                 cplx.levels[i][static_cast<std::size_t>(row)].degree;
            for (const auto& term : value.terms())
                if (term.monomial.degree() != expected)
                    return false;
        }
    }
    return true;
}

bool verify_minimal_width(const GradedFreeComplex& cplx) {
    for (const SparseMatrix& m : cplx.maps)
        for (const auto& [pos, value] : m.cells())
            if (value.constant_term() != 0)
                return false;
    return true;
}

std::int64_t polynomial_space_dim(int rows, int width, int k) {
    if (k < 0)
        return 0;
    const int nvars = rows * width;
    if (nvars == 0)
        return k == 0 ? 1 : 0;
    return static_cast<std::int64_t>(binomial(k + nvars - 1, nvars - 1));
}

std::vector<Monomial> monomials_of_degree(int rows, int width, int degree) {
    std::vector<Monomial> out;
    const int nvars = rows * width;
    if (degree < 0 || (nvars == 0 && degree > 0))
        return out;
    std::vector<Monomial::Entry> current;
    auto rec = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == nvars) {
            if (remaining == 0)
                out.emplace_back(width, current);
            return;
        }
        // Last slot takes whatever remains; earlier slots pick 0..remaining.
        for (int e = 0; e <= remaining; ++e) {
            if (e > 0)
                current.push_back({slot / width + 1, slot % width + 1, e});
            self(self, slot + 1, remaining - e);
            if (e > 0)
                current.pop_back();
        }
    };
    rec(rec, 0, degree);
    return out;
}

namespace {

struct BlockDims {
    std::vector<std::int64_t> dims;  // per level
    std::vector<std::int64_t> ranks; // per map
};

std::vector<std::int64_t> expected_coker_dims(const GradedFreeComplex& cplx, int degree_bound) {
    const std::vector<Monomial>& gens = *cplx.quotient_generators;
    std::vector<std::int64_t> expected(static_cast<std::size_t>(degree_bound) + 1, 0);
    if (gens.size() <= 20) {
        const std::vector<std::int64_t> numerator = hilbert_numerator(gens, cplx.width, degree_bound);
        for (int t = 0; t <= degree_bound; ++t)
            for (int s = 0; s <= t; ++s)
                expected[static_cast<std::size_t>(t)] +=
                    numerator[static_cast<std::size_t>(s)] *
                    polynomial_space_dim(cplx.signature.rows, cplx.width, t - s);
    } else {
        // Standard-monomial count by direct enumeration.
        for (int t = 0; t <= degree_bound; ++t) {
            for (const Monomial& m : monomials_of_degree(cplx.signature.rows, cplx.width, t)) {
                bool in_ideal = false;
                for (const Monomial& g : gens)
                    if (divides(g, m)) {
                        in_ideal = true;
                        break;
                    }
                if (!in_ideal)
                    ++expected[static_cast<std::size_t>(t)];
            }
        }
    }
    return expected;
}

bool fine_path_applicable(const GradedFreeComplex& cplx) {
    if (!cplx.has_multidegrees())
        return false;
    if (cplx.levels.empty() || cplx.levels[0].size() != 1 || !cplx.levels[0][0].multidegree->is_one())
        return false;
    for (std::size_t i = 0; i < cplx.maps.size(); ++i) {
        for (const auto& [pos, value] : cplx.maps[i].cells()) {
            if (!value.is_single_term())
                return false;
            const auto& [col, row] = pos;
            const Monomial& col_deg = *cplx.levels[i + 1][static_cast<std::size_t>(col)].multidegree;
            const Monomial& row_deg = *cplx.levels[i][static_cast<std::size_t>(row)].multidegree;
            if (!divides(row_deg, col_deg) ||
                !(value.terms()[0].monomial == divide(col_deg, row_deg)))
                return false;
        }
    }
    return true;
}

void exactness_fine(const GradedFreeComplex& cplx, ExactnessReport& report) {
    const int width = cplx.width;
    const int rows = cplx.signature.rows;
    const int nvars = rows * width;
    const int degree_bound = report.degree_bound;
    const std::uint32_t p = report.prime;
    const int num_levels = cplx.num_levels();

    // Flattened generator list with dense multidegree exponents.
    struct GenInfo {
        int level;
        int index_in_level;
        std::vector<int> exps;
    };
    std::vector<GenInfo> gens;
    std::vector<std::size_t> level_offset(static_cast<std::size_t>(num_levels) + 1, 0);
    for (int lvl = 0; lvl < num_levels; ++lvl) {
        level_offset[static_cast<std::size_t>(lvl)] = gens.size();
        for (std::size_t j = 0; j < cplx.rank(lvl); ++j) {
            std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
            for (const auto& e : cplx.levels[static_cast<std::size_t>(lvl)][j].multidegree->entries())
                exps[static_cast<std::size_t>((e.row - 1) * width + (e.col - 1))] = e.exp;
            gens.push_back({lvl, static_cast<int>(j), std::move(exps)});
        }
    }
    level_offset[static_cast<std::size_t>(num_levels)] = gens.size();

    // Whether every generator above level 1 is divisible by some level-1
    // generator; when true, absence of all level-1 divisors settles an
    // entire multidegree directly.
    const std::size_t level1_begin = num_levels > 1 ? level_offset[1] : gens.size();
    const std::size_t level1_end = num_levels > 2 ? level_offset[2] : gens.size();
    bool hierarchical = true;
    for (std::size_t g = level1_end; g < gens.size() && hierarchical; ++g) {
        bool covered = false;
        for (std::size_t v = level1_begin; v < level1_end && !covered; ++v) {
            bool div = true;
            for (int s = 0; s < nvars && div; ++s)
                div = gens[v].exps[static_cast<std::size_t>(s)] <= gens[g].exps[static_cast<std::size_t>(s)];
            covered = div;
        }
        hierarchical = covered;
    }

    // Integer coefficient column lists for every map.
    struct ColEntry {
        int row;
        std::int64_t coeff;
    };
    std::vector<std::vector<std::vector<ColEntry>>> map_cols(cplx.maps.size());
    for (std::size_t i = 0; i < cplx.maps.size(); ++i) {
        map_cols[i].resize(static_cast<std::size_t>(cplx.maps[i].cols()));
        for (const auto& [pos, value] : cplx.maps[i].cells())
            map_cols[i][static_cast<std::size_t>(pos.first)].push_back(
                {pos.second, value.terms()[0].coeff});
    }

    // Per-degree accumulators.
    std::vector<BlockDims> totals(static_cast<std::size_t>(degree_bound) + 1);
    for (auto& t : totals) {
        t.dims.assign(static_cast<std::size_t>(num_levels), 0);
        t.ranks.assign(cplx.maps.size(), 0);
    }

    std::map<std::vector<std::uint64_t>, BlockDims> memo;
    const std::size_t mask_words = (gens.size() + 63) / 64;

    std::vector<int> alpha(static_cast<std::size_t>(nvars), 0);
    auto process_alpha = [&](int total_degree) {
        BlockDims& acc = totals[static_cast<std::size_t>(total_degree)];
        acc.dims[0] += 1; // the unit multidegree of the level-0 generator always divides

        auto divides_alpha = [&](const GenInfo& g) {
            for (int s = 0; s < nvars; ++s)
                if (g.exps[static_cast<std::size_t>(s)] > alpha[static_cast<std::size_t>(s)])
                    return false;
            return true;
        };

        if (hierarchical && num_levels > 1) {
            bool any = false;
            for (std::size_t v = level1_begin; v < level1_end && !any; ++v)
                any = divides_alpha(gens[v]);
            if (!any)
                return; // only the level-0 block is present
        }

        std::vector<std::uint64_t> mask(mask_words, 0);
        bool any = false;
        for (std::size_t g = level_offset[1]; g < gens.size(); ++g) {
            if (divides_alpha(gens[g])) {
                mask[g / 64] |= 1ull << (g % 64);
                any = true;
            }
        }
        if (!any)
            return;

        auto it = memo.find(mask);
        if (it == memo.end()) {
            BlockDims block;
            block.dims.assign(static_cast<std::size_t>(num_levels), 0);
            block.ranks.assign(cplx.maps.size(), 0);
            block.dims[0] = 0; // level 0 contribution is added unconditionally above
            std::vector<int> local_index(gens.size(), -1);
            std::vector<std::vector<int>> present(static_cast<std::size_t>(num_levels));
            present[0].push_back(0);
            local_index[0] = 0;
            for (std::size_t g = level_offset[1]; g < gens.size(); ++g) {
                if (mask[g / 64] & (1ull << (g % 64))) {
                    local_index[g] = static_cast<int>(present[static_cast<std::size_t>(gens[g].level)].size());
                    present[static_cast<std::size_t>(gens[g].level)].push_back(gens[g].index_in_level);
                    block.dims[static_cast<std::size_t>(gens[g].level)] += 1;
                }
            }
            for (std::size_t i = 0; i < cplx.maps.size(); ++i) {
                std::vector<IntTriplet> triplets;
                const std::size_t src_level = i + 1;
                for (std::size_t cj = 0; cj < present[src_level].size(); ++cj) {
                    const int col_gen = present[src_level][cj];
                    for (const auto& entry : map_cols[i][static_cast<std::size_t>(col_gen)]) {
                        const std::size_t flat_row = level_offset[i] + static_cast<std::size_t>(entry.row);
                        const int local_row = i == 0 ? 0 : local_index[flat_row];
                        if (local_row < 0)
                            throw std::logic_error("exactness: entry row missing from block");
                        triplets.push_back({local_row, static_cast<int>(cj), entry.coeff});
                    }
                }
                const int nrows = i == 0 ? 1 : static_cast<int>(present[i].size());
                block.ranks[i] =
                    rank_mod_p(nrows, static_cast<int>(present[src_level].size()), triplets, p);
            }
            it = memo.emplace(std::move(mask), std::move(block)).first;
        }
        const BlockDims& block = it->second;
        for (std::size_t lvl = 1; lvl < block.dims.size(); ++lvl)
            acc.dims[lvl] += block.dims[lvl];
        for (std::size_t i = 0; i < block.ranks.size(); ++i)
            acc.ranks[i] += block.ranks[i];
    };

    // Enumerate all multidegrees of total degree <= degree_bound.
    auto enumerate = [&](auto&& self, int slot, int used) -> void {
        if (slot == nvars) {
            process_alpha(used);
            return;
        }
        for (int e = 0; used + e <= degree_bound; ++e) {
            alpha[static_cast<std::size_t>(slot)] = e;
            self(self, slot + 1, used + e);
        }
        alpha[static_cast<std::size_t>(slot)] = 0;
    };
    if (nvars == 0)
        process_alpha(0);
    else
        enumerate(enumerate, 0, 0);

    for (int t = 0; t <= degree_bound; ++t) {
        ExactnessDegreeRow row;
        row.degree = t;
        row.level_dims = totals[static_cast<std::size_t>(t)].dims;
        row.diff_ranks = totals[static_cast<std::size_t>(t)].ranks;
        report.rows.push_back(std::move(row));
    }
}

void exactness_coarse(const GradedFreeComplex& cplx, ExactnessReport& report) {
    const int degree_bound = report.degree_bound;
    const std::uint32_t p = report.prime;
    const int num_levels = cplx.num_levels();

    for (int t = 0; t <= degree_bound; ++t) {
        // Monomial index tables for each internal degree showing up at t.
        std::map<int, std::map<Monomial, int>> mono_index;
        auto index_of = [&](int degree, const Monomial& m) {
            return mono_index.at(degree).at(m);
        };
        for (int lvl = 0; lvl < num_levels; ++lvl) {
            for (const auto& g : cplx.levels[static_cast<std::size_t>(lvl)]) {
                const int k = t - g.degree;
                if (k < 0 || mono_index.count(k))
                    continue;
                std::map<Monomial, int> index;
                for (const Monomial& m : monomials_of_degree(cplx.signature.rows, cplx.width, k))
                    index.emplace(m, static_cast<int>(index.size()));
                mono_index.emplace(k, std::move(index));
            }
        }

        // Basis offsets: generator j of a level occupies a contiguous range.
        std::vector<std::vector<int>> offsets(static_cast<std::size_t>(num_levels));
        std::vector<std::int64_t> dims(static_cast<std::size_t>(num_levels), 0);
        for (int lvl = 0; lvl < num_levels; ++lvl) {
            int offset = 0;
            for (const auto& g : cplx.levels[static_cast<std::size_t>(lvl)]) {
                offsets[static_cast<std::size_t>(lvl)].push_back(offset);
                const int k = t - g.degree;
                offset += k < 0 ? 0 : static_cast<int>(mono_index.at(k).size());
            }
            dims[static_cast<std::size_t>(lvl)] = offset;
        }

        ExactnessDegreeRow row;
        row.degree = t;
        row.level_dims = dims;
        for (std::size_t i = 0; i < cplx.maps.size(); ++i) {
            std::vector<IntTriplet> triplets;
            const auto& src_level = cplx.levels[i + 1];
            for (int col_gen = 0; col_gen < static_cast<int>(src_level.size()); ++col_gen) {
                const int k = t - src_level[static_cast<std::size_t>(col_gen)].degree;
                if (k < 0)
                    continue;
                const auto column = cplx.maps[i].column(col_gen);
                int local = 0;
                for (const auto& [m, midx] : mono_index.at(k)) {
                    (void)midx;
                    const int col = offsets[i + 1][static_cast<std::size_t>(col_gen)] + local;
                    ++local;
                    for (const auto& [row_gen, value] : column) {
                        for (const auto& term : value->terms()) {
                            const Monomial target = mul(m, term.monomial);
                            const int row_index =
                                offsets[i][static_cast<std::size_t>(row_gen)] +
                                index_of(target.degree(), target);
                            triplets.push_back({row_index, col, term.coeff});
                        }
                    }
                }
            }
            row.diff_ranks.push_back(rank_mod_p(static_cast<int>(dims[i]),
                                                static_cast<int>(dims[i + 1]), triplets, p));
        }
        report.rows.push_back(std::move(row));
    }
}

} // namespace

ExactnessReport verify_exact_up_to(const GradedFreeComplex& cplx, int degree_bound, std::uint32_t p) {
    if (!is_prime(p))
        throw Error("verify_exact_up_to: " + std::to_string(p) + " is not prime");
    if (degree_bound < cplx.top_generator_degree() + 1)
        throw Error("verify_exact_up_to: degree bound must exceed the top generator degree");

    // Coefficient spaces are indexed over the signature's variable grid.
    const auto check_rows = [&](const Monomial& m, const char* what) {
        if (m.max_row() > cplx.signature.rows)
            throw Error(std::string("verify_exact_up_to: ") + what +
                        " uses a row beyond the signature");
    };
    for (const auto& level : cplx.levels)
        for (const auto& g : level)
            if (g.multidegree)
                check_rows(*g.multidegree, "a multidegree");
    for (const auto& m : cplx.maps)
        for (const auto& [pos, value] : m.cells())
            for (const auto& term : value.terms())
                check_rows(term.monomial, "a differential entry");
    if (cplx.quotient_generators)
        for (const auto& g : *cplx.quotient_generators)
            check_rows(g, "a quotient generator");

    ExactnessReport report;
    report.prime = p;
    report.degree_bound = degree_bound;

    if (fine_path_applicable(cplx))
        exactness_fine(cplx, report);
    else
        exactness_coarse(cplx, report);

    // Derived homology/cokernel data and the pass verdict.
    std::vector<std::int64_t> expected;
    if (cplx.quotient_generators)
        expected = expected_coker_dims(cplx, degree_bound);
    for (auto& row : report.rows) {
        const std::size_t num_maps = row.diff_ranks.size();
        row.coker_dim = row.level_dims[0] - (num_maps > 0 ? row.diff_ranks[0] : 0);
        for (std::size_t lvl = 1; lvl < row.level_dims.size(); ++lvl) {
            const std::int64_t into = row.diff_ranks[lvl - 1];
            const std::int64_t from = lvl < num_maps ? row.diff_ranks[lvl] : 0;
            row.homology_dims.push_back(row.level_dims[lvl] - into - from);
        }
        for (std::size_t lvl = 0; lvl < row.homology_dims.size(); ++lvl) {
            if (row.homology_dims[lvl] != 0 && report.pass) {
                report.pass = false;
                report.failure = "nonzero homology at level " + std::to_string(lvl + 1) +
                                 ", degree " + std::to_string(row.degree);
            }
        }
        if (cplx.quotient_generators) {
            row.expected_coker = expected[static_cast<std::size_t>(row.degree)];
            if (row.coker_dim != row.expected_coker && report.pass) {
                report.pass = false;
                report.failure = "cokernel dimension " + std::to_string(row.coker_dim) +
                                 " != expected " + std::to_string(row.expected_coker) +
                                 " in degree " + std::to_string(row.degree);
            }
        }
    }
    return report;
}

std::string ExactnessReport::to_text() const {
    std::ostringstream os;
    os << "exactness mod " << prime << " through degree " << degree_bound << ": "
       << (pass ? "pass" : "FAIL " + failure) << "\n";
    os << "degree | dims | ranks | homology | coker (expected)\n";
    for (const auto& row : rows) {
        os << row.degree << " |";
        for (auto v : row.level_dims)
            os << " " << v;
        os << " |";
        for (auto v : row.diff_ranks)
            os << " " << v;
        os << " |";
        for (auto v : row.homology_dims)
            os << " " << v;
        os << " | " << row.coker_dim;
        if (row.expected_coker >= 0)
            os << " (" << row.expected_coker << ")";
        os << "\n";
    }
    return os.str();
}

std::map<std::pair<int, int>, std::int64_t> betti_table(const GradedFreeComplex& cplx) {
    std::map<std::pair<int, int>, std::int64_t> table;
    for (int lvl = 0; lvl < cplx.num_levels(); ++lvl)
        for (const auto& g : cplx.levels[static_cast<std::size_t>(lvl)])
            ++table[{lvl, g.degree}];
    return table;
}

std::string betti_table_text(const std::map<std::pair<int, int>, std::int64_t>& table) {
    std::ostringstream os;
    os << "level degree rank\n";
    for (const auto& [key, count] : table)
        os << key.first << " " << key.second << " " << count << "\n";
    return os.str();
}

} // namespace oir
