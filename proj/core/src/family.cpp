#include "oir/family.hpp"

#include <algorithm>

namespace oir {

FlatOIFamily::FlatOIFamily(MonomialOIIdeal ideal, int width_cap)
    : ideal_(std::move(ideal)), width_cap_(width_cap) {
    if (width_cap_ < 0)
        throw Error("FlatOIFamily: negative width cap");
    mode_ = ideal_.signature().rows == 1 ? BoxMode::Squarefree : BoxMode::Ferrers;
}

void FlatOIFamily::materialize(int w) {
    if (w < 0 || w > width_cap_)
        throw Error("FlatOIFamily: width " + std::to_string(w) + " outside [0, cap " +
                    std::to_string(width_cap_) + "]");
    if (widths_.count(w))
        return;
    WidthData data;
    if (w < ideal_.gen_width()) {
        data.complex = trivial_quotient_complex(w, ideal_.signature());
    } else {
        const std::vector<Monomial> gens = ideal_.expand(w);
        data.box = BoxComplex::build(gens, mode_);
        data.complex = cellular_resolution(*data.box, gens);
        data.complex.signature = ideal_.signature();
        for (const auto& dim_faces : data.box->faces_by_dim()) {
            std::map<BoxFace, int> index;
            for (const BoxFace& face : dim_faces)
                index.emplace(face, static_cast<int>(index.size()));
            data.face_index.push_back(std::move(index));
        }
    }
    widths_.emplace(w, std::move(data));
}

void FlatOIFamily::materialize_up_to(int w) {
    for (int v = 0; v <= w; ++v)
        materialize(v);
}

bool FlatOIFamily::materialized(int w) const { return widths_.count(w) > 0; }

const FlatOIFamily::WidthData& FlatOIFamily::width_data(int w) const {
    auto it = widths_.find(w);
    if (it == widths_.end())
        throw Error("FlatOIFamily: width " + std::to_string(w) + " not materialized");
    return it->second;
}

const GradedFreeComplex& FlatOIFamily::complex_at(int w) const { return width_data(w).complex; }

const BoxComplex* FlatOIFamily::box_complex_at(int w) const {
    const WidthData& data = width_data(w);
    return data.box ? &*data.box : nullptr;
}

int FlatOIFamily::top_level() const {
    int top = 0;
    for (const auto& [w, data] : widths_)
        top = std::max(top, data.complex.num_levels() - 1);
    return top;
}

std::size_t FlatOIFamily::level_rank(int level, int w) const {
    const GradedFreeComplex& cplx = complex_at(w);
    if (level >= cplx.num_levels())
        return 0;
    return cplx.rank(level);
}

SparseMatrix FlatOIFamily::induced_map(int level, const OIMorphism& eps) const {
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = induced_memo_.find({level, eps});
        if (it != induced_memo_.end())
            return it->second;
    }
    const int w = eps.source_width();
    const int w_target = eps.target_width();
    if (level < 0 || level > top_level())
        throw Error("induced_map: level out of range");

    SparseMatrix m(static_cast<int>(level_rank(level, w_target)),
                   static_cast<int>(level_rank(level, w)));
    if (level == 0) {
        m.add(0, 0, MonomialSum::constant(w_target, 1));
    } else {
        const WidthData& src = width_data(w);
        const WidthData& dst = width_data(w_target);
        const std::size_t dim = static_cast<std::size_t>(level - 1);
        if (src.box && dim < src.box->faces_by_dim().size()) {
            const auto& faces = src.box->faces_by_dim()[dim];
            for (std::size_t col = 0; col < faces.size(); ++col) {
                const BoxFace image = act_on_face(eps, faces[col]);
                if (!dst.box || dim >= dst.face_index.size() || !dst.face_index[dim].count(image))
                    throw std::logic_error("induced_map: image face " + image.str() +
                                           " missing from width " + std::to_string(w_target));
                m.add(dst.face_index[dim].at(image), static_cast<int>(col),
                      MonomialSum::constant(w_target, 1));
            }
        }
    }
    std::lock_guard<std::mutex> lock(memo_mutex_);
    return induced_memo_.emplace(std::pair(level, eps), std::move(m)).first->second;
}

std::string naturality_square_failure(const SparseMatrix& src_map, const SparseMatrix& dst_map,
                                      const SparseMatrix& lower, const SparseMatrix& upper,
                                      const OIMorphism& eps) {
    for (int col = 0; col < src_map.cols(); ++col) {
        std::map<int, MonomialSum> lhs;
        for (const auto& [row, value] : src_map.column(col)) {
            for (const auto& [target_row, unit] : lower.column(row)) {
                (void)unit;
                lhs[target_row] += act(eps, *value);
            }
        }
        std::map<int, MonomialSum> rhs;
        for (const auto& [image_row, unit] : upper.column(col)) {
            (void)unit;
            for (const auto& [row, value] : dst_map.column(image_row))
                rhs[row] += *value;
        }
        std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
        std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
        if (lhs != rhs)
            return "column " + std::to_string(col) + " under eps " + eps.str();
    }
    return {};
}

NaturalityReport FlatOIFamily::verify_naturality(int max_w) const {
    NaturalityReport report;
    for (int w = 0; w < max_w; ++w) {
        const GradedFreeComplex& src = complex_at(w);
        const GradedFreeComplex& dst = complex_at(w + 1);
        for (const OIMorphism& eps : enumerate_morphisms(w, w + 1)) {
            for (std::size_t i = 0; i < src.maps.size(); ++i) {
                const SparseMatrix lower = induced_map(static_cast<int>(i), eps);
                const SparseMatrix upper = induced_map(static_cast<int>(i) + 1, eps);
                const std::string failure =
                    naturality_square_failure(src.maps[i], dst.maps[i], lower, upper, eps);
                report.squares_checked += src.maps[i].cols();
                if (!failure.empty()) {
                    report.pass = false;
                    if (report.first_failure.empty())
                        report.first_failure = "width " + std::to_string(w) + ", level " +
                                               std::to_string(i + 1) + ": " + failure;
                }
            }
        }
    }
    return report;
}

namespace {

SparseMatrix multiply_induced(const SparseMatrix& outer, const SparseMatrix& inner,
                              const OIMorphism& outer_eps) {
    SparseMatrix out(outer.rows(), inner.cols());
    for (int col = 0; col < inner.cols(); ++col) {
        for (const auto& [mid, inner_value] : inner.column(col)) {
            const MonomialSum pushed = act(outer_eps, *inner_value);
            for (const auto& [row, outer_value] : outer.column(mid))
                out.add(row, col, (*outer_value) * pushed);
        }
    }
    return out;
}

} // namespace

bool FlatOIFamily::verify_functor_laws(int level, const OIMorphism& outer,
                                       const OIMorphism& inner) const {
    if (inner.target_width() != outer.source_width())
        throw Error("verify_functor_laws: morphisms are not composable");
    const SparseMatrix composite = induced_map(level, compose(outer, inner));
    const SparseMatrix product =
        multiply_induced(induced_map(level, outer), induced_map(level, inner), outer);
    if (!(composite == product))
        return false;
    // Identity law at both ends.
    const auto check_identity = [&](int w) {
        const SparseMatrix id = induced_map(level, OIMorphism::identity(w));
        const int n = static_cast<int>(level_rank(level, w));
        if (id.rows() != n || id.cols() != n)
            return false;
        if (static_cast<int>(id.cells().size()) != n)
            return false;
        for (const auto& [pos, value] : id.cells())
            if (pos.first != pos.second || value.constant_term() != 1 || value.terms().size() != 1)
                return false;
        return true;
    };
    return check_identity(inner.source_width()) && check_identity(outer.target_width());
}

bool FlatOIFamily::is_new_generator(const BoxFace& face, int w) const {
    const std::vector<int> support = face.support();
    if (static_cast<int>(support.size()) == w)
        return true; // nothing outside the support to skip
    const WidthData* below = widths_.count(w - 1) ? &width_data(w - 1) : nullptr;
    const std::size_t dim = static_cast<std::size_t>(face.dimension());
    for (int j = 1; j <= w; ++j) {
        if (std::binary_search(support.begin(), support.end(), j))
            continue;
        if (!below || !below->box || dim >= below->face_index.size())
            continue;
        BoxFace pre;
        pre.blocks.reserve(face.blocks.size());
        for (const auto& block : face.blocks) {
            std::vector<int> mapped;
            mapped.reserve(block.size());
            for (int v : block)
                mapped.push_back(v > j ? v - 1 : v);
            pre.blocks.push_back(std::move(mapped));
        }
        if (below->face_index[dim].count(pre))
            return false; // reachable from width w-1 through the skip-j morphism
    }
    return true;
}

std::vector<std::pair<int, std::int64_t>> FlatOIFamily::generator_widths(int level, int max_w) const {
    if (level == 0)
        return {{0, 1}};
    std::vector<std::pair<int, std::int64_t>> out;
    for (int w = ideal_.gen_width(); w <= max_w; ++w) {
        const WidthData& data = width_data(w);
        const std::size_t dim = static_cast<std::size_t>(level - 1);
        if (!data.box || dim >= data.box->faces_by_dim().size())
            continue;
        std::int64_t count = 0;
        for (const BoxFace& face : data.box->faces_by_dim()[dim])
            if (is_new_generator(face, w))
                ++count;
        if (count > 0)
            out.emplace_back(w, count);
    }
    return out;
}

bool FlatOIFamily::generators_stabilized(int level, int max_w) const {
    const auto counts = generator_widths(level, max_w);
    return counts.empty() || counts.back().first < max_w;
}

LevelClassification FlatOIFamily::classify_level(int level, int max_w) const {
    std::vector<std::int64_t> ranks;
    ranks.reserve(static_cast<std::size_t>(max_w) + 1);
    for (int w = 0; w <= max_w; ++w)
        ranks.push_back(static_cast<std::int64_t>(level_rank(level, w)));
    const FreenessResult result = shape_from_rank_sequence(ranks, max_w);
    LevelClassification out;
    out.examined_width = max_w;
    switch (result.kind) {
    case FreenessResult::Kind::Free:
        out.kind = LevelClassification::Kind::Free;
        out.shape = result.shape;
        break;
    case FreenessResult::Kind::NotFree:
        out.kind = LevelClassification::Kind::FlatNotFree;
        break;
    case FreenessResult::Kind::InsufficientData:
        out.kind = LevelClassification::Kind::InsufficientData;
        break;
    }
    return out;
}

} // namespace oir
