#include "oir/box_complex.hpp"

#include <algorithm>

namespace oir {

int BoxFace::dimension() const {
    int dim = 0;
    for (const auto& block : blocks)
        dim += static_cast<int>(block.size()) - 1;
    return dim;
}

std::vector<int> BoxFace::support() const {
    std::vector<int> out;
    for (const auto& block : blocks)
        out.insert(out.end(), block.begin(), block.end());
    std::sort(out.begin(), out.end());
    return out;
}

Tuple BoxFace::top_vertex() const {
    Tuple t;
    t.reserve(blocks.size());
    for (const auto& block : blocks)
        t.push_back(block.back());
    return t;
}

std::vector<Tuple> BoxFace::vertices() const {
    std::vector<Tuple> out;
    Tuple current;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == blocks.size()) {
            out.push_back(current);
            return;
        }
        for (int v : blocks[i]) {
            current.push_back(v);
            self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::string BoxFace::str() const {
    std::string out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i > 0)
            out += "x";
        for (int v : blocks[i])
            out += std::to_string(v);
    }
    return out;
}

BoxFace act_on_face(const OIMorphism& eps, const BoxFace& face) {
    BoxFace out;
    out.blocks.reserve(face.blocks.size());
    for (const auto& block : face.blocks) {
        std::vector<int> image;
        image.reserve(block.size());
        for (int v : block)
            image.push_back(eps(v));
        out.blocks.push_back(std::move(image));
    }
    return out;
}

BoxComplex BoxComplex::build(const std::vector<Monomial>& gens, BoxMode mode) {
    if (gens.empty())
        throw Error("BoxComplex: empty generating set");
    const int w = gens.front().width();
    check_width_limit(w, "BoxComplex::build");

    BoxComplex complex;
    complex.width_ = w;
    complex.mode_ = mode;
    complex.block_count_ = gens.front().degree();

    if (mode == BoxMode::Squarefree) {
        if (!is_squarefree_strongly_stable(gens, w))
            throw Error("BoxComplex: generators are not squarefree strongly stable");
        for (const Monomial& g : gens)
            complex.vertices_.insert(tuple_from_squarefree(g));
    } else {
        if (!is_ferrers(gens, w))
            throw Error("BoxComplex: generators are not a Ferrers generating set");
        for (const Monomial& g : gens)
            complex.vertices_.insert(tuple_from_ferrers(g));
    }

    const int d = complex.block_count_;

    // Candidate boxes are subsets of [w] split into d consecutive nonempty
    // blocks; any other block arrangement has a non-increasing vertex.
    std::vector<std::vector<BoxFace>> faces;
    for (unsigned mask = 1; mask < (1u << w); ++mask) {
        std::vector<int> support;
        for (int v = 1; v <= w; ++v)
            if (mask & (1u << (v - 1)))
                support.push_back(v);
        const int m = static_cast<int>(support.size());
        if (m < d)
            continue;
        // Compositions of m into d positive parts, as cut positions.
        std::vector<int> sizes(static_cast<std::size_t>(d), 1);
        sizes.back() = m - d + 1;
        auto emit = [&](const std::vector<int>& parts) {
            BoxFace face;
            int offset = 0;
            for (int len : parts) {
                face.blocks.emplace_back(support.begin() + offset, support.begin() + offset + len);
                offset += len;
            }
            for (const Tuple& t : face.vertices())
                if (!complex.vertices_.count(t))
                    return;
            const int dim = face.dimension();
            if (dim >= static_cast<int>(faces.size()))
                faces.resize(static_cast<std::size_t>(dim) + 1);
            faces[static_cast<std::size_t>(dim)].push_back(std::move(face));
        };
        // Enumerate compositions recursively.
        std::vector<int> parts;
        auto rec = [&](auto&& self, int pos, int remaining) -> void {
            if (pos == d - 1) {
                parts.push_back(remaining);
                emit(parts);
                parts.pop_back();
                return;
            }
            for (int len = 1; remaining - len >= d - 1 - pos; ++len) {
                parts.push_back(len);
                self(self, pos + 1, remaining - len);
                parts.pop_back();
            }
        };
        rec(rec, 0, m);
    }

    for (auto& dim_faces : faces)
        std::sort(dim_faces.begin(), dim_faces.end());
    complex.faces_by_dim_ = std::move(faces);
    return complex;
}

std::vector<std::size_t> BoxComplex::f_vector() const {
    std::vector<std::size_t> out;
    out.reserve(faces_by_dim_.size());
    for (const auto& dim_faces : faces_by_dim_)
        out.push_back(dim_faces.size());
    return out;
}

bool BoxComplex::contains(const BoxFace& face) const {
    for (const Tuple& t : face.vertices())
        if (!vertices_.count(t))
            return false;
    return true;
}

bool BoxComplex::contains_by_top_vertex(const BoxFace& face) const {
    // Valid shortcut when the vertex set is an order ideal: all vertices of
    // the box are Gale-below the top one.
    for (std::size_t i = 0; i + 1 < face.blocks.size(); ++i)
        if (face.blocks[i].back() >= face.blocks[i + 1].front())
            return false;
    return vertices_.count(face.top_vertex()) > 0;
}

Monomial BoxComplex::vertex_monomial(const BoxFace& face) const {
    std::vector<Monomial::Entry> entries;
    for (std::size_t i = 0; i < face.blocks.size(); ++i) {
        const int row = mode_ == BoxMode::Squarefree ? 1 : static_cast<int>(i) + 1;
        for (int v : face.blocks[i])
            entries.push_back({row, v, 1});
    }
    return Monomial(width_, std::move(entries));
}

std::vector<std::tuple<int, Monomial, BoxFace>> BoxComplex::boundary(const BoxFace& face) const {
    if (face.dimension() < 1)
        throw Error("boundary: face of dimension 0 has no boundary here");
    std::vector<std::tuple<int, Monomial, BoxFace>> out;
    int prefix_sign = 1;
    for (std::size_t i = 0; i < face.blocks.size(); ++i) {
        const auto& block = face.blocks[i];
        if (block.size() >= 2) {
            int inner_sign = 1;
            for (std::size_t k = 0; k < block.size(); ++k) {
                BoxFace sub = face;
                sub.blocks[i].erase(sub.blocks[i].begin() + static_cast<std::ptrdiff_t>(k));
                if (!contains(sub))
                    throw std::logic_error("boundary: induced closure violated at " + sub.str());
                const int row = mode_ == BoxMode::Squarefree ? 1 : static_cast<int>(i) + 1;
                out.emplace_back(prefix_sign * inner_sign, Monomial::variable(width_, row, block[k]),
                                 std::move(sub));
                inner_sign = -inner_sign;
            }
        }
        if ((static_cast<int>(block.size()) - 1) % 2 == 1)
            prefix_sign = -prefix_sign;
    }
    return out;
}

} // namespace oir
