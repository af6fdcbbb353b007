#include "oir/json_io.hpp"

#include <sstream>

namespace oir {

using nlohmann::json;

namespace {

const json& need(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key))
        throw Error("json: missing \"" + std::string(key) + "\" at " + where);
    return j.at(key);
}

int need_int(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_number_integer())
        throw Error("json: \"" + std::string(key) + "\" at " + where + " must be an integer");
    return v.get<int>();
}

} // namespace

json to_json(const OIMorphism& eps) {
    return json{{"source", eps.source_width()}, {"target", eps.target_width()}, {"values", eps.values()}};
}

OIMorphism morphism_from_json(const json& j) {
    const json& values = need(j, "values", "/morphism");
    if (!values.is_array())
        throw Error("json: /morphism/values must be an array");
    return OIMorphism(need_int(j, "source", "/morphism"), need_int(j, "target", "/morphism"),
                      values.get<std::vector<int>>());
}

json to_json(const Monomial& m) {
    json exps = json::array();
    for (const auto& e : m.entries())
        exps.push_back(json::array({e.row, e.col, e.exp}));
    return json{{"width", m.width()}, {"exps", std::move(exps)}};
}

Monomial monomial_from_json(const json& j) {
    const json& exps = need(j, "exps", "/monomial");
    if (!exps.is_array())
        throw Error("json: /monomial/exps must be an array");
    std::vector<Monomial::Entry> entries;
    for (const json& e : exps) {
        if (!e.is_array() || e.size() != 3)
            throw Error("json: /monomial/exps entries must be [row, col, exp]");
        entries.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
    }
    return Monomial(need_int(j, "width", "/monomial"), std::move(entries));
}

json to_json(const AlgebraSignature& signature) {
    return json{{"rows", signature.rows}, {"prime", signature.prime}};
}

AlgebraSignature signature_from_json(const json& j) {
    return AlgebraSignature(need_int(j, "rows", "/signature"),
                            static_cast<std::uint32_t>(need_int(j, "prime", "/signature")));
}

json to_json(const MonomialSum& sum) {
    json terms = json::array();
    for (const auto& t : sum.terms())
        terms.push_back(json::array({t.coeff, to_json(t.monomial)}));
    return terms;
}

MonomialSum monomial_sum_from_json(const json& j, int width) {
    if (!j.is_array())
        throw Error("json: coefficient must be an array of [int, monomial] pairs");
    MonomialSum out;
    for (const json& t : j) {
        if (!t.is_array() || t.size() != 2)
            throw Error("json: coefficient terms must be [int, monomial]");
        Monomial m = monomial_from_json(t[1]);
        if (m.width() != width)
            throw Error("json: coefficient monomial width " + std::to_string(m.width()) +
                        " does not match generator width " + std::to_string(width));
        out.add_term(t[0].get<std::int64_t>(), m);
    }
    return out;
}

json to_json(const MonomialOIIdeal& ideal) {
    json gens = json::array();
    for (const Monomial& g : ideal.generators())
        gens.push_back(to_json(g));
    return json{{"schema", kSchemaTag},
                {"signature", to_json(ideal.signature())},
                {"gen_width", ideal.gen_width()},
                {"generators", std::move(gens)}};
}

MonomialOIIdeal ideal_from_json(const json& j) {
    const json& gens = need(j, "generators", "/ideal");
    if (!gens.is_array() || gens.empty())
        throw Error("json: /ideal/generators must be a nonempty array");
    std::vector<Monomial> generators;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        try {
            generators.push_back(monomial_from_json(gens[i]));
        } catch (const Error& e) {
            throw Error("json: /ideal/generators/" + std::to_string(i) + ": " + e.what());
        }
    }
    return MonomialOIIdeal(signature_from_json(need(j, "signature", "/ideal")),
                           need_int(j, "gen_width", "/ideal"), std::move(generators));
}

json to_json(const BoxComplex& complex) {
    json dims = json::array();
    for (const auto& dim_faces : complex.faces_by_dim()) {
        json faces = json::array();
        for (const BoxFace& face : dim_faces)
            faces.push_back(face.blocks);
        dims.push_back(std::move(faces));
    }
    return json{{"schema", kSchemaTag},
                {"width", complex.width()},
                {"mode", complex.mode() == BoxMode::Squarefree ? "squarefree" : "ferrers"},
                {"f_vector", complex.f_vector()},
                {"faces_by_dim", std::move(dims)}};
}

json to_json(const GradedFreeComplex& cplx) {
    json levels = json::array();
    for (const auto& level : cplx.levels) {
        json gens = json::array();
        for (const auto& g : level) {
            json gen{{"degree", g.degree}, {"label", g.label}};
            if (g.multidegree)
                gen["multidegree"] = to_json(*g.multidegree);
            gens.push_back(std::move(gen));
        }
        levels.push_back(std::move(gens));
    }
    json maps = json::array();
    for (const auto& m : cplx.maps) {
        json entries = json::array();
        for (const auto& [pos, value] : m.cells())
            entries.push_back(json{{"row", pos.second}, {"col", pos.first}, {"value", to_json(value)}});
        maps.push_back(json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}});
    }
    json out{{"schema", kSchemaTag},
             {"width", cplx.width},
             {"signature", to_json(cplx.signature)},
             {"levels", std::move(levels)},
             {"maps", std::move(maps)}};
    if (cplx.quotient_generators) {
        json gens = json::array();
        for (const Monomial& g : *cplx.quotient_generators)
            gens.push_back(to_json(g));
        out["quotient_generators"] = std::move(gens);
    }
    return out;
}

GradedFreeComplex graded_complex_from_json(const json& j) {
    GradedFreeComplex out;
    out.width = need_int(j, "width", "/complex");
    out.signature = signature_from_json(need(j, "signature", "/complex"));
    for (const json& level : need(j, "levels", "/complex")) {
        std::vector<ComplexGenerator> gens;
        for (const json& g : level) {
            ComplexGenerator gen;
            gen.degree = need_int(g, "degree", "/complex/levels");
            gen.label = need(g, "label", "/complex/levels").get<std::string>();
            if (g.contains("multidegree"))
                gen.multidegree = monomial_from_json(g.at("multidegree"));
            gens.push_back(std::move(gen));
        }
        out.levels.push_back(std::move(gens));
    }
    for (const json& m : need(j, "maps", "/complex")) {
        SparseMatrix matrix(need_int(m, "rows", "/complex/maps"), need_int(m, "cols", "/complex/maps"));
        for (const json& e : need(m, "entries", "/complex/maps"))
            matrix.add(need_int(e, "row", "/complex/maps/entries"),
                       need_int(e, "col", "/complex/maps/entries"),
                       monomial_sum_from_json(need(e, "value", "/complex/maps/entries"), out.width));
        out.maps.push_back(std::move(matrix));
    }
    if (j.contains("quotient_generators")) {
        std::vector<Monomial> gens;
        for (const json& g : j.at("quotient_generators"))
            gens.push_back(monomial_from_json(g));
        out.quotient_generators = std::move(gens);
    }
    return out;
}

json to_json(const FreeOIComplex& cplx) {
    json levels = json::array();
    for (const auto& level : cplx.levels()) {
        json gens = json::array();
        for (const auto& g : level)
            gens.push_back(json{{"width", g.width}, {"degree", g.degree}});
        levels.push_back(std::move(gens));
    }
    json maps = json::array();
    for (const auto& entries : cplx.maps()) {
        json level_entries = json::array();
        for (const CoefficientEntry& e : entries)
            level_entries.push_back(json{{"source", e.source},
                                         {"target", e.target},
                                         {"epsilon", to_json(e.epsilon)},
                                         {"coefficient", to_json(e.coefficient)}});
        maps.push_back(std::move(level_entries));
    }
    return json{{"schema", kSchemaTag},
                {"signature", to_json(cplx.signature())},
                {"levels", std::move(levels)},
                {"maps", std::move(maps)}};
}

FreeOIComplex free_complex_from_json(const json& j) {
    std::vector<std::vector<FreeComplexGenerator>> levels;
    for (const json& level : need(j, "levels", "/free_complex")) {
        std::vector<FreeComplexGenerator> gens;
        for (const json& g : level)
            gens.push_back({need_int(g, "width", "/free_complex/levels"),
                            need_int(g, "degree", "/free_complex/levels")});
        levels.push_back(std::move(gens));
    }
    std::vector<std::vector<CoefficientEntry>> maps;
    std::size_t level_index = 1;
    for (const json& m : need(j, "maps", "/free_complex")) {
        std::vector<CoefficientEntry> entries;
        for (const json& e : m) {
            const std::string where = "/free_complex/maps/" + std::to_string(level_index - 1);
            CoefficientEntry entry{need_int(e, "source", where), need_int(e, "target", where),
                                   morphism_from_json(need(e, "epsilon", where)), MonomialSum()};
            if (level_index >= levels.size() || entry.source < 0 ||
                entry.source >= static_cast<int>(levels[level_index].size()))
                throw Error("json: " + where + " has a bad source index");
            entry.coefficient =
                monomial_sum_from_json(need(e, "coefficient", where),
                                       levels[level_index][static_cast<std::size_t>(entry.source)].width);
            entries.push_back(std::move(entry));
        }
        maps.push_back(std::move(entries));
        ++level_index;
    }
    return FreeOIComplex(signature_from_json(need(j, "signature", "/free_complex")), std::move(levels),
                         std::move(maps));
}

OIMorphism parse_morphism_shorthand(const std::string& text, int target_width) {
    std::vector<int> values;
    for (char c : text) {
        if (c < '1' || c > '9')
            throw Error("morphism shorthand accepts single digits 1-9 only, got \"" + text + "\"");
        values.push_back(c - '0');
    }
    const int source = static_cast<int>(values.size());
    const int target = target_width >= 0 ? target_width : (values.empty() ? 0 : values.back());
    return OIMorphism(source, target, std::move(values));
}

Monomial parse_monomial_shorthand(const std::string& text, int width) {
    std::vector<Monomial::Entry> entries;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, '*')) {
        if (token.empty() || token[0] != 'x')
            throw Error("monomial shorthand: expected factors like \"x3\", got \"" + token + "\"");
        const std::size_t caret = token.find('^');
        int exp = 1;
        std::string col_text = token.substr(1);
        if (caret != std::string::npos) {
            col_text = token.substr(1, caret - 1);
            exp = std::stoi(token.substr(caret + 1));
        }
        entries.push_back({1, std::stoi(col_text), exp});
    }
    if (entries.empty())
        throw Error("monomial shorthand: empty monomial");
    return Monomial(width, std::move(entries));
}

std::string matrix_dump_text(const GradedFreeComplex& cplx) {
    std::ostringstream os;
    for (std::size_t i = 0; i < cplx.maps.size(); ++i) {
        const SparseMatrix& m = cplx.maps[i];
        os << "# differential " << i + 1 << ": " << m.rows() << " x " << m.cols() << "\n";
        for (const auto& [pos, value] : m.cells())
            for (const auto& term : value.terms())
                os << i + 1 << " " << pos.second << " " << pos.first << " " << term.coeff << " "
                   << term.monomial.str() << "\n";
    }
    return os.str();
}

} // namespace oir
