#include "oir/fixtures.hpp"

#include "oir/json_io.hpp"

namespace oir {
namespace fixtures {

namespace {

Monomial squarefree(int width, std::initializer_list<int> cols) {
    std::vector<Monomial::Entry> entries;
    for (int c : cols)
        entries.push_back({1, c, 1});
    return Monomial(width, std::move(entries));
}

} // namespace

MonomialOIIdeal cob_ideal() {
    return MonomialOIIdeal(AlgebraSignature(1, 2), 4,
                           {squarefree(4, {1, 2}), squarefree(4, {1, 3}), squarefree(4, {1, 4}),
                            squarefree(4, {2, 3}), squarefree(4, {2, 4})});
}

MonomialOIIdeal koszul_ideal() {
    return MonomialOIIdeal(AlgebraSignature(1, 2), 1, {squarefree(1, {1})});
}

MonomialOIIdeal wide_koszul_ideal() {
    return MonomialOIIdeal(AlgebraSignature(1, 2), 2, {squarefree(2, {1})});
}

MonomialOIIdeal principal_ideal(int d) {
    std::vector<Monomial::Entry> entries;
    for (int c = 1; c <= d; ++c)
        entries.push_back({1, c, 1});
    return MonomialOIIdeal(AlgebraSignature(1, 2), d, {Monomial(d, std::move(entries))});
}

MonomialOIIdeal ferrers_seed_ideal() {
    return MonomialOIIdeal(AlgebraSignature(2, 2), 2,
                           {Monomial(2, {{1, 1, 1}, {2, 2, 1}})});
}

MonomialOIIdeal ferrers_seed_d3_ideal() {
    return MonomialOIIdeal(AlgebraSignature(3, 2), 3,
                           {Monomial(3, {{1, 1, 1}, {2, 2, 1}, {3, 3, 1}})});
}

MonomialOIIdeal cubed_variable_ideal() {
    return MonomialOIIdeal(AlgebraSignature(1, 2), 1, {Monomial(1, {{1, 1, 3}})});
}

FreeOIComplex non_widthwise_minimal_complex() {
    std::vector<std::vector<FreeComplexGenerator>> levels{
        {{1, 0}}, // F^{OI,1}
        {{2, 0}}, // F^{OI,2}
        {{3, 0}}, // F^{OI,3}
    };
    std::vector<std::vector<CoefficientEntry>> maps(2);
    // e_12 -> e_2
    maps[0].push_back({0, 0, OIMorphism(1, 2, {2}), MonomialSum::constant(2, 1)});
    // e_123 -> e_13 - e_23
    maps[1].push_back({0, 0, OIMorphism(2, 3, {1, 3}), MonomialSum::constant(3, 1)});
    maps[1].push_back({0, 0, OIMorphism(2, 3, {2, 3}), MonomialSum::constant(3, -1)});
    return FreeOIComplex(AlgebraSignature(1, 2), std::move(levels), std::move(maps));
}

FreeOIComplex oi_koszul_complex(int top_level) {
    if (top_level < 1)
        throw Error("oi_koszul_complex: need at least one differential");
    std::vector<std::vector<FreeComplexGenerator>> levels;
    for (int i = 0; i <= top_level; ++i)
        levels.push_back({{i, i}});
    std::vector<std::vector<CoefficientEntry>> maps;
    for (int i = 1; i <= top_level; ++i) {
        std::vector<CoefficientEntry> entries;
        // The generator of F^{OI,i} maps to the alternating sum of the
        // images of the generator of F^{OI,i-1} under the i injections
        // [i-1] -> [i], weighted by the skipped variable.
        for (int k = 0; k < i; ++k) {
            std::vector<int> values;
            for (int v = 1; v <= i; ++v)
                if (v != k + 1)
                    values.push_back(v);
            entries.push_back({0, 0, OIMorphism(i - 1, i, std::move(values)),
                               MonomialSum(k % 2 == 0 ? 1 : -1, Monomial::variable(i, 1, k + 1))});
        }
        maps.push_back(std::move(entries));
    }
    return FreeOIComplex(AlgebraSignature(1, 2), std::move(levels), std::move(maps));
}

std::map<std::string, std::string> bundled_fixture_files() {
    std::map<std::string, std::string> files;
    auto put = [&files](const std::string& name, nlohmann::json j, const std::string& description) {
        j["description"] = description;
        files[name] = j.dump(2) + "\n";
    };
    put("cob.json", to_json(cob_ideal()),
        "five squarefree quadratic generators in width 4; resolved by a complex with f-vector (5,6,2)");
    put("koszul-w1.json", to_json(koszul_ideal()),
        "principal ideal (x1) from width 1; expands to all variables, resolved by the Koszul complex");
    put("koszul-w2.json", to_json(wide_koszul_ideal()),
        "ideal (x1) from width 2; expands to (x1..x_{w-1}); level 1 of its resolution family is flat "
        "but not free");
    put("principal-d2.json", to_json(principal_ideal(2)),
        "principal ideal (x1 x2) from width 2");
    put("principal-d3.json", to_json(principal_ideal(3)),
        "principal ideal (x1 x2 x3) from width 3");
    put("ferrers-d2.json", to_json(ferrers_seed_ideal()),
        "Ferrers seed x_{1,1} x_{2,2} in the two-row algebra, width 2");
    put("ferrers-d3.json", to_json(ferrers_seed_d3_ideal()),
        "Ferrers seed x_{1,1} x_{2,2} x_{3,3} in the three-row algebra, width 3");
    put("x1-cubed.json", to_json(cubed_variable_ideal()),
        "ideal (x1^3) from width 1; its width-2 expansion (x1^3, x2^3) is not strongly stable");
    put("notwwmin.json", to_json(non_widthwise_minimal_complex()),
        "two-step free OI-complex whose middle map e_123 -> e_13 - e_23 is minimal but not "
        "width-wise minimal");
    put("oi-koszul-3.json", to_json(oi_koszul_complex(3)),
        "Koszul complex as a free OI-complex, levels 0..3");
    return files;
}

} // namespace fixtures
} // namespace oir
