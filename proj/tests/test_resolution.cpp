#include <doctest.h>

#include "oir/fixtures.hpp"
#include "oir/json_io.hpp"
#include "oir/resolution.hpp"

#include "test_support.hpp"

using namespace oir;

namespace {

GradedFreeComplex cob_resolution() {
    const auto gens = fixtures::cob_ideal().generators();
    return cellular_resolution(BoxComplex::build(gens, BoxMode::Squarefree), gens);
}

GradedFreeComplex koszul_resolution(int w) {
    const auto gens = fixtures::koszul_ideal().expand(w);
    return cellular_resolution(BoxComplex::build(gens, BoxMode::Squarefree), gens);
}

std::vector<std::size_t> ranks(const GradedFreeComplex& cplx) {
    std::vector<std::size_t> out;
    for (int i = 0; i < cplx.num_levels(); ++i)
        out.push_back(cplx.rank(i));
    return out;
}

} // namespace

TEST_CASE("the quadratic width-4 example resolves with ranks (1,5,6,2)") {
    const GradedFreeComplex cplx = cob_resolution();
    CHECK(ranks(cplx) == std::vector<std::size_t>{1, 5, 6, 2});
    std::vector<int> degrees;
    for (const auto& level : cplx.levels)
        degrees.push_back(level.front().degree);
    CHECK(degrees == std::vector<int>{0, 2, 3, 4});
    CHECK(verify_homogeneous(cplx));
}

TEST_CASE("one-block families give the classical Koszul complex") {
    for (int w = 1; w <= 6; ++w) {
        const GradedFreeComplex cplx = koszul_resolution(w);
        REQUIRE(cplx.num_levels() == w + 1);
        for (int i = 0; i <= w; ++i)
            CHECK(cplx.rank(i) == binomial(w, i));
        // Entry-for-entry comparison with the subset-built complex.
        const GradedFreeComplex oracle = oracles::classical_koszul(w);
        REQUIRE(cplx.maps.size() == oracle.maps.size());
        for (std::size_t i = 0; i < cplx.maps.size(); ++i)
            CHECK(cplx.maps[i].cells() == oracle.maps[i].cells());
    }
}

TEST_CASE("the width-4 expansion of (x1 x2) has ranks (1,6,8,3)") {
    const auto gens = fixtures::principal_ideal(2).expand(4);
    const GradedFreeComplex cplx =
        cellular_resolution(BoxComplex::build(gens, BoxMode::Squarefree), gens);
    CHECK(ranks(cplx) == std::vector<std::size_t>{1, 6, 8, 3});
}

TEST_CASE("d squared vanishes and perturbations are caught") {
    GradedFreeComplex cplx = cob_resolution();
    CHECK(verify_d_squared(cplx).pass);

    // Flip one sign in the middle differential.
    const auto& [pos, value] = *cplx.maps[1].cells().begin();
    cplx.maps[1].add(pos.second, pos.first, value.scaled(-2));
    const DSquaredReport report = verify_d_squared(cplx);
    CHECK_FALSE(report.pass);
    CHECK_FALSE(report.first_violation.empty());

    CHECK(verify_d_squared(trivial_quotient_complex(3, AlgebraSignature(1, 2))).pass);
}

TEST_CASE("width-wise minimality detects unit entries") {
    CHECK(verify_minimal_width(cob_resolution()));
    CHECK(verify_minimal_width(koszul_resolution(4)));

    GradedFreeComplex with_unit = cob_resolution();
    // Insert a degree-violating unit entry; minimality only looks at
    // constant terms.
    with_unit.maps[1].add(0, 0, MonomialSum::constant(4, 1));
    CHECK_FALSE(verify_minimal_width(with_unit));
}

TEST_CASE("degreewise exactness of the quadratic example") {
    const GradedFreeComplex cplx = cob_resolution();
    const ExactnessReport report = verify_exact_up_to(cplx, 6, 2);
    CHECK(report.pass);
    REQUIRE(report.rows.size() == 7);
    const std::vector<std::int64_t> expected_coker{1, 4, 5, 6, 7};
    for (int t = 0; t <= 4; ++t) {
        CHECK(report.rows[static_cast<std::size_t>(t)].coker_dim ==
              expected_coker[static_cast<std::size_t>(t)]);
        CHECK(report.rows[static_cast<std::size_t>(t)].expected_coker ==
              oracles::standard_monomial_count(*cplx.quotient_generators, 1, 4, t));
    }
    // Same verdict over a second prime.
    CHECK(verify_exact_up_to(cplx, 6, 3).pass);
}

TEST_CASE("the Koszul complex resolves the base field") {
    const GradedFreeComplex cplx = koszul_resolution(3);
    const ExactnessReport report = verify_exact_up_to(cplx, 5, 2);
    CHECK(report.pass);
    for (const auto& row : report.rows)
        CHECK(row.coker_dim == (row.degree == 0 ? 1 : 0));
}

TEST_CASE("a truncated complex fails exactness below the removed level") {
    GradedFreeComplex cplx = cob_resolution();
    cplx.levels.pop_back();
    cplx.maps.pop_back();
    const ExactnessReport report = verify_exact_up_to(cplx, 6, 2);
    CHECK_FALSE(report.pass);
    CHECK(report.failure.find("level 2") != std::string::npos);
}

TEST_CASE("fine and coarse exactness paths agree") {
    const GradedFreeComplex fine = cob_resolution();
    GradedFreeComplex coarse = fine;
    for (auto& level : coarse.levels)
        for (auto& g : level)
            g.multidegree.reset(); // forces the generic dense path
    const ExactnessReport a = verify_exact_up_to(fine, 6, 2);
    const ExactnessReport b = verify_exact_up_to(coarse, 6, 2);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].level_dims == b.rows[i].level_dims);
        CHECK(a.rows[i].diff_ranks == b.rows[i].diff_ranks);
        CHECK(a.rows[i].homology_dims == b.rows[i].homology_dims);
        CHECK(a.rows[i].coker_dim == b.rows[i].coker_dim);
    }
    CHECK(a.pass);
    CHECK(b.pass);
}

TEST_CASE("verify_exact_up_to validates its inputs") {
    const GradedFreeComplex cplx = cob_resolution();
    CHECK_THROWS_AS(verify_exact_up_to(cplx, 6, 6), Error);
    CHECK_THROWS_AS(verify_exact_up_to(cplx, 2, 2), Error);

    GradedFreeComplex wrong_rows = cob_resolution();
    wrong_rows.maps[1].add(0, 0, MonomialSum(1, Monomial(4, {{2, 1, 1}})));
    CHECK_THROWS_AS(verify_exact_up_to(wrong_rows, 6, 2), Error);
}

TEST_CASE("betti tables count generators by level and degree") {
    using Table = std::map<std::pair<int, int>, std::int64_t>;
    CHECK(betti_table(cob_resolution()) ==
          Table{{{0, 0}, 1}, {{1, 2}, 5}, {{2, 3}, 6}, {{3, 4}, 2}});
    CHECK(betti_table(koszul_resolution(3)) ==
          Table{{{0, 0}, 1}, {{1, 1}, 3}, {{2, 2}, 3}, {{3, 3}, 1}});
    const auto gens = fixtures::principal_ideal(2).expand(4);
    CHECK(betti_table(cellular_resolution(BoxComplex::build(gens, BoxMode::Squarefree), gens)) ==
          Table{{{0, 0}, 1}, {{1, 2}, 6}, {{2, 3}, 8}, {{3, 4}, 3}});
}

TEST_CASE("the alternating degree sum equals the Hilbert numerator") {
    std::vector<GradedFreeComplex> corpus;
    corpus.push_back(cob_resolution());
    corpus.push_back(koszul_resolution(4));
    {
        const auto gens = fixtures::principal_ideal(3).expand(5);
        corpus.push_back(cellular_resolution(BoxComplex::build(gens, BoxMode::Squarefree), gens));
    }
    {
        const auto gens = fixtures::ferrers_seed_ideal().expand(4);
        corpus.push_back(cellular_resolution(BoxComplex::build(gens, BoxMode::Ferrers), gens));
    }
    for (const GradedFreeComplex& cplx : corpus) {
        const int top = cplx.top_generator_degree();
        CHECK(oracles::alternating_degree_sum(cplx, top) ==
              hilbert_numerator(*cplx.quotient_generators, cplx.width, top));
    }
}

TEST_CASE("graded complex JSON and matrix dump round-trip") {
    const GradedFreeComplex cplx = cob_resolution();
    const auto j = to_json(cplx);
    const GradedFreeComplex back = graded_complex_from_json(j);
    CHECK(back.width == cplx.width);
    REQUIRE(back.maps.size() == cplx.maps.size());
    for (std::size_t i = 0; i < cplx.maps.size(); ++i)
        CHECK(back.maps[i] == cplx.maps[i]);
    CHECK(to_json(back) == j);

    const std::string dump = matrix_dump_text(cplx);
    CHECK(dump.find("# differential 1: 1 x 5") != std::string::npos);
}
