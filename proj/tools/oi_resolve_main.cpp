// oi-resolve: expand monomial OI-ideals, build and verify their
// complex-of-boxes resolutions, classify resolution families, and minimize
// free OI-complexes.
//
// Exit codes: 0 success / all checks pass, 1 a verification failed,
// 2 malformed input.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "oir/fixtures.hpp"
#include "oir/json_io.hpp"

namespace {

using nlohmann::json;
using namespace oir;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

struct OutputOptions {
    std::string path;   // empty = stdout
    std::string format = "text";
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--output", out.path, "Write the report to a file instead of stdout");
    cmd->add_option("--format", out.format, "Report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
}

void emit(const OutputOptions& out, const std::string& text) {
    if (out.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out.path);
    if (!file)
        throw Error("cannot open output file " + out.path);
    file << text;
}

json load_json(const std::string& path) {
    std::ifstream file(path);
    if (!file)
        throw Error("cannot open " + path);
    json j;
    try {
        file >> j;
    } catch (const json::parse_error& e) {
        throw Error(path + ": " + e.what());
    }
    return j;
}

struct IdealOptions {
    std::string path;
    std::string inline_gens;
    int gen_width = -1;
    std::uint32_t prime = 2;
};

void add_ideal_options(CLI::App* cmd, IdealOptions& opts) {
    cmd->add_option("--ideal", opts.path, "Ideal description (JSON file)");
    cmd->add_option("--gens", opts.inline_gens,
                    "Inline one-row generators, comma separated (e.g. \"x1*x2,x1*x3\")");
    cmd->add_option("--gen-width", opts.gen_width, "Generating width for --gens");
    cmd->add_option("--prime", opts.prime, "Base field characteristic for --gens (default 2)");
}

MonomialOIIdeal load_ideal(const IdealOptions& opts) {
    if (!opts.path.empty())
        return ideal_from_json(load_json(opts.path));
    if (opts.inline_gens.empty())
        throw Error("provide --ideal FILE or --gens LIST");
    if (opts.gen_width < 0)
        throw Error("--gens requires --gen-width");
    std::vector<Monomial> gens;
    std::stringstream stream(opts.inline_gens);
    std::string token;
    while (std::getline(stream, token, ','))
        gens.push_back(parse_monomial_shorthand(token, opts.gen_width));
    return MonomialOIIdeal(AlgebraSignature(1, opts.prime), opts.gen_width, std::move(gens));
}

void warn_if_pruned(const MonomialOIIdeal& ideal) {
    if (ideal.pruned_generators() > 0)
        std::cerr << "warning: pruned " << ideal.pruned_generators()
                  << " non-minimal generator(s) from the input\n";
}

GradedFreeComplex resolve_at_width(const MonomialOIIdeal& ideal, int w) {
    if (w < ideal.gen_width())
        return trivial_quotient_complex(w, ideal.signature());
    const std::vector<Monomial> gens = ideal.expand(w);
    const BoxMode mode = ideal.signature().rows == 1 ? BoxMode::Squarefree : BoxMode::Ferrers;
    GradedFreeComplex cplx = cellular_resolution(BoxComplex::build(gens, mode), gens);
    cplx.signature = ideal.signature();
    return cplx;
}

json betti_json(const GradedFreeComplex& cplx) {
    json rows = json::array();
    for (const auto& [key, count] : betti_table(cplx))
        rows.push_back(json::array({key.first, key.second, count}));
    return rows;
}

struct VerifyOutcome {
    bool pass = true;
    json report = json::object();
    std::string text;
};

VerifyOutcome run_verification(const GradedFreeComplex& cplx, int degree_bound, std::uint32_t prime,
                               std::uint32_t second_prime) {
    VerifyOutcome outcome;
    std::ostringstream text;

    const bool homogeneous = verify_homogeneous(cplx);
    const DSquaredReport d2 = verify_d_squared(cplx);
    const bool minimal = verify_minimal_width(cplx);
    outcome.report["homogeneous"] = homogeneous;
    outcome.report["d_squared"] = d2.pass;
    outcome.report["widthwise_minimal"] = minimal;
    text << "homogeneous: " << (homogeneous ? "pass" : "FAIL") << "\n";
    text << "d^2 = 0: " << (d2.pass ? "pass" : "FAIL (" + d2.first_violation + ")") << "\n";
    text << "width-wise minimal: " << (minimal ? "pass" : "FAIL") << "\n";
    outcome.pass = homogeneous && d2.pass && minimal;

    const int bound = degree_bound > 0 ? degree_bound : cplx.top_generator_degree() + 2;
    for (std::uint32_t p : {prime, second_prime}) {
        if (p == 0)
            continue;
        if (!homogeneous) {
            // Graded coefficient spaces are meaningless here; report the
            // failure without attempting the rank computation.
            text << "exactness mod " << p << ": skipped (complex is not homogeneous)\n";
            continue;
        }
        const ExactnessReport exact = verify_exact_up_to(cplx, bound, p);
        outcome.report["exact_mod_" + std::to_string(p)] = exact.pass;
        text << exact.to_text();
        outcome.pass = outcome.pass && exact.pass;
    }
    outcome.text = text.str();
    return outcome;
}

int cmd_expand(const IdealOptions& ideal_opts, int width, const OutputOptions& out) {
    const MonomialOIIdeal ideal = load_ideal(ideal_opts);
    warn_if_pruned(ideal);
    const std::vector<Monomial> gens = ideal.expand(width);
    if (out.format == "json") {
        json j{{"schema", kSchemaTag}, {"width", width}, {"count", gens.size()}};
        json list = json::array();
        for (const Monomial& g : gens)
            list.push_back(to_json(g));
        j["generators"] = std::move(list);
        emit(out, j.dump(2) + "\n");
    } else {
        std::ostringstream text;
        text << "minimal generators at width " << width << ": " << gens.size() << "\n";
        for (const Monomial& g : gens)
            text << g.str() << "\n";
        emit(out, text.str());
    }
    return kExitOk;
}

int cmd_classify(const IdealOptions& ideal_opts, int width, const OutputOptions& out) {
    const MonomialOIIdeal ideal = load_ideal(ideal_opts);
    warn_if_pruned(ideal);
    const int w = width >= 0 ? width : ideal.gen_width();
    const std::vector<Monomial> gens = w == ideal.gen_width() ? ideal.generators() : ideal.expand(w);

    auto classify = [&](auto&& predicate) -> json {
        try {
            return predicate(gens, w);
        } catch (const Error& e) {
            return std::string("error: ") + e.what();
        }
    };
    json j{{"schema", kSchemaTag},
           {"width", w},
           {"squarefree_strongly_stable", classify(is_squarefree_strongly_stable)},
           {"strongly_stable", classify(is_strongly_stable)},
           {"ferrers", classify(is_ferrers)}};
    if (out.format == "json") {
        emit(out, j.dump(2) + "\n");
    } else {
        std::ostringstream text;
        text << "width " << w << "\n";
        for (const char* key : {"squarefree_strongly_stable", "strongly_stable", "ferrers"})
            text << key << ": " << j.at(key).dump() << "\n";
        emit(out, text.str());
    }
    return kExitOk;
}

int cmd_boxes(const IdealOptions& ideal_opts, int width, bool fvector_only,
              const OutputOptions& out) {
    const MonomialOIIdeal ideal = load_ideal(ideal_opts);
    warn_if_pruned(ideal);
    const std::vector<Monomial> gens = ideal.expand(width);
    const BoxMode mode = ideal.signature().rows == 1 ? BoxMode::Squarefree : BoxMode::Ferrers;
    const BoxComplex complex = BoxComplex::build(gens, mode);
    if (out.format == "json") {
        emit(out, to_json(complex).dump(2) + "\n");
    } else {
        std::ostringstream text;
        text << "f-vector:";
        for (std::size_t count : complex.f_vector())
            text << " " << count;
        text << "\n";
        if (!fvector_only) {
            for (std::size_t dim = 0; dim < complex.faces_by_dim().size(); ++dim) {
                text << "dim " << dim << ":";
                for (const BoxFace& face : complex.faces_by_dim()[dim])
                    text << " " << face.str();
                text << "\n";
            }
        }
        emit(out, text.str());
    }
    return kExitOk;
}

int cmd_resolve(const IdealOptions& ideal_opts, int width, bool verify, bool betti, int degree_bound,
                std::uint32_t prime_override, std::uint32_t second_prime, bool matrix_dump,
                const OutputOptions& out) {
    const MonomialOIIdeal ideal = load_ideal(ideal_opts);
    warn_if_pruned(ideal);
    const GradedFreeComplex cplx = resolve_at_width(ideal, width);
    const std::uint32_t prime = prime_override ? prime_override : ideal.signature().prime;

    VerifyOutcome verification;
    if (verify)
        verification = run_verification(cplx, degree_bound, prime, second_prime);

    if (out.format == "json") {
        json j = to_json(cplx);
        if (betti)
            j["betti"] = betti_json(cplx);
        if (verify)
            j["verification"] = verification.report;
        emit(out, j.dump(2) + "\n");
    } else {
        std::ostringstream text;
        text << "ranks:";
        for (int i = 0; i < cplx.num_levels(); ++i)
            text << " " << cplx.rank(i);
        text << "\n";
        if (betti)
            text << betti_table_text(betti_table(cplx));
        if (matrix_dump)
            text << matrix_dump_text(cplx);
        if (verify)
            text << verification.text;
        emit(out, text.str());
    }
    return verify && !verification.pass ? kExitVerifyFailed : kExitOk;
}

int cmd_verify(const std::string& complex_path, int degree_bound, std::uint32_t prime,
               std::uint32_t second_prime, const OutputOptions& out) {
    const GradedFreeComplex cplx = graded_complex_from_json(load_json(complex_path));
    const VerifyOutcome outcome = run_verification(cplx, degree_bound, prime, second_prime);
    if (out.format == "json") {
        json j{{"schema", kSchemaTag}, {"pass", outcome.pass}, {"checks", outcome.report}};
        emit(out, j.dump(2) + "\n");
    } else {
        emit(out, outcome.text + (outcome.pass ? "verdict: pass\n" : "verdict: FAIL\n"));
    }
    return outcome.pass ? kExitOk : kExitVerifyFailed;
}

int cmd_family(const IdealOptions& ideal_opts, int max_width, bool verify_naturality, bool classify,
               std::uint32_t prime_override, const OutputOptions& out) {
    const MonomialOIIdeal ideal = load_ideal(ideal_opts);
    warn_if_pruned(ideal);
    FlatOIFamily family(ideal, max_width);
    family.materialize_up_to(max_width);
    const std::uint32_t prime = prime_override ? prime_override : ideal.signature().prime;

    bool pass = true;
    json j{{"schema", kSchemaTag}, {"max_width", max_width}, {"levels", family.levels()}};
    std::ostringstream text;
    text << "levels: " << family.levels() << "\n";

    json width_checks = json::array();
    for (int w = 0; w <= max_width; ++w) {
        const GradedFreeComplex& cplx = family.complex_at(w);
        const bool d2 = verify_d_squared(cplx).pass;
        const bool minimal = verify_minimal_width(cplx);
        const bool exact =
            verify_exact_up_to(cplx, cplx.top_generator_degree() + 2, prime).pass;
        pass = pass && d2 && minimal && exact;
        width_checks.push_back(json{{"width", w},
                                    {"d_squared", d2},
                                    {"widthwise_minimal", minimal},
                                    {"exact", exact}});
        text << "width " << w << ": d^2 " << (d2 ? "pass" : "FAIL") << ", minimal "
             << (minimal ? "pass" : "FAIL") << ", exact " << (exact ? "pass" : "FAIL") << "\n";
    }
    j["width_checks"] = std::move(width_checks);

    if (verify_naturality) {
        const NaturalityReport naturality = family.verify_naturality(max_width);
        pass = pass && naturality.pass;
        j["naturality"] = json{{"pass", naturality.pass},
                               {"squares_checked", naturality.squares_checked},
                               {"first_failure", naturality.first_failure}};
        text << "naturality: " << (naturality.pass ? "pass" : "FAIL " + naturality.first_failure)
             << " (" << naturality.squares_checked << " squares)\n";
    }

    if (classify) {
        json levels = json::array();
        for (int level = 0; level <= family.top_level(); ++level) {
            const LevelClassification c = family.classify_level(level, max_width);
            json entry{{"level", level}, {"examined_width", c.examined_width}};
            std::string kind;
            switch (c.kind) {
            case LevelClassification::Kind::Free:
                kind = "FREE";
                entry["shape"] = c.shape.generator_widths;
                break;
            case LevelClassification::Kind::FlatNotFree:
                kind = "FLAT_NOT_FREE";
                break;
            case LevelClassification::Kind::InsufficientData:
                kind = "INSUFFICIENT_DATA";
                break;
            }
            entry["classification"] = kind;
            json gen_widths = json::array();
            for (const auto& [w, count] : family.generator_widths(level, max_width))
                gen_widths.push_back(json::array({w, count}));
            entry["generator_widths"] = std::move(gen_widths);
            entry["generators_stabilized"] = family.generators_stabilized(level, max_width);
            levels.push_back(std::move(entry));
            text << "level " << level << ": " << kind;
            if (c.kind == LevelClassification::Kind::Free) {
                text << " shape {";
                for (std::size_t i = 0; i < c.shape.generator_widths.size(); ++i)
                    text << (i ? "," : "") << c.shape.generator_widths[i];
                text << "}";
            }
            text << "\n";
        }
        j["classification"] = std::move(levels);
    }

    j["pass"] = pass;
    if (out.format == "json")
        emit(out, j.dump(2) + "\n");
    else
        emit(out, text.str() + (pass ? "verdict: pass\n" : "verdict: FAIL\n"));
    return pass ? kExitOk : kExitVerifyFailed;
}

int cmd_minimize(const std::string& complex_path, const OutputOptions& out) {
    const FreeOIComplex cplx = free_complex_from_json(load_json(complex_path));
    cplx.validate(cplx.default_width_cap());
    const FreeOIComplex reduced = minimize(cplx);
    if (out.format == "json") {
        emit(out, to_json(reduced).dump(2) + "\n");
    } else {
        std::ostringstream text;
        text << "ranks before:";
        for (int i = 0; i < cplx.num_levels(); ++i)
            text << " " << cplx.rank(i);
        text << "\nranks after:";
        for (int i = 0; i < reduced.num_levels(); ++i)
            text << " " << reduced.rank(i);
        text << "\n";
        emit(out, text.str());
    }
    return kExitOk;
}

int cmd_evaluate(const std::string& complex_path, int width, const OutputOptions& out) {
    const FreeOIComplex cplx = free_complex_from_json(load_json(complex_path));
    const GradedFreeComplex evaluated = evaluate_at_width(cplx, width);
    if (out.format == "json") {
        emit(out, to_json(evaluated).dump(2) + "\n");
    } else {
        std::ostringstream text;
        text << "ranks:";
        for (int i = 0; i < evaluated.num_levels(); ++i)
            text << " " << evaluated.rank(i);
        text << "\n" << matrix_dump_text(evaluated);
        emit(out, text.str());
    }
    return kExitOk;
}

int cmd_fixtures(const std::string& out_dir, const OutputOptions& out) {
    const auto files = fixtures::bundled_fixture_files();
    if (out_dir.empty()) {
        std::ostringstream text;
        for (const auto& [name, content] : files) {
            (void)content;
            text << name << "\n";
        }
        emit(out, text.str());
        return kExitOk;
    }
    for (const auto& [name, content] : files) {
        std::ofstream file(out_dir + "/" + name);
        if (!file)
            throw Error("cannot write " + out_dir + "/" + name);
        file << content;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"width-wise minimal resolutions of monomial OI-ideals"};
    app.require_subcommand(1);

    IdealOptions ideal_opts;
    OutputOptions out;
    std::string complex_path;
    std::string out_dir;
    int width = -1;
    int max_width = 6;
    int degree_bound = 0;
    std::uint32_t prime = 0;
    std::uint32_t second_prime = 0;
    bool flag_verify = false;
    bool flag_betti = false;
    bool flag_fvector = false;
    bool flag_naturality = false;
    bool flag_classify = false;
    bool flag_matrix_dump = false;

    CLI::App* expand = app.add_subcommand("expand", "Minimal generators of the width-w component");
    add_ideal_options(expand, ideal_opts);
    expand->add_option("--width", width, "Target width")->required();
    add_output_options(expand, out);

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "Run the order-ideal class predicates on the generators");
    add_ideal_options(classify_cmd, ideal_opts);
    classify_cmd->add_option("--width", width, "Width to classify at (default: generating width)");
    add_output_options(classify_cmd, out);

    CLI::App* boxes = app.add_subcommand("boxes", "Build the box complex at a width");
    add_ideal_options(boxes, ideal_opts);
    boxes->add_option("--width", width, "Target width")->required();
    boxes->add_flag("--emit-fvector", flag_fvector, "Print only the f-vector");
    add_output_options(boxes, out);

    CLI::App* resolve = app.add_subcommand("resolve", "Cellular resolution at a width");
    add_ideal_options(resolve, ideal_opts);
    resolve->add_option("--width", width, "Target width")->required();
    resolve->add_flag("--verify", flag_verify, "Check d^2, minimality, and degreewise exactness");
    resolve->add_flag("--betti", flag_betti, "Print the Betti table");
    resolve->add_flag("--matrix-dump", flag_matrix_dump, "Dump differentials as text lines");
    resolve->add_option("--degree-bound", degree_bound, "Exactness degree bound (default: top+2)");
    resolve->add_option("--check-prime", prime, "Override the verification prime");
    resolve->add_option("--second-prime", second_prime, "Cross-check exactness over a second prime");
    add_output_options(resolve, out);

    CLI::App* verify = app.add_subcommand("verify", "Verify a graded free complex (JSON)");
    verify->add_option("--complex", complex_path, "Complex JSON file")->required();
    verify->add_option("--degree-bound", degree_bound, "Exactness degree bound (default: top+2)");
    verify->add_option("--check-prime", prime, "Verification prime (default 2)");
    verify->add_option("--second-prime", second_prime, "Cross-check prime");
    add_output_options(verify, out);

    CLI::App* family = app.add_subcommand("family", "Assemble and check the resolution family");
    add_ideal_options(family, ideal_opts);
    family->add_option("--max-width", max_width, "Materialize widths 0..W")->required();
    family->add_flag("--verify-naturality", flag_naturality, "Check all naturality squares");
    family->add_flag("--classify", flag_classify, "Classify each level as free or flat-not-free");
    family->add_option("--check-prime", prime, "Override the verification prime");
    add_output_options(family, out);

    CLI::App* minimize_cmd =
        app.add_subcommand("minimize", "Split trivial summands off a free OI-complex");
    minimize_cmd->add_option("--complex", complex_path, "Free OI-complex JSON file")->required();
    add_output_options(minimize_cmd, out);

    CLI::App* evaluate = app.add_subcommand("evaluate", "Evaluate a free OI-complex at a width");
    evaluate->add_option("--complex", complex_path, "Free OI-complex JSON file")->required();
    evaluate->add_option("--width", width, "Evaluation width")->required();
    add_output_options(evaluate, out);

    CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "List or export the bundled fixtures");
    fixtures_cmd->add_option("--out-dir", out_dir, "Write fixture JSON files to this directory");
    add_output_options(fixtures_cmd, out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(expand))
            return cmd_expand(ideal_opts, width, out);
        if (app.got_subcommand(classify_cmd))
            return cmd_classify(ideal_opts, width, out);
        if (app.got_subcommand(boxes))
            return cmd_boxes(ideal_opts, width, flag_fvector, out);
        if (app.got_subcommand(resolve))
            return cmd_resolve(ideal_opts, width, flag_verify, flag_betti, degree_bound, prime,
                               second_prime, flag_matrix_dump, out);
        if (app.got_subcommand(verify))
            return cmd_verify(complex_path, degree_bound, prime ? prime : 2, second_prime, out);
        if (app.got_subcommand(family))
            return cmd_family(ideal_opts, max_width, flag_naturality, flag_classify, prime, out);
        if (app.got_subcommand(minimize_cmd))
            return cmd_minimize(complex_path, out);
        if (app.got_subcommand(evaluate))
            return cmd_evaluate(complex_path, width, out);
        if (app.got_subcommand(fixtures_cmd))
            return cmd_fixtures(out_dir, out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
