#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "magicforge/report.hpp"

using namespace mf;

namespace {

constexpr int kUsageError = 2;

int cmd_algebra(const std::string& name, bool md) {
    AlgebraTable a;
    try {
        a = base_algebra(name);
    } catch (const std::exception& ex) {
        std::cerr << "unknown algebra: " << name << "\n";
        return kUsageError;
    }
    if (md)
        std::cout << algebra_to_markdown(a);
    else
        std::cout << algebra_to_json(a).dump(2) << "\n";
    return 0;
}

LieAlgebra load_lie_input(const std::string& algebra, const std::string& file) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw CLI::ValidationError("--file", "cannot open " + file);
        json j;
        in >> j;
        return lie_from_json(j);
    }
    throw CLI::ValidationError("lie", "no input");
}

int cmd_lie(const std::string& op, const std::string& algebra, const std::string& file,
            int component) {
    LieAlgebra l;
    if (!algebra.empty()) {
        AlgebraTable a = base_algebra(algebra);
        if (op == "derive")
            l = from_algebra_derivations(a);
        else if (op == "triality")
            l = triality_algebra(a);
        else if (op == "intermediate")
            l = intermediate_triality(a, component);
        else {
            std::cerr << "unknown lie operation: " << op << "\n";
            return kUsageError;
        }
    } else {
        l = load_lie_input(algebra, file);
    }
    std::cout << lie_to_json(l).dump(2) << "\n";
    return 0;
}

// named triples for the grading command
struct GradePreset {
    LieAlgebra lie;
    Triple t;
};

GradePreset grade_preset(const std::string& name) {
    if (name == "der_split_octonion" || name == "tri_split_octonion") {
        AlgebraTable o = base_algebra("split_octonion");
        MatQ e(8, 8), f(8, 8);
        e.at(6, 0) = e.at(7, 1) = rat(1);
        f.at(0, 6) = f.at(1, 7) = rat(1);
        MatQ h = MatQ::commutator(e, f);
        if (name == "der_split_octonion") {
            Subspace ds = derivation_space(o);
            return {from_algebra_derivations(o),
                    {ds.coordinates_of(e.flatten()), ds.coordinates_of(h.flatten()),
                     ds.coordinates_of(f.flatten())}};
        }
        Subspace ts = triality_space(o);
        auto diag3 = [](const MatQ& m) {
            Vec fl = m.flatten(), w(3 * 64, Rat(0));
            for (int c = 0; c < 3; ++c) std::copy(fl.begin(), fl.end(), w.begin() + c * 64);
            return w;
        };
        return {triality_algebra(o),
                {ts.coordinates_of(diag3(e)), ts.coordinates_of(diag3(h)),
                 ts.coordinates_of(diag3(f))}};
    }
    // classical presets like sl4, sp6, so8
    for (const char* kind : {"sl", "sp", "so", "gl"})
        if (name.rfind(kind, 0) == 0) {
            int n = std::atoi(name.c_str() + 2);
            if (n > 0) return {classical_algebra(kind, n), classical_triple(kind, n)};
        }
    throw CLI::ValidationError("--preset", "unknown preset " + name);
}

Vec parse_coords(const std::string& s, int dim) {
    Vec v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(rat_parse(tok));
    if ((int)v.size() != dim)
        throw CLI::ValidationError("triple", "expected " + std::to_string(dim) + " coordinates");
    return v;
}

int cmd_grade(const std::string& preset, const std::string& file, const std::string& es,
              const std::string& hs, const std::string& fs) {
    GradePreset g;
    if (!preset.empty()) {
        g = grade_preset(preset);
        if (!es.empty()) g.t.E = parse_coords(es, g.lie.dim);
        if (!hs.empty()) g.t.H = parse_coords(hs, g.lie.dim);
        if (!fs.empty()) g.t.F = parse_coords(fs, g.lie.dim);
    } else if (!file.empty()) {
        g.lie = load_lie_input("", file);
        if (es.empty() || hs.empty() || fs.empty()) {
            std::cerr << "grade: --file requires explicit --e/--h/--f triple coordinates\n";
            return kUsageError;
        }
        g.t = {parse_coords(es, g.lie.dim), parse_coords(hs, g.lie.dim),
               parse_coords(fs, g.lie.dim)};
    } else {
        std::cerr << "grade: need --preset or --file\n";
        return kUsageError;
    }
    json out;
    out["algebra"] = g.lie.name;
    out["dim"] = g.lie.dim;
    out["triple_ok"] = check_triple(g.lie, g.t.E, g.t.H, g.t.F);
    Grading gr = grading_by_ad(g.lie, g.t.H, 4);
    json parts = json::array();
    for (auto& [d, s] : gr.parts) parts.push_back(json::array({d, s.dim()}));
    out["parts"] = parts;
    if (out["triple_ok"].get<bool>()) {
        IntermediateResult ir = intermediate_subalgebra(g.lie, g.t);
        out["intermediate"] =
            json{{"gbar", ir.gbar.dim}, {"v", ir.v_dim}, {"gtilde", ir.gtilde.dim}};
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_magic(const std::string& construction, const std::string& format) {
    SquareConstruction con = construction == "tits" ? SquareConstruction::tits
                                                    : SquareConstruction::triality_dims;
    auto t = magic_square_table(con);
    if (format == "md")
        std::cout << magic_table_markdown(t);
    else if (format == "csv")
        std::cout << magic_table_csv(t);
    else
        std::cout << magic_table_json(t).dump(2) << "\n";
    return 0;
}

int cmd_series(const std::vector<std::string>& ms, const std::string& format) {
    std::vector<SeriesPoint> pts;
    std::vector<std::string> vals =
        ms.empty() ? std::vector<std::string>{"1", "2", "4", "6", "8"} : ms;
    for (const auto& s : vals) pts.push_back(series_dims(rat_parse(s)));
    if (format == "md")
        std::cout << series_table_markdown(pts);
    else if (format == "csv")
        std::cout << series_table_csv(pts);
    else {
        json arr = json::array();
        for (const auto& p : pts) arr.push_back(series_point_json(p));
        std::cout << arr.dump(2) << "\n";
    }
    return 0;
}

int cmd_check(const std::string& suite, uint64_t seed, const std::string& format) {
    RunReport rep = run_suite(suite, seed);
    if (format == "json")
        std::cout << report_json(rep).dump(2) << "\n";
    else
        std::cout << report_text(rep);
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for composition algebras, their derivation and "
                 "triality Lie algebras, the extended magic square and the exceptional series"};
    app.require_subcommand(1);

    std::string alg_name;
    bool alg_md = false, alg_json = false;
    auto* alg = app.add_subcommand("algebra", "serialize a named algebra table");
    alg->add_option("name", alg_name)->required();
    alg->add_flag("--md", alg_md, "markdown multiplication table");
    alg->add_flag("--json", alg_json, "JSON table (default)");

    std::string lie_op = "derive", lie_alg, lie_file;
    int lie_comp = 1;
    auto* lie = app.add_subcommand("lie", "derivation/triality algebras as structure constants");
    lie->add_option("--op", lie_op)->check(CLI::IsMember({"derive", "triality", "intermediate"}));
    lie->add_option("--algebra", lie_alg, "named base algebra");
    lie->add_option("--file", lie_file, "Lie algebra JSON to echo");
    lie->add_option("--component", lie_comp)->check(CLI::Range(1, 3));

    std::string gr_preset, gr_file, gr_e, gr_h, gr_f;
    auto* gr = app.add_subcommand("grade", "grading by an sl2 triple");
    gr->add_option("--preset", gr_preset, "named algebra-and-triple preset");
    gr->add_option("--file", gr_file, "Lie algebra JSON");
    gr->add_option("--triple-e", gr_e, "comma-separated E coordinates");
    gr->add_option("--triple-h", gr_h, "comma-separated H coordinates");
    gr->add_option("--triple-f", gr_f, "comma-separated F coordinates");

    std::string mg_con = "tits", mg_fmt = "json";
    auto* mg = app.add_subcommand("magic", "the extended 5x5 square");
    mg->add_option("--construction", mg_con)->check(CLI::IsMember({"tits", "dims"}));
    mg->add_option("--format", mg_fmt)->check(CLI::IsMember({"md", "csv", "json"}));

    std::vector<std::string> se_ms;
    std::string se_fmt = "json";
    auto* se = app.add_subcommand("series", "exceptional series dimension formulas");
    se->add_option("--m", se_ms, "parameter values (rationals)");
    se->add_option("--format", se_fmt)->check(CLI::IsMember({"md", "csv", "json"}));

    std::string ck_suite = "core", ck_fmt = "text";
    uint64_t ck_seed = kDefaultSeed;
    auto* ck = app.add_subcommand("check", "run a verification suite");
    ck->add_option("--suite", ck_suite)->check(CLI::IsMember({"core", "square", "series", "all"}));
    ck->add_option("--seed", ck_seed, "seed for sampled Jacobi checks");
    ck->add_option("--format", ck_fmt)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kUsageError;
    }

    try {
        if (*alg) return cmd_algebra(alg_name, alg_md && !alg_json);
        if (*lie) return cmd_lie(lie_op, lie_alg, lie_file, lie_comp);
        if (*gr) return cmd_grade(gr_preset, gr_file, gr_e, gr_h, gr_f);
        if (*mg) return cmd_magic(mg_con, mg_fmt);
        if (*se) return cmd_series(se_ms, se_fmt);
        if (*ck) return cmd_check(ck_suite, ck_seed, ck_fmt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return kUsageError;
}
