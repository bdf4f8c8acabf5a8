#pragma once
#include <atomic>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include "grading.hpp"
#include "io.hpp"

namespace mf {

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

struct RunReport {
    std::string suite;
    uint64_t seed = kDefaultSeed;
    std::vector<CheckResult> checks;
    int exit_code() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) return 1;
        return 0;
    }
};

inline int thread_cap() {
    if (const char* s = std::getenv("MAGICFORGE_THREADS")) {
        int n = std::atoi(s);
        if (n >= 1) return n;
    }
    int hw = (int)std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

namespace detail {

// a check body returns "" on pass, a mismatch description otherwise
using CheckFn = std::function<std::string()>;

struct Expect {
    std::ostringstream out;
    template <class A, class B>
    void eq(const A& got, const B& want, const std::string& what) {
        if (!(got == want))
            out << what << ": expected " << want << ", got " << got << "; ";
    }
    void that(bool ok, const std::string& what) {
        if (!ok) out << what << "; ";
    }
    std::string str() const { return out.str(); }
};

inline std::string dims_str(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// the degree-lowering sl2 pair of the split octonions in canonical
// coordinates, shared by the grading checks
inline std::array<MatQ, 3> split_oct_triple_mats() {
    MatQ e(8, 8), f(8, 8);
    e.at(6, 0) = e.at(7, 1) = rat(1);
    f.at(0, 6) = f.at(1, 7) = rat(1);
    return {e, MatQ::commutator(e, f), f};
}

inline void core_suite(std::vector<std::pair<std::string, CheckFn>>& items, uint64_t) {
    items.emplace_back("derivation dims (C,H,S,O) = (0,3,8,14)", [] {
        Expect e;
        const std::pair<const char*, int> want[]{{"split_complex", 0},
                                                 {"split_quaternion", 3},
                                                 {"sextonion", 8},
                                                 {"split_octonion", 14}};
        for (auto& [n, d] : want) e.eq(derivation_space(base_algebra(n)).dim(), d, n);
        return e.str();
    });
    items.emplace_back("triality dims (R,C,H,S,O) = (0,2,9,18,28)", [] {
        Expect e;
        const std::pair<const char*, int> want[]{{"reals", 0},
                                                 {"split_complex", 2},
                                                 {"split_quaternion", 9},
                                                 {"sextonion", 18},
                                                 {"split_octonion", 28}};
        for (auto& [n, d] : want) e.eq(cached_triality_space(base_algebra(n)).dim(), d, n);
        return e.str();
    });
    items.emplace_back("intermediate triality dims (R,C,H,S,O) = (0,1,6,13,21)", [] {
        Expect e;
        const std::pair<const char*, int> want[]{{"reals", 0},
                                                 {"split_complex", 1},
                                                 {"split_quaternion", 6},
                                                 {"sextonion", 13},
                                                 {"split_octonion", 21}};
        for (auto& [n, d] : want) e.eq(triality_space(base_algebra(n), 1).dim(), d, n);
        return e.str();
    });
    items.emplace_back("intermediate triality intersections equal der", [] {
        Expect e;
        for (const char* n : {"split_quaternion", "split_octonion"}) {
            AlgebraTable a = base_algebra(n);
            Subspace d = derivations_in_triality(a);
            Subspace s1 = triality_space(a, 1), s2 = triality_space(a, 2),
                     s3 = triality_space(a, 3);
            e.that(s1.intersect(s2) == d && s1.intersect(s3) == d && s2.intersect(s3) == d,
                   std::string(n) + " intersections");
        }
        return e.str();
    });
    items.emplace_back("grading of der(split_octonion) = (1,4,4,4,1)", [] {
        Expect e;
        AlgebraTable o = base_algebra("split_octonion");
        LieAlgebra l = from_algebra_derivations(o);
        Subspace ds = derivation_space(o);
        auto [em, hm, fm] = split_oct_triple_mats();
        Grading g = grading_by_ad(l, ds.coordinates_of(hm.flatten()), 2);
        e.eq(dims_str(grading_part_dims(g)), dims_str({1, 4, 4, 4, 1}), "part dims");
        return e.str();
    });
    items.emplace_back("grading of tri(split_octonion) = (1,8,10,8,1)", [] {
        Expect e;
        AlgebraTable o = base_algebra("split_octonion");
        Subspace ts = cached_triality_space(o);
        LieAlgebra l = triality_algebra(o);
        auto [em, hm, fm] = split_oct_triple_mats();
        Vec hf = hm.flatten(), w(3 * 64, Rat(0));
        for (int c = 0; c < 3; ++c) std::copy(hf.begin(), hf.end(), w.begin() + c * 64);
        Grading g = grading_by_ad(l, ts.coordinates_of(w), 2);
        e.eq(dims_str(grading_part_dims(g)), dims_str({1, 8, 10, 8, 1}), "part dims");
        return e.str();
    });
    items.emplace_back("split octonion 3-step algebra grading (2,4,2)", [] {
        Expect e;
        AlgebraTable o = base_algebra("split_octonion");
        e.that(check_graded(o).pass, "degree compatibility");
        std::map<int, int> parts;
        for (int d : *o.degrees) parts[d]++;
        e.that(parts == std::map<int, int>{{-1, 2}, {0, 4}, {1, 2}}, "part sizes");
        return e.str();
    });
    items.emplace_back("sextonion symbolic identities", [] {
        Expect e;
        AlgebraTable s = base_algebra("sextonion");
        e.that(check_identities(s, AlgebraIdentity::alternative).pass, "alternative");
        e.that(check_identities(s, AlgebraIdentity::composition).pass, "composition");
        e.that(check_identities(s, AlgebraIdentity::conj_antiautomorphism).pass,
               "conj antiautomorphism");
        return e.str();
    });
    items.emplace_back("sextonion radical dim = 2", [] {
        Expect e;
        e.eq(radical_of_form(base_algebra("sextonion")).dim(), 2, "radical");
        return e.str();
    });
    items.emplace_back("sextonion degree-one maps: dim 4, psi(1) = 0", [] {
        Expect e;
        Subspace psis = sextonion_degree_one_maps();
        e.eq(psis.dim(), 4, "dim");
        Subspace ders = derivation_space(base_algebra("sextonion"));
        for (int i = 0; i < psis.dim(); ++i) {
            Vec psi = psis.basis_vector(i);
            e.that(psi[0] + psi[6] == 0 && psi[1] + psi[7] == 0,
                   "psi(1) = 0 at basis " + std::to_string(i));
            e.that(ders.contains(sextonion_degree_one_matrix(psi).flatten()),
                   "extension is a derivation at basis " + std::to_string(i));
        }
        return e.str();
    });
    items.emplace_back("the two sl2 actions on the split octonions commute", [] {
        Expect e;
        AlgebraTable o = base_algebra("split_octonion");
        Subspace ds = derivation_space(o);
        // rho1(x): (A,B) -> ([x,A], xB); rho2(y): (A,B) -> (0, -By)
        auto rho = [&](bool first, const MatQ& y) {
            MatQ m(8, 8);
            for (int j = 0; j < 8; ++j) {
                Vec c = basis_vec(8, j);
                MatQ A(2, 2, {c[2], c[3], c[4], c[5]});
                MatQ B(2, 2, {c[0], c[6], c[1], c[7]});
                MatQ A2 = first ? MatQ::commutator(y, A) : MatQ(2, 2);
                MatQ B2 = first ? y * B : -(B * y);
                Vec col{B2.at(0, 0), B2.at(1, 0), A2.at(0, 0), A2.at(0, 1),
                        A2.at(1, 0), A2.at(1, 1), B2.at(0, 1), B2.at(1, 1)};
                for (int i = 0; i < 8; ++i) m.at(i, j) = col[i];
            }
            return m;
        };
        MatQ sl2[3]{MatQ(2, 2, {rat(0), rat(1), rat(0), rat(0)}),
                    MatQ(2, 2, {rat(1), rat(0), rat(0), rat(-1)}),
                    MatQ(2, 2, {rat(0), rat(0), rat(1), rat(0)})};
        for (auto& x : sl2)
            for (auto& y : sl2) {
                e.that(ds.contains(rho(true, x).flatten()), "rho1 is a derivation");
                e.that(ds.contains(rho(false, y).flatten()), "rho2 is a derivation");
                e.that(MatQ::commutator(rho(true, x), rho(false, y)).is_zero(),
                       "actions commute");
            }
        return e.str();
    });
    items.emplace_back("classical intermediate subalgebras", [] {
        Expect e;
        const std::tuple<const char*, int, int, int> want[]{
            {"sl", 4, 4, 4}, {"sp", 4, 3, 2}, {"so", 7, 6, 6}};
        for (auto& [kind, n, gbar, v] : want) {
            LieAlgebra l = classical_algebra(kind, n);
            IntermediateResult ir = intermediate_subalgebra(l, classical_triple(kind, n));
            e.eq(ir.gbar.dim, gbar, l.name + " gbar");
            e.eq(ir.v_dim, v, l.name + " V");
        }
        return e.str();
    });
}

inline void square_suite(std::vector<std::pair<std::string, CheckFn>>& items, uint64_t seed) {
    items.emplace_back("magic square dims (tits) and symmetry", [] {
        Expect e;
        const int want[5][5] = {{3, 8, 21, 36, 52},
                                {8, 16, 35, 56, 78},
                                {21, 35, 66, 99, 133},
                                {36, 56, 99, 144, 190},
                                {52, 78, 133, 190, 248}};
        auto t = magic_square_table(SquareConstruction::tits);
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c)
                e.eq(t[r][c].dim, want[r][c], t[r][c].row_algebra + "x" + t[r][c].col_algebra);
        return e.str();
    });
    items.emplace_back("three-way dimension agreement", [] {
        Expect e;
        auto tits = magic_square_table(SquareConstruction::tits);
        auto tri = magic_square_table(SquareConstruction::triality_dims);
        std::vector<AlgebraTable> algs;
        for (const auto& n : square_algebra_names()) algs.push_back(base_algebra(n));
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c) {
                e.eq(tri[r][c].dim, tits[r][c].dim, "triality cell");
                e.eq(vinberg_dims(algs[r], algs[c]).total, tits[r][c].dim, "vinberg cell");
            }
        return e.str();
    });
    items.emplace_back("T(S,H3(R)) dim=36", [] {
        Expect e;
        AlgebraTable s = base_algebra("sextonion");
        AlgebraTable jr = jordan_hermitian(base_algebra("reals"));
        LieAlgebra l = tits_construction(s, &jr, frozen_tits_coefficients());
        e.eq(l.dim, 36, "dim");
        e.that(verify_lie(l).pass, "Jacobi");
        return e.str();
    });
    items.emplace_back("exhaustive Jacobi on small cells", [] {
        Expect e;
        const std::pair<const char*, const char*> cells[]{
            {"split_quaternion", "reals"}, {"split_octonion", "reals"}};
        for (auto& [an, bn] : cells) {
            AlgebraTable a = base_algebra(an);
            AlgebraTable j = jordan_hermitian(base_algebra(bn));
            LieAlgebra l = tits_construction(a, &j, frozen_tits_coefficients());
            e.that(verify_lie(l).pass, std::string(an) + " x H3(" + bn + ")");
        }
        return e.str();
    });
    items.emplace_back("sampled Jacobi on a large cell", [seed] {
        Expect e;
        AlgebraTable o = base_algebra("split_octonion");
        AlgebraTable j = jordan_hermitian(base_algebra("split_complex"));
        LieAlgebra l = tits_construction(o, &j, frozen_tits_coefficients());
        e.eq(l.dim, 78, "dim");
        VerifyReport rep = verify_lie(l, seed, 2000);
        e.that(rep.pass && rep.sampled, "sampled Jacobi");
        return e.str();
    });
    items.emplace_back("bigradings collapse and totals", [] {
        Expect e;
        const std::pair<int, int> want[]{{1, 52}, {2, 78}, {4, 133}, {6, 190}, {8, 248}};
        for (auto& [m, t] : want) e.eq(bigrading(m).total, t, "m=" + std::to_string(m));
        return e.str();
    });
}

inline void series_suite(std::vector<std::pair<std::string, CheckFn>>& items, uint64_t) {
    items.emplace_back("series dims at the square columns", [] {
        Expect e;
        const int ms[]{1, 2, 4, 6, 8};
        const int subs[]{21, 35, 66, 99, 133};
        const int excs[]{52, 78, 133, 190, 248};
        for (int i = 0; i < 5; ++i) {
            SeriesPoint p = series_dims(rat(ms[i]));
            e.eq(rat_str(p.dim_sub), std::to_string(subs[i]), "dim_sub m=" + std::to_string(ms[i]));
            e.eq(rat_str(p.dim_exc), std::to_string(excs[i]), "dim_exc m=" + std::to_string(ms[i]));
        }
        return e.str();
    });
    items.emplace_back("series dimension ledger polynomial", [] {
        Expect e;
        e.that(series_ledger_polynomial().is_zero(), "identity");
        return e.str();
    });
    items.emplace_back("triangle involution values", [] {
        Expect e;
        e.eq(rat_str(triangle_involution(rat(6))), "-3/2", "image of 6");
        e.eq(rat_str(triangle_involution(rat(8))), "-8/5", "image of 8");
        return e.str();
    });
    items.emplace_back("super rows match the series formulas", [] {
        Expect e;
        SuperSeriesReport rep = check_super_series();
        for (auto& row : rep.rows)
            e.that(row.pass, row.label + " at m=" + rat_str(row.m));
        return e.str();
    });
    items.emplace_back("osp(1|2) character identity", [] {
        Expect e;
        e.that(check_dus(), "check_dus");
        return e.str();
    });
}

}  // namespace detail

inline RunReport run_suite(const std::string& suite, uint64_t seed = kDefaultSeed) {
    std::vector<std::pair<std::string, detail::CheckFn>> items;
    if (suite == "core" || suite == "all") detail::core_suite(items, seed);
    if (suite == "square" || suite == "all") detail::square_suite(items, seed);
    if (suite == "series" || suite == "all") detail::series_suite(items, seed);
    if (items.empty()) throw std::invalid_argument("run_suite: unknown suite " + suite);
    RunReport rep;
    rep.suite = suite;
    rep.seed = seed;
    rep.checks.resize(items.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < items.size();) {
            CheckResult& r = rep.checks[i];
            r.name = items[i].first;
            try {
                std::string msg = items[i].second();
                r.status = msg.empty() ? CheckStatus::pass : CheckStatus::fail;
                r.detail = msg;
            } catch (const std::exception& ex) {
                r.status = CheckStatus::fail;
                r.detail = std::string("exception: ") + ex.what();
            }
        }
    };
    int n = std::min<int>(thread_cap(), (int)items.size());
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return rep;
}

inline std::string status_str(CheckStatus s) {
    return s == CheckStatus::pass ? "pass" : s == CheckStatus::fail ? "fail" : "skip";
}

inline std::string report_text(const RunReport& r) {
    std::string s = "suite: " + r.suite + " (seed " + std::to_string(r.seed) + ")\n";
    for (const auto& c : r.checks) {
        s += "[" + status_str(c.status) + "] " + c.name;
        if (!c.detail.empty()) s += " -- " + c.detail;
        s += "\n";
    }
    s += r.exit_code() == 0 ? "result: pass\n" : "result: FAIL\n";
    return s;
}

inline json report_json(const RunReport& r) {
    json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(
            json{{"name", c.name}, {"status", status_str(c.status)}, {"detail", c.detail}});
    j["checks"] = checks;
    j["exit_code"] = r.exit_code();
    return j;
}

}  // namespace mf
