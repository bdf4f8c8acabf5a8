#include <catch2/catch_amalgamated.hpp>

#include "magicforge/derivations.hpp"
#include "magicforge/grading.hpp"

using namespace mf;

namespace {

// The degree-lowering sl2 on the split octonions in the (u1,u2,E11,E12,E21,
// E22,v1,v2) coordinates: y acts as (u,A,v) -> (0,0,-(u|v)y read off columnwise).
MatQ rho2m(const MatQ& y) {
    auto act = [&](const Vec& c) {
        MatQ B(2, 2, {c[0], c[6], c[1], c[7]});
        MatQ B2 = -(B * y);
        return Vec{B2.at(0, 0), B2.at(1, 0), rat(0), rat(0),
                   rat(0),      rat(0),      B2.at(0, 1), B2.at(1, 1)};
    };
    MatQ m(8, 8);
    for (int j = 0; j < 8; ++j) {
        Vec col = act(basis_vec(8, j));
        for (int i = 0; i < 8; ++i) m.at(i, j) = col[i];
    }
    return m;
}

struct DerTriple {
    LieAlgebra lie;
    Subspace span;
    Triple t;
    MatQ Em, Hm, Fm;
};

// der(split octonion) with the triple generated by -rho2 of the elementary
// 2x2 matrices; H is diag(-1,-1,0,0,0,0,1,1).
DerTriple der_split_oct_triple() {
    AlgebraTable o = base_algebra("split_octonion");
    DerTriple d;
    d.span = derivation_space(o);
    d.lie = from_algebra_derivations(o);
    MatQ e12(2, 2, {rat(0), rat(1), rat(0), rat(0)});
    MatQ e21(2, 2, {rat(0), rat(0), rat(1), rat(0)});
    d.Em = -rho2m(e12);
    d.Fm = -rho2m(e21);
    d.Hm = MatQ::commutator(d.Em, d.Fm);
    d.t = Triple{d.span.coordinates_of(d.Em.flatten()), d.span.coordinates_of(d.Hm.flatten()),
                 d.span.coordinates_of(d.Fm.flatten())};
    return d;
}

Vec diag3(const MatQ& m) {
    Vec f = m.flatten(), w(3 * m.rows() * m.cols(), Rat(0));
    for (int c = 0; c < 3; ++c) std::copy(f.begin(), f.end(), w.begin() + c * f.size());
    return w;
}

}  // namespace

TEST_CASE("classical algebras have the expected dimensions and pass verification") {
    struct Row {
        const char* kind;
        int n, dim;
    };
    for (Row r : {Row{"gl", 3, 9}, Row{"sl", 2, 3}, Row{"sl", 4, 15}, Row{"sp", 4, 10},
                  Row{"sp", 6, 21}, Row{"so", 7, 21}, Row{"so", 8, 28}}) {
        LieAlgebra l = classical_algebra(r.kind, r.n);
        INFO(l.name);
        CHECK(l.dim == r.dim);
        CHECK(verify_lie(l).pass);
    }
    CHECK_THROWS_AS(classical_algebra("sp", 5), std::invalid_argument);
    CHECK_THROWS_AS(classical_algebra("e8", 8), std::invalid_argument);
}

TEST_CASE("classical triples satisfy the sl2 relations, rescaled ones do not") {
    for (auto [kind, n] : {std::pair<const char*, int>{"sl", 4}, {"sp", 6}, {"so", 7}}) {
        LieAlgebra l = classical_algebra(kind, n);
        Triple t = classical_triple(kind, n);
        INFO(l.name);
        CHECK(check_triple(l, t.E, t.H, t.F));
        Vec f2 = axpy(rat(1), t.F, t.F);
        CHECK_FALSE(check_triple(l, t.E, t.H, f2));
    }
}

TEST_CASE("orthogonal algebras of explicit forms") {
    CHECK(so_of_form(MatQ::identity(4)).dim == 6);

    AlgebraTable o = base_algebra("split_octonion");
    CHECK(so_of_form(*o.form).dim == 28);

    AlgebraTable s = base_algebra("sextonion");
    // degenerate form: preservers of the sextonion norm
    CHECK(so_of_form(*s.form).dim == 18);

    MatQ bad(2, 2, {rat(0), rat(1), rat(0), rat(0)});
    CHECK_THROWS_AS(so_of_form(bad), std::invalid_argument);
}

TEST_CASE("derivation algebra dimensions across the composition algebras") {
    struct Row {
        const char* name;
        int dim;
    };
    for (Row r : {Row{"reals", 0}, Row{"complex", 0}, Row{"split_complex", 0},
                  Row{"split_quaternion", 3}, Row{"sextonion", 8}, Row{"split_octonion", 14}}) {
        AlgebraTable a = base_algebra(r.name);
        INFO(a.name);
        Subspace d = derivation_space(a);
        CHECK(d.dim() == r.dim);
        if (r.dim > 0) {
            LieAlgebra l = from_algebra_derivations(a);
            CHECK(verify_lie(l).pass);
        }
    }
}

TEST_CASE("derivations of the split octonions: structure and fingerprint") {
    DerTriple d = der_split_oct_triple();
    Fingerprint f = fingerprint(d.lie);
    CHECK(f.dim == 14);
    CHECK(f.dim_center == 0);
    CHECK(f.dim_derived == 14);
    CHECK(f.killing_rank == 14);
    CHECK(f.radical_dim_lower_bound == 0);
}

TEST_CASE("the rho2 triple inside der(split octonion)") {
    DerTriple d = der_split_oct_triple();
    MatQ expected_h(8, 8);
    Vec diag{rat(-1), rat(-1), rat(0), rat(0), rat(0), rat(0), rat(1), rat(1)};
    for (int i = 0; i < 8; ++i) expected_h.at(i, i) = diag[i];
    CHECK(d.Hm == expected_h);
    CHECK(check_triple(d.lie, d.t.E, d.t.H, d.t.F));
    CHECK(check_extremal(d.lie, d.t.E));

    Grading g = grading_by_ad(d.lie, d.t.H, 2);
    CHECK(grading_part_dims(g) == std::vector<int>{1, 4, 4, 4, 1});
    std::vector<int> degs;
    for (auto& [deg, s] : g.parts) degs.push_back(deg);
    CHECK(degs == std::vector<int>{-2, -1, 0, 1, 2});
    CHECK(*grading_part(g, 2) == Subspace::from_vectors(14, {d.t.E}));
}

TEST_CASE("grading of sl2 by its coroot") {
    LieAlgebra l = classical_algebra("sl", 2);
    Triple t = classical_triple("sl", 2);
    Grading g = grading_by_ad(l, t.H, 2);
    CHECK(grading_part_dims(g) == std::vector<int>{1, 1, 1});
}

TEST_CASE("grading_by_ad rejects non-semisimple or wide gradings") {
    LieAlgebra l = classical_algebra("sl", 2);
    Triple t = classical_triple("sl", 2);
    // E is nilpotent: ad(E) has no integer eigenbasis spanning sl2
    CHECK_THROWS_AS(grading_by_ad(l, t.E, 4), std::domain_error);
    // window too small for the +-2 eigenvalues of ad(H)
    CHECK_THROWS_AS(grading_by_ad(l, t.H, 1), std::domain_error);
}

TEST_CASE("triality and fixed-unit triality dimensions") {
    struct Row {
        const char* name;
        int tri, fix;
    };
    for (Row r : {Row{"reals", 0, 0}, Row{"split_complex", 2, 1}, Row{"split_quaternion", 9, 6},
                  Row{"sextonion", 18, 13}, Row{"split_octonion", 28, 21}}) {
        AlgebraTable a = base_algebra(r.name);
        INFO(a.name);
        CHECK(triality_space(a).dim() == r.tri);
        CHECK(triality_space(a, 1).dim() == r.fix);
        if (r.tri > 0) CHECK(verify_lie(triality_algebra(a)).pass);
    }
}

TEST_CASE("the three fixed-unit triality subalgebras are isomorphic in fingerprint") {
    AlgebraTable a = base_algebra("split_octonion");
    LieAlgebra i1 = intermediate_triality(a, 1);
    LieAlgebra i2 = intermediate_triality(a, 2);
    LieAlgebra i3 = intermediate_triality(a, 3);
    CHECK(i1.dim == 21);
    CHECK(fingerprint(i1) == fingerprint(i2));
    CHECK(fingerprint(i1) == fingerprint(i3));
    CHECK_THROWS_AS(intermediate_triality(a, 0), std::invalid_argument);

    // pairwise intersections collapse to the diagonally embedded derivations
    Subspace d = derivations_in_triality(a);
    CHECK(d.dim() == 14);
    Subspace s1 = triality_space(a, 1), s2 = triality_space(a, 2), s3 = triality_space(a, 3);
    CHECK(s1.intersect(s2) == d);
    CHECK(s1.intersect(s3) == d);
    CHECK(s2.intersect(s3) == d);
}

TEST_CASE("dimension ledgers between derivations, triality and the norm algebra") {
    struct Row {
        const char* name;
    };
    for (const char* name : {"split_complex", "split_quaternion", "sextonion", "split_octonion"}) {
        AlgebraTable a = base_algebra(name);
        INFO(a.name);
        int der = derivation_space(a).dim();
        int fix = triality_space(a, 1).dim();
        int im = imaginary_part(a).dim();
        CHECK(fix == der + im);
    }
    // the norm preservers decompose the same way only from the sextonions up
    for (const char* name : {"sextonion", "split_octonion"}) {
        AlgebraTable a = base_algebra(name);
        INFO(a.name);
        CHECK(so_of_form(*a.form).dim ==
              triality_space(a, 1).dim() + imaginary_part(a).dim());
    }
}

TEST_CASE("intermediate subalgebra of der(split octonion)") {
    DerTriple d = der_split_oct_triple();
    IntermediateResult r = intermediate_subalgebra(d.lie, d.t);
    CHECK(r.gbar.dim == 3);
    CHECK(r.v_dim == 4);
    CHECK(r.gtilde.dim == 8);
    CHECK(verify_lie(r.gtilde).pass);

    Fingerprint f = fingerprint(r.gtilde);
    CHECK(f.dim == 8);
    CHECK(f.dim_center == 1);
    CHECK(f.dim_derived == 8);
    CHECK(f.killing_rank == 3);
    CHECK(f.radical_dim_lower_bound == 5);

    // gbar centralizes the triple and matches the centralizer subalgebra
    Subspace c = centralizer_space(d.lie, {d.t.E, d.t.H, d.t.F});
    CHECK(c == r.gbar_space);
    CHECK(fingerprint(r.gbar) == fingerprint(centralizer(d.lie, {d.t.E, d.t.H, d.t.F}, "c")));
}

TEST_CASE("intermediate subalgebras of the classical models") {
    struct Row {
        const char* kind;
        int n, gbar, v;
    };
    for (Row r : {Row{"sl", 4, 4, 4}, Row{"sp", 4, 3, 2}, Row{"so", 7, 6, 6}}) {
        LieAlgebra l = classical_algebra(r.kind, r.n);
        Triple t = classical_triple(r.kind, r.n);
        INFO(l.name);
        IntermediateResult ir = intermediate_subalgebra(l, t);
        CHECK(ir.gbar.dim == r.gbar);
        CHECK(ir.v_dim == r.v);
        CHECK(l.dim == ir.gbar.dim + 3 + 2 * ir.v_dim);
        CHECK(ir.gtilde.dim == ir.gbar.dim + ir.v_dim + 1);
    }
}

TEST_CASE("intermediate subalgebra of the split octonion triality algebra") {
    AlgebraTable o = base_algebra("split_octonion");
    Subspace ts = triality_space(o);
    LieAlgebra tri = triality_algebra(o);
    DerTriple d = der_split_oct_triple();
    Triple t{ts.coordinates_of(diag3(d.Em)), ts.coordinates_of(diag3(d.Hm)),
             ts.coordinates_of(diag3(d.Fm))};
    CHECK(check_triple(tri, t.E, t.H, t.F));
    Grading g = grading_by_ad(tri, t.H, 2);
    CHECK(grading_part_dims(g) == std::vector<int>{1, 8, 10, 8, 1});
    IntermediateResult ir = intermediate_subalgebra(tri, t);
    CHECK(ir.gbar.dim == 9);
    CHECK(ir.v_dim == 8);
    CHECK(ir.gtilde.dim == 18);
    Fingerprint f = fingerprint(ir.gtilde);
    CHECK(f.dim_center == 1);
    CHECK(f.dim_derived == 18);
    CHECK(f.killing_rank == 9);
}

TEST_CASE("parabolic and derived subalgebras around the intermediate one") {
    {
        DerTriple d = der_split_oct_triple();
        ParabolicResult r = parabolic_and_derived(d.lie, d.t);
        CHECK(r.g_p.dim == 9);
        CHECK(r.g_p_prime.dim == 8);
        CHECK(r.gtilde_prime.dim == 8);
        CHECK(r.g_p_prime_space == r.gtilde_prime_space);
    }
    {
        LieAlgebra l = classical_algebra("sl", 4);
        ParabolicResult r = parabolic_and_derived(l, classical_triple("sl", 4));
        CHECK(r.g_p.dim == 10);
        CHECK(r.g_p_prime.dim == 8);
        CHECK(r.gtilde_prime.dim == 8);
    }
    {
        // degenerate case V = 0: the chain drops one dimension at each step
        LieAlgebra l = classical_algebra("sl", 2);
        ParabolicResult r = parabolic_and_derived(l, classical_triple("sl", 2));
        CHECK(r.g_p.dim == 2);
        CHECK(r.g_p_prime.dim == 1);
        CHECK(r.gtilde_prime.dim == 0);
    }
}

TEST_CASE("centralizer of nothing is everything") {
    LieAlgebra l = classical_algebra("sl", 3);
    CHECK(centralizer_space(l, {}).dim() == l.dim);
    CHECK(center(l).dim() == 0);
    CHECK(center(classical_algebra("gl", 3)).dim() == 1);
}

TEST_CASE("heisenberg extension of the trivial algebra") {
    LieAlgebra triv;
    triv.name = "0";
    MatQ omega(2, 2, {rat(0), rat(1), rat(-1), rat(0)});
    LieAlgebra h = heisenberg_extension(triv, {}, omega, "heis3");
    CHECK(h.dim == 3);
    CHECK(verify_lie(h).pass);
    Fingerprint f = fingerprint(h);
    CHECK(f.dim_center == 1);
    CHECK(f.dim_derived == 1);
    CHECK(f.killing_rank == 0);
}

TEST_CASE("heisenberg extension validates its inputs") {
    LieAlgebra ab;  // one-dimensional abelian
    ab.name = "ab";
    ab.dim = 1;
    ab.bracket.assign(1, std::vector<SparseVec>(1));
    MatQ omega(2, 2, {rat(0), rat(1), rat(-1), rat(0)});
    MatQ sym(2, 2, {rat(0), rat(1), rat(1), rat(0)});
    MatQ degen(2, 2);
    MatQ stretch(2, 2, {rat(1), rat(0), rat(0), rat(1)});  // does not preserve omega
    CHECK_THROWS_AS(heisenberg_extension(ab, {}, omega, "x"), std::invalid_argument);
    CHECK_THROWS_AS(heisenberg_extension(ab, {MatQ(2, 2)}, sym, "x"), std::invalid_argument);
    CHECK_THROWS_AS(heisenberg_extension(ab, {MatQ(2, 2)}, degen, "x"), std::invalid_argument);
    CHECK_THROWS_AS(heisenberg_extension(ab, {stretch}, omega, "x"), std::invalid_argument);
    CHECK_NOTHROW(heisenberg_extension(ab, {MatQ(2, 2)}, omega, "x"));
}

TEST_CASE("the intermediate subalgebra is recovered as a heisenberg extension") {
    DerTriple d = der_split_oct_triple();
    IntermediateResult r = intermediate_subalgebra(d.lie, d.t);
    LieAlgebra rebuilt = heisenberg_extension(r.gbar, r.gbar_action, r.omega, "rebuilt");
    CHECK(rebuilt.dim == r.gtilde.dim);
    CHECK(verify_lie(rebuilt).pass);
    CHECK(fingerprint(rebuilt) == fingerprint(r.gtilde));
}

TEST_CASE("degree-raising maps on the sextonions") {
    Subspace psis = sextonion_degree_one_maps();
    CHECK(psis.dim() == 4);
    AlgebraTable s = base_algebra("sextonion");
    Subspace ders = derivation_space(s);
    for (int i = 0; i < psis.dim(); ++i) {
        Vec psi = psis.basis_vector(i);
        // psi kills the unit E11 + E22
        CHECK(psi[0] + psi[6] == 0);
        CHECK(psi[1] + psi[7] == 0);
        MatQ ext = sextonion_degree_one_matrix(psi);
        CHECK(ders.contains(ext.flatten()));
    }
}

TEST_CASE("verification catches a corrupted bracket table") {
    LieAlgebra l = classical_algebra("sl", 3);
    REQUIRE(verify_lie(l).pass);
    l.bracket[0][1] = {{0, rat(1)}};
    l.bracket[1][0] = {{0, rat(-1)}};
    VerifyReport rep = verify_lie(l);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.failures.empty());

    l.bracket[1][0] = {{0, rat(1)}};  // now antisymmetry is broken too
    rep = verify_lie(l);
    CHECK_FALSE(rep.pass);
}

TEST_CASE("seed mixing is deterministic and name-sensitive") {
    CHECK(mix_seed(7, "a") == mix_seed(7, "a"));
    CHECK(mix_seed(7, "a") != mix_seed(7, "b"));
    CHECK(mix_seed(7, "a") != mix_seed(8, "a"));
}
