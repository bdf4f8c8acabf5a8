#pragma once
#include "algebra.hpp"
#include "lie.hpp"

namespace mf {

struct Grading {
    std::vector<std::pair<int, Subspace>> parts;  // sorted by degree
};

inline bool check_triple(const LieAlgebra& l, const Vec& e, const Vec& h, const Vec& f) {
    Vec two_e = axpy(rat(2), e, Vec(l.dim, Rat(0)));
    Vec minus_two_f = axpy(rat(-2), f, Vec(l.dim, Rat(0)));
    return bracket_vec(l, e, f) == h && bracket_vec(l, h, e) == two_e &&
           bracket_vec(l, h, f) == minus_two_f;
}

// [e,[e,y]] is a scalar multiple of e for every basis y.
inline bool check_extremal(const LieAlgebra& l, const Vec& e) {
    if (is_zero(e)) throw std::invalid_argument("check_extremal: zero element");
    Subspace line = Subspace::from_vectors(l.dim, {e});
    for (int j = 0; j < l.dim; ++j) {
        Vec w = bracket_vec(l, e, bracket_vec(l, e, basis_vec(l.dim, j)));
        if (!is_zero(w) && !line.contains(w)) return false;
    }
    return true;
}

// Integer eigenspace decomposition of ad(h) within a window; requires the
// eigenspaces to exhaust the algebra and verifies bracket compatibility.
inline Grading grading_by_ad(const LieAlgebra& l, const Vec& h, int window = 4) {
    MatQ a = ad(l, h);
    Grading g;
    int total = 0;
    for (int d = -window; d <= window; ++d) {
        Subspace s = eigenspace(a, rat(d));
        if (s.dim() > 0) {
            g.parts.emplace_back(d, s);
            total += s.dim();
        }
    }
    if (total != l.dim)
        throw std::domain_error("grading_by_ad: eigenspaces do not exhaust the algebra (non-integer "
                                "or out-of-window eigenvalues)");
    auto part_of = [&](int d) -> const Subspace* {
        for (auto& [deg, s] : g.parts)
            if (deg == d) return &s;
        return nullptr;
    };
    for (auto& [da, sa] : g.parts)
        for (auto& [db, sb] : g.parts)
            for (int i = 0; i < sa.dim(); ++i)
                for (int j = 0; j < sb.dim(); ++j) {
                    Vec w = bracket_vec(l, sa.basis_vector(i), sb.basis_vector(j));
                    if (is_zero(w)) continue;
                    const Subspace* target = part_of(da + db);
                    if (!target || !target->contains(w))
                        throw std::domain_error("grading_by_ad: bracket leaves the grading at degrees " +
                                                std::to_string(da) + "," + std::to_string(db));
                }
    return g;
}

inline const Subspace* grading_part(const Grading& g, int d) {
    for (auto& [deg, s] : g.parts)
        if (deg == d) return &s;
    return nullptr;
}

inline std::vector<int> grading_part_dims(const Grading& g) {
    std::vector<int> r;
    for (auto& [d, s] : g.parts) r.push_back(s.dim());
    return r;
}

struct IntermediateResult {
    LieAlgebra gtilde;
    LieAlgebra gbar;
    int v_dim = 0;
    MatQ omega;
    // data for reconstruction: action of the gbar basis on the degree-1 part
    std::vector<MatQ> gbar_action;
    Subspace gbar_space;   // inside the ambient algebra
    Subspace v_space;
    Subspace gtilde_space;
    Grading grading;
};

// gtilde = gbar + V + span(E): centralizer of the triple, the degree-1 part,
// and the highest root line, with the symplectic form [v,w] = omega(v,w) E.
inline IntermediateResult intermediate_subalgebra(const LieAlgebra& l, const Triple& t) {
    if (!check_triple(l, t.E, t.H, t.F))
        throw std::invalid_argument("intermediate_subalgebra: not an sl2 triple");
    IntermediateResult r;
    r.grading = grading_by_ad(l, t.H, 2);
    const Subspace* top = grading_part(r.grading, 2);
    Subspace e_line = Subspace::from_vectors(l.dim, {t.E});
    if (!top || !(*top == e_line))
        throw std::invalid_argument("intermediate_subalgebra: degree-2 part is not the E line");
    if (!check_extremal(l, t.E))
        throw std::invalid_argument("intermediate_subalgebra: E is not extremal");
    r.gbar_space = centralizer_space(l, {t.E, t.H, t.F});
    const Subspace* deg1 = grading_part(r.grading, 1);
    r.v_space = deg1 ? *deg1 : Subspace::from_vectors(l.dim, {});
    r.v_dim = r.v_space.dim();
    if (l.dim != r.gbar_space.dim() + 3 + 2 * r.v_dim)
        throw std::domain_error("intermediate_subalgebra: dimension ledger fails");
    r.gtilde_space = r.gbar_space.sum(r.v_space).sum(e_line);
    r.gbar = restrict_to_subspace(l, r.gbar_space, "gbar(" + l.name + ")");
    r.gtilde = restrict_to_subspace(l, r.gtilde_space, "gtilde(" + l.name + ")");
    // omega via [v_i, v_j] = omega_ij E
    int v = r.v_dim;
    r.omega = MatQ(v, v);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j) {
            if (i == j) continue;
            Vec w = bracket_vec(l, r.v_space.basis_vector(i), r.v_space.basis_vector(j));
            if (is_zero(w)) continue;
            Vec c = e_line.coordinates_of(w);
            r.omega.at(i, j) = c[0];
        }
    if (v > 0 && rref(r.omega).rank != v)
        throw std::domain_error("intermediate_subalgebra: omega degenerate");
    for (int b = 0; b < r.gbar_space.dim(); ++b) {
        MatQ m(v, v);
        for (int j = 0; j < v; ++j) {
            Vec w = bracket_vec(l, r.gbar_space.basis_vector(b), r.v_space.basis_vector(j));
            Vec c = r.v_space.coordinates_of(w);  // gbar preserves degree 1
            for (int i = 0; i < v; ++i) m.at(i, j) = c[i];
        }
        if (!(m.transpose() * r.omega + r.omega * m).is_zero())
            throw std::domain_error("intermediate_subalgebra: omega not gbar-invariant");
        r.gbar_action.push_back(m);
    }
    return r;
}

struct ParabolicResult {
    LieAlgebra g_p;
    LieAlgebra g_p_prime;
    LieAlgebra gtilde_prime;
    Subspace g_p_space, g_p_prime_space, gtilde_prime_space;
};

// Nonnegative-degree parabolic and the derived subalgebras. Checked facts:
// gtilde sits in g_p with codimension one, gtilde' sits in g_p' with
// codimension at most one (they coincide whenever V is nonzero, since the
// grading line H already acts on V through the Levi part), and the E line
// is central in gtilde, exhibiting gtilde as a one-dimensional central
// extension over its quotient.
inline ParabolicResult parabolic_and_derived(const LieAlgebra& l, const Triple& t) {
    IntermediateResult ir = intermediate_subalgebra(l, t);
    ParabolicResult r;
    Subspace p = Subspace::from_vectors(l.dim, {});
    for (auto& [d, s] : ir.grading.parts)
        if (d >= 0) p = p.sum(s);
    r.g_p_space = p;
    r.g_p = restrict_to_subspace(l, p, "gp(" + l.name + ")");
    if (p.dim() != ir.gtilde_space.dim() + 1 || !p.contains(ir.gtilde_space))
        throw std::domain_error("parabolic_and_derived: gtilde not codim 1 in gp");
    auto derived_of = [&](const Subspace& s) {
        std::vector<Vec> gens;
        for (int i = 0; i < s.dim(); ++i)
            for (int j = i + 1; j < s.dim(); ++j) {
                Vec w = bracket_vec(l, s.basis_vector(i), s.basis_vector(j));
                if (!is_zero(w)) gens.push_back(w);
            }
        return Subspace::from_vectors(l.dim, gens);
    };
    r.g_p_prime_space = derived_of(p);
    r.gtilde_prime_space = derived_of(ir.gtilde_space);
    r.g_p_prime = restrict_to_subspace(l, r.g_p_prime_space, "gp'(" + l.name + ")");
    r.gtilde_prime = restrict_to_subspace(l, r.gtilde_prime_space, "gtilde'(" + l.name + ")");
    int codim = r.g_p_prime_space.dim() - r.gtilde_prime_space.dim();
    if (codim < 0 || codim > 1 || !r.g_p_prime_space.contains(r.gtilde_prime_space))
        throw std::domain_error("parabolic_and_derived: gtilde' not within codim 1 of gp'");
    // gtilde is a one-dimensional central extension: E spans a central line
    Subspace zt = center(restrict_to_subspace(l, ir.gtilde_space, "zt"));
    if (!Subspace::from_vectors(ir.gtilde_space.dim(), {ir.gtilde_space.coordinates_of(t.E)})
             .intersect(zt)
             .contains(ir.gtilde_space.coordinates_of(t.E)))
        throw std::domain_error("parabolic_and_derived: E line not central in gtilde");
    return r;
}

}  // namespace mf
