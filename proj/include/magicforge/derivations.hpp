#pragma once
#include "algebra.hpp"
#include "construct.hpp"
#include "lie.hpp"

namespace mf {

// Solution space of the Leibniz constraint d(e_i e_j) = d(e_i)e_j + e_i d(e_j),
// as flattened matrices.
inline Subspace derivation_space(const AlgebraTable& a) {
    int n = a.dim;
    LinearSystem sys(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // rows indexed by output coordinate k; unknown D_{rc} at r*n+c
            std::vector<SparseVec> rows(n);
            for (int l = 0; l < n; ++l)
                if (a.mul[i][j][l] != 0)
                    for (int k = 0; k < n; ++k) rows[k].emplace_back(k * n + l, a.mul[i][j][l]);
            for (int r = 0; r < n; ++r) {
                // -(d e_i) e_j: the r-th image coordinate multiplies e_r e_j
                for (int k = 0; k < n; ++k) {
                    if (a.mul[r][j][k] != 0) rows[k].emplace_back(r * n + i, -a.mul[r][j][k]);
                    if (a.mul[i][r][k] != 0) rows[k].emplace_back(r * n + j, -a.mul[i][r][k]);
                }
            }
            for (auto& row : rows)
                if (!row.empty()) sys.add_row_sparse(row);
        }
    return sys.nullspace();
}

inline LieAlgebra from_algebra_derivations(const AlgebraTable& a) {
    int n = a.dim;
    return lie_from_span("der(" + a.name + ")", derivation_space(a),
                         [n](const Vec& x, const Vec& y) { return mat_bracket_flat(n, x, y); });
}

// Triples (t1,t2,t3) of form-skew maps with t1(x) y + x t2(y) = t3(xy),
// flattened side by side; bracket componentwise.
inline Subspace triality_space(const AlgebraTable& a, int fix_unit_of = 0) {
    if (!a.form || !a.unit) throw std::invalid_argument("triality_space: missing form/unit");
    int n = a.dim, nn = n * n;
    LinearSystem sys(3 * nn);
    auto at = [&](int comp, int r, int c) { return comp * nn + r * n + c; };
    // skewness of each component: sum_k t_{ki} g_{kj} + g_{ik} t_{kj} = 0
    for (int comp = 0; comp < 3; ++comp)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                SparseVec row;
                for (int k = 0; k < n; ++k) {
                    if (a.form->at(k, j) != 0) row.emplace_back(at(comp, k, i), a.form->at(k, j));
                    if (a.form->at(i, k) != 0) row.emplace_back(at(comp, k, j), a.form->at(i, k));
                }
                if (!row.empty()) sys.add_row_sparse(row);
            }
    // compatibility on basis pairs
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<SparseVec> rows(n);
            for (int r = 0; r < n; ++r)
                for (int k = 0; k < n; ++k) {
                    if (a.mul[r][j][k] != 0) rows[k].emplace_back(at(0, r, i), a.mul[r][j][k]);
                    if (a.mul[i][r][k] != 0) rows[k].emplace_back(at(1, r, j), a.mul[i][r][k]);
                }
            for (int l = 0; l < n; ++l)
                if (a.mul[i][j][l] != 0)
                    for (int k = 0; k < n; ++k) rows[k].emplace_back(at(2, k, l), -a.mul[i][j][l]);
            for (auto& row : rows)
                if (!row.empty()) sys.add_row_sparse(row);
        }
    // optionally pin t_i(1) = 0 for one chosen component
    if (fix_unit_of >= 1) {
        int comp = fix_unit_of - 1;
        for (int k = 0; k < n; ++k) {
            SparseVec row;
            for (int c = 0; c < n; ++c)
                if ((*a.unit)[c] != 0) row.emplace_back(at(comp, k, c), (*a.unit)[c]);
            sys.add_row_sparse(row);
        }
    }
    return sys.nullspace();
}

namespace detail {
inline Vec triality_bracket(int n, const Vec& x, const Vec& y) {
    int nn = n * n;
    Vec r(3 * nn, Rat(0));
    for (int comp = 0; comp < 3; ++comp) {
        Vec a(x.begin() + comp * nn, x.begin() + (comp + 1) * nn);
        Vec b(y.begin() + comp * nn, y.begin() + (comp + 1) * nn);
        Vec c = mat_bracket_flat(n, a, b);
        std::copy(c.begin(), c.end(), r.begin() + comp * nn);
    }
    return r;
}
}  // namespace detail

inline LieAlgebra triality_algebra(const AlgebraTable& a) {
    int n = a.dim;
    return lie_from_span("tri(" + a.name + ")", triality_space(a),
                         [n](const Vec& x, const Vec& y) { return detail::triality_bracket(n, x, y); });
}

// Subalgebra of the triality algebra with t_i(1) = 0, i in {1,2,3}.
inline LieAlgebra intermediate_triality(const AlgebraTable& a, int i) {
    if (i < 1 || i > 3) throw std::invalid_argument("intermediate_triality: component in {1,2,3}");
    int n = a.dim;
    return lie_from_span("int" + std::to_string(i) + "(" + a.name + ")", triality_space(a, i),
                         [n](const Vec& x, const Vec& y) { return detail::triality_bracket(n, x, y); });
}

// Diagonal embedding of the derivation algebra into the triality ambient.
inline Subspace derivations_in_triality(const AlgebraTable& a) {
    Subspace d = derivation_space(a);
    int nn = a.dim * a.dim;
    std::vector<Vec> gens;
    for (int i = 0; i < d.dim(); ++i) {
        Vec v = d.basis_vector(i), w(3 * nn, Rat(0));
        for (int comp = 0; comp < 3; ++comp) std::copy(v.begin(), v.end(), w.begin() + comp * nn);
        gens.push_back(w);
    }
    return Subspace::from_vectors(3 * nn, gens);
}

// D_{x,y} = [L_x,L_y] + [L_x,R_y] + [R_x,R_y]; a derivation for alternative
// algebras.
inline MatQ inner_derivation(const AlgebraTable& a, const Vec& x, const Vec& y) {
    MatQ lx = left_mult_matrix(a, x), ly = left_mult_matrix(a, y);
    MatQ rx = right_mult_matrix(a, x), ry = right_mult_matrix(a, y);
    return MatQ::commutator(lx, ly) + MatQ::commutator(lx, ry) + MatQ::commutator(rx, ry);
}

// Degree-raising maps psi from the matrix block of the sextonions into the
// module, extended by zero: psi(q1 q2) = q2 psi(q1) + conj(q1) psi(q2).
// Unknowns: psi(E11),psi(E12),psi(E21),psi(E22), two coordinates each.
inline Subspace sextonion_degree_one_maps() {
    AlgebraTable q = base_algebra("split_quaternion");
    LinearSystem sys(8);
    auto act = [&](int qidx, int col, bool conj) {
        // 2x2 matrix of basis element qidx (optionally adjugated), column col
        detail::M2 m{qidx == 0 ? 1 : 0, qidx == 1 ? 1 : 0, qidx == 2 ? 1 : 0, qidx == 3 ? 1 : 0};
        if (conj) m = m.adj();
        return col == 0 ? std::pair<Rat, Rat>{m.a, m.c} : std::pair<Rat, Rat>{m.b, m.d};
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            SparseVec row0, row1;  // two module coordinates of the defect
            Vec p = multiply(q, basis_vec(4, i), basis_vec(4, j));
            for (int l = 0; l < 4; ++l)
                if (p[l] != 0) {
                    row0.emplace_back(2 * l, p[l]);
                    row1.emplace_back(2 * l + 1, p[l]);
                }
            // -q2 psi(q1): psi(q1) has unknowns (2i, 2i+1); q2 = e_j acts as matrix
            for (int c = 0; c < 2; ++c) {
                auto [m0, m1] = act(j, c, false);
                if (m0 != 0) row0.emplace_back(2 * i + c, -m0);
                if (m1 != 0) row1.emplace_back(2 * i + c, -m1);
            }
            // -conj(q1) psi(q2)
            for (int c = 0; c < 2; ++c) {
                auto [m0, m1] = act(i, c, true);
                if (m0 != 0) row0.emplace_back(2 * j + c, -m0);
                if (m1 != 0) row1.emplace_back(2 * j + c, -m1);
            }
            if (!row0.empty()) sys.add_row_sparse(row0);
            if (!row1.empty()) sys.add_row_sparse(row1);
        }
    return sys.nullspace();
}

// Extension of such a psi to a 6x6 derivation matrix of the sextonions in
// the (u1,u2,E11,E12,E21,E22) coordinates.
inline MatQ sextonion_degree_one_matrix(const Vec& psi) {
    MatQ d(6, 6);
    for (int l = 0; l < 4; ++l) {
        d.at(0, 2 + l) = psi[2 * l];
        d.at(1, 2 + l) = psi[2 * l + 1];
    }
    return d;
}

}  // namespace mf
