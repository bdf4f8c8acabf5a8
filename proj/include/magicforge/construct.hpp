#pragma once
#include <array>

#include "algebra.hpp"

namespace mf {
namespace detail {

// 2x2 matrices over coordinates (a,b,c,d) = (E11,E12,E21,E22) entries, used
// by the split quaternion / split octonion constructors.
struct M2 {
    Rat a, b, c, d;
    M2 operator*(const M2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    M2 operator+(const M2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    M2 adj() const { return {d, -b, -c, a}; }  // conjugation = adjugate
    Rat det() const { return a * d - b * c; }
};
struct C2 {
    Rat x, y;  // column vector
};
inline C2 mul_mv(const M2& m, const C2& v) { return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y}; }
inline C2 add(const C2& a, const C2& b) { return {a.x + b.x, a.y + b.y}; }

// Element of the split octonions in the Zorn-style presentation: a 2x2
// matrix block A with two column vectors u, v forming B = (u | v).
struct SplitOct {
    C2 u;
    M2 a;
    C2 v;
};

// (A1,B1)(A2,B2) = (A1 A2 + B2 adj(B1), adj(A1) B2 + A2 B1), columnwise on B.
// B2 adj(B1) expands to the rank-one update below: with B = (u | v),
// adj(B1) has rows (v1.y, -v1.x) and (-u1.y, u1.x).
inline SplitOct so_mul(const SplitOct& p, const SplitOct& q) {
    SplitOct r;
    M2 cross{q.u.x * p.v.y - q.v.x * p.u.y, -q.u.x * p.v.x + q.v.x * p.u.x,
             q.u.y * p.v.y - q.v.y * p.u.y, -q.u.y * p.v.x + q.v.y * p.u.x};
    r.a = (p.a * q.a) + cross;
    r.u = add(mul_mv(p.a.adj(), q.u), mul_mv(q.a, p.u));
    r.v = add(mul_mv(p.a.adj(), q.v), mul_mv(q.a, p.v));
    return r;
}

inline SplitOct so_basis(int i) {
    SplitOct z{{0, 0}, {0, 0, 0, 0}, {0, 0}};
    Rat* slot[8] = {&z.u.x, &z.u.y, &z.a.a, &z.a.b, &z.a.c, &z.a.d, &z.v.x, &z.v.y};
    *slot[i] = 1;
    return z;
}

inline Vec so_coords(const SplitOct& z) {
    return {z.u.x, z.u.y, z.a.a, z.a.b, z.a.c, z.a.d, z.v.x, z.v.y};
}

}  // namespace detail

inline AlgebraTable subalgebra_span(const AlgebraTable& a, const std::vector<int>& keep,
                                    const std::string& name);

// Doubling: pairs (A,B) with (A1,B1)(A2,B2) = (A1 A2 - eps B2 conj(B1),
// conj(A1) B2 + A2 B1), conjugate (conj A, -B), norm N(A) + eps N(B).
// Basis: first the A copy, then the B copy.
inline AlgebraTable cayley_dickson(const AlgebraTable& base, const Rat& eps,
                                   const std::string& name) {
    if (!base.conj || !base.form || !base.unit)
        throw std::invalid_argument("cayley_dickson: base lacks conj/form/unit");
    int n = base.dim, d = 2 * n;
    AlgebraTable a;
    a.name = name;
    a.dim = d;
    a.mul.assign(d, std::vector<Vec>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec A1(n, Rat(0)), B1(n, Rat(0)), A2(n, Rat(0)), B2(n, Rat(0));
            (i < n ? A1 : B1)[i % n] = 1;
            (j < n ? A2 : B2)[j % n] = 1;
            Vec ra = multiply(base, A1, A2);
            Vec cross = multiply(base, B2, conj_of(base, B1));
            for (int k = 0; k < n; ++k) ra[k] -= eps * cross[k];
            Vec rb = axpy(rat(1), multiply(base, conj_of(base, A1), B2), multiply(base, A2, B1));
            Vec out(d, Rat(0));
            for (int k = 0; k < n; ++k) {
                out[k] = ra[k];
                out[n + k] = rb[k];
            }
            a.mul[i][j] = out;
        }
    a.basis.resize(d);
    for (int i = 0; i < n; ++i) {
        a.basis[i] = base.basis.empty() ? "a" + std::to_string(i) : base.basis[i];
        a.basis[n + i] = "l*" + a.basis[i];
    }
    Vec u(d, Rat(0));
    for (int k = 0; k < n; ++k) u[k] = (*base.unit)[k];
    a.unit = u;
    MatQ cj(d, d);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) cj.at(i, j) = base.conj->at(i, j);
        cj.at(n + i, n + i) = -1;
    }
    a.conj = cj;
    MatQ f(d, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            f.at(i, j) = base.form->at(i, j);
            f.at(n + i, n + j) = eps * base.form->at(i, j);
        }
    a.form = f;
    validate(a);
    return a;
}

// Base composition algebras in fixed bases. The split octonions use the
// basis (u1, u2, E11, E12, E21, E22, v1, v2), graded -1/0/+1, with the
// degree-zero part the split quaternions as 2x2 matrices; the sextonions
// are the degree <= 0 part.
inline AlgebraTable base_algebra(const std::string& name) {
    using namespace detail;
    AlgebraTable a;
    a.name = name;
    if (name == "reals") {
        a.dim = 1;
        a.mul = {{{rat(1)}}};
        a.basis = {"1"};
        a.unit = Vec{rat(1)};
        a.conj = MatQ::identity(1);
        a.form = MatQ(1, 1, {rat(2)});
        return a;
    }
    if (name == "complex" || name == "split_complex") {
        Rat eps = (name == "complex") ? rat(1) : rat(-1);
        a = cayley_dickson(base_algebra("reals"), eps, name);
        a.basis = {"1", "i"};
        return a;
    }
    if (name == "quaternion") {
        a = cayley_dickson(base_algebra("complex"), rat(1), name);
        a.basis = {"1", "i", "j", "k"};
        return a;
    }
    if (name == "split_quaternion") {
        // 2x2 matrix units E11, E12, E21, E22; conjugation is the adjugate,
        // norm the determinant.
        a.dim = 4;
        a.basis = {"E11", "E12", "E21", "E22"};
        a.mul.assign(4, std::vector<Vec>(4, Vec(4, Rat(0))));
        auto idx = [](int i, int j) { return 2 * i + j; };
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l)
                        if (j == k) a.mul[idx(i, j)][idx(k, l)][idx(i, l)] = 1;
        a.unit = Vec{rat(1), rat(0), rat(0), rat(1)};
        MatQ cj(4, 4);
        cj.at(0, 3) = 1;
        cj.at(3, 0) = 1;
        cj.at(1, 1) = -1;
        cj.at(2, 2) = -1;
        a.conj = cj;
        a.form = polarize(4, [](const Vec& x) -> Rat { return x[0] * x[3] - x[1] * x[2]; });
        validate(a);
        return a;
    }
    if (name == "octonion") {
        a = cayley_dickson(base_algebra("quaternion"), rat(1), name);
        return a;
    }
    if (name == "split_octonion" || name == "sextonion") {
        AlgebraTable o;
        o.name = "split_octonion";
        o.dim = 8;
        o.basis = {"u1", "u2", "E11", "E12", "E21", "E22", "v1", "v2"};
        o.mul.assign(8, std::vector<Vec>(8));
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) o.mul[i][j] = so_coords(so_mul(so_basis(i), so_basis(j)));
        o.unit = Vec{rat(0), rat(0), rat(1), rat(0), rat(0), rat(1), rat(0), rat(0)};
        MatQ cj(8, 8);
        cj.at(0, 0) = -1;
        cj.at(1, 1) = -1;
        cj.at(2, 5) = 1;
        cj.at(5, 2) = 1;
        cj.at(3, 3) = -1;
        cj.at(4, 4) = -1;
        cj.at(6, 6) = -1;
        cj.at(7, 7) = -1;
        o.conj = cj;
        // N = det(A) - det(u | v)
        o.form = polarize(8, [](const Vec& x) -> Rat {
            return x[2] * x[5] - x[3] * x[4] - (x[0] * x[7] - x[1] * x[6]);
        });
        o.degrees = std::vector<int>{-1, -1, 0, 0, 0, 0, 1, 1};
        validate(o);
        if (name == "split_octonion") return o;
        return subalgebra_span(o, {0, 1, 2, 3, 4, 5}, "sextonion");
    }
    throw std::invalid_argument("base_algebra: unknown name " + name);
}

// Restriction of a table to a sub-collection of basis indices. Throws if
// the span is not closed under multiplication or the inherited structure.
inline AlgebraTable subalgebra_span(const AlgebraTable& a, const std::vector<int>& keep,
                                    const std::string& name) {
    int d = (int)keep.size();
    std::vector<int> back(a.dim, -1);
    for (int i = 0; i < d; ++i) back[keep[i]] = i;
    auto restrict_vec = [&](const Vec& v) {
        Vec r(d, Rat(0));
        for (int k = 0; k < a.dim; ++k) {
            if (back[k] >= 0)
                r[back[k]] = v[k];
            else if (v[k] != 0)
                throw std::domain_error("subalgebra_span: not closed at " + name);
        }
        return r;
    };
    AlgebraTable s;
    s.name = name;
    s.dim = d;
    s.mul.assign(d, std::vector<Vec>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) s.mul[i][j] = restrict_vec(a.mul[keep[i]][keep[j]]);
    for (int i : keep) s.basis.push_back(a.basis.empty() ? "e" + std::to_string(i) : a.basis[i]);
    if (a.unit) s.unit = restrict_vec(*a.unit);
    if (a.conj) {
        MatQ cj(d, d);
        for (int i = 0; i < d; ++i) {
            Vec col = restrict_vec(a.conj->operator*(basis_vec(a.dim, keep[i])));
            for (int k = 0; k < d; ++k) cj.at(k, i) = col[k];
        }
        s.conj = cj;
    }
    if (a.form) {
        MatQ f(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) f.at(i, j) = a.form->at(keep[i], keep[j]);
        s.form = f;
    }
    if (a.degrees) {
        std::vector<int> deg;
        for (int i : keep) deg.push_back((*a.degrees)[i]);
        s.degrees = deg;
    }
    validate(s);
    return s;
}

// Split null extension of a 4-dimensional associative base by its
// 2-dimensional column module: (q1, m1)(q2, m2) = (q1 q2, conj(q1) m2 + q2 m1),
// conjugate (conj q, -m), norm N(q). The module is the radical of the form.
inline AlgebraTable split_null_extension(const AlgebraTable& base) {
    if (base.dim != 4 || !base.conj || !base.unit || !base.form)
        throw std::invalid_argument("split_null_extension: base must be a 4-dim matrix algebra");
    // associativity of the base is load-bearing for the module action
    {
        int n = base.dim;
        PolyVec x = generic_vector(n, 0), y = generic_vector(n, n), z = generic_vector(n, 2 * n);
        PolyVec l = multiply_sym(base, multiply_sym(base, x, y), z);
        PolyVec r = multiply_sym(base, x, multiply_sym(base, y, z));
        for (int k = 0; k < n; ++k)
            if (!(l[k] - r[k]).is_zero())
                throw std::invalid_argument("split_null_extension: base not associative");
    }
    // module = column vectors; q acts on m as the 2x2 matrix of q, and the
    // second slot uses the conjugate action. Present q in matrix-unit
    // coordinates via a fixed isomorphism when the base is the split
    // quaternions in its E_ij basis; otherwise reject.
    if (base.basis != std::vector<std::string>{"E11", "E12", "E21", "E22"})
        throw std::invalid_argument("split_null_extension: base must use the matrix-unit basis");
    int d = 6;
    AlgebraTable a;
    a.name = base.name + "+module";
    a.dim = d;
    a.basis = {"E11", "E12", "E21", "E22", "m1", "m2"};
    a.mul.assign(d, std::vector<Vec>(d, Vec(d, Rat(0))));
    auto qpart = [&](int i) { return i < 4 ? i : -1; };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec out(d, Rat(0));
            if (qpart(i) >= 0 && qpart(j) >= 0) {
                Vec p = multiply(base, basis_vec(4, i), basis_vec(4, j));
                for (int k = 0; k < 4; ++k) out[k] = p[k];
            } else if (qpart(i) >= 0) {
                // q * m = adj(q) m, the conjugate action on the left slot
                detail::M2 q{i == 0 ? 1 : 0, i == 1 ? 1 : 0, i == 2 ? 1 : 0, i == 3 ? 1 : 0};
                detail::C2 m{j == 4 ? 1 : 0, j == 5 ? 1 : 0};
                detail::C2 r = detail::mul_mv(q.adj(), m);
                out[4] = r.x;
                out[5] = r.y;
            } else if (qpart(j) >= 0) {
                // m * q: matrix q times column m, m = (x4, x5)
                detail::M2 q{j == 0 ? 1 : 0, j == 1 ? 1 : 0, j == 2 ? 1 : 0, j == 3 ? 1 : 0};
                detail::C2 m{i == 4 ? 1 : 0, i == 5 ? 1 : 0};
                detail::C2 r = detail::mul_mv(q, m);
                out[4] = r.x;
                out[5] = r.y;
            }
            a.mul[i][j] = out;
        }
    a.unit = Vec{rat(1), rat(0), rat(0), rat(1), rat(0), rat(0)};
    MatQ cj(6, 6);
    cj.at(0, 3) = 1;
    cj.at(3, 0) = 1;
    cj.at(1, 1) = -1;
    cj.at(2, 2) = -1;
    cj.at(4, 4) = -1;
    cj.at(5, 5) = -1;
    a.conj = cj;
    MatQ f(6, 6);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) f.at(i, j) = base.form->at(i, j);
    a.form = f;
    a.degrees = std::vector<int>{0, 0, 0, 0, -1, -1};
    validate(a);
    return a;
}

// Jordan algebra of 3x3 Hermitian matrices over a composition algebra, with
// the symmetrized product X o Y = (XY + YX)/2 and the trace form.
// Basis: the three diagonal idempotents, then for each off-diagonal slot
// (0,1), (0,2), (1,2) one element per base basis vector.
inline AlgebraTable jordan_hermitian(const AlgebraTable& b, int n = 3) {
    if (n != 3) throw std::invalid_argument("jordan_hermitian: only 3x3 supported");
    if (!b.conj || !b.unit) throw std::invalid_argument("jordan_hermitian: base lacks conj/unit");
    int m = b.dim, d = 3 + 3 * m;
    const std::array<std::pair<int, int>, 3> slots{{{0, 1}, {0, 2}, {1, 2}}};

    using Mat3 = std::array<std::array<Vec, 3>, 3>;  // entries in b-coords
    auto zero3 = [&]() {
        Mat3 z;
        for (auto& r : z)
            for (auto& e : r) e = Vec(m, Rat(0));
        return z;
    };
    auto embed = [&](int idx) {
        Mat3 z = zero3();
        if (idx < 3) {
            z[idx][idx] = *b.unit;
        } else {
            int s = (idx - 3) / m, t = (idx - 3) % m;
            auto [i, j] = slots[s];
            z[i][j] = basis_vec(m, t);
            z[j][i] = conj_of(b, basis_vec(m, t));
        }
        return z;
    };
    auto matmul = [&](const Mat3& x, const Mat3& y) {
        Mat3 z = zero3();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    z[i][j] = axpy(rat(1), multiply(b, x[i][k], y[k][j]), z[i][j]);
        return z;
    };
    // scalar multiple of the base unit, with verification
    auto unit_coeff = [&](const Vec& z) {
        const Vec& u = *b.unit;
        int k = 0;
        while (u[k] == 0) ++k;
        Rat s = z[k] / u[k];
        for (int i = 0; i < m; ++i)
            if (z[i] != s * u[i]) throw std::domain_error("jordan_hermitian: diagonal not scalar");
        return s;
    };
    auto coords = [&](const Mat3& z) {
        Vec r(d, Rat(0));
        for (int i = 0; i < 3; ++i) r[i] = unit_coeff(z[i][i]);
        for (int s = 0; s < 3; ++s) {
            auto [i, j] = slots[s];
            for (int t = 0; t < m; ++t) r[3 + s * m + t] = z[i][j][t];
            if (conj_of(b, z[i][j]) != z[j][i])
                throw std::domain_error("jordan_hermitian: product not Hermitian");
        }
        return r;
    };

    AlgebraTable a;
    a.name = "H3(" + b.name + ")";
    a.dim = d;
    a.mul.assign(d, std::vector<Vec>(d));
    std::vector<Mat3> basis_mats(d);
    for (int i = 0; i < d; ++i) basis_mats[i] = embed(i);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Mat3 p = matmul(basis_mats[i], basis_mats[j]);
            Mat3 q = matmul(basis_mats[j], basis_mats[i]);
            Mat3 s = zero3();
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) {
                    s[r][c] = axpy(rat(1), p[r][c], q[r][c]);
                    for (auto& x : s[r][c]) x /= 2;
                }
            a.mul[i][j] = coords(s);
        }
    a.basis.resize(d);
    for (int i = 0; i < 3; ++i) a.basis[i] = "D" + std::to_string(i + 1);
    for (int s = 0; s < 3; ++s) {
        auto [i, j] = slots[s];
        for (int t = 0; t < m; ++t) {
            std::string lbl = b.basis.empty() ? "e" + std::to_string(t) : b.basis[t];
            a.basis[3 + s * m + t] =
                "X" + std::to_string(i + 1) + std::to_string(j + 1) + "[" + lbl + "]";
        }
    }
    Vec u(d, Rat(0));
    u[0] = u[1] = u[2] = 1;
    a.unit = u;
    // trace form tr(x o y)
    auto tr = [&](const Vec& x) -> Rat { return x[0] + x[1] + x[2]; };
    MatQ f(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) f.at(i, j) = tr(a.mul[i][j]);
    a.form = f;
    validate(a);
    return a;
}

// Trace-zero part of a Jordan algebra built by jordan_hermitian: the
// orthogonal complement of the unit under the trace form.
inline Subspace jordan_imaginary(const AlgebraTable& j) {
    if (!j.unit || !j.form) throw std::invalid_argument("jordan_imaginary: missing unit/form");
    MatQ row(1, j.dim);
    Vec w = *j.form * *j.unit;
    for (int k = 0; k < j.dim; ++k) row.at(0, k) = w[k];
    return nullspace(row);
}

}  // namespace mf
