#pragma once
#include <functional>
#include <optional>
#include <string>

#include "poly.hpp"
#include "rref.hpp"

namespace mf {

// A finite-dimensional algebra over Q given by structure constants
// e_i e_j = sum_k mul[i][j][k] e_k, with optional unit, conjugation
// involution, bilinear form and per-basis degree tags.
//
// For composition algebras the form is the polarized norm <x,y> with
// <1,1> = 2, so N(x) = <x,x>/2 and degenerate norms (sextonions) need no
// special casing. Jordan algebras carry their trace form instead.
struct AlgebraTable {
    std::string name;
    int dim = 0;
    std::vector<std::vector<Vec>> mul;
    std::vector<std::string> basis;
    std::optional<Vec> unit;
    std::optional<MatQ> conj;
    std::optional<MatQ> form;
    std::optional<std::vector<int>> degrees;
};

inline Vec multiply(const AlgebraTable& a, const Vec& x, const Vec& y) {
    if ((int)x.size() != a.dim || (int)y.size() != a.dim)
        throw std::invalid_argument("multiply: coordinate length mismatch");
    Vec r(a.dim, Rat(0));
    for (int i = 0; i < a.dim; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < a.dim; ++j) {
            if (y[j] == 0) continue;
            Rat c = x[i] * y[j];
            const Vec& m = a.mul[i][j];
            for (int k = 0; k < a.dim; ++k)
                if (m[k] != 0) r[k] += c * m[k];
        }
    }
    return r;
}

inline PolyVec multiply_sym(const AlgebraTable& a, const PolyVec& x, const PolyVec& y) {
    PolyVec r(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Poly c = x[i] * y[j];
            if (c.is_zero()) continue;
            const Vec& m = a.mul[i][j];
            for (int k = 0; k < a.dim; ++k)
                if (m[k] != 0) r[k] = r[k] + c * m[k];
        }
    return r;
}

inline Vec conj_of(const AlgebraTable& a, const Vec& x) {
    if (!a.conj) throw std::invalid_argument("conj_of: no conjugation on " + a.name);
    return *a.conj * x;
}

inline Rat bilinear(const MatQ& form, const Vec& x, const Vec& y) {
    Rat s(0);
    for (int i = 0; i < form.rows(); ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < form.cols(); ++j)
            if (form.at(i, j) != 0 && y[j] != 0) s += x[i] * form.at(i, j) * y[j];
    }
    return s;
}

inline Rat norm_of(const AlgebraTable& a, const Vec& x) {
    if (!a.form) throw std::invalid_argument("norm_of: no form on " + a.name);
    return bilinear(*a.form, x, x) / 2;
}

struct ConjNormTrace {
    Vec conj;
    Rat norm;
    Rat real_part;
};

inline ConjNormTrace conj_norm_trace(const AlgebraTable& a, const Vec& x) {
    if (!a.conj || !a.form || !a.unit)
        throw std::invalid_argument("conj_norm_trace: missing structure on " + a.name);
    ConjNormTrace r;
    r.conj = conj_of(a, x);
    r.norm = norm_of(a, x);
    // (x + conj x)/2 is a multiple of the unit in a composition algebra
    Vec half = axpy(rat(1), r.conj, x);
    for (auto& c : half) c /= 2;
    const Vec& u = *a.unit;
    int k = 0;
    while (k < a.dim && u[k] == 0) ++k;
    Rat s = half[k] / u[k];
    for (int i = 0; i < a.dim; ++i)
        if (half[i] != s * u[i])
            throw std::domain_error("conj_norm_trace: (x + conj x)/2 not a multiple of 1");
    r.real_part = s;
    return r;
}

inline Subspace radical_of_form(const AlgebraTable& a) {
    if (!a.form) throw std::invalid_argument("radical_of_form: no form on " + a.name);
    return nullspace(*a.form);
}

// (-1)-eigenspace of conjugation.
inline Subspace imaginary_part(const AlgebraTable& a) {
    if (!a.conj) throw std::invalid_argument("imaginary_part: no conjugation on " + a.name);
    return eigenspace(*a.conj, rat(-1));
}

inline MatQ left_mult_matrix(const AlgebraTable& a, const Vec& x) {
    MatQ m(a.dim, a.dim);
    for (int j = 0; j < a.dim; ++j) {
        Vec col(a.dim, Rat(0));
        for (int i = 0; i < a.dim; ++i)
            if (x[i] != 0)
                for (int k = 0; k < a.dim; ++k)
                    if (a.mul[i][j][k] != 0) col[k] += x[i] * a.mul[i][j][k];
        for (int k = 0; k < a.dim; ++k) m.at(k, j) = col[k];
    }
    return m;
}

inline MatQ right_mult_matrix(const AlgebraTable& a, const Vec& x) {
    MatQ m(a.dim, a.dim);
    for (int j = 0; j < a.dim; ++j) {
        Vec col(a.dim, Rat(0));
        for (int i = 0; i < a.dim; ++i)
            if (x[i] != 0)
                for (int k = 0; k < a.dim; ++k)
                    if (a.mul[j][i][k] != 0) col[k] += x[i] * a.mul[j][i][k];
        for (int k = 0; k < a.dim; ++k) m.at(k, j) = col[k];
    }
    return m;
}

inline Vec basis_vec(int dim, int i) {
    Vec v(dim, Rat(0));
    v[i] = 1;
    return v;
}

struct IdentityReport {
    bool pass = true;
    std::vector<std::string> failures;  // offending coordinate / monomial
};

enum class AlgebraIdentity { alternative, composition, conj_antiautomorphism };

// Fully symbolic verification over indeterminate coordinates; never sampled.
inline IdentityReport check_identities(const AlgebraTable& a, AlgebraIdentity which) {
    IdentityReport rep;
    int n = a.dim;
    PolyVec x = generic_vector(n, 0), y = generic_vector(n, n);
    auto record = [&](const std::string& what, const Poly& p) {
        if (!p.is_zero()) {
            rep.pass = false;
            rep.failures.push_back(what + ": " + p.leading_term_str());
        }
    };
    switch (which) {
        case AlgebraIdentity::alternative: {
            auto assoc = [&](const PolyVec& u, const PolyVec& v, const PolyVec& w) {
                PolyVec l = multiply_sym(a, multiply_sym(a, u, v), w);
                PolyVec r = multiply_sym(a, u, multiply_sym(a, v, w));
                PolyVec d(n);
                for (int k = 0; k < n; ++k) d[k] = l[k] - r[k];
                return d;
            };
            PolyVec left = assoc(x, x, y), right = assoc(x, y, y);
            for (int k = 0; k < n; ++k) {
                record("(xx)y-x(xy) coord " + std::to_string(k), left[k]);
                record("(xy)y-x(yy) coord " + std::to_string(k), right[k]);
            }
            break;
        }
        case AlgebraIdentity::composition: {
            if (!a.form) throw std::invalid_argument("check_identities: no form on " + a.name);
            auto normp = [&](const PolyVec& z) {
                Poly s;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        if (a.form->at(i, j) != 0)
                            s = s + z[i] * z[j] * (a.form->at(i, j) / 2);
                return s;
            };
            PolyVec xy = multiply_sym(a, x, y);
            record("N(xy)-N(x)N(y)", normp(xy) - normp(x) * normp(y));
            break;
        }
        case AlgebraIdentity::conj_antiautomorphism: {
            if (!a.conj) throw std::invalid_argument("check_identities: no conj on " + a.name);
            auto apply = [&](const PolyVec& z) {
                PolyVec r(n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        if (a.conj->at(i, j) != 0) r[i] = r[i] + z[j] * a.conj->at(i, j);
                return r;
            };
            PolyVec l = apply(multiply_sym(a, x, y));
            PolyVec r = multiply_sym(a, apply(y), apply(x));
            for (int k = 0; k < n; ++k) record("conj(xy)-conj(y)conj(x) coord " + std::to_string(k), l[k] - r[k]);
            break;
        }
    }
    return rep;
}

struct GradingReport {
    bool pass = true;
    std::vector<std::string> failures;  // offending basis pair
};

// Verifies e_i e_j lands in degree deg(i)+deg(j), zero if that degree is
// not present among the tags.
inline GradingReport check_graded(const AlgebraTable& a) {
    if (!a.degrees) throw std::invalid_argument("check_graded: no degree tags on " + a.name);
    GradingReport rep;
    const auto& deg = *a.degrees;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            int d = deg[i] + deg[j];
            for (int k = 0; k < a.dim; ++k) {
                if (a.mul[i][j][k] != 0 && deg[k] != d) {
                    rep.pass = false;
                    rep.failures.push_back("e" + std::to_string(i) + "*e" + std::to_string(j) +
                                           " leaks into degree " + std::to_string(deg[k]));
                }
            }
        }
    return rep;
}

// Structural sanity for constructed tables: unit axioms, conjugation an
// involution fixing 1, form symmetric.
inline void validate(const AlgebraTable& a) {
    if ((int)a.mul.size() != a.dim) throw std::logic_error("validate: bad mul shape");
    for (auto& row : a.mul)
        if ((int)row.size() != a.dim) throw std::logic_error("validate: bad mul shape");
    if (a.unit) {
        for (int i = 0; i < a.dim; ++i) {
            Vec e = basis_vec(a.dim, i);
            if (multiply(a, *a.unit, e) != e || multiply(a, e, *a.unit) != e)
                throw std::logic_error("validate: unit axiom fails in " + a.name);
        }
    }
    if (a.conj) {
        if (*a.conj * *a.conj != MatQ::identity(a.dim))
            throw std::logic_error("validate: conjugation not an involution in " + a.name);
        if (a.unit && *a.conj * *a.unit != *a.unit)
            throw std::logic_error("validate: conjugation moves the unit in " + a.name);
    }
    if (a.form && !a.form->is_symmetric())
        throw std::logic_error("validate: form not symmetric in " + a.name);
}

// Polarization <x,y> = N(x+y) - N(x) - N(y) of a quadratic norm.
inline MatQ polarize(int dim, const std::function<Rat(const Vec&)>& norm) {
    MatQ f(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            Vec s = basis_vec(dim, i);
            s[j] += 1;
            Rat v = norm(s) - norm(basis_vec(dim, i)) - norm(basis_vec(dim, j));
            f.at(i, j) = v;
            f.at(j, i) = v;
        }
    return f;
}

}  // namespace mf
