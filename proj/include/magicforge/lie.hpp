#pragma once
#include <array>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "rref.hpp"

namespace mf {

// Lie algebra by structure constants. The full antisymmetric table is kept;
// serialization stores only i < j.
struct LieAlgebra {
    std::string name;
    int dim = 0;
    std::vector<std::vector<SparseVec>> bracket;
    std::vector<std::string> labels;
    std::optional<std::vector<int>> degrees;
};

struct Triple {
    Vec E, H, F;
};

inline constexpr uint64_t kDefaultSeed = 20240817;

inline uint64_t mix_seed(uint64_t global, const std::string& name) {
    uint64_t h = global ^ (fnv1a(name) * 0x9e3779b97f4a7c15ULL);
    h ^= h >> 29;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 32;
    return h;
}

inline Vec bracket_vec(const LieAlgebra& l, const Vec& x, const Vec& y) {
    Vec r(l.dim, Rat(0));
    for (int i = 0; i < l.dim; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < l.dim; ++j) {
            if (y[j] == 0) continue;
            Rat c = x[i] * y[j];
            for (auto& [k, v] : l.bracket[i][j]) r[k] += c * v;
        }
    }
    return r;
}

inline MatQ ad(const LieAlgebra& l, const Vec& x) {
    MatQ m(l.dim, l.dim);
    for (int i = 0; i < l.dim; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < l.dim; ++j)
            for (auto& [k, v] : l.bracket[i][j]) m.at(k, j) += x[i] * v;
    }
    return m;
}

// Builds a table from a closed span inside some ambient space: basis vectors
// are the canonical subspace basis, structure constants via coordinate
// read-off. Throws domain_error if the span is not bracket-closed.
template <class BracketFn>
LieAlgebra lie_from_span(const std::string& name, const Subspace& s, BracketFn br) {
    LieAlgebra l;
    l.name = name;
    l.dim = s.dim();
    l.bracket.assign(l.dim, std::vector<SparseVec>(l.dim));
    for (int i = 0; i < l.dim; ++i)
        for (int j = i + 1; j < l.dim; ++j) {
            Vec w = br(s.basis_vector(i), s.basis_vector(j));
            SparseVec c = to_sparse(s.coordinates_of(w));
            l.bracket[i][j] = c;
            for (auto& [k, v] : c) l.bracket[j][i].emplace_back(k, -v);
        }
    for (int i = 0; i < l.dim; ++i) l.labels.push_back("b" + std::to_string(i));
    return l;
}

struct VerifyReport {
    bool pass = true;
    std::vector<std::string> failures;
    long triples_checked = 0;
    bool sampled = false;
};

namespace detail {
inline Vec jacobi_defect(const LieAlgebra& l, int i, int j, int k) {
    auto term = [&](int a, int b, int c) {
        Vec r(l.dim, Rat(0));
        for (auto& [m, v] : l.bracket[a][b])
            for (auto& [n, w] : l.bracket[m][c]) r[n] += v * w;
        return r;
    };
    Vec s = term(i, j, k);
    s = axpy(rat(1), term(j, k, i), s);
    s = axpy(rat(1), term(k, i, j), s);
    return s;
}
}  // namespace detail

// Antisymmetry on all pairs; Jacobi exhaustively for dim <= 60, otherwise on
// a deterministic sample of basis triples seeded by the algebra name.
inline VerifyReport verify_lie(const LieAlgebra& l, uint64_t seed = kDefaultSeed,
                               long sample_size = 100000) {
    VerifyReport rep;
    auto fail = [&](const std::string& s) {
        rep.pass = false;
        if (rep.failures.size() < 8) rep.failures.push_back(s);
    };
    for (int i = 0; i < l.dim; ++i)
        for (int j = i; j < l.dim; ++j) {
            Vec a = to_dense(l.bracket[i][j], l.dim);
            Vec b = to_dense(l.bracket[j][i], l.dim);
            for (int k = 0; k < l.dim; ++k)
                if (a[k] != -b[k]) {
                    fail("antisymmetry fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
                    break;
                }
        }
    auto check = [&](int i, int j, int k) {
        ++rep.triples_checked;
        if (!is_zero(detail::jacobi_defect(l, i, j, k)))
            fail("Jacobi fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                 std::to_string(k) + ")");
    };
    if (l.dim <= 60) {
        for (int i = 0; i < l.dim; ++i)
            for (int j = i + 1; j < l.dim; ++j)
                for (int k = j + 1; k < l.dim; ++k) check(i, j, k);
    } else {
        rep.sampled = true;
        std::mt19937_64 rng(mix_seed(seed, l.name));
        std::uniform_int_distribution<int> d(0, l.dim - 1);
        for (long t = 0; t < sample_size; ++t) check(d(rng), d(rng), d(rng));
    }
    return rep;
}

inline Subspace center(const LieAlgebra& l) {
    // x central iff sum_i x_i c_{i,j}^k = 0 for all j,k
    LinearSystem sys(l.dim);
    for (int j = 0; j < l.dim; ++j) {
        std::vector<SparseVec> rows(l.dim);
        for (int i = 0; i < l.dim; ++i)
            for (auto& [k, v] : l.bracket[i][j]) rows[k].emplace_back(i, v);
        for (auto& r : rows)
            if (!r.empty()) sys.add_row_sparse(r);
    }
    return sys.nullspace();
}

inline Subspace derived_span(const LieAlgebra& l) {
    std::vector<Vec> gens;
    for (int i = 0; i < l.dim; ++i)
        for (int j = i + 1; j < l.dim; ++j)
            if (!l.bracket[i][j].empty()) gens.push_back(to_dense(l.bracket[i][j], l.dim));
    return Subspace::from_vectors(l.dim, gens);
}

inline Subspace centralizer_space(const LieAlgebra& l, const std::vector<Vec>& elems) {
    LinearSystem sys(l.dim);
    for (auto& e : elems) {
        // rows of ad(.)(e) viewed as linear conditions on x: [x,e] = 0
        MatQ m(l.dim, l.dim);
        for (int i = 0; i < l.dim; ++i)
            for (int j = 0; j < l.dim; ++j) {
                if (e[j] == 0) continue;
                for (auto& [k, v] : l.bracket[i][j]) m.at(k, i) += v * e[j];
            }
        for (int k = 0; k < l.dim; ++k) sys.add_row(m.row(k));
    }
    return sys.nullspace();
}

inline LieAlgebra restrict_to_subspace(const LieAlgebra& l, const Subspace& s,
                                       const std::string& name) {
    if (s.ambient_dim() != l.dim)
        throw std::invalid_argument("restrict_to_subspace: ambient mismatch");
    return lie_from_span(name, s, [&](const Vec& a, const Vec& b) { return bracket_vec(l, a, b); });
}

inline LieAlgebra centralizer(const LieAlgebra& l, const std::vector<Vec>& elems,
                              const std::string& name) {
    return restrict_to_subspace(l, centralizer_space(l, elems), name);
}

// K_ij = tr(ad e_i ad e_j), accumulated over structure constant pairs
// grouped by the intermediate index pair.
inline MatQ killing_matrix(const LieAlgebra& l) {
    int n = l.dim;
    // t[a][b]: list of (i, c_{i,a}^b)
    std::vector<std::vector<SparseVec>> t(n, std::vector<SparseVec>(n));
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a)
            for (auto& [b, v] : l.bracket[i][a]) t[a][b].emplace_back(i, v);
    MatQ k(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (t[a][b].empty() || t[b][a].empty()) continue;
            for (auto& [i, ci] : t[a][b])
                for (auto& [j, cj] : t[b][a]) k.at(i, j) += ci * cj;
        }
    return k;
}

struct Fingerprint {
    int dim = 0;
    int dim_center = 0;
    int dim_derived = 0;
    int killing_rank = 0;
    int radical_dim_lower_bound = 0;
    std::vector<int> grading_signature;  // sorted part dims, empty if ungraded
    bool operator==(const Fingerprint&) const = default;
};

inline Fingerprint fingerprint(const LieAlgebra& l) {
    Fingerprint f;
    f.dim = l.dim;
    f.dim_center = center(l).dim();
    f.dim_derived = derived_span(l).dim();
    f.killing_rank = rref(killing_matrix(l)).rank;
    f.radical_dim_lower_bound = l.dim - f.killing_rank;
    if (l.degrees) {
        std::map<int, int> parts;
        for (int d : *l.degrees) parts[d]++;
        for (auto& [d, c] : parts) f.grading_signature.push_back(c);
        std::sort(f.grading_signature.begin(), f.grading_signature.end());
    }
    return f;
}

inline std::string fingerprint_str(const Fingerprint& f) {
    std::string s = "dim=" + std::to_string(f.dim) + " center=" + std::to_string(f.dim_center) +
                    " derived=" + std::to_string(f.dim_derived) +
                    " killing_rank=" + std::to_string(f.killing_rank) +
                    " radical_lb=" + std::to_string(f.radical_dim_lower_bound);
    if (!f.grading_signature.empty()) {
        s += " parts=[";
        for (size_t i = 0; i < f.grading_signature.size(); ++i)
            s += (i ? "," : "") + std::to_string(f.grading_signature[i]);
        s += "]";
    }
    return s;
}

// Matrices X with X^T g + g X = 0 under the commutator; works for symmetric
// (orthogonal-type, possibly degenerate) and antisymmetric (symplectic) g.
inline Subspace form_preserver_space(const MatQ& g) {
    int n = g.rows();
    LinearSystem sys(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SparseVec row;
            // (X^T g + g X)_{ij} = sum_k X_{ki} g_{kj} + g_{ik} X_{kj}
            for (int k = 0; k < n; ++k) {
                if (g.at(k, j) != 0) row.emplace_back(k * n + i, g.at(k, j));
                if (g.at(i, k) != 0) row.emplace_back(k * n + j, g.at(i, k));
            }
            if (!row.empty()) sys.add_row_sparse(row);
        }
    return sys.nullspace();
}

inline Vec mat_bracket_flat(int n, const Vec& a, const Vec& b) {
    return MatQ::commutator(MatQ::unflatten(n, n, a), MatQ::unflatten(n, n, b)).flatten();
}

inline LieAlgebra so_of_form(const MatQ& g) {
    if (!g.is_symmetric()) throw std::invalid_argument("so_of_form: form not symmetric");
    int n = g.rows();
    return lie_from_span("so_form_" + std::to_string(n), form_preserver_space(g),
                         [n](const Vec& a, const Vec& b) { return mat_bracket_flat(n, a, b); });
}

// gl/sl/so/sp in fixed split presentations; so and sp use the antidiagonal
// (resp. antidiagonal symplectic) form so root vectors are rational.
inline LieAlgebra classical_algebra(const std::string& kind, int n) {
    if (kind == "gl" || kind == "sl") {
        std::vector<Vec> gens;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (kind == "sl" && i == j) continue;
                Vec m(n * n, Rat(0));
                m[i * n + j] = 1;
                gens.push_back(m);
            }
        if (kind == "sl")
            for (int i = 0; i + 1 < n; ++i) {
                Vec m(n * n, Rat(0));
                m[i * n + i] = 1;
                m[(i + 1) * n + i + 1] = -1;
                gens.push_back(m);
            }
        Subspace s = Subspace::from_vectors(n * n, gens);
        LieAlgebra l = lie_from_span(kind + "(" + std::to_string(n) + ")", s,
                                     [n](const Vec& a, const Vec& b) { return mat_bracket_flat(n, a, b); });
        return l;
    }
    if (kind == "so") {
        MatQ j(n, n);
        for (int i = 0; i < n; ++i) j.at(i, n - 1 - i) = 1;
        LieAlgebra l = so_of_form(j);
        l.name = "so(" + std::to_string(n) + ")";
        return l;
    }
    if (kind == "sp") {
        if (n % 2) throw std::invalid_argument("classical_algebra: sp needs even n");
        MatQ w(n, n);
        for (int i = 0; i < n / 2; ++i) {
            w.at(i, n - 1 - i) = 1;
            w.at(n - 1 - i, i) = -1;
        }
        LieAlgebra l = lie_from_span(
            "sp(" + std::to_string(n) + ")", form_preserver_space(w),
            [n](const Vec& a, const Vec& b) { return mat_bracket_flat(n, a, b); });
        return l;
    }
    throw std::invalid_argument("classical_algebra: unknown kind " + kind);
}

// Explicit root-vector triple in the coordinates of classical_algebra(kind,n).
inline Triple classical_triple(const std::string& kind, int n) {
    auto flat = [&](std::initializer_list<std::array<int, 3>> entries) {
        Vec m(n * n, Rat(0));
        for (auto& [i, j, s] : entries) m[i * n + j] = s;
        return m;
    };
    Vec e, h, f;
    if (kind == "gl" || kind == "sl") {
        e = flat({{0, n - 1, 1}});
        f = flat({{n - 1, 0, 1}});
        h = flat({{0, 0, 1}, {n - 1, n - 1, -1}});
    } else if (kind == "sp") {
        // with the antidiagonal symplectic form, E_{0,n-1} is a long root
        e = flat({{0, n - 1, 1}});
        f = flat({{n - 1, 0, 1}});
        h = flat({{0, 0, 1}, {n - 1, n - 1, -1}});
    } else if (kind == "so") {
        e = flat({{0, n - 2, 1}, {1, n - 1, -1}});
        f = flat({{n - 2, 0, 1}, {n - 1, 1, -1}});
        h = flat({{0, 0, 1}, {1, 1, 1}, {n - 2, n - 2, -1}, {n - 1, n - 1, -1}});
    } else {
        throw std::invalid_argument("classical_triple: unknown kind " + kind);
    }
    // express in the algebra's own coordinates via the defining span
    Subspace s = (kind == "gl" || kind == "sl")
                     ? [&] {
                           std::vector<Vec> g2;
                           for (int i = 0; i < n * n; ++i) {
                               Vec m(n * n, Rat(0));
                               m[i] = 1;
                               g2.push_back(m);
                           }
                           if (kind == "sl") {
                               MatQ tr_row(1, n * n);
                               for (int i = 0; i < n; ++i) tr_row.at(0, i * n + i) = 1;
                               return nullspace(tr_row);
                           }
                           return Subspace::from_vectors(n * n, g2);
                       }()
                     : [&] {
                           MatQ g(n, n);
                           if (kind == "so")
                               for (int i = 0; i < n; ++i) g.at(i, n - 1 - i) = 1;
                           else
                               for (int i = 0; i < n / 2; ++i) {
                                   g.at(i, n - 1 - i) = 1;
                                   g.at(n - 1 - i, i) = -1;
                               }
                           return form_preserver_space(g);
                       }();
    return Triple{s.coordinates_of(e), s.coordinates_of(h), s.coordinates_of(f)};
}

// g extended by a symplectic vector space and a central line: brackets
// [g,v] via the action, [v,w] = omega(v,w) z, z central. The action must be
// a representation preserving omega; violations are reported with a witness.
inline LieAlgebra heisenberg_extension(const LieAlgebra& g, const std::vector<MatQ>& action,
                                       const MatQ& omega, const std::string& name) {
    int n = omega.rows();
    if ((int)action.size() != g.dim)
        throw std::invalid_argument("heisenberg_extension: one action matrix per basis element");
    if (!omega.is_antisymmetric())
        throw std::invalid_argument("heisenberg_extension: omega not antisymmetric");
    if (rref(omega).rank != n)
        throw std::invalid_argument("heisenberg_extension: omega degenerate");
    for (int i = 0; i < g.dim; ++i)
        if (!(action[i].transpose() * omega + omega * action[i]).is_zero())
            throw std::invalid_argument("heisenberg_extension: omega not invariant under action of basis element " +
                                        std::to_string(i));
    for (int i = 0; i < g.dim; ++i)
        for (int j = i + 1; j < g.dim; ++j) {
            MatQ lhs = MatQ::commutator(action[i], action[j]);
            MatQ rhs(n, n);
            for (auto& [k, v] : g.bracket[i][j]) rhs = rhs + action[k] * v;
            if (lhs != rhs)
                throw std::invalid_argument("heisenberg_extension: action is not a representation at pair (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
        }
    int d = g.dim + n + 1, zi = g.dim + n;
    LieAlgebra l;
    l.name = name;
    l.dim = d;
    l.bracket.assign(d, std::vector<SparseVec>(d));
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j) l.bracket[i][j] = g.bracket[i][j];
    for (int i = 0; i < g.dim; ++i)
        for (int a = 0; a < n; ++a) {
            SparseVec c;
            for (int b = 0; b < n; ++b)
                if (action[i].at(b, a) != 0) c.emplace_back(g.dim + b, action[i].at(b, a));
            l.bracket[i][g.dim + a] = c;
            for (auto& [k, v] : c) l.bracket[g.dim + a][i].emplace_back(k, -v);
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (omega.at(a, b) != 0) l.bracket[g.dim + a][g.dim + b] = {{zi, omega.at(a, b)}};
    for (int i = 0; i < g.dim; ++i) l.labels.push_back(g.labels.empty() ? "g" + std::to_string(i) : g.labels[i]);
    for (int a = 0; a < n; ++a) l.labels.push_back("v" + std::to_string(a));
    l.labels.push_back("z");
    return l;
}

}  // namespace mf
