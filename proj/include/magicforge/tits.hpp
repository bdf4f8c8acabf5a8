#pragma once
#include <mutex>

#include "derivations.hpp"

namespace mf {

// Weights of the three terms in the mixed bracket on Im(a) (x) Im(j).
// The calibrated set is the one for which Jacobi holds exactly; see
// calibrate_tits and frozen_tits_coefficients.
struct TitsCoefficients {
    Rat lam_d, lam_star, lam_l;
};

// Derivation spaces are the dominant cost (729 unknowns for the largest
// Jordan algebra), so they are memoised by table name.
inline const Subspace& cached_derivation_space(const AlgebraTable& a) {
    static std::map<std::string, Subspace> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(a.name);
    if (it == cache.end()) it = cache.emplace(a.name, derivation_space(a)).first;
    return it->second;
}

inline const Subspace& cached_triality_space(const AlgebraTable& a) {
    static std::map<std::string, Subspace> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(a.name);
    if (it == cache.end()) it = cache.emplace(a.name, triality_space(a)).first;
    return it->second;
}

// D_{x,y} expressed in the computed derivation basis; coordinates_of throws
// if the commutator map fails Leibniz, which flags a non-alternative table.
inline Vec inner_derivation_coords(const AlgebraTable& a, const Subspace& der, const Vec& x,
                                   const Vec& y) {
    return der.coordinates_of(inner_derivation(a, x, y).flatten());
}

// Lie algebra on der(a) + der(j) + Im(a) (x) Im(j). The derivation summands
// bracket among themselves as commutators, commute with each other, and act
// componentwise on the tensor block; the mixed bracket is
//   [x(x)p, y(x)q] = lam_d <p,q>_J D_{x,y}
//                  + lam_star Im(xy) (x) (p o q - tr/3)
//                  + lam_l <x,y> [L_p, L_q].
// Passing j = nullptr collapses the construction to der(a).
inline LieAlgebra tits_construction(const AlgebraTable& a, const AlgebraTable* j,
                                    const TitsCoefficients& c) {
    const Subspace& der_a = cached_derivation_space(a);
    int na = a.dim, da = der_a.dim();
    if (!j) {
        LieAlgebra l = from_algebra_derivations(a);
        l.name = "t(" + a.name + ",0)";
        return l;
    }
    const Subspace& der_j = cached_derivation_space(*j);
    int nj = j->dim, dj = der_j.dim();
    Subspace im_a = imaginary_part(a);
    Subspace im_j = jordan_imaginary(*j);
    int ia = im_a.dim(), ij = im_j.dim();
    int dim = da + dj + ia * ij;
    auto mixed = [&](int i, int r) { return da + dj + i * ij + r; };

    std::vector<MatQ> Da, Dj;
    for (int k = 0; k < da; ++k) Da.push_back(MatQ::unflatten(na, na, der_a.basis_vector(k)));
    for (int k = 0; k < dj; ++k) Dj.push_back(MatQ::unflatten(nj, nj, der_j.basis_vector(k)));
    std::vector<Vec> xs, ps;
    for (int i = 0; i < ia; ++i) xs.push_back(im_a.basis_vector(i));
    for (int r = 0; r < ij; ++r) ps.push_back(im_j.basis_vector(r));

    LieAlgebra l;
    l.name = "t(" + a.name + "," + j->name + ")";
    l.dim = dim;
    l.bracket.assign(dim, std::vector<SparseVec>(dim));
    auto put = [&](int i, int jj, SparseVec v) {
        std::sort(v.begin(), v.end());
        l.bracket[i][jj] = v;
        for (auto& [k, val] : v) l.bracket[jj][i].emplace_back(k, -val);
    };

    // derivation-derivation blocks
    for (int k = 0; k < da; ++k)
        for (int m = k + 1; m < da; ++m)
            put(k, m, to_sparse(der_a.coordinates_of(MatQ::commutator(Da[k], Da[m]).flatten())));
    for (int k = 0; k < dj; ++k)
        for (int m = k + 1; m < dj; ++m) {
            SparseVec v;
            Vec c2 = der_j.coordinates_of(MatQ::commutator(Dj[k], Dj[m]).flatten());
            for (int t = 0; t < dj; ++t)
                if (c2[t] != 0) v.emplace_back(da + t, c2[t]);
            put(da + k, da + m, v);
        }
    // der(a) x der(j) commute: zero blocks already in place

    // derivations act componentwise on the tensor block
    for (int k = 0; k < da; ++k)
        for (int i = 0; i < ia; ++i) {
            Vec c2 = im_a.coordinates_of(Da[k] * xs[i]);
            for (int r = 0; r < ij; ++r) {
                SparseVec v;
                for (int i2 = 0; i2 < ia; ++i2)
                    if (c2[i2] != 0) v.emplace_back(mixed(i2, r), c2[i2]);
                put(k, mixed(i, r), v);
            }
        }
    for (int k = 0; k < dj; ++k)
        for (int r = 0; r < ij; ++r) {
            Vec c2 = im_j.coordinates_of(Dj[k] * ps[r]);
            for (int i = 0; i < ia; ++i) {
                SparseVec v;
                for (int r2 = 0; r2 < ij; ++r2)
                    if (c2[r2] != 0) v.emplace_back(mixed(i, r2), c2[r2]);
                put(da + k, mixed(i, r), v);
            }
        }

    // pair tables for the mixed bracket
    std::vector<std::vector<Vec>> dxy(ia, std::vector<Vec>(ia)), imxy(ia, std::vector<Vec>(ia));
    MatQ formA(ia, ia);
    for (int i = 0; i < ia; ++i)
        for (int k = i + 1; k < ia; ++k) {
            dxy[i][k] = inner_derivation_coords(a, der_a, xs[i], xs[k]);
            Vec prod = multiply(a, xs[i], xs[k]);
            Vec half = axpy(rat(-1), conj_of(a, prod), prod);
            for (auto& e : half) e /= 2;
            imxy[i][k] = im_a.coordinates_of(half);
        }
    for (int i = 0; i < ia; ++i)
        for (int k = 0; k < ia; ++k) formA.at(i, k) = bilinear(*a.form, xs[i], xs[k]);
    std::vector<std::vector<Vec>> lls(ij, std::vector<Vec>(ij)), circ(ij, std::vector<Vec>(ij));
    MatQ jtr(ij, ij);
    for (int r = 0; r < ij; ++r)
        for (int s = 0; s < ij; ++s) jtr.at(r, s) = bilinear(*j->form, ps[r], ps[s]);
    for (int r = 0; r < ij; ++r)
        for (int s = r; s < ij; ++s) {
            if (s > r) {
                MatQ lp = left_mult_matrix(*j, ps[r]), lq = left_mult_matrix(*j, ps[s]);
                lls[r][s] = der_j.coordinates_of(MatQ::commutator(lp, lq).flatten());
                lls[s][r] = axpy(rat(-1), lls[r][s], Vec(dj, Rat(0)));
            } else {
                lls[r][r] = Vec(dj, Rat(0));
            }
            Vec pq = multiply(*j, ps[r], ps[s]);
            pq = axpy(-jtr.at(r, s) / 3, *j->unit, pq);
            circ[r][s] = im_j.coordinates_of(pq);
            if (s > r) circ[s][r] = circ[r][s];
        }

    for (int i = 0; i < ia; ++i)
        for (int r = 0; r < ij; ++r)
            for (int k = i; k < ia; ++k)
                for (int s = (k == i ? r + 1 : 0); s < ij; ++s) {
                    SparseVec v;
                    if (k > i && jtr.at(r, s) != 0) {
                        Rat w = c.lam_d * jtr.at(r, s);
                        for (int t = 0; t < da; ++t)
                            if (dxy[i][k][t] != 0) v.emplace_back(t, w * dxy[i][k][t]);
                    }
                    if (k > i)
                        for (int i2 = 0; i2 < ia; ++i2) {
                            if (imxy[i][k][i2] == 0) continue;
                            Rat w = c.lam_star * imxy[i][k][i2];
                            for (int r2 = 0; r2 < ij; ++r2)
                                if (circ[r][s][r2] != 0)
                                    v.emplace_back(mixed(i2, r2), w * circ[r][s][r2]);
                        }
                    if (formA.at(i, k) != 0) {
                        Rat w = c.lam_l * formA.at(i, k);
                        for (int t = 0; t < dj; ++t)
                            if (lls[r][s][t] != 0) v.emplace_back(da + t, w * lls[r][s][t]);
                    }
                    put(mixed(i, r), mixed(k, s), v);
                }

    for (int k = 0; k < da; ++k) l.labels.push_back("dA" + std::to_string(k));
    for (int k = 0; k < dj; ++k) l.labels.push_back("dJ" + std::to_string(k));
    for (int i = 0; i < ia; ++i)
        for (int r = 0; r < ij; ++r)
            l.labels.push_back("x" + std::to_string(i) + "p" + std::to_string(r));
    return l;
}

// Searches the candidate grid for weights (lam_d, 1, lam_l) making Jacobi
// hold exhaustively on t(a, j); the reference pair must be small. Returns
// every passing triple so uniqueness can be inspected rather than assumed.
inline std::vector<TitsCoefficients> calibrate_tits(const AlgebraTable& a, const AlgebraTable& j,
                                                    const std::vector<Rat>& candidates) {
    std::vector<TitsCoefficients> passing;
    for (const Rat& d : candidates)
        for (const Rat& ll : candidates) {
            TitsCoefficients c{d, rat(1), ll};
            LieAlgebra l = tits_construction(a, &j, c);
            if (l.dim > 60)
                throw std::invalid_argument("calibrate_tits: reference pair too large");
            if (verify_lie(l).pass) passing.push_back(c);
        }
    return passing;
}

inline std::vector<Rat> default_tits_candidates() {
    std::vector<Rat> r;
    for (int den : {1, 2, 3, 4, 6, 12})
        for (int sgn : {1, -1}) r.push_back(Rat(sgn, den));
    return r;
}

// Calibrated on t(split quaternions, H3(reals)) and revalidated on
// t(split octonions, H3(reals)); see the tests.
inline TitsCoefficients frozen_tits_coefficients() {
    return TitsCoefficients{Rat(1, 12), rat(1), Rat(-1, 2)};
}

}  // namespace mf
