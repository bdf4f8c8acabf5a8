#include <catch2/catch_amalgamated.hpp>
#include <functional>
#include <random>

#include "magicforge/rref.hpp"

using namespace mf;

namespace {

// Independent rank oracle: largest k with a nonzero k x k minor, determinants
// by cofactor expansion.
Rat det_cofactor(const MatQ& m) {
    int n = m.rows();
    if (n == 1) return m.at(0, 0);
    Rat d(0);
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        MatQ sub(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c)
                if (c != j) sub.at(i - 1, cc++) = m.at(i, c);
        }
        Rat t = m.at(0, j) * det_cofactor(sub);
        d += (j % 2 == 0) ? t : -t;
    }
    return d;
}

int rank_oracle(const MatQ& m) {
    int n = std::min(m.rows(), m.cols());
    for (int k = n; k >= 1; --k) {
        std::vector<int> ri(k), ci(k);
        // enumerate all k-subsets of rows and columns
        std::vector<int> rsel(k), csel(k);
        std::function<bool(int, int)> rows_loop = [&](int pos, int start) -> bool {
            if (pos == k) {
                std::function<bool(int, int)> cols_loop = [&](int cp, int cs) -> bool {
                    if (cp == k) {
                        MatQ sub(k, k);
                        for (int i = 0; i < k; ++i)
                            for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(rsel[i], csel[j]);
                        return det_cofactor(sub) != 0;
                    }
                    for (int c = cs; c < m.cols(); ++c) {
                        csel[cp] = c;
                        if (cols_loop(cp + 1, c + 1)) return true;
                    }
                    return false;
                };
                return cols_loop(0, 0);
            }
            for (int r = start; r < m.rows(); ++r) {
                rsel[pos] = r;
                if (rows_loop(pos + 1, r + 1)) return true;
            }
            return false;
        };
        if (rows_loop(0, 0)) return k;
    }
    return 0;
}

MatQ random_small_matrix(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    MatQ m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = d(rng);
    return m;
}

}  // namespace

TEST_CASE("rref identity") {
    auto r = rref(MatQ::identity(3));
    CHECK(r.rank == 3);
    CHECK(r.pivots == std::vector<int>{0, 1, 2});
    CHECK(r.mat == MatQ::identity(3));
}

TEST_CASE("rref proportional rows") {
    MatQ m(2, 2, {rat(1), rat(2), rat(2), rat(4)});
    auto r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.mat == MatQ(2, 2, {rat(1), rat(2), rat(0), rat(0)}));
}

TEST_CASE("rref rank matches determinant-minor oracle on random 6x6") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 8; ++trial) {
        MatQ m = random_small_matrix(6, rng);
        if (trial % 3 == 1) {  // force singularity: duplicate a row
            m.set_row(5, m.row(2));
        }
        auto r = rref(m);
        CHECK(r.rank == rank_oracle(m));
    }
}

TEST_CASE("nullspace basics") {
    CHECK(nullspace(MatQ(2, 2)).dim() == 2);
    CHECK(nullspace(MatQ::identity(3)).dim() == 0);

    MatQ m(2, 2, {rat(1), rat(2), rat(2), rat(4)});
    Subspace k = nullspace(m);
    REQUIRE(k.dim() == 1);
    // substitute back: m v = 0
    Vec v = k.basis_vector(0);
    CHECK(is_zero(m * v));
    // span{(-2,1)} canonicalized: leading 1 at first nonzero
    CHECK(v == Vec{rat(1), rat(-1, 2)});
}

TEST_CASE("rank-nullity over random matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 3 + int(rng() % 4);
        MatQ m = random_small_matrix(n, rng);
        auto r = rref(m);
        CHECK(r.rank + nullspace(m).dim() == n);
    }
}

TEST_CASE("nullspace is canonical and deterministic") {
    std::mt19937_64 rng(99);
    MatQ m = random_small_matrix(5, rng);
    m.set_row(4, m.row(0));  // make the kernel nontrivial
    Subspace a = nullspace(m);
    // same subspace reached via a different generating presentation
    std::vector<Vec> gens;
    for (int i = 0; i < a.dim(); ++i) gens.push_back(a.basis_vector(i));
    if (a.dim() >= 2) {
        Vec mix = axpy(rat(3), gens[1], gens[0]);
        gens[0] = axpy(rat(-2), gens[1], mix);
    }
    std::reverse(gens.begin(), gens.end());
    Subspace b = Subspace::from_vectors(5, gens);
    CHECK(a == b);
    CHECK(a.basis() == b.basis());
    Subspace c = nullspace(m);
    CHECK(a.basis() == c.basis());
}

TEST_CASE("eigenspace") {
    MatQ d(3, 3);
    d.at(0, 0) = 2;
    d.at(1, 1) = 0;
    d.at(2, 2) = -2;
    CHECK(eigenspace(d, rat(2)).dim() == 1);
    CHECK(eigenspace(MatQ::identity(4), rat(1)).dim() == 4);
    CHECK(eigenspace(MatQ::identity(4), rat(2)).dim() == 0);
}

TEST_CASE("eigenspace of ad(H) on hand-built sl2") {
    // sl2 basis (e, h, f): [h,e]=2e, [h,f]=-2f, [e,f]=h; ad(h)=diag(2,0,-2)
    MatQ ad_h(3, 3);
    ad_h.at(0, 0) = 2;
    ad_h.at(2, 2) = -2;
    for (long lam : {-2L, 0L, 2L}) CHECK(eigenspace(ad_h, rat(lam)).dim() == 1);
}

TEST_CASE("subspace sum, intersection, containment") {
    Subspace x = Subspace::from_vectors(2, {{rat(1), rat(0)}});
    Subspace y = Subspace::from_vectors(2, {{rat(0), rat(1)}});
    CHECK(x.intersect(y).dim() == 0);
    CHECK(x.sum(y).dim() == 2);
    CHECK(x.contains(Vec{rat(5), rat(0)}));
    CHECK_FALSE(x.contains(Vec{rat(1), rat(1)}));
    CHECK_THROWS_AS(x.sum(Subspace::from_vectors(3, {})), std::invalid_argument);
}

TEST_CASE("dim(sum) + dim(intersection) on random subspaces of Q^6") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> d(-3, 3);
    auto random_subspace = [&](int k) {
        std::vector<Vec> vs;
        for (int i = 0; i < k; ++i) {
            Vec v(6);
            for (auto& x : v) x = d(rng);
            vs.push_back(v);
        }
        return Subspace::from_vectors(6, vs);
    };
    for (int trial = 0; trial < 6; ++trial) {
        Subspace a = random_subspace(3), b = random_subspace(4);
        CHECK(a.sum(b).dim() + a.intersect(b).dim() == a.dim() + b.dim());
        CHECK(a.sum(b).contains(a));
        CHECK(a.contains(a.intersect(b)));
    }
}

TEST_CASE("LinearSystem incremental rows agree with dense nullspace") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 5; ++trial) {
        MatQ m = random_small_matrix(7, rng);
        m.set_row(3, m.row(1));
        m.set_row(6, axpy(rat(2), m.row(0), m.row(4)));
        LinearSystem sys(7);
        for (int i = 0; i < 7; ++i) sys.add_row(m.row(i));
        // duplicate rows should not change anything
        for (int i = 0; i < 7; ++i) sys.add_row(m.row(i));
        Subspace direct = nullspace(m);
        CHECK(sys.nullspace() == direct);
        CHECK(sys.rank() == rref(m).rank);
    }
}

TEST_CASE("coordinates_of reads off pivot columns") {
    Subspace s = Subspace::from_vectors(
        4, {{rat(1), rat(0), rat(2), rat(0)}, {rat(0), rat(1), rat(-1), rat(3)}});
    Vec v = axpy(rat(5), s.basis_vector(1), s.basis_vector(0));
    Vec c = s.coordinates_of(v);
    CHECK(c == Vec{rat(1), rat(5)});
    CHECK_THROWS_AS(s.coordinates_of(Vec{rat(0), rat(0), rat(1), rat(0)}), std::domain_error);
}
