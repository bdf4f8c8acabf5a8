#pragma once
#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>

#include "matrix.hpp"

namespace mf {

struct RrefResult {
    MatQ mat;
    int rank = 0;
    std::vector<int> pivots;
};

// Fraction-free (Bareiss-style) elimination over scaled integer rows, with a
// final normalization pass producing the reduced row echelon form over Q.
namespace detail {

struct IntRow {
    int pivot = -1;               // leading column, -1 for zero row
    std::vector<Int> v;           // content-free, v[pivot] > 0
};

inline void normalize_int_row(IntRow& r) {
    r.pivot = -1;
    Int g(0);
    for (auto& x : r.v) {
        if (x != 0) {
            if (r.pivot < 0) r.pivot = int(&x - r.v.data());
            g = gcd(g, x);
        }
    }
    if (r.pivot < 0) return;
    if (sgn(r.v[r.pivot]) < 0) g = -g;
    if (g != 1)
        for (auto& x : r.v) x /= g;
}

inline std::vector<Int> clear_denominators(const Vec& row) {
    Int l(1);
    for (auto& q : row)
        if (q != 0) l = lcm(l, q.get_den());
    std::vector<Int> r(row.size());
    for (size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) r[i] = row[i].get_num() * (l / row[i].get_den());
    return r;
}

// r -= (r[c]/p[c]) * p, fraction-free: r = (p[c]/g)*r - (r[c]/g)*p.
inline void eliminate(std::vector<Int>& r, const std::vector<Int>& p, int c) {
    Int g = gcd(r[c], p[c]);
    Int a = p[c] / g, b = r[c] / g;
    for (size_t k = 0; k < r.size(); ++k) {
        r[k] = a * r[k] - b * p[k];
    }
}

}  // namespace detail

// Reduced row echelon form with pivot entries 1; exact and deterministic.
inline RrefResult rref(const MatQ& m) {
    using detail::IntRow;
    int rows = m.rows(), cols = m.cols();
    std::vector<IntRow> ech;  // sorted by pivot
    for (int i = 0; i < rows; ++i) {
        IntRow r;
        r.v = detail::clear_denominators(m.row(i));
        detail::normalize_int_row(r);
        if (r.pivot < 0) continue;
        for (auto& p : ech) {
            if (r.v[p.pivot] != 0) detail::eliminate(r.v, p.v, p.pivot);
        }
        detail::normalize_int_row(r);
        if (r.pivot >= 0) {
            ech.push_back(std::move(r));
            std::sort(ech.begin(), ech.end(),
                      [](const IntRow& a, const IntRow& b) { return a.pivot < b.pivot; });
        }
    }
    // back-substitution over Q
    int rank = (int)ech.size();
    MatQ out(rows, cols);
    std::vector<Vec> rr(rank);
    std::vector<int> pivots(rank);
    for (int i = 0; i < rank; ++i) {
        pivots[i] = ech[i].pivot;
        rr[i].resize(cols);
        Rat lead(ech[i].v[ech[i].pivot]);
        for (int j = 0; j < cols; ++j) {
            rr[i][j] = Rat(ech[i].v[j]) / lead;
            rr[i][j].canonicalize();
        }
    }
    for (int i = rank - 1; i >= 0; --i)
        for (int k = 0; k < i; ++k) {
            Rat c = rr[k][pivots[i]];
            if (c != 0)
                for (int j = pivots[i]; j < cols; ++j)
                    if (rr[i][j] != 0) rr[k][j] -= c * rr[i][j];
        }
    for (int i = 0; i < rank; ++i) out.set_row(i, rr[i]);
    return {out, rank, pivots};
}

// A subspace of Q^n held in canonical form: basis rows in reduced echelon
// form, so equal subspaces compare equal componentwise.
class Subspace {
  public:
    Subspace() : ambient_(0), basis_(0, 0) {}
    explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace from_vectors(int ambient, const std::vector<Vec>& vs) {
        MatQ m((int)vs.size(), ambient);
        for (int i = 0; i < (int)vs.size(); ++i) m.set_row(i, vs[i]);
        return from_matrix_rows(m);
    }
    static Subspace from_matrix_rows(const MatQ& m) {
        RrefResult r = rref(m);
        Subspace s(m.cols());
        MatQ b(r.rank, m.cols());
        for (int i = 0; i < r.rank; ++i) b.set_row(i, r.mat.row(i));
        s.basis_ = b;
        s.pivots_ = r.pivots;
        return s;
    }
    static Subspace full(int ambient) { return from_matrix_rows(MatQ::identity(ambient)); }

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const MatQ& basis() const { return basis_; }
    Vec basis_vector(int i) const { return basis_.row(i); }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const {
        Vec r = reduce(v);
        return mf::is_zero(r);
    }
    bool contains(const Subspace& o) const {
        for (int i = 0; i < o.dim(); ++i)
            if (!contains(o.basis_vector(i))) return false;
        return true;
    }

    // v minus its projection through the echelon basis (residual is zero iff
    // v lies in the subspace).
    Vec reduce(const Vec& v) const {
        Vec r(v);
        for (int i = 0; i < dim(); ++i) {
            const Rat& c = r[pivots_[i]];
            if (c != 0) {
                Rat cc = c;  // r[pivot] mutates below
                for (int j = 0; j < ambient_; ++j)
                    if (basis_.at(i, j) != 0) r[j] -= cc * basis_.at(i, j);
            }
        }
        return r;
    }

    // Coordinates in the canonical basis; throws if v is not a member.
    Vec coordinates_of(const Vec& v) const {
        Vec c(dim());
        for (int i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
        // membership check
        Vec rec(ambient_, Rat(0));
        for (int i = 0; i < dim(); ++i)
            if (c[i] != 0)
                for (int j = 0; j < ambient_; ++j)
                    if (basis_.at(i, j) != 0) rec[j] += c[i] * basis_.at(i, j);
        if (rec != v) throw std::domain_error("coordinates_of: vector not in subspace");
        return c;
    }

    Subspace sum(const Subspace& o) const {
        check_ambient(o);
        MatQ m(dim() + o.dim(), ambient_);
        for (int i = 0; i < dim(); ++i) m.set_row(i, basis_.row(i));
        for (int i = 0; i < o.dim(); ++i) m.set_row(dim() + i, o.basis_.row(i));
        return from_matrix_rows(m);
    }

    Subspace intersect(const Subspace& o) const {
        check_ambient(o);
        // kernel of [A^T | -B^T]: columns are our basis vectors and minus theirs
        int da = dim(), db = o.dim();
        MatQ m(ambient_, da + db);
        for (int j = 0; j < da; ++j)
            for (int i = 0; i < ambient_; ++i) m.at(i, j) = basis_.at(j, i);
        for (int j = 0; j < db; ++j)
            for (int i = 0; i < ambient_; ++i) m.at(i, da + j) = -o.basis_.at(j, i);
        RrefResult r = rref(m);
        std::vector<Vec> gens;
        // kernel basis of m, standard free-column construction
        std::vector<int> pivot_of_col(da + db, -1);
        for (int i = 0; i < r.rank; ++i) pivot_of_col[r.pivots[i]] = i;
        for (int f = 0; f < da + db; ++f) {
            if (pivot_of_col[f] >= 0) continue;
            // alpha coefficients give the intersection vector
            Vec v(ambient_, Rat(0));
            auto add_alpha = [&](int col, const Rat& coef) {
                if (col < da && coef != 0)
                    for (int j = 0; j < ambient_; ++j)
                        if (basis_.at(col, j) != 0) v[j] += coef * basis_.at(col, j);
            };
            add_alpha(f, Rat(1));
            for (int i = 0; i < r.rank; ++i) add_alpha(r.pivots[i], -r.mat.at(i, f));
            gens.push_back(v);
        }
        return from_vectors(ambient_, gens);
    }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

  private:
    void check_ambient(const Subspace& o) const {
        if (ambient_ != o.ambient_)
            throw std::invalid_argument("subspace ops: ambient dimension mismatch");
    }
    int ambient_;
    MatQ basis_;
    std::vector<int> pivots_;
};

// Accumulates homogeneous constraint rows M and solves M v = 0 exactly.
//
// Rows are eliminated incrementally so the full constraint matrix is never
// materialized. A modular shadow (single 61-bit prime) filters out rows that
// are dependent on the current echelon; those are kept aside in sparse form
// and every kernel vector is verified against them exactly at the end, with
// exact re-insertion and a retry on any miss. The exact path is fraction-free
// integer elimination with content removal.
class LinearSystem {
  public:
    explicit LinearSystem(int cols) : cols_(cols) {}

    void add_row(const Vec& dense) { add_row_sparse(to_sparse(dense)); }

    void add_row_sparse(SparseVec row) {
        // combine repeated indices so constraint assemblers may emit terms freely
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        size_t w = 0;
        for (size_t r = 0; r < row.size(); ++r) {
            if (w > 0 && row[w - 1].first == row[r].first)
                row[w - 1].second += row[r].second;
            else
                row[w++] = row[r];
        }
        row.resize(w);
        row.erase(std::remove_if(row.begin(), row.end(),
                                 [](const auto& e) { return e.second == 0; }),
                  row.end());
        if (row.empty()) return;
        std::vector<uint64_t> mr = to_mod(row);
        if (mod_reduce(mr)) {
            deferred_.push_back(row);  // dependent modulo p; verified later
            return;
        }
        insert_exact(row);
        solved_ = false;
    }

    int rank() {
        ensure_solved();
        return (int)ech_.size();
    }

    // Canonical basis of the kernel.
    Subspace nullspace() {
        ensure_solved();
        return kernel_;
    }

    int cols() const { return cols_; }

  private:
    using IntRow = detail::IntRow;

    std::vector<uint64_t> to_mod(const SparseVec& row) {
        std::vector<uint64_t> m(cols_, 0);
        for (auto& [i, q] : row) {
            uint64_t num = mod_of_int(q.get_num());
            uint64_t den = mod_of_int(q.get_den());
            m[i] = mulmod(num, powmod(den, P - 2));
        }
        return m;
    }

    // Returns true if the row reduces to zero against the modular echelon.
    bool mod_reduce(std::vector<uint64_t>& r) const {
        for (auto& p : mod_ech_) {
            if (r[p.first] != 0) {
                uint64_t c = mulmod(r[p.first], powmod(p.second[p.first], P - 2));
                for (int k = p.first; k < cols_; ++k)
                    if (p.second[k]) r[k] = submod(r[k], mulmod(c, p.second[k]));
            }
        }
        for (auto x : r)
            if (x) return false;
        return true;
    }

    void insert_exact(const SparseVec& row) {
        IntRow r;
        {
            Vec dense = to_dense(row, cols_);
            r.v = detail::clear_denominators(dense);
        }
        detail::normalize_int_row(r);
        for (auto& p : ech_) {
            if (r.pivot < 0) break;
            if (r.v[p.pivot] != 0) detail::eliminate(r.v, p.v, p.pivot);
            detail::normalize_int_row(r);
        }
        if (r.pivot < 0) return;  // exactly dependent (rare: modular said independent)
        // modular image of the reduced exact row
        std::vector<uint64_t> mr(cols_, 0);
        for (int k = 0; k < cols_; ++k)
            if (r.v[k] != 0) mr[k] = mod_of_int(r.v[k]);
        mod_ech_.emplace_back(r.pivot, std::move(mr));
        ech_.push_back(std::move(r));
        std::sort(ech_.begin(), ech_.end(),
                  [](const IntRow& a, const IntRow& b) { return a.pivot < b.pivot; });
        std::sort(mod_ech_.begin(), mod_ech_.end(),
                  [](auto& a, auto& b) { return a.first < b.first; });
    }

    void ensure_solved() {
        if (solved_) return;
        for (;;) {
            compute_kernel();
            bool again = false;
            for (size_t d = 0; d < deferred_.size(); ++d) {
                for (int i = 0; i < kernel_.dim() && !again; ++i) {
                    Vec v = kernel_.basis_vector(i);
                    Rat s(0);
                    for (auto& [c, q] : deferred_[d])
                        if (v[c] != 0) s += q * v[c];
                    if (s != 0) {
                        insert_exact(deferred_[d]);
                        deferred_.erase(deferred_.begin() + d);
                        again = true;
                    }
                }
                if (again) break;
            }
            if (!again) break;
        }
        solved_ = true;
    }

    void compute_kernel() {
        int rank = (int)ech_.size();
        // back-substitute the integer echelon to RREF over Q
        std::vector<Vec> rr(rank);
        std::vector<int> pivots(rank);
        for (int i = 0; i < rank; ++i) {
            pivots[i] = ech_[i].pivot;
            rr[i].resize(cols_);
            Rat lead(ech_[i].v[pivots[i]]);
            for (int j = 0; j < cols_; ++j)
                if (ech_[i].v[j] != 0) {
                    rr[i][j] = Rat(ech_[i].v[j]) / lead;
                    rr[i][j].canonicalize();
                }
        }
        for (int i = rank - 1; i >= 0; --i)
            for (int k = 0; k < i; ++k) {
                Rat c = rr[k][pivots[i]];
                if (c != 0)
                    for (int j = pivots[i]; j < cols_; ++j)
                        if (rr[i][j] != 0) rr[k][j] -= c * rr[i][j];
            }
        std::vector<int> pivot_of_col(cols_, -1);
        for (int i = 0; i < rank; ++i) pivot_of_col[pivots[i]] = i;
        std::vector<Vec> gens;
        for (int f = 0; f < cols_; ++f) {
            if (pivot_of_col[f] >= 0) continue;
            Vec v(cols_, Rat(0));
            v[f] = 1;
            for (int i = 0; i < rank; ++i) v[pivots[i]] = -rr[i][f];
            gens.push_back(std::move(v));
        }
        kernel_ = Subspace::from_vectors(cols_, gens);
    }

    static constexpr uint64_t P = 2305843009213693951ull;  // 2^61 - 1
    static uint64_t mulmod(uint64_t a, uint64_t b) {
        return (uint64_t)((__uint128_t)a * b % P);
    }
    static uint64_t submod(uint64_t a, uint64_t b) { return a >= b ? a - b : a + P - b; }
    static uint64_t powmod(uint64_t a, uint64_t e) {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    }
    static uint64_t mod_of_int(const Int& z) {
        static const Int p = Int(P);
        Int r = z % p;
        if (r < 0) r += p;
        return r.get_ui();
    }

    int cols_;
    bool solved_ = false;
    std::vector<IntRow> ech_;
    std::vector<std::pair<int, std::vector<uint64_t>>> mod_ech_;
    std::vector<SparseVec> deferred_;
    Subspace kernel_;
};

// Kernel of a dense matrix (canonical basis).
inline Subspace nullspace(const MatQ& m) {
    LinearSystem sys(m.cols());
    for (int i = 0; i < m.rows(); ++i) sys.add_row(m.row(i));
    return sys.nullspace();
}

inline Subspace eigenspace(const MatQ& m, const Rat& lambda) {
    if (m.rows() != m.cols()) throw std::invalid_argument("eigenspace: matrix not square");
    MatQ s = m;
    for (int i = 0; i < m.rows(); ++i) s.at(i, i) -= lambda;
    return nullspace(s);
}

}  // namespace mf
