#pragma once
#include <cassert>
#include <initializer_list>

#include "rational.hpp"

namespace mf {

// Dense matrix over Q, row-major.
class MatQ {
  public:
    MatQ() : r_(0), c_(0) {}
    MatQ(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols, Rat(0)) {}
    MatQ(int rows, int cols, std::initializer_list<Rat> xs) : MatQ(rows, cols) {
        assert((int)xs.size() == rows * cols);
        size_t k = 0;
        for (auto& x : xs) a_[k++] = x;
    }

    static MatQ identity(int n) {
        MatQ m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    Rat& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const Rat& at(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    Vec row(int i) const { return Vec(a_.begin() + size_t(i) * c_, a_.begin() + size_t(i + 1) * c_); }
    void set_row(int i, const Vec& v) {
        assert((int)v.size() == c_);
        std::copy(v.begin(), v.end(), a_.begin() + size_t(i) * c_);
    }

    MatQ transpose() const {
        MatQ t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    MatQ operator*(const MatQ& o) const {
        assert(c_ == o.r_);
        MatQ p(r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const Rat& x = at(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.c_; ++j) {
                    if (o.at(k, j) != 0) p.at(i, j) += x * o.at(k, j);
                }
            }
        return p;
    }

    Vec operator*(const Vec& v) const {
        assert((int)v.size() == c_);
        Vec w(r_, Rat(0));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                if (at(i, j) != 0 && v[j] != 0) w[i] += at(i, j) * v[j];
        return w;
    }

    MatQ operator+(const MatQ& o) const {
        assert(r_ == o.r_ && c_ == o.c_);
        MatQ s(r_, c_);
        for (size_t k = 0; k < a_.size(); ++k) s.a_[k] = a_[k] + o.a_[k];
        return s;
    }
    MatQ operator-(const MatQ& o) const {
        assert(r_ == o.r_ && c_ == o.c_);
        MatQ s(r_, c_);
        for (size_t k = 0; k < a_.size(); ++k) s.a_[k] = a_[k] - o.a_[k];
        return s;
    }
    MatQ operator*(const Rat& x) const {
        MatQ s(r_, c_);
        for (size_t k = 0; k < a_.size(); ++k) s.a_[k] = a_[k] * x;
        return s;
    }
    MatQ operator-() const { return *this * Rat(-1); }

    bool operator==(const MatQ& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const MatQ& o) const { return !(*this == o); }

    bool is_zero() const {
        for (auto& x : a_)
            if (x != 0) return false;
        return true;
    }
    bool is_symmetric() const {
        if (r_ != c_) return false;
        for (int i = 0; i < r_; ++i)
            for (int j = i + 1; j < c_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }
    bool is_antisymmetric() const {
        if (r_ != c_) return false;
        for (int i = 0; i < r_; ++i)
            for (int j = i; j < c_; ++j)
                if (at(i, j) != -at(j, i)) return false;
        return true;
    }

    // Flattened row-major view, used when operators live in a vector space.
    Vec flatten() const { return a_; }
    static MatQ unflatten(int rows, int cols, const Vec& v) {
        assert((int)v.size() == rows * cols);
        MatQ m(rows, cols);
        m.a_ = v;
        return m;
    }

    Rat trace() const {
        assert(r_ == c_);
        Rat t(0);
        for (int i = 0; i < r_; ++i) t += at(i, i);
        return t;
    }

    static MatQ commutator(const MatQ& a, const MatQ& b) { return a * b - b * a; }

  private:
    int r_, c_;
    std::vector<Rat> a_;
};

inline Rat dot(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

inline Vec axpy(const Rat& c, const Vec& x, const Vec& y) {  // c*x + y
    Vec r(y);
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) r[i] += c * x[i];
    return r;
}

}  // namespace mf
