#pragma once
#include <map>
#include <sstream>

#include "rational.hpp"

namespace mf {

// Sparse multivariate polynomial over Q. Monomials are sorted (var, exp)
// lists. Degrees stay tiny here (symbolic identity checks are at most
// quartic), so a map-backed representation is plenty.
class Poly {
  public:
    using Mono = std::vector<std::pair<int, int>>;

    Poly() = default;
    explicit Poly(const Rat& c) {
        if (c != 0) t_[{}] = c;
    }
    static Poly var(int i) {
        Poly p;
        p.t_[{{i, 1}}] = 1;
        return p;
    }

    bool is_zero() const { return t_.empty(); }

    Poly operator+(const Poly& o) const {
        Poly r(*this);
        for (auto& [m, c] : o.t_) r.add_term(m, c);
        return r;
    }
    Poly operator-(const Poly& o) const {
        Poly r(*this);
        for (auto& [m, c] : o.t_) r.add_term(m, -c);
        return r;
    }
    Poly operator*(const Poly& o) const {
        Poly r;
        for (auto& [m1, c1] : t_)
            for (auto& [m2, c2] : o.t_) r.add_term(mono_mul(m1, m2), c1 * c2);
        return r;
    }
    Poly operator*(const Rat& c) const {
        Poly r;
        if (c == 0) return r;
        for (auto& [m, x] : t_) r.t_[m] = x * c;
        return r;
    }
    Poly operator-() const { return *this * Rat(-1); }

    bool operator==(const Poly& o) const { return t_ == o.t_; }

    // First nonzero term rendered as "c * x3^2 x7", for failure reports.
    std::string leading_term_str() const {
        if (t_.empty()) return "0";
        auto& [m, c] = *t_.begin();
        std::ostringstream os;
        os << rat_str(c);
        for (auto& [v, e] : m) {
            os << " x" << v;
            if (e > 1) os << "^" << e;
        }
        return os.str();
    }

    size_t term_count() const { return t_.size(); }

  private:
    static Mono mono_mul(const Mono& a, const Mono& b) {
        Mono r;
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
                r.push_back(a[i++]);
            else if (i == a.size() || b[j].first < a[i].first)
                r.push_back(b[j++]);
            else {
                r.emplace_back(a[i].first, a[i].second + b[j].second);
                ++i, ++j;
            }
        }
        return r;
    }
    void add_term(const Mono& m, const Rat& c) {
        if (c == 0) return;
        auto it = t_.find(m);
        if (it == t_.end())
            t_[m] = c;
        else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }
    std::map<Mono, Rat> t_;
};

using PolyVec = std::vector<Poly>;

inline PolyVec generic_vector(int dim, int var_offset) {
    PolyVec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = Poly::var(var_offset + i);
    return v;
}

}  // namespace mf
