#pragma once
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace mf {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is what subspace canonical forms rely on.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n) { return Rat(n); }

inline Rat rat(long n, long d) {
    if (d == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

// Parses "p", "-p" or "p/q".
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

using Vec = std::vector<Rat>;
using SparseVec = std::vector<std::pair<int, Rat>>;  // sorted by index, nonzero values

inline Vec to_dense(const SparseVec& s, int n) {
    Vec v(n, Rat(0));
    for (auto& [i, x] : s) v[i] = x;
    return v;
}

inline SparseVec to_sparse(const Vec& v) {
    SparseVec s;
    for (int i = 0; i < (int)v.size(); ++i)
        if (v[i] != 0) s.emplace_back(i, v[i]);
    return s;
}

inline bool is_zero(const Vec& v) {
    for (auto& x : v)
        if (x != 0) return false;
    return true;
}

// FNV-1a, used to derive stable per-name seeds for sampled checks.
inline unsigned long long fnv1a(const std::string& s) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace mf
