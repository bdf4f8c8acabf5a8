#pragma once
#include "tits.hpp"

namespace mf {

// Row/column order of the extended square.
inline const std::vector<std::string>& square_algebra_names() {
    static const std::vector<std::string> names{"reals", "split_complex", "split_quaternion",
                                               "sextonion", "split_octonion"};
    return names;
}

enum class SquareConstruction { tits, triality_dims };

struct SquareCell {
    std::string row_algebra, col_algebra;
    std::string label;
    int dim = 0;
    SquareConstruction construction = SquareConstruction::tits;
};

// Dimension encoded by a cell label: a simple base plus n+1 per ".H_n"
// suffix (a Heisenberg extension adds the symplectic space and a line).
inline int dim_from_label(const std::string& label) {
    static const std::map<std::string, int> base{{"A_1", 3},  {"A_2", 8},   {"2A_2", 16},
                                                 {"C_3", 21}, {"A_5", 35},  {"D_6", 66},
                                                 {"F_4", 52}, {"E_6", 78},  {"E_7", 133},
                                                 {"E_8", 248}};
    size_t dot = label.find('.');
    std::string head = label.substr(0, dot);
    auto it = base.find(head);
    if (it == base.end()) throw std::invalid_argument("dim_from_label: unknown base " + head);
    int d = it->second;
    while (dot != std::string::npos) {
        size_t next = label.find('.', dot + 1);
        std::string part = label.substr(dot + 1, next == std::string::npos ? next : next - dot - 1);
        if (part.rfind("H_", 0) != 0)
            throw std::invalid_argument("dim_from_label: bad suffix " + part);
        d += std::stoi(part.substr(2)) + 1;
        dot = next;
    }
    return d;
}

inline const std::array<std::array<const char*, 5>, 5>& square_labels() {
    static const std::array<std::array<const char*, 5>, 5> labels{{
        {"A_1", "A_2", "C_3", "C_3.H_14", "F_4"},
        {"A_2", "2A_2", "A_5", "A_5.H_20", "E_6"},
        {"C_3", "A_5", "D_6", "D_6.H_32", "E_7"},
        {"C_3.H_14", "A_5.H_20", "D_6.H_32", "D_6.H_32.H_44", "E_7.H_56"},
        {"F_4", "E_6", "E_7", "E_7.H_56", "E_8"},
    }};
    return labels;
}

// dim t(a, H3(b)) from the cached derivation solves; the full bracket is
// only needed for Jacobi checks, not for the dimension table.
inline int tits_cell_dimension(const AlgebraTable& a, const AlgebraTable& b) {
    AlgebraTable j = jordan_hermitian(b);
    return cached_derivation_space(a).dim() + cached_derivation_space(j).dim() +
           imaginary_part(a).dim() * jordan_imaginary(j).dim();
}

struct VinbergReport {
    int der_a = 0, der_b = 0, anti_hermitian = 0, total = 0;
};

// Trace-free anti-Hermitian 3x3 matrices over a (x) b: three free
// off-diagonal entries, plus diagonal entries in the -1 eigenspace of the
// tensor conjugation with the trace removed.
inline VinbergReport vinberg_dims(const AlgebraTable& a, const AlgebraTable& b) {
    if (!a.conj || !b.conj) throw std::invalid_argument("vinberg_dims: missing conjugation");
    int na = a.dim, nb = b.dim;
    MatQ sigma(na * nb, na * nb);
    for (int i = 0; i < na; ++i)
        for (int k = 0; k < na; ++k) {
            if (a.conj->at(i, k) == 0) continue;
            for (int j = 0; j < nb; ++j)
                for (int m = 0; m < nb; ++m)
                    if (b.conj->at(j, m) != 0)
                        sigma.at(i * nb + j, k * nb + m) = a.conj->at(i, k) * b.conj->at(j, m);
        }
    int im_tensor = eigenspace(sigma, rat(-1)).dim();
    VinbergReport r;
    r.der_a = cached_derivation_space(a).dim();
    r.der_b = cached_derivation_space(b).dim();
    r.anti_hermitian = 3 * na * nb + 2 * im_tensor;
    r.total = r.der_a + r.der_b + r.anti_hermitian;
    return r;
}

struct TrialityReport {
    int tri_a = 0, tri_b = 0, tensor = 0, total = 0;
};

// tri(a) + tri(b) + 3 (a (x) b), dimension level.
inline TrialityReport triality_construction_dims(const AlgebraTable& a, const AlgebraTable& b) {
    TrialityReport r;
    r.tri_a = cached_triality_space(a).dim();
    r.tri_b = cached_triality_space(b).dim();
    r.tensor = 3 * a.dim * b.dim;
    r.total = r.tri_a + r.tri_b + r.tensor;
    return r;
}

// 5x5 table of cells; for tits the dims are computed from the construction
// and must come out symmetric, for triality_dims from the decomposition.
inline std::vector<std::vector<SquareCell>> magic_square_table(SquareConstruction con) {
    const auto& names = square_algebra_names();
    std::vector<AlgebraTable> algs;
    for (const auto& n : names) algs.push_back(base_algebra(n));
    std::vector<std::vector<SquareCell>> table(5, std::vector<SquareCell>(5));
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) {
            SquareCell& cell = table[r][c];
            cell.row_algebra = names[r];
            cell.col_algebra = names[c];
            cell.label = square_labels()[r][c];
            cell.construction = con;
            cell.dim = con == SquareConstruction::tits
                           ? tits_cell_dimension(algs[r], algs[c])
                           : triality_construction_dims(algs[r], algs[c]).total;
            if (cell.dim != dim_from_label(cell.label))
                throw std::domain_error("magic_square_table: cell (" + names[r] + "," + names[c] +
                                        ") dim " + std::to_string(cell.dim) +
                                        " disagrees with label " + cell.label);
        }
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < r; ++c)
            if (table[r][c].dim != table[c][r].dim)
                throw std::domain_error("magic_square_table: asymmetric at (" + names[r] + "," +
                                        names[c] + ")");
    return table;
}

// dim a(A, W_n) = tri(A) + n(n-1)/2 + n dim(A).
inline int adams_dim(const AlgebraTable& a, int n) {
    return cached_triality_space(a).dim() + n * (n - 1) / 2 + n * a.dim;
}

struct BigradingLayout {
    int m = 0;
    // diamond |i|+|j| <= 2 of (bidegree, dim) cells
    std::vector<std::pair<std::pair<int, int>, int>> cells;
    std::vector<int> collapse;  // total degrees -2..2
    int total = 0;
};

// Bigrading of L(A, O) by the two commuting highest-root sl2s: corners are
// lines, the (+-1,+-1) cells carry the m+4 dimensional vector
// representation, the odd edges spin representations of dimension 4m, and
// the center is a(A, W_4) plus the two grading lines.
inline BigradingLayout bigrading(int m) {
    static const std::map<int, const char*> by_dim{{1, "reals"},
                                                   {2, "split_complex"},
                                                   {4, "split_quaternion"},
                                                   {6, "sextonion"},
                                                   {8, "split_octonion"}};
    auto it = by_dim.find(m);
    if (it == by_dim.end()) throw std::invalid_argument("bigrading: m must be in {1,2,4,6,8}");
    AlgebraTable a = base_algebra(it->second);
    BigradingLayout l;
    l.m = m;
    int center = adams_dim(a, 4) + 2;
    for (int i = -2; i <= 2; ++i)
        for (int j = -2; j <= 2; ++j) {
            int s = std::abs(i) + std::abs(j);
            if (s > 2) continue;
            int d = s == 0 ? center : (s == 2 && (i == 0 || j == 0)) ? 1
                                      : s == 2                       ? m + 4
                                                                     : 4 * m;
            l.cells.push_back({{i, j}, d});
            l.total += d;
        }
    for (int t = -2; t <= 2; ++t) {
        int d = 0;
        for (auto& [ij, dim] : l.cells)
            if (ij.first + ij.second == t) d += dim;
        l.collapse.push_back(d);
    }
    // collapse closed forms: (m+6, 8m, a(A,W_6)+1, 8m, m+6)
    std::vector<int> expect{m + 6, 8 * m, adams_dim(a, 6) + 1, 8 * m, m + 6};
    if (l.collapse != expect)
        throw std::domain_error("bigrading: collapse disagrees with closed form");
    return l;
}

}  // namespace mf
