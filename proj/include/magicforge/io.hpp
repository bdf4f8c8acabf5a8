#pragma once
#include <json.hpp>

#include "lie.hpp"
#include "magic.hpp"
#include "series.hpp"

namespace mf {

using nlohmann::json;
using nlohmann::ordered_json;

inline json vec_json(const Vec& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(rat_str(x));
    return a;
}

inline Vec vec_parse(const json& a) {
    Vec v;
    for (const auto& s : a) v.push_back(rat_parse(s.get<std::string>()));
    return v;
}

inline json mat_json(const MatQ& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) rows.push_back(vec_json(m.row(i)));
    return rows;
}

inline MatQ mat_parse(const json& rows) {
    int r = rows.size(), c = r ? (int)rows[0].size() : 0;
    MatQ m(r, c);
    for (int i = 0; i < r; ++i) {
        Vec row = vec_parse(rows[i]);
        for (int j = 0; j < c; ++j) m.at(i, j) = row[j];
    }
    return m;
}

inline json algebra_to_json(const AlgebraTable& a) {
    json j;
    j["name"] = a.name;
    j["dim"] = a.dim;
    j["basis"] = a.basis;
    json mul = json::array();
    for (int i = 0; i < a.dim; ++i) {
        json row = json::array();
        for (int k = 0; k < a.dim; ++k) row.push_back(vec_json(a.mul[i][k]));
        mul.push_back(row);
    }
    j["mul"] = mul;
    if (a.unit) j["unit"] = vec_json(*a.unit);
    if (a.conj) j["conj"] = mat_json(*a.conj);
    if (a.form) j["form"] = mat_json(*a.form);
    if (a.degrees) j["degrees"] = *a.degrees;
    return j;
}

inline AlgebraTable algebra_from_json(const json& j) {
    AlgebraTable a;
    a.name = j.at("name").get<std::string>();
    a.dim = j.at("dim").get<int>();
    a.basis = j.at("basis").get<std::vector<std::string>>();
    a.mul.assign(a.dim, std::vector<Vec>(a.dim));
    for (int i = 0; i < a.dim; ++i)
        for (int k = 0; k < a.dim; ++k) a.mul[i][k] = vec_parse(j.at("mul")[i][k]);
    if (j.contains("unit")) a.unit = vec_parse(j.at("unit"));
    if (j.contains("conj")) a.conj = mat_parse(j.at("conj"));
    if (j.contains("form")) a.form = mat_parse(j.at("form"));
    if (j.contains("degrees")) a.degrees = j.at("degrees").get<std::vector<int>>();
    return a;
}

// linear combination of labelled basis elements, "0" when empty
inline std::string lincomb_str(const Vec& v, const std::vector<std::string>& labels) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        std::string lbl = i < labels.size() ? labels[i] : "e" + std::to_string(i);
        std::string coef;
        if (v[i] == 1)
            coef = "";
        else if (v[i] == -1)
            coef = "-";
        else
            coef = rat_str(v[i]) + "*";
        if (!s.empty() && coef.rfind('-', 0) != 0) s += "+";
        s += coef + lbl;
    }
    return s.empty() ? "0" : s;
}

inline std::string algebra_to_markdown(const AlgebraTable& a) {
    std::vector<std::string> labels = a.basis;
    if ((int)labels.size() != a.dim) {
        labels.resize(a.dim);
        for (int i = 0; i < a.dim; ++i) labels[i] = "e" + std::to_string(i);
    }
    std::string s = "# " + a.name + "\n\n|  |";
    for (const auto& l : labels) s += " " + l + " |";
    s += "\n|---|";
    for (int i = 0; i < a.dim; ++i) s += "---|";
    s += "\n";
    for (int i = 0; i < a.dim; ++i) {
        s += "| **" + labels[i] + "** |";
        for (int k = 0; k < a.dim; ++k) s += " " + lincomb_str(a.mul[i][k], labels) + " |";
        s += "\n";
    }
    return s;
}

// bracket stored for i < j only
inline json lie_to_json(const LieAlgebra& l) {
    json j;
    j["name"] = l.name;
    j["dim"] = l.dim;
    j["labels"] = l.labels;
    if (l.degrees) j["degrees"] = *l.degrees;
    json br = json::array();
    for (int i = 0; i < l.dim; ++i)
        for (int k = i + 1; k < l.dim; ++k) {
            if (l.bracket[i][k].empty()) continue;
            json terms = json::array();
            SparseVec sorted = l.bracket[i][k];
            std::sort(sorted.begin(), sorted.end());
            for (auto& [idx, c] : sorted) terms.push_back(json::array({idx, rat_str(c)}));
            br.push_back(json::array({i, k, terms}));
        }
    j["bracket"] = br;
    return j;
}

inline LieAlgebra lie_from_json(const json& j) {
    LieAlgebra l;
    l.name = j.at("name").get<std::string>();
    l.dim = j.at("dim").get<int>();
    l.labels = j.at("labels").get<std::vector<std::string>>();
    if (j.contains("degrees")) l.degrees = j.at("degrees").get<std::vector<int>>();
    l.bracket.assign(l.dim, std::vector<SparseVec>(l.dim));
    for (const auto& e : j.at("bracket")) {
        int i = e[0].get<int>(), k = e[1].get<int>();
        SparseVec v;
        for (const auto& t : e[2]) v.emplace_back(t[0].get<int>(), rat_parse(t[1].get<std::string>()));
        l.bracket[i][k] = v;
        for (auto& [idx, c] : v) l.bracket[k][i].emplace_back(idx, -c);
    }
    return l;
}

inline json magic_table_json(const std::vector<std::vector<SquareCell>>& t) {
    json j;
    j["algebras"] = square_algebra_names();
    j["construction"] =
        t[0][0].construction == SquareConstruction::tits ? "tits" : "triality_dims";
    json cells = json::array();
    for (const auto& row : t) {
        json r = json::array();
        for (const auto& c : row)
            r.push_back(json{{"row", c.row_algebra},
                             {"col", c.col_algebra},
                             {"label", c.label},
                             {"dim", c.dim}});
        cells.push_back(r);
    }
    j["cells"] = cells;
    return j;
}

inline std::string magic_table_markdown(const std::vector<std::vector<SquareCell>>& t) {
    const auto& names = square_algebra_names();
    std::string s = "| |";
    for (const auto& n : names) s += " " + n + " |";
    s += "\n|---|";
    for (size_t i = 0; i < names.size(); ++i) s += "---|";
    s += "\n";
    for (size_t r = 0; r < t.size(); ++r) {
        s += "| **" + names[r] + "** |";
        for (const auto& c : t[r]) s += " " + c.label + " (" + std::to_string(c.dim) + ") |";
        s += "\n";
    }
    return s;
}

inline std::string magic_table_csv(const std::vector<std::vector<SquareCell>>& t) {
    std::string s = "row,col,label,dim\n";
    for (const auto& row : t)
        for (const auto& c : row)
            s += c.row_algebra + "," + c.col_algebra + "," + c.label + "," +
                 std::to_string(c.dim) + "\n";
    return s;
}

inline json series_point_json(const SeriesPoint& p) {
    json j;
    j["m"] = rat_str(p.m);
    j["dim_sub"] = rat_str(p.dim_sub);
    j["dim_exc"] = rat_str(p.dim_exc);
    j["rep_dim"] = rat_str(p.rep_dim);
    j["integral"] = p.integral;
    if (p.label_sub) j["label_sub"] = *p.label_sub;
    if (p.label_exc) j["label_exc"] = *p.label_exc;
    return j;
}

inline std::string series_table_csv(const std::vector<SeriesPoint>& pts) {
    std::string s = "m,dim_sub,dim_exc,rep_dim,label_sub,label_exc\n";
    for (const auto& p : pts)
        s += rat_str(p.m) + "," + rat_str(p.dim_sub) + "," + rat_str(p.dim_exc) + "," +
             rat_str(p.rep_dim) + "," + p.label_sub.value_or("") + "," +
             p.label_exc.value_or("") + "\n";
    return s;
}

inline std::string series_table_markdown(const std::vector<SeriesPoint>& pts) {
    std::string s = "| m | dim_sub | dim_exc | rep_dim | labels |\n|---|---|---|---|---|\n";
    for (const auto& p : pts) {
        std::string lbl = p.label_sub.value_or("-") + " / " + p.label_exc.value_or("-");
        s += "| " + rat_str(p.m) + " | " + rat_str(p.dim_sub) + " | " + rat_str(p.dim_exc) +
             " | " + rat_str(p.rep_dim) + " | " + lbl + " |\n";
    }
    return s;
}

inline json bigrading_json(const BigradingLayout& b) {
    json j;
    j["m"] = b.m;
    json cells = json::array();
    for (auto& [ij, d] : b.cells) cells.push_back(json::array({ij.first, ij.second, d}));
    j["cells"] = cells;
    j["collapse"] = b.collapse;
    j["total"] = b.total;
    return j;
}

}  // namespace mf
