#include "zalpha/io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>

namespace zalpha {

namespace {

std::string strip_ws(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

std::string need_string(const Json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + ": expected a decimal string");
    return j.get<std::string>();
}

}  // namespace

Int parse_int(const std::string& raw) {
    std::string s = strip_ws(raw);
    if (s.empty()) throw ParseError("empty integer literal");
    Int v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw ParseError("bad integer literal '" + raw + "'");
    return v;
}

Rat parse_rat(const std::string& raw) {
    std::string s = strip_ws(raw);
    auto slash = s.find('/');
    Int num = parse_int(s.substr(0, slash));
    Int den = slash == std::string::npos ? Int(1) : parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + raw + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::shared_ptr<Field> field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("min_poly") || !j.contains("interval"))
        throw ParseError("field: expected {\"min_poly\": [...], \"interval\": [lo, hi]}");
    const Json& mp = j.at("min_poly");
    if (!mp.is_array() || mp.empty()) throw ParseError("field: min_poly must be a nonempty array");
    std::vector<Int> f;
    for (const auto& c : mp) f.push_back(parse_int(need_string(c, "min_poly")));
    const Json& iv = j.at("interval");
    if (!iv.is_array() || iv.size() != 2)
        throw ParseError("field: interval must be [lo, hi]");
    Rat lo = parse_rat(need_string(iv[0], "interval"));
    Rat hi = parse_rat(need_string(iv[1], "interval"));
    return std::make_shared<Field>(std::move(f), std::move(lo), std::move(hi));
}

Json field_to_json(const Field& f) {
    Json mp = Json::array();
    for (const auto& c : f.min_poly()) mp.push_back(c.get_str());
    auto [lo, hi] = f.isolating_interval();
    return Json{{"min_poly", mp}, {"interval", {rat_to_string(lo), rat_to_string(hi)}}};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

std::shared_ptr<Field> load_field(const std::string& path) {
    return field_from_json(load_json_file(path));
}

Elem elem_from_json(const Field& f, const Json& j) {
    if (!j.is_array()) throw ParseError("element: expected an array of decimal strings");
    if (j.size() != static_cast<size_t>(f.degree()))
        throw ParseError("element: expected " + std::to_string(f.degree()) +
                         " coefficients, got " + std::to_string(j.size()));
    std::vector<Int> c;
    for (const auto& v : j) c.push_back(parse_int(need_string(v, "element")));
    return f.elem(std::move(c));
}

Json elem_to_json(const Field& f, const Elem& e) {
    (void)f;
    Json j = Json::array();
    for (const auto& c : e.c) j.push_back(c.get_str());
    return j;
}

LoadedMatrix matrix_from_json(const Json& j, const std::string& base_dir,
                              std::shared_ptr<Field> field) {
    if (!j.is_object() || !j.contains("rows"))
        throw ParseError("matrix: expected {\"field\": ..., \"rows\": [[...], ...]}");
    if (!field) {
        if (!j.contains("field"))
            throw ParseError("matrix: no \"field\" member and no --field given");
        const Json& fj = j.at("field");
        if (fj.is_string()) {
            std::filesystem::path p = fj.get<std::string>();
            if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
            field = load_field(p.string());
        } else {
            field = field_from_json(fj);
        }
    }
    const Json& rows = j.at("rows");
    if (!rows.is_array() || rows.empty()) throw ParseError("matrix: rows must be nonempty");
    size_t cols = rows[0].is_array() ? rows[0].size() : 0;
    if (cols == 0) throw ParseError("matrix: rows must contain nonempty element arrays");
    MatrixZA m(*field, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        const Json& row = rows[i];
        if (!row.is_array() || row.size() != cols)
            throw ParseError("matrix: ragged row " + std::to_string(i));
        for (size_t k = 0; k < cols; ++k) m.at(i, k) = elem_from_json(*field, row[k]);
    }
    return {std::move(field), std::move(m)};
}

LoadedMatrix load_matrix(const std::string& path, std::shared_ptr<Field> field) {
    std::string dir = std::filesystem::path(path).parent_path().string();
    return matrix_from_json(load_json_file(path), dir, std::move(field));
}

Json matrix_to_json(const MatrixZA& m, bool embed_field) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols; ++j) row.push_back(elem_to_json(*m.field, m.at(i, j)));
        rows.push_back(std::move(row));
    }
    Json out{{"rows", std::move(rows)}};
    if (embed_field) out["field"] = field_to_json(*m.field);
    return out;
}

}  // namespace zalpha
