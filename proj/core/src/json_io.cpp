#include "homds/json_io.hpp"

namespace homds {

namespace {

std::uint64_t get_u64(const json& j, const char* key) {
    require(j.contains(key), Err::MalformedInput, std::string("missing field: ") + key);
    const json& v = j[key];
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    require(v.is_number_integer() && v.get<std::int64_t>() >= 0, Err::MalformedInput,
            std::string("field must be a nonnegative integer: ") + key);
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
}

int get_int(const json& j, const char* key) {
    require(j.contains(key) && j[key].is_number_integer(), Err::MalformedInput,
            std::string("missing or invalid field: ") + key);
    return j[key].get<int>();
}

}  // namespace

json field_to_json(const Field& f) {
    return json{{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}};
}

Field field_from_json(const json& j) {
    require(j.is_object(), Err::MalformedInput, "field descriptor must be an object");
    const std::uint64_t p = get_u64(j, "p");
    const auto m = static_cast<std::uint32_t>(get_u64(j, "m"));
    std::optional<std::vector<std::uint64_t>> modulus;
    if (j.contains("modulus") && !j["modulus"].is_null()) {
        require(j["modulus"].is_array(), Err::MalformedInput, "modulus must be an array");
        modulus = j["modulus"].get<std::vector<std::uint64_t>>();
    }
    return Field::make(p, m, modulus);
}

json elem_to_json(const Field& f, Fe v) { return json(f.coeffs(v)); }

Fe elem_from_json(const Field& f, const json& j) {
    if (j.is_number_unsigned() || j.is_number_integer()) {
        require(f.is_prime_field(), Err::MalformedInput,
                "bare integers only encode prime-field elements");
        const auto v = j.get<std::int64_t>();
        require(v >= 0 && static_cast<std::uint64_t>(v) < f.p(), Err::MalformedInput,
                "element out of range");
        return static_cast<Fe>(v);
    }
    require(j.is_array(), Err::MalformedInput, "element must be an int or coefficient array");
    const auto c = j.get<std::vector<std::uint64_t>>();
    return f.from_coeffs(c);
}

json mat_to_json(const Mat& m) {
    json data = json::array();
    for (std::uint32_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::uint32_t j = 0; j < m.cols(); ++j) row.push_back(elem_to_json(m.field(), m.at(i, j)));
        data.push_back(std::move(row));
    }
    return json{{"field", field_to_json(m.field())}, {"rows", m.rows()}, {"cols", m.cols()},
                {"data", std::move(data)}};
}

Mat mat_from_json(const json& j) {
    require(j.is_object() && j.contains("field") && j.contains("data"), Err::MalformedInput,
            "matrix needs field and data");
    const Field f = field_from_json(j["field"]);
    const auto rows = static_cast<std::uint32_t>(get_u64(j, "rows"));
    const auto cols = static_cast<std::uint32_t>(get_u64(j, "cols"));
    require(j["data"].is_array() && j["data"].size() == rows, Err::MalformedInput,
            "data must hold exactly `rows` rows");
    Mat m(f, rows, cols);
    for (std::uint32_t i = 0; i < rows; ++i) {
        const auto& row = j["data"][i];
        require(row.is_array() && row.size() == cols, Err::MalformedInput, "ragged matrix row");
        for (std::uint32_t c = 0; c < cols; ++c) m.set(i, c, elem_from_json(f, row[c]));
    }
    return m;
}

json indices_to_json(ColSet s) {
    json arr = json::array();
    for (auto i : set_to_indices(s)) arr.push_back(i + 1);
    return arr;
}

ColSet indices_from_json(const json& j, int n) {
    require(j.is_array(), Err::MalformedInput, "index set must be an array");
    std::vector<std::uint32_t> idx;
    for (const auto& e : j) {
        require(e.is_number_integer() || e.is_number_unsigned(), Err::MalformedInput,
                "index must be an integer");
        const auto v = e.get<std::int64_t>();
        require(v >= 1 && v <= n, Err::MalformedInput, "1-based index out of [1, n]");
        idx.push_back(static_cast<std::uint32_t>(v - 1));
    }
    return set_from_indices(idx, n);
}

json pattern_to_json(const ZeroPattern& p) {
    json sets = json::array();
    for (ColSet s : p.sets) sets.push_back(indices_to_json(s));
    return json{{"n", p.n}, {"k", p.k}, {"S", std::move(sets)}};
}

ZeroPattern pattern_from_json(const json& j) {
    ZeroPattern p;
    p.n = get_int(j, "n");
    p.k = get_int(j, "k");
    require(j.contains("S") && j["S"].is_array(), Err::MalformedInput, "pattern needs S");
    for (const auto& s : j["S"]) p.sets.push_back(indices_from_json(s, p.n));
    p.validate();
    return p;
}

json family_to_json(const SetFamily& f) {
    json sets = json::array();
    for (ColSet s : f.sets) sets.push_back(indices_to_json(s));
    return json{{"n", f.n}, {"k", f.k}, {"A", std::move(sets)}};
}

SetFamily family_from_json(const json& j) {
    SetFamily f;
    f.n = get_int(j, "n");
    f.k = get_int(j, "k");
    require(j.contains("A") && j["A"].is_array(), Err::MalformedInput, "family needs A");
    for (const auto& s : j["A"]) f.sets.push_back(indices_from_json(s, f.n));
    f.validate();
    return f;
}

json config_to_json(const Config& c, const std::vector<int>* delta) {
    json pairs = json::array();
    for (const auto& pr : c.pairs)
        pairs.push_back(json{{"sigma", pr.sigma}, {"A", indices_to_json(pr.cols)}});
    json out{{"k", c.k}, {"pairs", std::move(pairs)}};
    if (delta) out["delta"] = *delta;
    return out;
}

Config config_from_json(const json& j, int n) {
    Config c;
    c.k = get_int(j, "k");
    require(j.contains("pairs") && j["pairs"].is_array(), Err::MalformedInput, "config needs pairs");
    int max_sigma = 0;
    for (const auto& pj : j["pairs"]) {
        ConfigPair pr;
        pr.sigma = get_int(pj, "sigma");
        pr.cols = indices_from_json(pj["A"], n);
        max_sigma = std::max(max_sigma, pr.sigma);
        c.pairs.push_back(pr);
    }
    c.b = j.contains("b") ? get_int(j, "b") : max_sigma;
    c.validate();
    return c;
}

json points_to_json(const Field& f, const EvalPoints& pts) {
    json arr = json::array();
    for (const auto& pt : pts.pts) {
        json tup = json::array();
        for (Fe v : pt) tup.push_back(elem_to_json(f, v));
        arr.push_back(std::move(tup));
    }
    return json{{"r", pts.r}, {"points", std::move(arr)}};
}

EvalPoints points_from_json(const Field& f, const json& j, std::uint32_t expected_r) {
    EvalPoints pts;
    const json* arr = nullptr;
    if (j.is_array()) {
        arr = &j;
        pts.r = expected_r == 0 ? 1 : expected_r;
    } else {
        pts.r = static_cast<std::uint32_t>(get_u64(j, "r"));
        require(expected_r == 0 || pts.r == expected_r, Err::MalformedInput,
                "point arity does not match the code family");
        require(j.contains("points") && j["points"].is_array(), Err::MalformedInput,
                "points must be an array");
        arr = &j["points"];
    }
    for (const auto& pj : *arr) {
        std::vector<Fe> pt;
        if (pts.r == 1) {
            pt.push_back(elem_from_json(f, pj));
        } else {
            require(pj.is_array() && pj.size() == pts.r, Err::MalformedInput,
                    "each point must list r coordinates");
            for (const auto& e : pj) pt.push_back(elem_from_json(f, e));
        }
        pts.pts.push_back(std::move(pt));
    }
    return pts;
}

json polytuple_to_json(const PolyTuple& t) {
    json polys = json::array();
    for (const auto& p : t.polys) {
        json terms = json::array();
        for (const auto& term : p.terms)
            terms.push_back(json{{"exp", term.exp}, {"coeff", elem_to_json(t.field, term.coeff)}});
        polys.push_back(json{{"terms", std::move(terms)}});
    }
    return json{{"r", t.r}, {"max_degree", t.max_degree}, {"polys", std::move(polys)}};
}

PolyTuple polytuple_from_json(const json& j, const Field& f) {
    PolyTuple t;
    t.field = f;
    t.r = static_cast<std::uint32_t>(get_u64(j, "r"));
    if (j.contains("max_degree")) t.max_degree = static_cast<std::uint32_t>(get_u64(j, "max_degree"));
    require(j.contains("polys") && j["polys"].is_array(), Err::MalformedInput, "tuple needs polys");
    for (const auto& pj : j["polys"]) {
        SparsePoly p;
        require(pj.contains("terms") && pj["terms"].is_array(), Err::MalformedInput,
                "poly needs terms");
        for (const auto& tj : pj["terms"]) {
            Term term;
            require(tj.contains("exp") && tj["exp"].is_array(), Err::MalformedInput,
                    "term needs exp");
            term.exp = tj["exp"].get<Monomial>();
            term.coeff = elem_from_json(f, tj["coeff"]);
            p.terms.push_back(std::move(term));
        }
        std::sort(p.terms.begin(), p.terms.end(),
                  [](const Term& a, const Term& b) { return lex_less(a.exp, b.exp); });
        t.polys.push_back(std::move(p));
    }
    t.validate();
    return t;
}

json codespec_to_json(const CodeSpec& s) {
    json out{{"k", s.k}, {"field", field_to_json(s.field)}};
    switch (s.family) {
        case Family::ReedSolomon: out["family"] = "reed_solomon"; break;
        case Family::Monomial:
            out["family"] = "monomial";
            out["exponents"] = s.exponents;
            break;
        case Family::Polynomial: {
            out["family"] = "polynomial";
            const json tuple = polytuple_to_json(*s.polys);
            out["r"] = tuple["r"];
            out["max_degree"] = tuple["max_degree"];
            out["polys"] = tuple["polys"];
            break;
        }
        case Family::Gabidulin:
            out["family"] = "gabidulin";
            out["q"] = s.frobenius_q;
            break;
        case Family::LinearizedRS:
            out["family"] = "linearized_rs";
            out["q"] = s.frobenius_q;
            break;
        case Family::Explicit:
            out["family"] = "explicit";
            out["matrix"] = mat_to_json(*s.explicit_matrix);
            break;
    }
    return out;
}

CodeSpec codespec_from_json(const json& j) {
    CodeSpec s;
    require(j.contains("family") && j["family"].is_string(), Err::MalformedInput,
            "spec needs a family");
    const std::string fam = j["family"].get<std::string>();
    s.field = field_from_json(j.at("field"));
    s.k = static_cast<std::uint32_t>(get_u64(j, "k"));
    if (fam == "reed_solomon") {
        s.family = Family::ReedSolomon;
    } else if (fam == "monomial") {
        s.family = Family::Monomial;
        require(j.contains("exponents") && j["exponents"].is_array(), Err::MalformedInput,
                "monomial family needs exponents");
        s.exponents = j["exponents"].get<std::vector<std::int64_t>>();
    } else if (fam == "polynomial") {
        s.family = Family::Polynomial;
        s.polys = polytuple_from_json(j.contains("tuple") ? j.at("tuple") : j, s.field);
    } else if (fam == "gabidulin") {
        s.family = Family::Gabidulin;
        s.frobenius_q = get_u64(j, "q");
    } else if (fam == "linearized_rs") {
        s.family = Family::LinearizedRS;
        s.frobenius_q = get_u64(j, "q");
    } else if (fam == "explicit") {
        s.family = Family::Explicit;
        s.explicit_matrix = mat_from_json(j.at("matrix"));
    } else {
        raise(Err::MalformedInput, "unknown family: " + fam);
    }
    s.validate();
    return s;
}

json erasure_to_json(const ErasurePattern& e) {
    json cells = json::array();
    for (auto [i, j] : e.cells) cells.push_back(json::array({i + 1, j + 1}));
    return json{{"m", e.grid_rows}, {"n", e.grid_cols}, {"cells", std::move(cells)}};
}

ErasurePattern erasure_from_json(const json& j) {
    ErasurePattern e;
    e.grid_rows = static_cast<std::uint32_t>(get_u64(j, "m"));
    e.grid_cols = static_cast<std::uint32_t>(get_u64(j, "n"));
    require(j.contains("cells") && j["cells"].is_array(), Err::MalformedInput,
            "pattern needs cells");
    for (const auto& c : j["cells"]) {
        require(c.is_array() && c.size() == 2, Err::MalformedInput, "cell must be a pair");
        const auto a = c[0].get<std::int64_t>();
        const auto b = c[1].get<std::int64_t>();
        require(a >= 1 && b >= 1, Err::MalformedInput, "cells are 1-based");
        e.cells.emplace_back(static_cast<std::uint32_t>(a - 1), static_cast<std::uint32_t>(b - 1));
    }
    e.validate();
    return e;
}

Mat code_input_to_matrix(const json& j) {
    require(j.is_object(), Err::MalformedInput, "code input must be an object");
    if (j.contains("matrix")) return mat_from_json(j["matrix"]);
    require(j.contains("spec"), Err::MalformedInput, "code input needs matrix or spec");
    const CodeSpec spec = codespec_from_json(j["spec"]);
    EvalPoints pts;
    pts.r = spec.point_arity();
    if (j.contains("points")) pts = points_from_json(spec.field, j["points"], spec.point_arity());
    return generator(spec, pts);
}

}  // namespace homds
