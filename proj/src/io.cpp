#include "jnp/io.hpp"

#include <array>
#include <fstream>
#include <set>
#include <sstream>

namespace jnp {

namespace {

std::size_t get_index(const Json& j, std::size_t dim, const char* what) {
    if (!j.is_number_unsigned() && !j.is_number_integer())
        throw ParseError(std::string("expected an integer index in ") + what);
    long long v = j.get<long long>();
    if (v < 0 || static_cast<std::size_t>(v) >= dim)
        throw ParseError(std::string(what) + " index " + std::to_string(v) + " out of range");
    return static_cast<std::size_t>(v);
}

StructureTensor tensor_from_json(const Field& f, std::size_t dim, const Json& j,
                                 const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of entries");
    StructureTensor t(f, dim);
    std::set<std::array<std::size_t, 3>> seen;
    for (const Json& e : j) {
        if (!e.is_array() || e.size() != 4)
            throw ParseError(std::string(what) + " entries are [i, j, k, \"coeff\"]");
        std::size_t i = get_index(e[0], dim, what);
        std::size_t jj = get_index(e[1], dim, what);
        std::size_t k = get_index(e[2], dim, what);
        if (!seen.insert({i, jj, k}).second)
            throw ParseError(std::string("duplicate ") + what + " entry (" + std::to_string(i) +
                             "," + std::to_string(jj) + "," + std::to_string(k) + ")");
        if (!e[3].is_string()) throw ParseError("structure constants are scalar strings");
        t.at(i, jj, k) = Scalar::parse(f, e[3].get<std::string>());
    }
    return t;
}

Json tensor_to_json(const StructureTensor& t) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j)
            for (std::size_t k = 0; k < t.dim(); ++k)
                if (!t.at(i, j, k).is_zero())
                    entries.push_back(Json::array({i, j, k, t.at(i, j, k).str()}));
    return entries;
}

} // namespace

Json field_to_json(const Field& f) {
    Json j;
    if (f.is_rational()) {
        j["kind"] = "rational";
    } else {
        j["kind"] = "prime";
        j["p"] = f.p();
    }
    return j;
}

Field field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("field needs a kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return Field::rational();
    if (kind == "prime") {
        if (!j.contains("p")) throw ParseError("prime field needs p");
        return Field::prime(j.at("p").get<std::uint32_t>());
    }
    throw ParseError("unknown field kind '" + kind + "'");
}

Json vec_to_json(const Vec& v) {
    Json j = Json::array();
    for (const Scalar& s : v) j.push_back(s.str());
    return j;
}

Vec vec_from_json(const Field& f, const Json& j, std::size_t expect_len) {
    if (!j.is_array() || j.size() != expect_len)
        throw ParseError("expected a vector of " + std::to_string(expect_len) + " scalars");
    Vec v;
    v.reserve(expect_len);
    for (const Json& e : j) {
        if (!e.is_string()) throw ParseError("vector entries are scalar strings");
        v.push_back(Scalar::parse(f, e.get<std::string>()));
    }
    return v;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
    return rows;
}

Matrix matrix_from_json(const Field& f, const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("expected a matrix as an array of rows");
    std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    std::vector<Vec> rows;
    for (const Json& r : j) rows.push_back(vec_from_json(f, r, cols));
    return Matrix::from_rows(f, rows);
}

Json algebra_to_json(const Algebra& alg) {
    Json j;
    j["field"] = field_to_json(alg.field);
    j["dim"] = alg.dim;
    j["unit"] = vec_to_json(alg.unit);
    j["dot"] = tensor_to_json(alg.dot);
    if (alg.circ) {
        j["circ"] = tensor_to_json(*alg.circ);
        j["circ_orientation"] = alg.circ_orientation == Orientation::Left ? "left" : "right";
    }
    if (alg.form) j["form"] = matrix_to_json(*alg.form);
    if (!alg.maps.empty()) {
        Json maps;
        for (const auto& [name, m] : alg.maps) maps[name] = matrix_to_json(m);
        j["maps"] = maps;
    }
    return j;
}

Algebra algebra_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
    Field f = field_from_json(j.at("field"));
    if (!j.contains("dim")) throw ParseError("algebra needs a dim");
    std::size_t dim = j.at("dim").get<std::size_t>();
    if (dim == 0) throw ParseError("dimension must be positive");
    Algebra alg = Algebra::make(f, dim);
    alg.unit = vec_from_json(f, j.at("unit"), dim);
    alg.dot = tensor_from_json(f, dim, j.at("dot"), "dot");
    if (j.contains("circ")) {
        alg.circ = tensor_from_json(f, dim, j.at("circ"), "circ");
        std::string o = j.value("circ_orientation", "left");
        if (o == "left")
            alg.circ_orientation = Orientation::Left;
        else if (o == "right")
            alg.circ_orientation = Orientation::Right;
        else
            throw ParseError("circ_orientation must be 'left' or 'right'");
    } else if (j.contains("circ_orientation")) {
        throw ParseError("circ_orientation given without a circ tensor");
    }
    if (j.contains("form")) {
        Matrix g = matrix_from_json(f, j.at("form"));
        if (g.rows() != dim || g.cols() != dim) throw ParseError("form must be dim x dim");
        alg.form = g;
    }
    if (j.contains("maps")) {
        for (const auto& [name, mj] : j.at("maps").items()) {
            Matrix m = matrix_from_json(f, mj);
            if (m.rows() != dim || m.cols() != dim)
                throw ParseError("map '" + name + "' must be dim x dim");
            alg.maps.emplace(name, m);
        }
    }
    return alg;
}

Json module_to_json(const Algebra& alg, const ModuleStructure& mod) {
    Json j = algebra_to_json(alg);
    Json m;
    m["dim"] = mod.mod_dim;
    Json lj = Json::array(), rj = Json::array(), sj = Json::array();
    for (std::size_t i = 0; i < mod.alg_dim; ++i) {
        lj.push_back(matrix_to_json(mod.l[i]));
        rj.push_back(matrix_to_json(mod.r[i]));
        sj.push_back(matrix_to_json(mod.s[i]));
    }
    m["l"] = lj;
    m["r"] = rj;
    m["s"] = sj;
    j["module"] = m;
    return j;
}

ModuleStructure module_from_json(const Field& f, const Json& j) {
    if (!j.contains("module")) throw ParseError("file has no module section");
    const Json& m = j.at("module");
    ModuleStructure mod;
    mod.mod_dim = m.at("dim").get<std::size_t>();
    const Json &lj = m.at("l"), &rj = m.at("r"), &sj = m.at("s");
    if (!lj.is_array() || lj.size() != rj.size() || lj.size() != sj.size())
        throw ParseError("module families l, r, s must have equal length");
    mod.alg_dim = lj.size();
    for (std::size_t i = 0; i < mod.alg_dim; ++i) {
        mod.l.push_back(matrix_from_json(f, lj[i]));
        mod.r.push_back(matrix_from_json(f, rj[i]));
        mod.s.push_back(matrix_from_json(f, sj[i]));
    }
    for (const auto& fam : {&mod.l, &mod.r, &mod.s})
        for (const Matrix& mat : *fam)
            if (mat.rows() != mod.mod_dim || mat.cols() != mod.mod_dim)
                throw ParseError("module matrices must be dimV x dimV");
    return mod;
}

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["law"] = v.law;
    j["pass"] = v.pass;
    if (v.counterexample) {
        Json c;
        c["indices"] = v.counterexample->indices;
        c["lhs"] = vec_to_json(v.counterexample->lhs);
        c["rhs"] = vec_to_json(v.counterexample->rhs);
        j["counterexample"] = c;
    }
    return j;
}

Vec parse_vec(const Field& f, const std::string& text, std::size_t expect_len) {
    Vec v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(Scalar::parse(f, item));
    if (v.size() != expect_len)
        throw ParseError("expected " + std::to_string(expect_len) + " comma-separated scalars");
    return v;
}

std::string canonical_dump(const Json& j) {
    return j.dump(2) + "\n";
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << canonical_dump(j);
}

Algebra read_algebra_file(const std::string& path) {
    return algebra_from_json(read_json_file(path));
}

void write_algebra_file(const std::string& path, const Algebra& alg) {
    write_json_file(path, algebra_to_json(alg));
}

} // namespace jnp
