#include "dgla/fixture.hpp"

#include <fstream>
#include <set>

namespace dgla {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw input_error("unknown key \"" + it.key() + "\" in " + where);
}

int parse_degree_key(const std::string& key, const std::string& where) {
    try {
        std::size_t pos = 0;
        int d = std::stoi(key, &pos);
        if (pos != key.size()) throw std::invalid_argument("");
        return d;
    } catch (...) {
        throw input_error("bad degree key \"" + key + "\" in " + where);
    }
}

GradedSpace parse_space(const json& j, const std::string& where) {
    if (!j.is_object()) throw input_error(where + " must be an object");
    reject_unknown(j, {"dims", "names"}, where);
    if (!j.contains("dims")) throw input_error(where + " needs a \"dims\" block");
    GradedSpace s;
    for (auto it = j["dims"].begin(); it != j["dims"].end(); ++it) {
        int deg = parse_degree_key(it.key(), where + ".dims");
        if (!it.value().is_number_integer() || it.value().get<int>() < 0)
            throw input_error("dimension must be a nonnegative integer in " + where);
        s.set_dim(deg, it.value().get<int>());
    }
    if (j.contains("names"))
        for (auto it = j["names"].begin(); it != j["names"].end(); ++it) {
            int deg = parse_degree_key(it.key(), where + ".names");
            std::vector<std::string> names;
            for (auto& n : it.value()) names.push_back(n.get<std::string>());
            if ((int)names.size() != s.dim(deg))
                throw input_error("wrong number of names in degree " + it.key() + " of " + where);
            s.set_names(deg, names);
        }
    return s;
}

Mat parse_mat(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.is_array() || j.size() != rows)
        throw input_error(where + ": expected " + std::to_string(rows) + " rows");
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw input_error(where + ": row " + std::to_string(r) + " must have " +
                              std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!j[r][c].is_string())
                throw input_error(where + ": rationals are strings \"p/q\"");
            m.at(r, c) = rat_parse(j[r][c].get<std::string>());
        }
    }
    return m;
}

GradedMap parse_blocks(const json& j, const GradedSpace& src, const GradedSpace& dst, int degree,
                       const std::string& where) {
    GradedMap f(src, dst, degree);
    if (j.is_null()) return f;
    if (!j.is_object()) throw input_error(where + " must map degree keys to matrices");
    for (auto it = j.begin(); it != j.end(); ++it) {
        int deg = parse_degree_key(it.key(), where);
        std::size_t rows = (std::size_t)dst.dim(deg + degree);
        std::size_t cols = (std::size_t)src.dim(deg);
        f.set_block(deg, parse_mat(it.value(), rows, cols, where + "[" + it.key() + "]"));
    }
    return f;
}

BilinearTable parse_table(const json& j, const GradedSpace& s, const std::string& where) {
    BilinearTable t(s);
    if (j.is_null()) return t;
    if (!j.is_array()) throw input_error(where + " must be an array of quadruple records");
    std::size_t n = 0;
    for (auto& e : j) {
        std::string loc = where + "[" + std::to_string(n++) + "]";
        reject_unknown(e, {"i", "j", "a", "b", "value"}, loc);
        for (const char* k : {"i", "j", "a", "b"})
            if (!e.contains(k) || !e[k].is_number_integer())
                throw input_error(loc + " needs integer field \"" + k + "\"");
        int i = e["i"], jj = e["j"], a = e["a"], b = e["b"];
        if (!e.contains("value")) throw input_error(loc + " needs a \"value\" array");
        Vec val;
        for (auto& x : e["value"]) val.push_back(rat_parse(x.get<std::string>()));
        if ((int)val.size() != s.dim(i + jj))
            throw input_error(loc + ": value has wrong length for degree " + std::to_string(i + jj));
        if (a < 0 || a >= s.dim(i) || b < 0 || b >= s.dim(jj))
            throw input_error(loc + ": basis index out of range");
        t.set_value(i, jj, a, b, val);
    }
    return t;
}

DGLieAlgebra parse_algebra(const json& j, const std::string& where) {
    reject_unknown(j, {"space", "differential", "bracket"}, where);
    if (!j.contains("space")) throw input_error(where + " needs a \"space\" block");
    DGLieAlgebra L;
    L.space = parse_space(j["space"], where + ".space");
    L.d = parse_blocks(j.contains("differential") ? j["differential"] : json(), L.space, L.space, 1,
                       where + ".differential");
    L.bracket = parse_table(j.contains("bracket") ? j["bracket"] : json(), L.space, where + ".bracket");
    return L;
}

}  // namespace

const DGLieAlgebra& Fixture::algebra(const std::string& name) const {
    if (name == "main") return main;
    auto it = algebras.find(name);
    if (it == algebras.end()) throw input_error("no algebra named \"" + name + "\" in the fixture");
    return it->second;
}

const GradedMap& Fixture::map(const std::string& name) const {
    auto it = maps.find(name);
    if (it == maps.end()) throw input_error("no map named \"" + name + "\" in the fixture");
    return it->second;
}

const Subspace& Fixture::subspace(const std::string& name) const {
    auto it = subspaces.find(name);
    if (it == subspaces.end()) throw input_error("no subspace named \"" + name + "\" in the fixture");
    return it->second;
}

Fixture parse_fixture(const nlohmann::json& doc) {
    if (!doc.is_object()) throw input_error("fixture must be a JSON object");
    reject_unknown(doc,
                   {"space", "differential", "bracket", "product", "unit", "delta", "k",
                    "algebras", "maps", "subspaces", "pi_example", "scenario"},
                   "fixture");
    Fixture fx;
    if (!doc.contains("space")) throw input_error("fixture needs a \"space\" block");
    fx.main.space = parse_space(doc["space"], "space");
    fx.main.d = parse_blocks(doc.contains("differential") ? doc["differential"] : json(),
                             fx.main.space, fx.main.space, 1, "differential");
    fx.main.bracket = parse_table(doc.contains("bracket") ? doc["bracket"] : json(), fx.main.space,
                               "bracket");

    if (doc.contains("product") || doc.contains("delta") || doc.contains("k")) {
        if (!doc.contains("product") || !doc.contains("k"))
            throw input_error("a dBV fixture needs \"product\" and \"k\" together");
        DBVAlgebra A;
        A.space = fx.main.space;
        A.d = fx.main.d;
        A.product = parse_table(doc["product"], A.space, "product");
        if (!doc["k"].is_number_integer()) throw input_error("\"k\" must be an integer");
        A.k = doc["k"].get<int>();
        if (A.k % 2 == 0) throw input_error("\"k\" must be odd");
        A.delta = parse_blocks(doc.contains("delta") ? doc["delta"] : json(), A.space, A.space,
                               -A.k, "delta");
        if (doc.contains("unit")) {
            Vec u;
            for (auto& x : doc["unit"]) u.push_back(rat_parse(x.get<std::string>()));
            if ((int)u.size() != A.space.dim(0)) throw input_error("\"unit\" has wrong length");
            A.unit = u;
        } else {
            if (A.space.dim(0) < 1) throw input_error("dBV fixture needs a degree-0 unit");
            A.unit = vec_zero((std::size_t)A.space.dim(0));
            A.unit[0] = 1;
        }
        fx.dbv = A;
    } else if (doc.contains("unit")) {
        throw input_error("\"unit\" without a \"product\" block");
    }

    if (doc.contains("algebras")) {
        if (!doc["algebras"].is_object()) throw input_error("\"algebras\" must be an object");
        for (auto it = doc["algebras"].begin(); it != doc["algebras"].end(); ++it)
            fx.algebras[it.key()] = parse_algebra(it.value(), "algebras." + it.key());
    }

    if (doc.contains("maps")) {
        if (!doc["maps"].is_object()) throw input_error("\"maps\" must be an object");
        for (auto it = doc["maps"].begin(); it != doc["maps"].end(); ++it) {
            const json& m = it.value();
            std::string where = "maps." + it.key();
            reject_unknown(m, {"degree", "source", "target", "blocks"}, where);
            if (!m.contains("degree") || !m["degree"].is_number_integer())
                throw input_error(where + " needs an integer \"degree\"");
            std::string src = m.contains("source") ? m["source"].get<std::string>() : "main";
            std::string dst = m.contains("target") ? m["target"].get<std::string>() : "main";
            const GradedSpace& sspace = fx.algebra(src).space;
            const GradedSpace& tspace = fx.algebra(dst).space;
            fx.maps[it.key()] = parse_blocks(m.contains("blocks") ? m["blocks"] : json(), sspace,
                                             tspace, m["degree"].get<int>(), where + ".blocks");
        }
    }

    if (doc.contains("subspaces")) {
        if (!doc["subspaces"].is_object()) throw input_error("\"subspaces\" must be an object");
        for (auto it = doc["subspaces"].begin(); it != doc["subspaces"].end(); ++it) {
            std::map<int, std::vector<Vec>> spans;
            std::string where = "subspaces." + it.key();
            if (!it.value().is_object()) throw input_error(where + " must map degrees to spans");
            for (auto dit = it.value().begin(); dit != it.value().end(); ++dit) {
                int deg = parse_degree_key(dit.key(), where);
                std::vector<Vec> vecs;
                for (auto& row : dit.value()) {
                    Vec v;
                    for (auto& x : row) v.push_back(rat_parse(x.get<std::string>()));
                    if ((int)v.size() != fx.main.space.dim(deg))
                        throw input_error(where + ": span vector has wrong length in degree " +
                                          dit.key());
                    vecs.push_back(v);
                }
                spans[deg] = vecs;
            }
            fx.subspaces[it.key()] = Subspace::from_spans(fx.main.space, spans);
        }
    }

    if (doc.contains("pi_example")) {
        const json& p = doc["pi_example"];
        reject_unknown(p, {"V", "W", "dV", "dW", "pi"}, "pi_example");
        if (!p.contains("V") || !p.contains("W"))
            throw input_error("pi_example needs \"V\" and \"W\" spaces");
        PiData pd;
        pd.v = parse_space(p["V"], "pi_example.V");
        pd.w = parse_space(p["W"], "pi_example.W");
        pd.dv = parse_blocks(p.contains("dV") ? p["dV"] : json(), pd.v, pd.v, 1, "pi_example.dV");
        pd.dw = parse_blocks(p.contains("dW") ? p["dW"] : json(), pd.w, pd.w, 1, "pi_example.dW");
        pd.pi = parse_blocks(p.contains("pi") ? p["pi"] : json(), pd.w, pd.v, 1, "pi_example.pi");
        fx.pi_example = pd;
    }

    if (doc.contains("scenario")) fx.scenario = doc["scenario"];
    return fx;
}

Fixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open fixture file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error("JSON parse error in " + path + ": " + e.what());
    }
    return parse_fixture(doc);
}

}  // namespace dgla
