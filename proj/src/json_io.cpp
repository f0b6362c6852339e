#include "plumbcalc/json_io.hpp"

#include <fstream>

namespace plumbcalc {

using nlohmann::json;

nlohmann::json int_to_json(const Int& v) {
    return v.get_str();
}

Int int_from_json(const json& j) {
    try {
        if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
        if (j.is_string()) return Int(j.get<std::string>());
    } catch (const std::exception&) {
    }
    throw schema_error("expected an integer (number or decimal string), got " + j.dump());
}

json cfstring_to_json(const CFString& s) {
    json out = json::array();
    for (const Int& a : s) out.push_back(int_to_json(a));
    return out;
}

CFString cfstring_from_json(const json& j) {
    if (!j.is_array()) throw schema_error("expected an array of integers, got " + j.dump());
    CFString s;
    for (const auto& x : j) s.push_back(int_from_json(x));
    return s;
}

json rational_to_json(const Rational& r) {
    return json{{"num", int_to_json(r.num())}, {"den", int_to_json(r.den())}};
}

namespace {

void check_schema(const json& j, const char* what) {
    if (!j.is_object()) throw schema_error(std::string(what) + ": expected a JSON object");
    if (j.contains("schema") && j.at("schema") != 1)
        throw schema_error(std::string(what) + ": unsupported schema version");
}

int small_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw schema_error(std::string(what) + ": expected an integer");
    return j.get<int>();
}

}  // namespace

json tree_to_json(const PlumbingTree& t) {
    json verts = json::array();
    for (const auto& v : t.vertices)
        verts.push_back({{"id", v.id}, {"framing", int_to_json(v.framing)}});
    json edges = json::array();
    for (const auto& [x, y] : t.edges) edges.push_back({x, y});
    return json{{"schema", 1}, {"vertices", verts}, {"edges", edges}};
}

PlumbingTree tree_from_json(const json& j) {
    check_schema(j, "tree");
    if (!j.contains("vertices") || !j.at("vertices").is_array())
        throw schema_error("tree: missing vertices array");
    if (!j.contains("edges") || !j.at("edges").is_array())
        throw schema_error("tree: missing edges array");
    PlumbingTree t;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_object() || !v.contains("id") || !v.contains("framing"))
            throw schema_error("tree: vertex needs id and framing");
        t.vertices.push_back({small_int(v.at("id"), "tree vertex id"), int_from_json(v.at("framing"))});
    }
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw schema_error("tree: edge must be a pair of ids");
        t.edges.emplace_back(small_int(e[0], "tree edge"), small_int(e[1], "tree edge"));
    }
    try {
        validate_tree(t);
    } catch (const std::invalid_argument& ex) {
        throw schema_error(ex.what());
    }
    return t;
}

json presentation_to_json(const Presentation& p) {
    return json{{"schema", 1}, {"generators", p.generators}, {"relators", p.relators}};
}

Presentation presentation_from_json(const json& j) {
    check_schema(j, "presentation");
    if (!j.contains("generators") || !j.contains("relators") || !j.at("relators").is_array())
        throw schema_error("presentation: needs generators and relators");
    Presentation p;
    p.generators = small_int(j.at("generators"), "presentation generators");
    for (const auto& w : j.at("relators")) {
        if (!w.is_array()) throw schema_error("presentation: relator must be an array");
        std::vector<int> word;
        for (const auto& x : w) {
            int v = small_int(x, "presentation relator entry");
            if (v == 0 || std::abs(v) > p.generators)
                throw schema_error("presentation: relator index out of range");
            word.push_back(v);
        }
        p.relators.push_back(std::move(word));
    }
    return p;
}

json factorization_to_json(const Factorization& f) {
    return json{{"schema", 1}, {"holes", f.holes}, {"twists", f.twists}};
}

Factorization factorization_from_json(const json& j) {
    check_schema(j, "factorization");
    if (!j.contains("holes") || !j.contains("twists") || !j.at("twists").is_array())
        throw schema_error("factorization: needs holes and twists");
    Factorization f;
    f.holes = small_int(j.at("holes"), "factorization holes");
    for (const auto& w : j.at("twists")) {
        if (!w.is_array()) throw schema_error("factorization: twist must be an array of hole ids");
        std::vector<int> s;
        for (const auto& x : w) s.push_back(small_int(x, "factorization twist entry"));
        std::sort(s.begin(), s.end());
        f.twists.push_back(std::move(s));
    }
    try {
        validate_factorization(f);
    } catch (const std::invalid_argument& ex) {
        throw schema_error(ex.what());
    }
    return f;
}

std::pair<Factorization, Factorization> factorization_pair_from_json(const json& j) {
    check_schema(j, "factorization pair");
    if (!j.contains("c_side") || !j.contains("b_side"))
        throw schema_error("factorization pair: needs c_side and b_side");
    return {factorization_from_json(j.at("c_side")), factorization_from_json(j.at("b_side"))};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& ex) {
        throw schema_error(std::string("JSON parse error: ") + ex.what());
    }
    return j;
}

}  // namespace plumbcalc
