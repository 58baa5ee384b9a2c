#include "mmorder/io.hpp"

#include <fstream>

#include "mmorder/errors.hpp"

namespace mm {

namespace {

Rat rat_from_json(const Json& j, const char* what) {
    if (!j.is_string())
        throw InputError(std::string(what) + ": rationals must be strings like \"3/4\"");
    return parse_rational(j.get<std::string>());
}

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw InputError(std::string("missing field '") + name + "'");
    return *it;
}

std::vector<std::vector<Rat>> matrix_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of rows");
    std::vector<std::vector<Rat>> out;
    for (const Json& row : j) {
        if (!row.is_array()) throw InputError(std::string(what) + " rows must be arrays");
        std::vector<Rat> r;
        for (const Json& cell : row) r.push_back(rat_from_json(cell, what));
        out.push_back(std::move(r));
    }
    return out;
}

Json matrix_to_json(const std::vector<std::vector<Rat>>& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const Rat& v : row) r.push_back(format_rational(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

Json space_to_json(const FiniteMMSpace& space) {
    Json j;
    j["label"] = space.label;
    j["points"] = space.points;
    j["dist"] = matrix_to_json(space.dist);
    Json mass = Json::array();
    for (const Rat& m : space.mass) mass.push_back(format_rational(m));
    j["mass"] = std::move(mass);
    return j;
}

FiniteMMSpace space_from_json(const Json& j) {
    FiniteMMSpace space;
    space.label = field(j, "label").get<std::string>();
    for (const Json& p : field(j, "points")) space.points.push_back(p.get<std::string>());
    space.dist = matrix_from_json(field(j, "dist"), "dist");
    for (const Json& m : field(j, "mass")) space.mass.push_back(rat_from_json(m, "mass"));
    return space;
}

Json coupling_to_json(const Coupling& pi) {
    Json j;
    j["rows"] = pi.rows;
    j["cols"] = pi.cols;
    j["matrix"] = matrix_to_json(pi.matrix);
    return j;
}

Coupling coupling_from_json(const Json& j) {
    Coupling pi;
    pi.rows = field(j, "rows").get<int>();
    pi.cols = field(j, "cols").get<int>();
    pi.matrix = matrix_from_json(field(j, "matrix"), "matrix");
    if (static_cast<int>(pi.matrix.size()) != pi.rows)
        throw InputError("coupling matrix row count does not match 'rows'");
    for (const auto& row : pi.matrix)
        if (static_cast<int>(row.size()) != pi.cols)
            throw InputError("coupling matrix column count does not match 'cols'");
    return pi;
}

Json order_witness_to_json(const OrderWitness& w) {
    Json j;
    j["epsilon"] = format_rational(w.epsilon);
    Json pairs = Json::array();
    for (auto [i, k] : w.S.pairs) pairs.push_back(Json::array({i, k}));
    j["S"] = std::move(pairs);
    j["coupling"] = matrix_to_json(w.pi.matrix);
    j["dis"] = format_rational(w.dis_value);
    j["uncovered"] = format_rational(w.uncovered);
    return j;
}

OrderWitness order_witness_from_json(const Json& j, int rows, int cols) {
    OrderWitness w;
    w.epsilon = rat_from_json(field(j, "epsilon"), "epsilon");
    std::vector<std::pair<int, int>> pairs;
    for (const Json& p : field(j, "S")) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    w.S = make_pair_set(rows, cols, std::move(pairs));
    w.pi = Coupling{rows, cols, matrix_from_json(field(j, "coupling"), "coupling")};
    w.dis_value = rat_from_json(field(j, "dis"), "dis");
    w.uncovered = rat_from_json(field(j, "uncovered"), "uncovered");
    return w;
}

Json map_to_json(const PointMap& f, const std::string& domain, const std::string& codomain) {
    Json j;
    j["domain"] = domain;
    j["codomain"] = codomain;
    j["image"] = f.image;
    return j;
}

PointMap map_from_json(const Json& j) {
    PointMap f;
    for (const Json& v : field(j, "image")) f.image.push_back(v.get<int>());
    return f;
}

Json ky_witness_to_json(const KYWitness& w) {
    Json j;
    j["epsilon"] = format_rational(w.epsilon);
    j["f"] = w.f.image;
    j["X0"] = w.X0.indices;
    return j;
}

Json triple_to_json(const TripleMeasure& t) {
    Json j;
    j["dims"] = Json::array({t.nx, t.ny, t.nz});
    Json cube = Json::array();
    for (int i = 0; i < t.nx; ++i) cube.push_back(matrix_to_json(t.tensor[i]));
    j["tensor"] = std::move(cube);
    return j;
}

Json compose_report_to_json(const ComposeReport& r) {
    Json j;
    j["eps1"] = format_rational(r.eps1);
    j["eps2"] = format_rational(r.eps2);
    j["s"] = format_rational(r.s);
    j["t"] = format_rational(r.t);
    j["X0"] = r.X0.indices;
    j["Y0"] = r.Y0.indices;
    j["X0_tilde"] = r.X0_tilde.indices;
    j["lip_excess"] = format_rational(r.lip_excess);
    j["lip_budget"] = format_rational(r.lip_budget);
    j["lip_ok"] = r.lip_ok;
    j["mass_x0_tilde"] = format_rational(r.mass_x0_tilde);
    j["mass_floor"] = format_rational(r.mass_floor);
    j["mass_ok"] = r.mass_ok;
    j["dp_value"] = format_rational(r.dp_value);
    j["dp_budget"] = format_rational(r.dp_budget);
    j["dp_ok"] = r.dp_ok;
    return j;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("invalid JSON in '" + path + "': " + e.what());
    }
}

void save_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

FiniteMMSpace load_space(const std::string& path) {
    try {
        return space_from_json(load_json(path));
    } catch (const nlohmann::json::exception& e) {
        throw InputError("bad space file '" + path + "': " + e.what());
    }
}

void save_space(const std::string& path, const FiniteMMSpace& space) {
    save_json(path, space_to_json(space));
}

}  // namespace mm
