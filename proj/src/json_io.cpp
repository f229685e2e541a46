#include "ehrhart/json_io.hpp"

#include <fstream>
#include <sstream>

namespace ehrhart {

namespace {

Int int_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) return Int(v.get<std::string>());
    if (v.is_number_float())
        throw std::invalid_argument("vertex coordinates must be exact integers");
    throw std::invalid_argument("expected an integer");
}

std::vector<Rat> rat_list_from_json(const nlohmann::json& arr) {
    std::vector<Rat> out;
    for (const auto& v : arr) out.push_back(rat_from_string(v.get<std::string>()));
    return out;
}

nlohmann::json rat_list_to_json(const std::vector<Rat>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& q : v) arr.push_back(rat_to_string(q));
    return arr;
}

}  // namespace

NamedPolytope read_polytope_json(std::istream& in) {
    nlohmann::json j;
    in >> j;
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
        throw std::invalid_argument("polytope JSON requires a nonempty \"vertices\" array");
    std::vector<std::vector<Int>> pts;
    for (const auto& row : j["vertices"]) {
        std::vector<Int> v;
        for (const auto& coord : row) v.push_back(int_from_json(coord));
        pts.push_back(std::move(v));
    }
    NamedPolytope out{j.value("name", std::string("unnamed")), LatticePolytope::build(std::move(pts))};
    return out;
}

NamedPolytope read_polytope_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_polytope_json(in);
}

nlohmann::json polytope_to_json(const std::string& name, const LatticePolytope& P) {
    nlohmann::json j;
    j["name"] = name;
    j["dimension"] = P.dimension();
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : P.vertices()) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& c : v) row.push_back(c.str());
        verts.push_back(std::move(row));
    }
    j["vertices"] = std::move(verts);
    nlohmann::json facets = nlohmann::json::array();
    for (const auto& f : P.facets()) {
        nlohmann::json row;
        nlohmann::json normal = nlohmann::json::array();
        for (const auto& c : f.normal) normal.push_back(c.str());
        row["normal"] = std::move(normal);
        row["offset"] = f.offset.str();
        facets.push_back(std::move(row));
    }
    j["facets"] = std::move(facets);
    return j;
}

nlohmann::json profile_to_json(const EhrhartProfile& profile) {
    nlohmann::json j;
    j["d"] = profile.d;
    j["c"] = rat_list_to_json(profile.c);
    j["a"] = rat_list_to_json(profile.a);
    j["delta"] = rat_list_to_json(profile.delta);
    return j;
}

EhrhartProfile profile_from_json(const nlohmann::json& j) {
    EhrhartProfile p;
    p.d = j.at("d").get<int>();
    p.c = rat_list_from_json(j.at("c"));
    p.a = rat_list_from_json(j.at("a"));
    p.delta = rat_list_from_json(j.at("delta"));
    if (static_cast<int>(p.c.size()) != p.d + 1 || static_cast<int>(p.a.size()) != p.d + 1 ||
        static_cast<int>(p.delta.size()) != p.d + 1)
        throw std::invalid_argument("profile JSON: inconsistent lengths");
    return p;
}

nlohmann::json audit_report_to_json(const AuditReport& report) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : report.entries) {
        nlohmann::json row;
        row["id"] = e.id;
        row["holds"] = e.holds;
        row["slack"] = rat_to_string(e.slack);
        row["note"] = e.note;
        arr.push_back(std::move(row));
    }
    return arr;
}

nlohmann::json root_report_to_json(const RootReport& report) {
    nlohmann::json j;
    j["degree"] = report.degree;
    j["cauchy_bound"] = rat_to_string(report.cauchy_bound);
    j["factorial_bound"] = rat_to_string(report.factorial_bound);
    j["real_interval_ok"] = report.real_interval_ok;
    j["re_conjecture_ok"] = report.re_conjecture_ok;
    j["converged"] = report.converged;
    nlohmann::json real = nlohmann::json::array();
    for (const auto& r : report.real_roots) {
        nlohmann::json row;
        row["interval"] = {rat_to_string(r.interval.lo), rat_to_string(r.interval.hi)};
        row["approx"] = r.approx;
        row["multiplicity"] = r.multiplicity;
        real.push_back(std::move(row));
    }
    j["real_roots"] = std::move(real);
    nlohmann::json cplx = nlohmann::json::array();
    for (const auto& z : report.complex_roots) cplx.push_back({z.re, z.im, z.residual});
    j["complex_roots"] = std::move(cplx);
    return j;
}

}  // namespace ehrhart
