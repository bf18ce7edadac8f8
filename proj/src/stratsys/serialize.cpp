#include "pleth/stratsys/serialize.hpp"

#include <stdexcept>

namespace pleth {

using nlohmann::json;

namespace {

json space_json(const WeightedSpace& v) {
    json b = json::array();
    for (const auto& e : v.basis) b.push_back({{"w", e.weight.to_vector(v.nvars)}, {"p", e.parity}});
    return b;
}

WeightedSpace space_from(const json& j, int nvars) {
    WeightedSpace v(nvars, {});
    for (const auto& e : j) v.basis.push_back({Exponent::from(e.at("w").get<std::vector<int>>()), e.at("p").get<int>()});
    return v;
}

json matrix_json(const Matrix& m) { return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", m.to_strings()}}; }

Matrix matrix_from(const json& j) {
    int r = j.at("rows").get<int>(), c = j.at("cols").get<int>();
    if (r == 0 || c == 0) return Matrix(r, c);
    return Matrix::from_strings(j.at("data").get<std::vector<std::vector<std::string>>>());
}

}  // namespace

json system_to_json(const System& s) {
    const StratSpace& sp = s.sp();
    const auto& pix = sp.partitions();
    json j;
    j["schema"] = 1;
    j["n"] = sp.n();
    j["nvars"] = s.nvars();
    j["strict"] = s.strict();
    json xs = json::array();
    for (const auto& p : sp.xs()) xs.push_back({{"id", p.id}, {"w", p.weight.to_vector(s.nvars())}});
    j["x"] = xs;
    json objs = json::array();
    for (int i = 0; i < s.num_objects(); ++i) {
        json f = json::array();
        for (int x = 0; x < sp.points(); ++x) f.push_back(space_json(s.fiber(i, x)));
        objs.push_back({{"partition", pix.at(i).str()}, {"fibers", f}});
    }
    j["objects"] = objs;
    json phis = json::array();
    for (const auto& [a, b] : s.pairs()) {
        json dom = json::array(), ms = json::array();
        for (int x = 0; x < sp.points(); ++x)
            if (const Matrix* m = s.phi(a, b, x)) {
                dom.push_back(x);
                ms.push_back(matrix_json(*m));
            }
        phis.push_back({{"source", a}, {"target", b}, {"domain", dom}, {"maps", ms}});
    }
    j["phi"] = phis;
    json rhos = json::array();
    for (int g = 0; g < sp.group()->order(); ++g) {
        json per = json::array();
        for (int i = 0; i < s.num_objects(); ++i)
            for (int x = 0; x < sp.points(); ++x) per.push_back(matrix_json(s.rho(g, i, x)));
        rhos.push_back({{"sigma", sp.group()->at(g).images()}, {"maps", per}});
    }
    j["rho"] = rhos;
    return j;
}

System system_from_json(const json& j) {
    if (j.value("schema", 0) != 1) throw std::invalid_argument("unsupported system schema");
    int n = j.at("n").get<int>();
    int nvars = j.at("nvars").get<int>();
    std::vector<XPoint> xs;
    for (const auto& p : j.at("x")) xs.push_back({p.at("id").get<std::string>(), Exponent::from(p.at("w").get<std::vector<int>>())});
    auto space = build_space(n, std::move(xs));
    const StratSpace& sp = *space;
    System s(space, nvars, j.at("strict").get<bool>());
    const auto& objs = j.at("objects");
    if (static_cast<int>(objs.size()) != s.num_objects()) throw std::invalid_argument("object count mismatch");
    for (int i = 0; i < s.num_objects(); ++i)
        for (int x = 0; x < sp.points(); ++x)
            s.set_fiber(i, x, space_from(objs[static_cast<size_t>(i)].at("fibers").at(static_cast<size_t>(x)), nvars));
    for (const auto& p : j.at("phi")) {
        int a = p.at("source").get<int>(), b = p.at("target").get<int>();
        const auto& dom = p.at("domain");
        for (size_t k = 0; k < dom.size(); ++k) s.set_phi(a, b, dom[k].get<int>(), matrix_from(p.at("maps")[k]));
    }
    for (const auto& r : j.at("rho")) {
        int g = sp.group()->index_of(Permutation(r.at("sigma").get<std::vector<int>>()));
        size_t k = 0;
        for (int i = 0; i < s.num_objects(); ++i)
            for (int x = 0; x < sp.points(); ++x) s.set_rho(g, i, x, matrix_from(r.at("maps")[k++]));
    }
    return s;
}

json datum_to_json(const LocalDatum& d) {
    json j;
    j["schema"] = 1;
    j["nvars"] = d.nvars;
    json pts = json::array();
    for (size_t p = 0; p < d.xs.size(); ++p) {
        json vs = json::array();
        for (int m = 1; m <= static_cast<int>(d.reps[p].size()); ++m) {
            const auto* v = d.v(static_cast<int>(p), m);
            if (!v) {
                vs.push_back(nullptr);
                continue;
            }
            json gens = json::array();
            for (const auto& s : sn_generators(m))
                gens.push_back({{"sigma", s.images()}, {"matrix", matrix_json(v->map(v->group()->index_of(s), 0))}});
            vs.push_back({{"m", m}, {"basis", space_json(v->fiber(0))}, {"generators", gens}});
        }
        pts.push_back({{"id", d.xs[p].id}, {"w", d.xs[p].weight.to_vector(d.nvars)}, {"V", vs}});
    }
    j["points"] = pts;
    return j;
}

}  // namespace pleth
