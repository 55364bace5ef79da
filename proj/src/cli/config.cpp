#include "cli/config.hpp"

#include "cli/parser.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace cli {

using degeneration::CenterLine;
using degeneration::CurveFamily;
using degeneration::Plane;
using degeneration::Vec3;
using exactmath::MPoly;
using exactmath::Scalar;

namespace {

std::string trim(const std::string& s)
{
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

MPoly poly_value(const Config& cfg, const std::string& key)
{
    try {
        return parse_poly(cfg.get(key));
    } catch (const ParseError& e) {
        throw ParseError(key + ": " + e.what(), e.position);
    }
}

Vec3 vec_value(const Config& cfg, const std::string& key)
{
    try {
        return parse_vec3(cfg.get(key));
    } catch (const InputError& e) {
        throw InputError(key + ": " + e.what());
    }
}

Plane plane_value(const Config& cfg, const std::string& prefix)
{
    Plane p;
    p.origin = cfg.has(prefix + ".origin") ? vec_value(cfg, prefix + ".origin") : Vec3{0, 0, 0};
    p.u = vec_value(cfg, prefix + ".u");
    p.v = vec_value(cfg, prefix + ".v");
    return p;
}

void only_keys(const Config& cfg, const std::set<std::string>& allowed, const std::string& family)
{
    for (const auto& [k, v] : cfg.values)
        if (k != "family" && !allowed.count(k))
            throw InputError(cfg.source + ": unknown key '" + k + "' for family " + family);
}

exactmath::Var param_value(const Config& cfg)
{
    if (!cfg.has("parameter"))
        return exactmath::vars::t;
    const std::string& p = cfg.get("parameter");
    if (p != "t" && p != "s")
        throw InputError("parameter must be t or s, got '" + p + "'");
    return exactmath::var_id(p);
}

} // namespace

Config Config::parse(const std::string& text, const std::string& source)
{
    Config cfg;
    cfg.source = source;
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InputError(source + ":" + std::to_string(n) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw InputError(source + ":" + std::to_string(n) + ": empty key");
        if (cfg.values.count(key))
            throw InputError(source + ":" + std::to_string(n) + ": duplicate key '" + key + "'");
        cfg.values[key] = value;
    }
    return cfg;
}

Config Config::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

const std::string& Config::get(const std::string& key) const
{
    auto it = values.find(key);
    if (it == values.end())
        throw InputError(source + ": missing key '" + key + "'");
    return it->second;
}

Vec3 parse_vec3(const std::string& text)
{
    std::vector<Scalar> out;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        part = trim(part);
        try {
            out.emplace_back(exactmath::parse_rational(part));
        } catch (const std::exception&) {
            throw InputError("'" + part + "' is not a rational number");
        }
    }
    if (out.size() != 3)
        throw InputError("expected three comma separated rationals, got '" + text + "'");
    return {out[0], out[1], out[2]};
}

CurveFamily build_family(const Config& cfg, json* echo)
{
    const std::string& kind = cfg.get("family");
    json e;
    e["family"] = kind;
    CurveFamily fam;
    if (kind == "cone") {
        only_keys(cfg,
                  {"curve.F1", "curve.F2", "center.origin", "center.direction", "plane.origin", "plane.u", "plane.v",
                   "parameter"},
                  kind);
        degeneration::SpaceCurve C{poly_value(cfg, "curve.F1"), poly_value(cfg, "curve.F2")};
        CenterLine L{vec_value(cfg, "center.origin"), vec_value(cfg, "center.direction")};
        Plane omega = cfg.has("plane.u") || cfg.has("plane.v") || cfg.has("plane.origin") ? plane_value(cfg, "plane")
                                                                                           : Plane::z_equals_0();
        std::string why;
        if (!degeneration::dimension_one_check(C, &why))
            throw InputError("the space curve is not a curve: " + why);
        e["curve"] = {C.F1.str(), C.F2.str()};
        e["center"] = {{"origin", degeneration::to_string(L.origin)}, {"direction", degeneration::to_string(L.direction)}};
        e["plane"] = {{"origin", degeneration::to_string(omega.origin)},
                      {"u", degeneration::to_string(omega.u)},
                      {"v", degeneration::to_string(omega.v)}};
        fam = degeneration::cone_family(C, L, omega, param_value(cfg));
    } else if (kind == "mirror") {
        only_keys(cfg,
                  {"plane1.origin", "plane1.u", "plane1.v", "plane2.origin", "plane2.u", "plane2.v", "curve", "P", "Q"},
                  kind);
        degeneration::MirrorConfig m;
        m.omega1 = plane_value(cfg, "plane1");
        m.omega2 = plane_value(cfg, "plane2");
        m.G = poly_value(cfg, "curve");
        m.P = vec_value(cfg, "P");
        m.Q = vec_value(cfg, "Q");
        for (auto v : m.G.variables())
            if (v != exactmath::vars::x && v != exactmath::vars::y)
                throw InputError("curve must be a polynomial in x, y");
        e["curve"] = m.G.str();
        e["P"] = degeneration::to_string(m.P);
        e["Q"] = degeneration::to_string(m.Q);
        std::string why = m.violation();
        if (!why.empty())
            throw InputError("invalid mirror configuration: " + why);
        fam = degeneration::mirror_family(m);
    } else if (kind == "form") {
        only_keys(cfg, {"H", "degenerate", "parameter"}, kind);
        exactmath::Var p = param_value(cfg);
        Scalar ts(0);
        if (cfg.has("degenerate")) {
            try {
                ts = Scalar(exactmath::parse_rational(cfg.get("degenerate")));
            } catch (const std::exception&) {
                throw InputError("degenerate: '" + cfg.get("degenerate") + "' is not a rational number");
            }
        }
        MPoly H = poly_value(cfg, "H");
        e["H"] = H.str();
        fam = degeneration::family_from_form(H, p, ts);
    } else {
        throw InputError(cfg.source + ": family must be cone, mirror or form, got '" + kind + "'");
    }
    if (echo)
        *echo = e;
    return fam;
}

} // namespace cli
