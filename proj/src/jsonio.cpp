#include <fstream>
#include <sstream>

#include "json.hpp"

#include "finecurves/errors.hpp"
#include "finecurves/graph.hpp"
#include "finecurves/jsonio.hpp"

namespace finecurves {

namespace {

using ojson = nlohmann::ordered_json;

ojson point_to_json(const RatPoint& p) {
    return ojson::array({rat_to_string(p.x), rat_to_string(p.y)});
}

RatPoint point_from_json(const ojson& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw MalformedCertificate("point must be a two-element array of \"p/q\" strings");
    try {
        return {rat_from_string(j[0].get<std::string>()),
                rat_from_string(j[1].get<std::string>())};
    } catch (const ParseError& e) {
        throw MalformedCertificate(std::string("bad rational: ") + e.what());
    }
}

const ojson& field(const ojson& j, const char* key, const char* where) {
    auto it = j.find(key);
    if (it == j.end())
        throw MalformedCertificate(std::string(where) + " is missing \"" + key + "\"");
    return *it;
}

} // namespace

ojson curve_to_json(const Curve& cv) {
    ojson legs = ojson::array();
    for (const Leg& l : cv.legs) {
        ojson pts = ojson::array();
        for (const RatPoint& p : l.pts) pts.push_back(point_to_json(p));
        legs.push_back(ojson{{"chart", l.chart}, {"pts", std::move(pts)}});
    }
    return ojson{{"label", cv.label},
                 {"essential_certified", cv.essential_certified},
                 {"legs", std::move(legs)}};
}

std::string certificate_to_text(const CertificateFile& file) {
    const Certificate& c = file.cert;
    ojson j;
    j["graph"] = emit_graph6(c.claimed);
    j["semantics"] = semantics_name(c.semantics);
    j["surface"] = ojson{{"kind", c.surface_kind}, {"param", c.surface_param}};
    ojson curves = ojson::array();
    for (const Curve& cv : c.system.curves) curves.push_back(curve_to_json(cv));
    j["curves"] = std::move(curves);
    j["trace"] = c.trace;
    j["verdict"] = file.verdict;
    return j.dump(2) + "\n";
}

CertificateFile certificate_from_text(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const std::exception& e) {
        throw MalformedCertificate(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw MalformedCertificate("document must be a JSON object");
    for (const char* key : {"graph", "semantics", "surface", "curves", "trace", "verdict"})
        field(j, key, "certificate");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "graph" && it.key() != "semantics" && it.key() != "surface" &&
            it.key() != "curves" && it.key() != "trace" && it.key() != "verdict")
            throw MalformedCertificate("unknown field \"" + it.key() + "\"");

    CertificateFile out;
    Certificate& c = out.cert;
    if (!j["graph"].is_string())
        throw MalformedCertificate("\"graph\" must be graph6 text");
    try {
        c.claimed = parse_graph6(j["graph"].get<std::string>());
    } catch (const MalformedGraph6& e) {
        throw MalformedCertificate(std::string("bad graph6: ") + e.what());
    }
    if (!j["semantics"].is_string())
        throw MalformedCertificate("\"semantics\" must be a string");
    try {
        c.semantics = parse_semantics(j["semantics"].get<std::string>());
    } catch (const Error& e) {
        throw MalformedCertificate(std::string("bad semantics: ") + e.what());
    }

    const ojson& surf = j["surface"];
    if (!surf.is_object() || !field(surf, "kind", "surface").is_string() ||
        !field(surf, "param", "surface").is_number_integer())
        throw MalformedCertificate("\"surface\" must be {kind: string, param: int}");
    c.surface_kind = surf["kind"].get<std::string>();
    c.surface_param = surf["param"].get<int>();
    SurfaceKind kind;
    try {
        kind = parse_surface_kind(c.surface_kind);
    } catch (const Error& e) {
        throw MalformedCertificate(std::string("bad surface kind: ") + e.what());
    }
    try {
        c.system.surface = build_surface(kind, c.surface_param);
    } catch (const Error& e) {
        throw MalformedCertificate(std::string("cannot build surface: ") + e.what());
    }

    if (!j["curves"].is_array())
        throw MalformedCertificate("\"curves\" must be an array");
    for (const ojson& jc : j["curves"]) {
        if (!jc.is_object()) throw MalformedCertificate("curve must be an object");
        Curve cv;
        const ojson& lab = field(jc, "label", "curve");
        if (!lab.is_number_integer())
            throw MalformedCertificate("curve \"label\" must be an integer");
        cv.label = lab.get<int>();
        const ojson& ess = field(jc, "essential_certified", "curve");
        if (!ess.is_boolean())
            throw MalformedCertificate("\"essential_certified\" must be a boolean");
        cv.essential_certified = ess.get<bool>();
        const ojson& legs = field(jc, "legs", "curve");
        if (!legs.is_array() || legs.empty())
            throw MalformedCertificate("curve \"legs\" must be a non-empty array");
        for (const ojson& jl : legs) {
            if (!jl.is_object()) throw MalformedCertificate("leg must be an object");
            Leg leg;
            const ojson& ch = field(jl, "chart", "leg");
            if (!ch.is_number_integer())
                throw MalformedCertificate("leg \"chart\" must be an integer");
            leg.chart = ch.get<int>();
            const ojson& pts = field(jl, "pts", "leg");
            if (!pts.is_array() || pts.size() < 2)
                throw MalformedCertificate("leg \"pts\" needs at least two points");
            for (const ojson& jp : pts) leg.pts.push_back(point_from_json(jp));
            cv.legs.push_back(std::move(leg));
        }
        c.system.curves.push_back(std::move(cv));
    }

    if (!j["trace"].is_array())
        throw MalformedCertificate("\"trace\" must be an array of strings");
    for (const ojson& t : j["trace"]) {
        if (!t.is_string())
            throw MalformedCertificate("\"trace\" must be an array of strings");
        c.trace.push_back(t.get<std::string>());
    }
    if (!j["verdict"].is_string())
        throw MalformedCertificate("\"verdict\" must be a string");
    out.verdict = j["verdict"].get<std::string>();
    if (out.verdict != "ok" && out.verdict != "mismatch" && out.verdict != "unchecked")
        throw MalformedCertificate("\"verdict\" must be ok, mismatch, or unchecked");
    return out;
}

void save_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoFailure("cannot open for writing: " + path);
    f << text;
    if (!f) throw IoFailure("write failed: " + path);
}

std::string load_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoFailure("cannot open: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    if (f.bad()) throw IoFailure("read failed: " + path);
    return ss.str();
}

std::string curves_to_text(const std::vector<Curve>& curves) {
    ojson arr = ojson::array();
    for (const Curve& cv : curves) arr.push_back(curve_to_json(cv));
    return ojson{{"curves", std::move(arr)}}.dump(2) + "\n";
}

} // namespace finecurves
