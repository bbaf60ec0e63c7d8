#include "tsurf/render.hpp"

#include <json.hpp>

#include "tsurf/expr.hpp"
#include "tsurf/genlab.hpp"

namespace tsurf {

namespace {

using OJson = nlohmann::ordered_json;

std::string mono_str(const VarSet& vs, const Mono& m) {
    std::string out;
    for (int i = 0; i < vs.arity(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vs.name(i);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

} // namespace

std::string render(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? "-" : "+";
        }
        std::string ms = mono_str(p.vars(), m);
        if (ms.empty()) {
            out += rat_str(mag);
        } else if (mag == 1) {
            out += ms;
        } else {
            out += rat_str(mag) + "*" + ms;
        }
    }
    return out;
}

std::string render(const RatFn& f) {
    if (f.is_polynomial()) return render(f.num());
    return "(" + render(f.num()) + ")/(" + render(f.den()) + ")";
}

std::string render(const CurveParam& p) {
    std::string out;
    for (int i = 0; i < 3; ++i) {
        if (i) out += ", ";
        const RatFn& c = p.coord(i);
        if (c.is_polynomial()) {
            out += render(c.num());
        } else if (c.den().terms().size() == 1) {
            // single-term denominator needs no parentheses on top
            std::string num = render(c.num());
            bool wrap = c.num().terms().size() > 1;
            out += (wrap ? "(" + num + ")" : num) + "/" + render(c.den());
        } else {
            out += render(c);
        }
    }
    return out;
}

std::string surface_tag_name(SurfaceTag t) {
    switch (t) {
        case SurfaceTag::Plane: return "plane";
        case SurfaceTag::Cylinder: return "cylinder";
        case SurfaceTag::Translational: return "translational";
        case SurfaceTag::Undecided: return "undecided";
    }
    return "undecided";
}

ResultDocument ResultDocument::from(const Classification& c) {
    ResultDocument doc;
    doc.classification = c.tag;
    doc.param = c.param;
    doc.direction = c.direction;
    doc.certificate = c.certificate;
    doc.diagnostics = c.evidence;
    return doc;
}

namespace {

OJson coord_json(const RatFn& f) {
    return OJson{{"num", render(f.num())}, {"den", render(f.den())}};
}

OJson triple_json(const CurveParam& p) {
    OJson arr = OJson::array();
    for (int i = 0; i < 3; ++i) arr.push_back(coord_json(p.coord(i)));
    return arr;
}

CurveParam triple_from_json(const OJson& arr, const std::string& param) {
    if (!arr.is_array() || arr.size() != 3) throw std::runtime_error("structured: bad triple");
    VarSet vs = VarSet::single(param);
    std::array<RatFn, 3> cs{RatFn(MPoly(vs)), RatFn(MPoly(vs)), RatFn(MPoly(vs))};
    for (int i = 0; i < 3; ++i) {
        MPoly num = parse_poly(arr[i].at("num").get<std::string>(), vs);
        MPoly den = parse_poly(arr[i].at("den").get<std::string>(), vs);
        cs[i] = RatFn(num, den);
    }
    return CurveParam(std::move(cs), param);
}

} // namespace

std::string render_structured(const ResultDocument& doc) {
    OJson j;
    j["schema_version"] = doc.schema_version;
    j["classification"] = surface_tag_name(doc.classification);
    if (doc.param) {
        j["p1"] = triple_json(doc.param->p1);
        j["p2"] = triple_json(doc.param->p2);
    }
    if (doc.certificate) {
        const Certificate& c = *doc.certificate;
        OJson cert;
        cert["vector"] = {rat_str(c.vector.a[0]), rat_str(c.vector.a[1]), rat_str(c.vector.a[2])};
        if (c.used_shortcut) {
            cert["s1"] = rat_str(c.s1);
            cert["s2"] = rat_str(c.s2);
        }
        cert["shift"] = rat_str(c.shift);
        j["certificate"] = cert;
    } else if (doc.direction) {
        OJson cert;
        cert["vector"] = {rat_str((*doc.direction)[0]), rat_str((*doc.direction)[1]),
                          rat_str((*doc.direction)[2])};
        j["certificate"] = cert;
    }
    j["diagnostics"] = doc.diagnostics;
    return j.dump(2) + "\n";
}

ResultDocument parse_structured(const std::string& text) {
    OJson j = OJson::parse(text);
    ResultDocument doc;
    doc.schema_version = j.at("schema_version").get<int>();
    std::string cls = j.at("classification").get<std::string>();
    if (cls == "plane") doc.classification = SurfaceTag::Plane;
    else if (cls == "cylinder") doc.classification = SurfaceTag::Cylinder;
    else if (cls == "translational") doc.classification = SurfaceTag::Translational;
    else if (cls == "undecided") doc.classification = SurfaceTag::Undecided;
    else throw std::runtime_error("structured: unknown classification " + cls);

    if (j.contains("p1")) {
        SurfaceParam sp{triple_from_json(j.at("p1"), "t1"), triple_from_json(j.at("p2"), "t2")};
        doc.param = sp;
    }
    if (j.contains("certificate")) {
        const auto& cj = j.at("certificate");
        Vec3 v;
        for (int i = 0; i < 3; ++i) {
            auto r = rat_parse(cj.at("vector").at(i).get<std::string>());
            if (!r) throw std::runtime_error("structured: bad certificate vector");
            v[i] = *r;
        }
        if (doc.classification == SurfaceTag::Cylinder) {
            doc.direction = v;
        } else {
            Certificate cert;
            cert.vector = {v};
            cert.used_shortcut = cj.contains("s1");
            if (cert.used_shortcut) {
                cert.s1 = *rat_parse(cj.at("s1").get<std::string>());
                cert.s2 = *rat_parse(cj.at("s2").get<std::string>());
            }
            cert.shift = *rat_parse(cj.at("shift").get<std::string>());
            doc.certificate = cert;
        }
    }
    if (j.contains("diagnostics"))
        doc.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
    return doc;
}

std::string render_text(const ResultDocument& doc) {
    std::string out = "classification: " + surface_tag_name(doc.classification) + "\n";
    if (doc.param) {
        out += "p1: " + render(doc.param->p1) + "\n";
        out += "p2: " + render(doc.param->p2) + "\n";
    }
    if (doc.direction) {
        out += "direction: " + rat_str((*doc.direction)[0]) + ", " + rat_str((*doc.direction)[1]) +
               ", " + rat_str((*doc.direction)[2]) + "\n";
    }
    if (doc.certificate) {
        const Certificate& c = *doc.certificate;
        out += "vector: " + rat_str(c.vector.a[0]) + ", " + rat_str(c.vector.a[1]) + ", " +
               rat_str(c.vector.a[2]) + "\n";
        if (c.used_shortcut) {
            out += "s1: " + rat_str(c.s1) + "\n";
            out += "s2: " + rat_str(c.s2) + "\n";
        }
        out += "shift: " + rat_str(c.shift) + "\n";
    }
    return out;
}

std::string render_report(const RoundtripReport& report) {
    OJson j;
    j["schema_version"] = 1;
    j["report"] = OJson{{"count", report.count},
                        {"passes", report.passes},
                        {"failing_seeds", report.failing_seeds},
                        {"notes", report.notes}};
    return j.dump(2) + "\n";
}

} // namespace tsurf
