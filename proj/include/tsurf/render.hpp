#ifndef TSURF_RENDER_HPP
#define TSURF_RENDER_HPP

#include "tsurf/surface.hpp"

namespace tsurf {

/// Canonical text: terms in descending graded-lex order, '^' powers,
/// explicit '*', rationals as p/q. parse(render(p)) == p.
std::string render(const MPoly& p);

/// "num" when the denominator is 1, "(num)/(den)" otherwise.
std::string render(const RatFn& f);

/// "c1, c2, c3" with each coordinate as num or num/den (denominator
/// parenthesized only when it has more than one term).
std::string render(const CurveParam& p);

/// Machine-readable result of one pipeline run.
struct ResultDocument {
    int schema_version = 1;
    SurfaceTag classification = SurfaceTag::Undecided;
    std::optional<SurfaceParam> param;
    std::optional<Vec3> direction;           // cylinder: stored as certificate.vector
    std::optional<Certificate> certificate;
    std::vector<std::string> diagnostics;

    static ResultDocument from(const Classification& c);
};

std::string surface_tag_name(SurfaceTag t);

/// Structured (JSON) serialization; deterministic byte-for-byte.
std::string render_structured(const ResultDocument& doc);

/// Inverse of render_structured; throws std::runtime_error on malformed input.
ResultDocument parse_structured(const std::string& text);

/// Plain-text rendering of the same document.
std::string render_text(const ResultDocument& doc);

/// Structured report for the selftest harness (schema extension: "report").
struct RoundtripReport;
std::string render_report(const RoundtripReport& report);

} // namespace tsurf

#endif
