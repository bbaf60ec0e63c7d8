#include "tsurf/curve.hpp"

#include <algorithm>
#include <numeric>

namespace tsurf {

namespace {

const char* kInternalParam = "t";

VarSet param_vs(const std::string& name) { return VarSet::single(name); }

// rebuild an MPoly over a different VarSet given a positional index map
MPoly remap(const MPoly& p, const VarSet& target, const std::vector<int>& pos) {
    MPoly r(target);
    for (const auto& [m, c] : p.terms()) {
        Mono mm(target.arity(), 0);
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (pos[i] < 0) throw std::logic_error("remap: dropped variable still present");
            mm[pos[i]] = m[i];
        }
        r.add_term(mm, c);
    }
    return r;
}

RatFn remap(const RatFn& f, const VarSet& target, const std::vector<int>& pos) {
    return RatFn(remap(f.num(), target, pos), remap(f.den(), target, pos));
}

} // namespace

CurveParam::CurveParam(std::array<RatFn, 3> coords, std::string param)
    : coords_(std::move(coords)), param_(std::move(param)) {
    VarSet vs = param_vs(param_);
    for (const auto& c : coords_)
        if (c.vars() != vs) throw VarMismatch("CurveParam: coordinate over wrong parameter");
}

bool CurveParam::all_constant() const {
    return coords_[0].is_constant() && coords_[1].is_constant() && coords_[2].is_constant();
}

CurveParam CurveParam::renamed(const std::string& new_param) const {
    VarSet vs = param_vs(new_param);
    std::array<RatFn, 3> cs{RatFn(MPoly(vs)), RatFn(MPoly(vs)), RatFn(MPoly(vs))};
    for (int i = 0; i < 3; ++i) cs[i] = remap(coords_[i], vs, {0});
    return CurveParam(std::move(cs), new_param);
}

CurveParam CurveParam::shifted(const Rat& c) const {
    VarSet vs = pvars();
    RatFn t_plus_c(MPoly::variable(vs, 0) + MPoly::constant(vs, c));
    Bindings b{{0, t_plus_c}};
    std::array<RatFn, 3> cs{RatFn(MPoly(vs)), RatFn(MPoly(vs)), RatFn(MPoly(vs))};
    for (int i = 0; i < 3; ++i) cs[i] = substitute(coords_[i], vs, b);
    return CurveParam(std::move(cs), param_);
}

CurveParam CurveParam::operator+(const std::array<Rat, 3>& point) const {
    std::array<RatFn, 3> cs = coords_;
    for (int i = 0; i < 3; ++i) cs[i] = cs[i] + RatFn::constant(pvars(), point[i]);
    return CurveParam(std::move(cs), param_);
}

CurveParam CurveParam::operator-(const std::array<Rat, 3>& point) const {
    return *this + std::array<Rat, 3>{-point[0], -point[1], -point[2]};
}

CurveParam CurveParam::derivative() const {
    std::array<RatFn, 3> cs = coords_;
    for (int i = 0; i < 3; ++i) cs[i] = cs[i].diff(0);
    return CurveParam(std::move(cs), param_);
}

std::optional<std::array<Rat, 3>> CurveParam::eval(const Rat& t) const {
    std::array<Rat, 3> out;
    for (int i = 0; i < 3; ++i) {
        auto v = coords_[i].eval({t});
        if (!v) return std::nullopt;
        out[i] = *v;
    }
    return out;
}

RatFn CurveParam::substitute_into(const MPoly& f) const {
    Bindings b;
    for (int i = 0; i < 3; ++i) b.emplace(i, coords_[i]);
    return substitute(f, pvars(), b);
}

ProjectResult project(const SpaceCurveSystem& sys, int elim_var) {
    MPoly res = resultant(sys.g1, sys.g2, elim_var);
    if (res.is_zero()) return {ProjectStatus::ZeroResultant, std::nullopt, res};
    if (res.is_constant()) return {ProjectStatus::ConstantResultant, std::nullopt, res};
    MPoly sq = squarefree_part(res);
    int u = -1, v = -1;
    for (int i = 0; i < 3; ++i) {
        if (i == elim_var) continue;
        if (u < 0) u = i;
        else v = i;
    }
    return {ProjectStatus::Ok, PlaneCurve{sq, elim_var, u, v}, res};
}

namespace {

// line a*u + b*v + c = 0 over the curve's VarSet, parameter "t"
std::optional<std::pair<RatFn, RatFn>> param_line(const MPoly& C, int u, int v) {
    VarSet vs = param_vs(kInternalParam);
    Mono mu(C.vars().arity(), 0), mv = mu, m0 = mu;
    mu[u] = 1;
    mv[v] = 1;
    Rat a = C.coeff(mu), b = C.coeff(mv), c = C.coeff(m0);
    MPoly t = MPoly::variable(vs, 0);
    if (b != 0)
        return std::make_pair(RatFn(t), RatFn((t * (-a) - MPoly::constant(vs, c)) / b));
    if (a != 0)
        return std::make_pair(RatFn(MPoly::constant(vs, -c / a)), RatFn(t));
    return std::nullopt;
}

// A(v)*u + B(v) = 0, degree 1 in u
std::pair<RatFn, RatFn> param_linear_in(const MPoly& C, int main_var, int other_var, bool main_is_u) {
    VarSet vs = param_vs(kInternalParam);
    auto cs = C.coeffs_in(main_var);
    std::vector<int> pos(C.vars().arity(), -1);
    pos[other_var] = 0;
    MPoly A = remap(cs[1], vs, pos), B = remap(cs[0], vs, pos);
    RatFn root(-B, A);
    RatFn t(MPoly::variable(vs, 0));
    return main_is_u ? std::make_pair(root, t) : std::make_pair(t, root);
}

struct ConicPoint {
    bool at_infinity;
    Rat x, y;  // affine point, or direction (x, y) when at infinity
};

std::optional<ConicPoint> conic_rational_point(const MPoly& C, int u, int v, long height) {
    Mono m(C.vars().arity(), 0);
    auto cf = [&](int eu, int ev) {
        Mono mm(C.vars().arity(), 0);
        mm[u] = eu;
        mm[v] = ev;
        return C.coeff(mm);
    };
    Rat c20 = cf(2, 0), c11 = cf(1, 1), c02 = cf(0, 2);
    if (c20 == 0 && c11 == 0 && c02 == 0) return std::nullopt;  // no degree-2 part
    // points at infinity first: directions (dU:dV) with c20 dU^2 + c11 dU dV + c02 dV^2 = 0
    if (c02 == 0) return ConicPoint{true, Rat(0), Rat(1)};
    if (c20 == 0) return ConicPoint{true, Rat(1), Rat(0)};
    {
        Rat disc = c11 * c11 - 4 * c20 * c02;
        if (auto s = rat_sqrt(disc)) {
            Rat mroot = (-c11 + *s) / (2 * c20);
            return ConicPoint{true, mroot, Rat(1)};
        }
    }
    // affine ladder: pin one coordinate, solve the quadratic in the other
    std::vector<Rat> ladder;
    ladder.emplace_back(0);
    for (long h = 1; h <= height; ++h) {
        ladder.emplace_back(h);
        ladder.emplace_back(-h);
        ladder.push_back(rat(1, h));
        ladder.push_back(rat(-1, h));
    }
    auto solve_quadratic = [](const Rat& a, const Rat& b, const Rat& c) -> std::optional<Rat> {
        if (a == 0) {
            if (b == 0) return std::nullopt;
            return -c / b;
        }
        Rat disc = b * b - 4 * a * c;
        auto s = rat_sqrt(disc);
        if (!s) return std::nullopt;
        return (-b + *s) / (2 * a);
    };
    Rat c10 = cf(1, 0), c01 = cf(0, 1), c00 = cf(0, 0);
    for (const Rat& u0 : ladder) {
        // C(u0, y) = c02 y^2 + (c11 u0 + c01) y + (c20 u0^2 + c10 u0 + c00)
        auto y = solve_quadratic(c02, c11 * u0 + c01, c20 * u0 * u0 + c10 * u0 + c00);
        if (y) return ConicPoint{false, u0, *y};
    }
    for (const Rat& v0 : ladder) {
        auto x = solve_quadratic(c20, c11 * v0 + c10, c02 * v0 * v0 + c01 * v0 + c00);
        if (x) return ConicPoint{false, *x, v0};
    }
    return std::nullopt;
}

std::optional<std::pair<RatFn, RatFn>> param_conic(const MPoly& C, int u, int v, long height,
                                                   PlaneFail& why) {
    auto pt = conic_rational_point(C, u, v, height);
    if (!pt) {
        why = PlaneFail::ConicNoRationalPoint;
        return std::nullopt;
    }
    VarSet tv = param_vs(kInternalParam);
    VarSet ts{"t", "s"};
    MPoly T = MPoly::variable(ts, 0), S = MPoly::variable(ts, 1);
    MPoly ubind(ts), vbind(ts);
    if (pt->at_infinity) {
        // chords in the asymptotic direction (dU, dV), base line transversal
        Rat dU = pt->x, dV = pt->y;
        if (dV != 0) {
            ubind = T + S * dU;
            vbind = S * dV;
        } else {
            ubind = S * dU;
            vbind = T;
        }
    } else {
        ubind = MPoly::constant(ts, pt->x) + S;
        vbind = MPoly::constant(ts, pt->y) + T * S;
    }
    Bindings b{{u, RatFn(ubind)}, {v, RatFn(vbind)}};
    MPoly E = substitute(C, ts, b).num();
    auto cs = E.coeffs_in(1);  // in s
    if (cs.size() < 2) return std::nullopt;
    MPoly A0 = cs.size() > 1 ? cs[1] : MPoly(ts);  // linear coefficient
    MPoly A1 = cs.size() > 2 ? cs[2] : MPoly(ts);
    // second intersection: s* = -A0/A1 for affine pencils; for the infinity
    // case the s^2 term must cancel, leaving a linear equation in s
    MPoly lin, cst;
    if (pt->at_infinity) {
        if (cs.size() > 2 && !cs[2].is_zero()) return std::nullopt;  // direction not asymptotic
        lin = cs[1];
        cst = cs[0];
    } else {
        if (cs.size() <= 2 || cs[2].is_zero() || cs[1].is_zero()) {
            // base point singular on the conic (line pair): not usable
            return std::nullopt;
        }
        lin = cs[2];   // s^2 coefficient
        cst = cs[1];   // s coefficient; E = s*(cst + lin*s)
    }
    if (lin.is_zero()) return std::nullopt;
    RatFn sstar(-cst, lin);
    RatFn uu = substitute(RatFn(ubind), ts, Bindings{{1, sstar}});
    RatFn vv = substitute(RatFn(vbind), ts, Bindings{{1, sstar}});
    // drop the s variable
    std::vector<int> pos{0, -1};
    return std::make_pair(remap(uu, tv, pos), remap(vv, tv, pos));
}

std::optional<std::pair<RatFn, RatFn>> param_binomial(const MPoly& C, int u, int v) {
    if (C.terms().size() != 2) return std::nullopt;
    auto it = C.terms().begin();
    auto [m1, c1] = *it;
    ++it;
    auto [m2, c2] = *it;
    // want c*u^m - d*v^n
    long m, n;
    Rat cc, dd;
    auto pure = [&](const Mono& mo, int var, int other) {
        return mo[var] > 0 && mo[other] == 0;
    };
    if (pure(m1, u, v) && pure(m2, v, u)) {
        m = m1[u]; n = m2[v]; cc = c1; dd = -c2;
    } else if (pure(m2, u, v) && pure(m1, v, u)) {
        m = m2[u]; n = m1[v]; cc = c2; dd = -c1;
    } else {
        return std::nullopt;
    }
    long g = std::gcd(m, n);
    if (g != 1) return std::nullopt;
    // alpha^m * cc = dd * beta^n via alpha = rho^sig, beta = rho^(-tau),
    // sig*m + tau*n = 1, rho = dd/cc
    long sig = 0, tau = 0;
    {
        long a = m, b = n, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
        while (b) {
            long q = a / b;
            std::tie(a, b) = std::make_tuple(b, a - q * b);
            std::tie(x0, x1) = std::make_tuple(x1, x0 - q * x1);
            std::tie(y0, y1) = std::make_tuple(y1, y0 - q * y1);
        }
        sig = x0;
        tau = y0;
    }
    Rat rho = dd / cc;
    if (rho == 0) return std::nullopt;
    Rat alpha = rat_pow(rho, sig), beta = rat_pow(rho, -tau);
    // sanity: cc*alpha^m == dd*beta^n
    if (cc * rat_pow(alpha, m) != dd * rat_pow(beta, n)) return std::nullopt;
    VarSet vs = param_vs(kInternalParam);
    MPoly t = MPoly::variable(vs, 0);
    return std::make_pair(RatFn(t.pow(n) * alpha), RatFn(t.pow(m) * beta));
}

} // namespace

PlaneParamResult plane_parametrize(const PlaneCurve& curve, const CurveOptions& opts) {
    const MPoly& C = curve.poly;
    PlaneParamResult out;
    if (C.is_zero() || C.is_constant()) return out;
    int td = C.total_degree();
    if (td == 1) {
        out.param = param_line(C, curve.u, curve.v);
        return out;
    }
    if (C.degree(curve.u) == 1) {
        out.param = param_linear_in(C, curve.u, curve.v, true);
        return out;
    }
    if (C.degree(curve.v) == 1) {
        out.param = param_linear_in(C, curve.v, curve.u, false);
        return out;
    }
    if (td == 2) {
        PlaneFail why = PlaneFail::NotInTaxonomy;
        out.param = param_conic(C, curve.u, curve.v, opts.conic_height, why);
        if (!out.param) out.fail = why;
        return out;
    }
    out.param = param_binomial(C, curve.u, curve.v);
    return out;
}

std::optional<CurveParam> lift(const std::pair<RatFn, RatFn>& plane_param,
                               const SpaceCurveSystem& sys, const PlaneCurve& curve) {
    const VarSet& svars = sys.g1.vars();
    VarSet work{kInternalParam, svars.name(curve.elim_var)};
    std::vector<int> tpos{0};
    Bindings b;
    b.emplace(curve.u, remap(plane_param.first, work, tpos));
    b.emplace(curve.v, remap(plane_param.second, work, tpos));
    b.emplace(curve.elim_var, RatFn::variable(work, 1));
    MPoly F1 = substitute_cleared(sys.g1, work, b).first;
    MPoly F2 = substitute_cleared(sys.g2, work, b).first;
    MPoly N = poly_gcd(F1, F2);
    if (N.is_zero()) throw std::domain_error("lift: system vanishes identically on the plane curve");
    // gcd over Q(t): strip the content in t
    N = content_primitive(N, 1).second;
    if (N.degree(1) != 1) return std::nullopt;
    auto cs = N.coeffs_in(1);
    VarSet tv = param_vs(kInternalParam);
    std::vector<int> back{0, -1};
    RatFn lifted(remap(-cs[0], tv, back), remap(cs[1], tv, back));
    std::array<RatFn, 3> coords{RatFn(MPoly(tv)), RatFn(MPoly(tv)), RatFn(MPoly(tv))};
    coords[curve.u] = plane_param.first;
    coords[curve.v] = plane_param.second;
    coords[curve.elim_var] = lifted;
    return CurveParam(std::move(coords), kInternalParam);
}

bool validate_on_curve(const CurveParam& p, const SpaceCurveSystem& sys) {
    return p.substitute_into(sys.g1).is_zero() && p.substitute_into(sys.g2).is_zero();
}

int properness_degree(const CurveParam& p) {
    if (p.all_constant()) throw std::domain_error("properness_degree: constant parametrization");
    VarSet ts{"t", "s"};
    std::vector<int> tpos{0}, spos{1};
    MPoly g(ts);
    for (int i = 0; i < 3; ++i) {
        MPoly nt = remap(p.coord(i).num(), ts, tpos), dt = remap(p.coord(i).den(), ts, tpos);
        MPoly ns = remap(p.coord(i).num(), ts, spos), ds = remap(p.coord(i).den(), ts, spos);
        MPoly H = nt * ds - ns * dt;
        if (!H.is_zero()) g = poly_gcd(g, H);
    }
    return g.degree(0);
}

bool is_line(const CurveParam& p) {
    std::array<RatFn, 3> d{p.coord(0).diff(0), p.coord(1).diff(0), p.coord(2).diff(0)};
    int ref = -1;
    for (int i = 0; i < 3; ++i)
        if (!d[i].is_zero()) { ref = i; break; }
    if (ref < 0) return true;  // constant point
    for (int i = 0; i < 3; ++i) {
        if (i == ref || d[i].is_zero()) continue;
        if (!(d[i] / d[ref]).is_constant()) return false;
    }
    return true;
}

SpaceCurveResult parametrize_space_curve(const SpaceCurveSystem& sys, const CurveOptions& opts,
                                         const CurveAcceptor& accept) {
    SpaceCurveResult out;
    const VarSet& vs = sys.g1.vars();
    bool attempted = false, all_constant_res = true;
    static const int elim_order[3] = {2, 1, 0};
    for (int e : elim_order) {
        if (sys.g1.degree(e) <= 0 && sys.g2.degree(e) <= 0) continue;
        attempted = true;
        ProjectResult pr = project(sys, e);
        if (pr.status == ProjectStatus::ZeroResultant) {
            all_constant_res = false;
            out.log.push_back("projection " + vs.name(e) + ": zero resultant (shared factor)");
            continue;
        }
        if (pr.status == ProjectStatus::ConstantResultant) {
            out.log.push_back("projection " + vs.name(e) + ": constant resultant");
            continue;
        }
        all_constant_res = false;
        const PlaneCurve& pc = *pr.curve;

        // candidates: extracted linear-in-one-variable factors first, then the
        // whole squarefree resultant, then the cofactor of the extracted part;
        // conic (degree-2) factor extraction is a second phase, tried only
        // when the cheap candidates fail
        auto sort_cands = [](std::vector<MPoly>& v) {
            std::sort(v.begin(), v.end(), [](const MPoly& a, const MPoly& b) {
                if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
                return a.compare(b) < 0;
            });
        };
        std::vector<MPoly> extracted;
        for (auto [mu, mv] : {std::pair{pc.u, pc.v}, std::pair{pc.v, pc.u}}) {
            if (pc.poly.degree(mu) < 1) continue;
            for (const MPoly& f : linear_in_var_factors(pc.poly, mu, mv, opts)) {
                if (std::find(extracted.begin(), extracted.end(), f) == extracted.end())
                    extracted.push_back(f);
            }
        }
        sort_cands(extracted);
        std::vector<MPoly> cands = extracted;
        if (extracted.size() != 1 || extracted[0] != pc.poly.normalized()) cands.push_back(pc.poly);
        if (!extracted.empty()) {
            MPoly co = pc.poly;
            for (const MPoly& f : extracted)
                if (auto q = try_divide(co, f)) co = *q;
            if (!co.is_constant() && co != pc.poly) cands.push_back(co.normalized());
        }
        {
            std::vector<MPoly> conics;
            for (auto [mu, mv] : {std::pair{pc.u, pc.v}, std::pair{pc.v, pc.u}}) {
                if (pc.poly.degree(mu) < 3) continue;
                for (const MPoly& f : quadratic_in_var_factors(pc.poly, mu, mv, opts)) {
                    if (std::find(conics.begin(), conics.end(), f) == conics.end() &&
                        std::find(cands.begin(), cands.end(), f) == cands.end())
                        conics.push_back(f);
                }
            }
            sort_cands(conics);
            cands.insert(cands.end(), conics.begin(), conics.end());
        }

        for (const MPoly& cand : cands) {
            PlaneCurve sub{cand, pc.elim_var, pc.u, pc.v};
            PlaneParamResult pp = plane_parametrize(sub, opts);
            if (!pp.param) continue;
            std::optional<CurveParam> tri;
            try {
                tri = lift(*pp.param, sys, sub);
            } catch (const std::domain_error&) {
                out.log.push_back("projection " + vs.name(e) + ": degenerate lift");
                continue;
            }
            if (!tri) continue;
            if (!validate_on_curve(*tri, sys)) continue;
            if (tri->all_constant()) continue;
            if (properness_degree(*tri) != 1) continue;
            if (accept && !accept(*tri)) {
                out.log.push_back("projection " + vs.name(e) + ": candidate rejected by caller");
                continue;
            }
            out.log.push_back("projection " + vs.name(e) + ": parametrized component of degree " +
                              std::to_string(cand.total_degree()));
            out.param = *tri;
            return out;
        }
    }
    out.fail = (attempted && all_constant_res) ? SpaceCurveFail::NotACurve
                                               : SpaceCurveFail::Unsupported;
    return out;
}

DimensionEvidence dimension_evidence(const SpaceCurveSystem& sys, const CurveOptions& opts) {
    const VarSet& vs = sys.g1.vars();
    for (int e : {2, 1, 0}) {
        if (sys.g1.degree(e) <= 0 && sys.g2.degree(e) <= 0) continue;
        ProjectResult pr = project(sys, e);
        if (pr.status == ProjectStatus::ConstantResultant)
            return {DimensionTag::FiniteEvidence,
                    "resultant w.r.t. " + vs.name(e) + " is the nonzero constant " +
                        rat_str(pr.raw.constant_value())};
    }
    SpaceCurveResult r = parametrize_space_curve(sys, opts);
    if (r.param) return {DimensionTag::CurveFound, "parametrized"};
    return {DimensionTag::Unknown, ""};
}

} // namespace tsurf
