#ifndef TSURF_CURVE_HPP
#define TSURF_CURVE_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tsurf/substitute.hpp"

namespace tsurf {

/// Space curve given by two trivariate equations over VarSet::surface().
struct SpaceCurveSystem {
    MPoly g1, g2;
};

/// Plane curve obtained by projecting away one coordinate. poly lives over
/// the surface VarSet but does not involve elim_var; u < v are the kept
/// coordinate indices.
struct PlaneCurve {
    MPoly poly;
    int elim_var;
    int u, v;
};

/// Triple of univariate rational functions in one named parameter.
class CurveParam {
public:
    CurveParam() = default;
    CurveParam(std::array<RatFn, 3> coords, std::string param);

    const std::array<RatFn, 3>& coords() const { return coords_; }
    const RatFn& coord(int i) const { return coords_.at(i); }
    const std::string& param() const { return param_; }
    const VarSet& pvars() const { return coords_[0].vars(); }

    bool all_constant() const;
    CurveParam renamed(const std::string& new_param) const;
    /// Parameter translation t -> t + c.
    CurveParam shifted(const Rat& c) const;
    CurveParam operator+(const std::array<Rat, 3>& point) const;
    CurveParam operator-(const std::array<Rat, 3>& point) const;
    /// Coordinatewise derivative.
    CurveParam derivative() const;
    /// Value at a parameter; nullopt when some denominator vanishes.
    std::optional<std::array<Rat, 3>> eval(const Rat& t) const;

    /// f(coords) as a rational function of the parameter.
    RatFn substitute_into(const MPoly& f) const;

private:
    std::array<RatFn, 3> coords_;
    std::string param_;
};

struct CurveOptions {
    long conic_height = 20;    // rational point search ladder bound on conics
    long root_height = 10000;  // divisor bound in fiber rational-root search
};

/// Why a plane curve could not be parametrized.
enum class PlaneFail {
    NotInTaxonomy,       // none of line / linear-in-one / conic / binomial
    ConicNoRationalPoint // conic, but no rational point within the height bound
};

struct PlaneParamResult {
    std::optional<std::pair<RatFn, RatFn>> param;  // over VarSet{"t"}
    PlaneFail fail = PlaneFail::NotInTaxonomy;
};

enum class ProjectStatus { Ok, ZeroResultant, ConstantResultant };

struct ProjectResult {
    ProjectStatus status;
    std::optional<PlaneCurve> curve;  // set when Ok
    MPoly raw;                        // the resultant before cleanup
};

/// Squarefree part (normalized) of the resultant of the two generators
/// w.r.t. elim_var. ZeroResultant signals a shared factor involving
/// elim_var; ConstantResultant means no affine common zero projects there.
ProjectResult project(const SpaceCurveSystem& sys, int elim_var);

/// Parametrize a supported-class plane curve; classes tried in order:
/// line, linear in one variable, conic (rational point by bounded search,
/// points at infinity first), two-term binomial c*u^m - d*v^n, gcd(m,n)=1.
PlaneParamResult plane_parametrize(const PlaneCurve& curve, const CurveOptions& opts = {});

/// Recover the eliminated coordinate: substitute the plane parametrization
/// into both generators, gcd over Q(t) in elim_var must have degree 1.
/// Nullopt = LiftFailed (caller tries another projection); throws
/// std::domain_error when the gcd vanishes identically (inconsistent system).
std::optional<CurveParam> lift(const std::pair<RatFn, RatFn>& plane_param,
                               const SpaceCurveSystem& sys, const PlaneCurve& curve);

/// All factors of R linear in variable u with coefficients in the single
/// other variable v, found by fiber rational roots + Newton series lifting +
/// rational-function reconstruction; exact, sorted canonically. R must be
/// squarefree.
std::vector<MPoly> linear_in_var_factors(const MPoly& R, int u, int v,
                                         const CurveOptions& opts = {});

/// Factors of R of degree exactly 2 in u (conic components hiding inside
/// projection resultants), via monic quadratic fiber factors lifted by
/// Hensel iteration and reconstructed exactly. R must be squarefree.
std::vector<MPoly> quadratic_in_var_factors(const MPoly& R, int u, int v,
                                            const CurveOptions& opts = {});

enum class SpaceCurveFail { NotACurve, Unsupported };

struct SpaceCurveResult {
    std::optional<CurveParam> param;  // parameter "t"
    SpaceCurveFail fail = SpaceCurveFail::Unsupported;
    std::vector<std::string> log;
};

/// Accepts any curve by default; callers may reject candidates (first
/// accepted one is returned, in fixed projection/candidate order).
using CurveAcceptor = std::function<bool(const CurveParam&)>;

/// Full projection/parametrize/lift/validate pipeline over eliminations
/// x3, x2, x1. Every returned curve validates on both generators and has
/// properness degree 1.
SpaceCurveResult parametrize_space_curve(const SpaceCurveSystem& sys,
                                         const CurveOptions& opts = {},
                                         const CurveAcceptor& accept = nullptr);

/// True iff substituting p into every generator yields the zero function.
bool validate_on_curve(const CurveParam& p, const SpaceCurveSystem& sys);

/// Degree of the parametrization map (1 = proper), via the gcd of the
/// cross-difference polynomials over the function field in a second
/// parameter. Throws std::domain_error when all coordinates are constant.
int properness_degree(const CurveParam& p);

/// True iff the image is a line (all coordinates affine in one of them).
bool is_line(const CurveParam& p);

enum class DimensionTag { FiniteEvidence, CurveFound, Unknown };

struct DimensionEvidence {
    DimensionTag tag;
    std::string witness;
};

/// Cheap zero-dimensionality / curve evidence for a system.
DimensionEvidence dimension_evidence(const SpaceCurveSystem& sys, const CurveOptions& opts = {});

} // namespace tsurf

#endif
