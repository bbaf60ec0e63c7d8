#ifndef TSURF_SURFACE_HPP
#define TSURF_SURFACE_HPP

#include "tsurf/curve.hpp"

namespace tsurf {

using Vec3 = std::array<Rat, 3>;

/// Vector (a1,a2,a3) defining g = a1 f_x1 + a2 f_x2 + a3 f_x3; never all zero.
struct CandidateVector {
    Vec3 a;
    bool operator==(const CandidateVector& o) const { return a == o.a; }
};

/// Standard translational form: p1 in t1, p2 in t2, p2(0) = 0, p2'(0) != 0.
struct SurfaceParam {
    CurveParam p1, p2;
};

/// Replay data for a Translational verdict.
struct Certificate {
    CandidateVector vector;
    Rat s1, s2;      // shortcut sample points (0 when the general route was used)
    Rat shift;       // t2^0 folded in by normalize_standard
    bool used_shortcut = true;
    SpaceCurveSystem c1_defining;
    SpaceCurveSystem c2_defining;
};

enum class SurfaceTag { Plane, Cylinder, Translational, Undecided };

struct Classification {
    SurfaceTag tag;
    std::optional<SurfaceParam> param;      // Plane, Translational
    std::optional<Vec3> direction;          // Cylinder
    std::optional<Certificate> certificate; // Translational
    std::vector<std::string> evidence;
};

enum class C2Route { Shortcut, General, Both };

struct Config {
    int vector_budget = 25;
    int pair_budget = 10;
    long conic_height = 20;
    long root_height = 10000;
    unsigned long seed = 0;
    C2Route route = C2Route::Shortcut;
    /// When nonempty, replaces the candidate vector stream entirely.
    std::vector<CandidateVector> vector_override;

    CurveOptions curve_options() const { return {conic_height, root_height}; }
};

/// Nontrivial kernel vector of span{f_x1, f_x2, f_x3}, if any.
std::optional<Vec3> cylinder_test(const MPoly& f);

/// The closed-form decomposition for a plane m1 x1 + m2 x2 + m3 x3 + m4,
/// permuting coordinates when m3 = 0. Throws on constant input.
SurfaceParam plane_param(const MPoly& f);

/// Deterministic candidate stream: unit vectors, 0/1 patterns, (1,1,1),
/// patterned rational fills, then seeded small rationals; size = budget.
std::vector<CandidateVector> candidate_vectors(const Config& cfg);

/// C1 for one vector: parametrize {f, grad f . a}; rejects vectors whose g is
/// constant and candidate curves along which grad f vanishes identically.
struct C1Result {
    std::optional<CurveParam> p1;  // parameter t1
    SpaceCurveSystem system;
    bool vector_rejected = false;
    std::vector<std::string> log;
};
C1Result compute_c1(const MPoly& f, const CandidateVector& a, const Config& cfg);

/// h(x,t1) = f(P1(t1)+x) split as h_tilde(x) * psi(x,t1) * p_hat(t1), with
/// the cleared t1-denominator recorded separately.
struct PsiDecomposition {
    MPoly h_tilde;               // over (x1,x2,x3,t1), free of t1
    MPoly psi;                   // over (x1,x2,x3,t1)
    std::vector<MPoly> psi_coeffs;  // over (x1,x2,x3): coefficients of t1^i
    MPoly p_hat;                 // over (x1,x2,x3,t1), only t1
    MPoly den_cleared;           // over (x1,x2,x3,t1), only t1
};
PsiDecomposition psi_decompose(const MPoly& f, const CurveParam& p1);

struct C2Result {
    std::optional<CurveParam> p2;  // parameter t2, not yet normalized
    Rat s1, s2;
    bool used_shortcut = true;
    SpaceCurveSystem system;
    std::vector<std::string> log;
};

/// Theorem-6 route: sample pairs (s1,s2) from a fixed ladder, define the
/// curve by g_i = f(P1(s_i)+x)/G and parametrize it; every psi coefficient
/// must vanish on the result.
C2Result compute_c2_shortcut(const MPoly& f, const CurveParam& p1, const PsiDecomposition& psi,
                             const Config& cfg);

/// General route: parametrize the common curve of two independent psi
/// coefficients.
C2Result compute_c2_general(const MPoly& f, const CurveParam& p1, const PsiDecomposition& psi,
                            const Config& cfg);

/// Shift so that p2(0) = (0,0,0) and p2'(0) != 0, folding the constant into
/// p1; returns the chosen t2^0. Throws std::logic_error when no ladder point
/// works (impossible for nonconstant p2).
std::pair<SurfaceParam, Rat> normalize_standard(const CurveParam& p1, const CurveParam& p2);

/// Exact check: f(p1(t1)+p2(t2)) == 0 and the Jacobian has a nonzero 2x2 minor.
bool verify_surface_param(const MPoly& f, const SurfaceParam& sp);

/// The end-to-end decision procedure.
Classification classify_surface(const MPoly& f, const Config& cfg = {});

} // namespace tsurf

#endif
