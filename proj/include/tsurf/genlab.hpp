#ifndef TSURF_GENLAB_HPP
#define TSURF_GENLAB_HPP

#include "tsurf/surface.hpp"

namespace tsurf {

enum class Family { PolynomialGraph, RationalGraph, Monomial, ConicBased };

struct InstanceSpec {
    Family family = Family::PolynomialGraph;     // P1 family
    Family p2_family = Family::PolynomialGraph;  // P2 family
    int degree_bound = 3;       // per curve coordinate, >= 2 (lines are excluded)
    long coeff_height = 3;
    unsigned long seed = 0;
    int elim_degree_budget = 40;
};

enum class ImplicitizeFail { BudgetExceeded, AmbiguousFactor, NotASurface };

struct ImplicitizeResult {
    std::optional<MPoly> f;  // normalized implicit polynomial over (x1,x2,x3)
    ImplicitizeFail fail = ImplicitizeFail::AmbiguousFactor;
    std::vector<std::string> log;
};

/// Implicit equation of p1(t1)+p2(t2) by iterated resultants (t1 first),
/// squarefree/content cleanup, and factor selection by point sampling.
ImplicitizeResult implicitize(const SurfaceParam& sp, int degree_budget = 40);

struct Instance {
    MPoly f;
    SurfaceParam sp;
    unsigned long seed;
};

/// Deterministically seeded instance from the requested family; retries
/// internally (bumping a derived counter) on degenerate draws. Nullopt when
/// the retry cap is exhausted.
std::optional<Instance> random_instance(const InstanceSpec& spec);

struct RoundtripReport {
    int count = 0;
    int passes = 0;
    std::vector<unsigned long> failing_seeds;
    std::vector<std::string> notes;
    long elapsed_ms = 0;  // reported on stderr only, not in the structured form
};

/// parametrize -> implicitize -> classify -> verify, `count` times.
RoundtripReport roundtrip_check(const InstanceSpec& base, int count, const Config& cfg = {});

} // namespace tsurf

#endif
