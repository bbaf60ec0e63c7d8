#ifndef TSURF_POLYOPS_HPP
#define TSURF_POLYOPS_HPP

#include <optional>
#include <utility>

#include "tsurf/mpoly.hpp"

namespace tsurf {

/// Exact quotient p/q, or nullopt when q does not divide p.
std::optional<MPoly> try_divide(const MPoly& p, const MPoly& q);

/// Exact quotient; throws std::domain_error when not divisible.
MPoly divide_exact(const MPoly& p, const MPoly& q);

/// Greatest common divisor, normalized: grlex leading coefficient 1.
/// gcd(0, q) = normalized q; gcd over the rationals of two nonzero
/// constants is 1. Primitive-PRS recursion by variable.
MPoly poly_gcd(const MPoly& p, const MPoly& q);

/// content/primitive split with respect to variable v: content is the gcd
/// of the v-coefficients (a polynomial in the remaining variables, scaled
/// so content * primitive == p exactly); (0,0) for the zero polynomial.
std::pair<MPoly, MPoly> content_primitive(const MPoly& p, int v);

/// Content of p lying entirely in the single variable v: the gcd of the
/// univariate-in-v coefficient polynomials attached to the monomials in the
/// remaining variables. 1 for v-free p, 0 for the zero polynomial.
MPoly single_var_content(const MPoly& p, int v);

/// Resultant with respect to v via the subresultant PRS, exact including
/// sign. Degenerate convention: if exactly one argument is constant in v,
/// returns that constant raised to the other's v-degree; both constant in
/// v is an error (throws std::domain_error).
MPoly resultant(const MPoly& p, const MPoly& q, int v);

/// Product of the distinct irreducible factors, up to a nonzero constant
/// (normalized). Throws std::domain_error on zero input.
MPoly squarefree_part(const MPoly& p);

/// True iff p has no repeated nonconstant factor.
bool is_squarefree(const MPoly& p);

/// Three-way split of h(x,t1): p_hat = content of H w.r.t. the
/// x-block (univariate in t_var), h_tilde = content of H/p_hat w.r.t. t_var
/// (free of t_var), psi = remaining primitive part; h_tilde*psi*p_hat == H.
struct PsiCore {
    MPoly h_tilde;
    MPoly psi;
    MPoly p_hat;
};
PsiCore psi_decompose_core(const MPoly& H, int t_var);

} // namespace tsurf

#endif
