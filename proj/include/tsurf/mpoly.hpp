#ifndef TSURF_MPOLY_HPP
#define TSURF_MPOLY_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tsurf/rational.hpp"
#include "tsurf/varset.hpp"

namespace tsurf {

/// Exponent vector; length always equals the arity of the owning VarSet.
using Mono = std::vector<int>;

inline int mono_degree(const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

/// Graded lexicographic order, earlier variable more significant
/// (x1 > x2 > x3 > t1 > t2). This is the one global monomial order;
/// canonical rendering iterates it descending.
struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da < db;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

struct VarMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Canonical: no zero coefficient is stored, the zero polynomial has an
/// empty term map, equal polynomials have identical maps.
class MPoly {
public:
    using TermMap = std::map<Mono, Rat, GrlexLess>;

    MPoly() = default;
    explicit MPoly(VarSet vars) : vars_(std::move(vars)) {}

    static MPoly zero(const VarSet& vs) { return MPoly(vs); }
    static MPoly constant(const VarSet& vs, const Rat& c);
    static MPoly variable(const VarSet& vs, int v);
    static MPoly monomial(const VarSet& vs, Mono m, const Rat& c);

    const VarSet& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant value; throws unless is_constant().
    Rat constant_value() const;

    int degree(int v) const;          // -1 for the zero polynomial
    int total_degree() const;         // -1 for the zero polynomial
    bool depends_on(int v) const { return degree(v) > 0; }

    /// Leading coefficient / monomial under the global grlex order.
    const Rat& leading_coeff() const;
    const Mono& leading_mono() const;

    Rat coeff(const Mono& m) const;

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rat& c) const;
    MPoly operator/(const Rat& c) const;
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    bool operator==(const MPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly pow(long k) const;
    MPoly diff(int v) const;

    /// Evaluate with every variable bound to a rational.
    Rat eval(const std::vector<Rat>& point) const;

    /// Coefficients of powers of v: result[k] = coefficient of v^k, a
    /// polynomial over the same VarSet with zero v-exponent. Size = deg_v + 1;
    /// empty for the zero polynomial.
    std::vector<MPoly> coeffs_in(int v) const;

    /// Rebuild from v-coefficients (inverse of coeffs_in).
    static MPoly from_coeffs_in(const VarSet& vs, int v, const std::vector<MPoly>& cs);

    /// Scale so the grlex leading coefficient is 1 (zero stays zero).
    MPoly normalized() const;

    /// Total order on polynomials over one VarSet (for deterministic sorting):
    /// grlex-compare term lists from the leading end.
    int compare(const MPoly& o) const;

    void add_term(const Mono& m, const Rat& c);  // accumulate, canonical kept

private:
    void require_same_vars(const MPoly& o) const {
        if (vars_ != o.vars_) throw VarMismatch("MPoly: mismatched VarSet");
    }

    VarSet vars_;
    TermMap terms_;
};

inline MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }

} // namespace tsurf

#endif
