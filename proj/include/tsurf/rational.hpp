#ifndef TSURF_RATIONAL_HPP
#define TSURF_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <string>

namespace tsurf {

/// Exact arbitrary-precision rational, the coefficient field everywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline Rat rat_pow(const Rat& b, long e) {
    if (e == 0) return Rat(1);
    Rat r;
    if (e > 0) {
        mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(e));
    } else {
        if (b == 0) throw std::domain_error("rat_pow: 0 to negative power");
        mpz_pow_ui(r.get_num_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(-e));
        mpz_pow_ui(r.get_den_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(-e));
    }
    r.canonicalize();
    return r;
}

/// "p/q" in lowest terms, "p" when q == 1.
inline std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Parse "p" or "p/q"; nullopt on malformed text.
std::optional<Rat> rat_parse(const std::string& s);

/// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rat> rat_sqrt(const Rat& r);

} // namespace tsurf

#endif
