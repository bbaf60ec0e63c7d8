#include "tsurf/mpoly.hpp"

namespace tsurf {

std::optional<Rat> rat_parse(const std::string& s) {
    if (s.empty()) return std::nullopt;
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(s));
        }
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (num.empty() || den.empty()) return std::nullopt;
        Int n(num), d(den);
        if (d == 0) return std::nullopt;
        Rat r(n, d);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::optional<Rat> rat_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    Int sn, sd;
    if (mpz_perfect_square_p(r.get_num_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(r.get_den_mpz_t()) == 0) return std::nullopt;
    mpz_sqrt(sn.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), r.get_den_mpz_t());
    Rat s(sn, sd);
    s.canonicalize();
    return s;
}

MPoly MPoly::constant(const VarSet& vs, const Rat& c) {
    MPoly p(vs);
    if (c != 0) p.terms_.emplace(Mono(vs.arity(), 0), c);
    return p;
}

MPoly MPoly::variable(const VarSet& vs, int v) {
    if (v < 0 || v >= vs.arity()) throw std::out_of_range("MPoly::variable: index");
    Mono m(vs.arity(), 0);
    m[v] = 1;
    MPoly p(vs);
    p.terms_.emplace(std::move(m), Rat(1));
    return p;
}

MPoly MPoly::monomial(const VarSet& vs, Mono m, const Rat& c) {
    if (static_cast<int>(m.size()) != vs.arity()) throw std::invalid_argument("MPoly::monomial: arity");
    for (int e : m)
        if (e < 0) throw std::invalid_argument("MPoly::monomial: negative exponent");
    MPoly p(vs);
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0;
}

Rat MPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("MPoly::constant_value: not constant");
    return terms_.begin()->second;
}

int MPoly::degree(int v) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return mono_degree(terms_.rbegin()->first);
}

const Rat& MPoly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

const Mono& MPoly::leading_mono() const {
    if (terms_.empty()) throw std::logic_error("leading_mono of zero polynomial");
    return terms_.rbegin()->first;
}

Rat MPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    require_same_vars(o);
    MPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    require_same_vars(o);
    MPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    require_same_vars(o);
    MPoly r(vars_);
    const int n = vars_.arity();
    Mono m(n);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            for (int i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

MPoly MPoly::operator*(const Rat& c) const {
    MPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

MPoly MPoly::operator/(const Rat& c) const {
    if (c == 0) throw std::domain_error("MPoly: division by zero constant");
    Rat inv = Rat(1) / c;
    return *this * inv;
}

MPoly MPoly::pow(long k) const {
    if (k < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
    MPoly r = constant(vars_, Rat(1));
    MPoly b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

MPoly MPoly::diff(int v) const {
    if (v < 0 || v >= vars_.arity()) throw std::out_of_range("MPoly::diff: index");
    MPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[v] == 0) continue;
        Mono mm = m;
        mm[v] -= 1;
        r.add_term(mm, c * Rat(m[v]));
    }
    return r;
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != vars_.arity())
        throw std::invalid_argument("MPoly::eval: point arity");
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < vars_.arity(); ++i)
            if (m[i]) t *= rat_pow(point[i], m[i]);
        acc += t;
    }
    return acc;
}

std::vector<MPoly> MPoly::coeffs_in(int v) const {
    int d = degree(v);
    if (d < 0) return {};
    std::vector<MPoly> cs(static_cast<size_t>(d) + 1, MPoly(vars_));
    for (const auto& [m, c] : terms_) {
        Mono mm = m;
        int k = mm[v];
        mm[v] = 0;
        cs[k].add_term(mm, c);
    }
    return cs;
}

MPoly MPoly::from_coeffs_in(const VarSet& vs, int v, const std::vector<MPoly>& cs) {
    MPoly r(vs);
    for (size_t k = 0; k < cs.size(); ++k) {
        for (const auto& [m, c] : cs[k].terms()) {
            if (m[v] != 0) throw std::invalid_argument("from_coeffs_in: coefficient depends on v");
            Mono mm = m;
            mm[v] = static_cast<int>(k);
            r.add_term(mm, c);
        }
    }
    return r;
}

MPoly MPoly::normalized() const {
    if (terms_.empty()) return *this;
    return *this / leading_coeff();
}

int MPoly::compare(const MPoly& o) const {
    auto a = terms_.rbegin(), b = o.terms_.rbegin();
    GrlexLess less;
    for (; a != terms_.rend() && b != o.terms_.rend(); ++a, ++b) {
        if (less(a->first, b->first)) return -1;
        if (less(b->first, a->first)) return 1;
        if (a->second != b->second) return a->second < b->second ? -1 : 1;
    }
    if (a != terms_.rend()) return 1;
    if (b != o.terms_.rend()) return -1;
    return 0;
}

} // namespace tsurf
