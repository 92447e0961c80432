#include "dfsing/multipoly.hpp"

#include <sstream>

namespace dfsing {

std::vector<ExpVec> exponents_up_to(int nvars, int m) {
    std::vector<ExpVec> out;
    ExpVec u(nvars, 0);
    // enumerate the box [0,m]^n, keep |u| <= m, then sort by grlex
    while (true) {
        if (total_degree(u) <= m) out.push_back(u);
        int i = 0;
        while (i < nvars && u[i] == m) u[i++] = 0;
        if (i == nvars) break;
        ++u[i];
    }
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(ExpVec(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(int nvars, const ExpVec& u, const Rational& c) {
    if ((int)u.size() != nvars) throw StructuralError("monomial exponent length mismatch");
    MultiPoly p(nvars);
    p.add_term(u, c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    ExpVec u(nvars, 0);
    u[i] = 1;
    return monomial(nvars, u, 1);
}

void MultiPoly::add_term(const ExpVec& u, const Rational& c) {
    if ((int)u.size() != nvars_) throw StructuralError("exponent length mismatch");
    if (c == 0) return;
    auto it = terms_.find(u);
    if (it == terms_.end()) {
        terms_.emplace(u, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && is_zero_vec(terms_.begin()->first));
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw StructuralError("constant_value of non-constant polynomial");
    return terms_.begin()->second;
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first); // grlex map: last term has max degree
}

const ExpVec& MultiPoly::leading_exponent() const {
    if (terms_.empty()) throw StructuralError("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const Rational& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw StructuralError("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

Rational MultiPoly::coeff(const ExpVec& u) const {
    auto it = terms_.find(u);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(nvars_);
    for (const auto& [u, c] : terms_) p.terms_.emplace(u, -c);
    return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw StructuralError("nvars mismatch in +");
    MultiPoly p = *this;
    for (const auto& [u, c] : o.terms_) p.add_term(u, c);
    return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw StructuralError("nvars mismatch in -");
    MultiPoly p = *this;
    for (const auto& [u, c] : o.terms_) p.add_term(u, -c);
    return p;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw StructuralError("nvars mismatch in *");
    MultiPoly p(nvars_);
    for (const auto& [u, cu] : terms_)
        for (const auto& [v, cv] : o.terms_) p.add_term(vec_add(u, v), cu * cv);
    return p;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly p(nvars_);
    if (c == 0) return p;
    for (const auto& [u, cu] : terms_) p.terms_.emplace(u, cu * c);
    return p;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw StructuralError("negative polynomial power");
    MultiPoly r = constant(nvars_, 1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

MultiPoly MultiPoly::derivative(int i) const {
    MultiPoly p(nvars_);
    for (const auto& [u, c] : terms_) {
        if (u[i] == 0) continue;
        ExpVec v = u;
        v[i] -= 1;
        p.add_term(v, c * u[i]);
    }
    return p;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if ((int)point.size() != nvars_) throw StructuralError("evaluation point length mismatch");
    Rational s = 0;
    for (const auto& [u, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i)
            if (u[i]) t *= rat_pow(point[i], u[i]);
        s += t;
    }
    return s;
}

MultiPoly MultiPoly::shift(const std::vector<Rational>& alpha) const {
    if ((int)alpha.size() != nvars_) throw StructuralError("shift vector length mismatch");
    MultiPoly out(nvars_);
    for (const auto& [u, c] : terms_) {
        // expand c * prod_i (x_i + a_i)^{u_i}
        MultiPoly t = constant(nvars_, c);
        for (int i = 0; i < nvars_; ++i) {
            if (u[i] == 0) continue;
            if (alpha[i] == 0) {
                ExpVec e(nvars_, 0);
                e[i] = u[i];
                t = t * monomial(nvars_, e, 1);
                continue;
            }
            MultiPoly bin(nvars_);
            for (int k = 0; k <= u[i]; ++k) {
                ExpVec e(nvars_, 0);
                e[i] = k;
                bin.add_term(e, Rational(binomial(u[i], k)) * rat_pow(alpha[i], u[i] - k));
            }
            t = t * bin;
        }
        out = out + t;
    }
    return out;
}

int MultiPoly::max_degree_in(int i) const {
    int d = 0;
    for (const auto& term : terms_) d = std::max(d, term.first[i]);
    return d;
}

MultiPoly MultiPoly::divexact(const MultiPoly& d) const {
    if (d.is_zero()) throw StructuralError("division by zero polynomial");
    MultiPoly q(nvars_), r = *this;
    const ExpVec& lu = d.leading_exponent();
    const Rational& lc = d.leading_coeff();
    while (!r.is_zero()) {
        const ExpVec& ru = r.leading_exponent();
        if (!divides(lu, ru)) throw StructuralError("inexact polynomial division");
        ExpVec e = vec_sub(ru, lu);
        Rational c = r.leading_coeff() / lc;
        q.add_term(e, c);
        r = r - d * monomial(nvars_, e, c);
    }
    return q;
}

// ---------------------------------------------------------------------------
// gcd: rational contents split off, then subresultant PRS on integer-primitive
// parts, recursing through the variables.

Rational rational_content(const MultiPoly& p) {
    if (p.is_zero()) return 0;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [u, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    num_gcd = abs(num_gcd);
    return make_rational(num_gcd, den_lcm);
}

namespace {

// highest variable occurring in a or b, or -1 if both are constants
int main_variable(const MultiPoly& a, const MultiPoly& b) {
    for (int i = a.nvars() - 1; i >= 0; --i)
        if (a.max_degree_in(i) > 0 || b.max_degree_in(i) > 0) return i;
    return -1;
}

// view as univariate in x_k: coefficient polynomials indexed by degree
std::vector<MultiPoly> upoly_view(const MultiPoly& p, int k) {
    std::vector<MultiPoly> cs(p.max_degree_in(k) + 1, MultiPoly(p.nvars()));
    for (const auto& [u, c] : p.terms()) {
        ExpVec v = u;
        int d = v[k];
        v[k] = 0;
        cs[d].add_term(v, c);
    }
    return cs;
}

MultiPoly from_upoly(const std::vector<MultiPoly>& cs, int k, int nvars) {
    MultiPoly p(nvars);
    ExpVec xk(nvars, 0);
    for (size_t d = 0; d < cs.size(); ++d) {
        xk[k] = (int)d;
        p = p + cs[d] * MultiPoly::monomial(nvars, xk, 1);
    }
    return p;
}

int udeg(const std::vector<MultiPoly>& f) {
    for (int d = (int)f.size() - 1; d >= 0; --d)
        if (!f[d].is_zero()) return d;
    return -1;
}

// pseudo-remainder of f by g in the main variable: lc(g)^(df-dg+1) f mod g
std::vector<MultiPoly> pseudo_rem(std::vector<MultiPoly> f, const std::vector<MultiPoly>& g) {
    int df = udeg(f), dg = udeg(g);
    const MultiPoly& lg = g[dg];
    int steps = df - dg + 1;
    while ((df = udeg(f)) >= dg) {
        MultiPoly lf = f[df];
        for (int d = 0; d <= df; ++d) f[d] = f[d] * lg;
        for (int d = 0; d <= dg; ++d) f[d + df - dg] = f[d + df - dg] - g[d] * lf;
        --steps;
    }
    // keep the pseudo-remainder scaling exact regardless of early degree drops
    for (; steps > 0; --steps)
        for (auto& c : f) c = c * lg;
    f.resize(std::max(udeg(f) + 1, 1), MultiPoly(lg.nvars()));
    return f;
}

MultiPoly gcd_recursive(const MultiPoly& a, const MultiPoly& b);

// content (gcd of coefficients) of a univariate view
MultiPoly upoly_content(const std::vector<MultiPoly>& f) {
    MultiPoly c(f[0].nvars());
    for (const auto& q : f)
        if (!q.is_zero()) c = c.is_zero() ? q : gcd_recursive(c, q);
    return c;
}

// ---------------------------------------------------------------------------
// Sound modular coprimality certificate.  For each variable occurring in both
// inputs we evaluate all other variables at a point mod a word-size prime and
// take a univariate gcd.  When neither image dropped degree, a constant image
// gcd proves the true gcd has degree 0 in that variable; degenerate
// evaluations only ever cause a retry or a fallback to the subresultant.

constexpr unsigned long kPrimes[] = {2147483647UL, 2147483629UL, 2147483587UL};

unsigned long pow_mod(unsigned long b, unsigned long e, unsigned long q) {
    unsigned long r = 1;
    b %= q;
    while (e) {
        if (e & 1) r = r * b % q;
        b = b * b % q;
        e >>= 1;
    }
    return r;
}

// image of p with x_k = T and x_j = pt[j] mod q;
// -1: no valid image (a coefficient denominator vanished mod q)
//  0: valid image but the leading coefficient in x_k dropped
//  1: faithful image (degree preserved)
int eval_mod(const MultiPoly& p, int k, const std::vector<unsigned long>& pt, unsigned long q,
             std::vector<unsigned long>& out) {
    out.assign(p.max_degree_in(k) + 1, 0);
    for (const auto& [u, c] : p.terms()) {
        unsigned long den = mpz_fdiv_ui(c.get_den().get_mpz_t(), q);
        if (den == 0) return -1;
        unsigned long num = mpz_fdiv_ui(c.get_num().get_mpz_t(), q);
        unsigned long v = num * pow_mod(den, q - 2, q) % q;
        for (size_t j = 0; j < u.size(); ++j)
            if ((int)j != k && u[j]) v = v * pow_mod(pt[j], u[j], q) % q;
        out[u[k]] = (out[u[k]] + v) % q;
    }
    return out.back() != 0 ? 1 : 0;
}

int gcd_degree_mod(std::vector<unsigned long> a, std::vector<unsigned long> b, unsigned long q) {
    auto deg = [](const std::vector<unsigned long>& f) {
        for (int i = (int)f.size() - 1; i >= 0; --i)
            if (f[i]) return i;
        return -1;
    };
    while (true) {
        int da = deg(a), db = deg(b);
        if (db < 0) return da;
        if (da < db) {
            std::swap(a, b);
            std::swap(da, db);
        }
        // a -= lc(a)/lc(b) * T^(da-db) * b
        unsigned long f = a[da] * pow_mod(b[db], q - 2, q) % q;
        for (int i = 0; i <= db; ++i) a[i + da - db] = (a[i + da - db] + q - f * b[i] % q) % q;
    }
}

bool certified_coprime(const MultiPoly& a, const MultiPoly& b) {
    int n = a.nvars();
    std::vector<unsigned long> ia, ib;
    for (int k = 0; k < n; ++k) {
        int da = a.max_degree_in(k), db = b.max_degree_in(k);
        if (da == 0 || db == 0) continue; // gcd is free of x_k already
        bool certified = false;
        for (int t = 0; t < 3 && !certified; ++t) {
            unsigned long q = kPrimes[t];
            std::vector<unsigned long> pt(n);
            for (int j = 0; j < n; ++j) pt[j] = (1234567UL + 890123UL * (j + 1) * (t + 1)) % (q - 1) + 1;
            int sa = eval_mod(a, k, pt, q, ia);
            int sb = eval_mod(b, k, pt, q, ib);
            if (sa < 0 || sb < 0) continue;  // no valid image mod this prime
            if (sa == 0 && sb == 0) continue; // a common divisor keeps its degree
                                              // only in a faithful image
            if (gcd_degree_mod(ia, ib, q) == 0) certified = true;
        }
        if (!certified) return false;
    }
    return true;
}

// gcd of a monomial with an arbitrary polynomial
MultiPoly monomial_gcd(const MultiPoly& mono, const MultiPoly& p) {
    ExpVec e = mono.terms().begin()->first;
    for (const auto& term : p.terms())
        for (size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], term.first[i]);
    Rational cm = rational_content(mono), cp = rational_content(p);
    Integer num, den;
    mpz_gcd(num.get_mpz_t(), cm.get_num().get_mpz_t(), cp.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), cm.get_den().get_mpz_t(), cp.get_den().get_mpz_t());
    return MultiPoly::monomial(p.nvars(), e, make_rational(num, den));
}

// both integer-coefficient; returns gcd up to sign, not content-normalized
MultiPoly gcd_recursive(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.term_count() == 1) return monomial_gcd(a, b);
    if (b.term_count() == 1) return monomial_gcd(b, a);
    if (a == b) return a;
    if (certified_coprime(a, b)) {
        Rational g = rational_content(a), h = rational_content(b);
        Integer num, den;
        mpz_gcd(num.get_mpz_t(), g.get_num().get_mpz_t(), h.get_num().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), g.get_den().get_mpz_t(), h.get_den().get_mpz_t());
        return MultiPoly::constant(a.nvars(), make_rational(num, den));
    }
    int k = main_variable(a, b);
    if (k < 0) {
        // two nonzero rationals
        Rational g = rational_content(a);
        Rational h = rational_content(b);
        Integer num;
        mpz_gcd(num.get_mpz_t(), g.get_num().get_mpz_t(), h.get_num().get_mpz_t());
        Integer den;
        mpz_lcm(den.get_mpz_t(), g.get_den().get_mpz_t(), h.get_den().get_mpz_t());
        return MultiPoly::constant(a.nvars(), make_rational(num, den));
    }
    auto fa = upoly_view(a, k), fb = upoly_view(b, k);
    MultiPoly ca = upoly_content(fa), cb = upoly_content(fb);
    for (auto& q : fa) q = q.divexact(ca);
    for (auto& q : fb) q = q.divexact(cb);
    MultiPoly cont = gcd_recursive(ca, cb);

    std::vector<MultiPoly>*f = &fa, *g = &fb;
    if (udeg(*f) < udeg(*g)) std::swap(f, g);

    // subresultant PRS
    MultiPoly gg = MultiPoly::constant(a.nvars(), 1);
    MultiPoly hh = MultiPoly::constant(a.nvars(), 1);
    std::vector<MultiPoly> r0 = *f, r1 = *g;
    while (udeg(r1) > 0) {
        int d = udeg(r0) - udeg(r1);
        std::vector<MultiPoly> rem = pseudo_rem(r0, r1);
        MultiPoly lead0 = r1[udeg(r1)];
        r0 = std::move(r1);
        MultiPoly divisor = gg * hh.pow(d);
        for (auto& c : rem) c = c.divexact(divisor);
        r1 = std::move(rem);
        gg = lead0;
        // h = g^d h^(1-d); unchanged when d = 0
        if (d == 1)
            hh = gg;
        else if (d > 1)
            hh = gg.pow(d).divexact(hh.pow(d - 1));
        if (udeg(r1) < 0) break;
    }
    MultiPoly body(a.nvars());
    if (udeg(r1) < 0) {
        // r0 is the gcd of the primitive parts (up to content in x_k)
        auto v = upoly_view(from_upoly(r0, k, a.nvars()), k);
        MultiPoly c = upoly_content(v);
        for (auto& q : v) q = q.divexact(c);
        body = from_upoly(v, k, a.nvars());
    } else {
        body = MultiPoly::constant(a.nvars(), 1); // coprime primitive parts
    }
    return cont * body;
}

MultiPoly sign_normalize(const MultiPoly& p) {
    if (p.is_zero()) return p;
    return p.leading_coeff() < 0 ? -p : p;
}

} // namespace

MultiPoly poly_gcd_with_content(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars()) throw StructuralError("nvars mismatch in gcd");
    if (a.is_zero() && b.is_zero()) throw StructuralError("gcd of two zero polynomials");
    if (a.is_zero()) return sign_normalize(b);
    if (b.is_zero()) return sign_normalize(a);
    // run the PRS on integer-primitive parts; rational contents rejoin at the end
    Rational ca = rational_content(a), cb = rational_content(b);
    MultiPoly g = gcd_recursive(a * (1 / ca), b * (1 / cb));
    Integer num, den;
    mpz_gcd(num.get_mpz_t(), ca.get_num().get_mpz_t(), cb.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), ca.get_den().get_mpz_t(), cb.get_den().get_mpz_t());
    return sign_normalize(g * make_rational(num, den));
}

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly g = poly_gcd_with_content(a, b);
    // strip the rational content
    Rational c = rational_content(g);
    return sign_normalize(g * (1 / c));
}

std::pair<MultiPoly, std::vector<MultiPoly>> content_primitive(const std::vector<MultiPoly>& coeffs) {
    if (coeffs.empty()) throw StructuralError("content of empty list");
    MultiPoly content(coeffs[0].nvars());
    bool all_zero = true;
    for (const auto& p : coeffs) {
        if (p.is_zero()) continue;
        all_zero = false;
        content = content.is_zero() ? sign_normalize(p) : poly_gcd_with_content(content, p);
    }
    if (all_zero) throw StructuralError("content of all-zero list");
    std::vector<MultiPoly> prim;
    prim.reserve(coeffs.size());
    for (const auto& p : coeffs) prim.push_back(p.divexact(content));
    return {content, prim};
}

std::string MultiPoly::str(const char* var_prefix) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // leading term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [u, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = !is_zero_vec(u);
        if (a != 1 || !has_vars) {
            os << to_string(a);
            if (has_vars) os << "*";
        }
        bool started = false;
        for (size_t i = 0; i < u.size(); ++i) {
            if (u[i] == 0) continue;
            if (started) os << "*";
            started = true;
            os << var_prefix << (i + 1);
            if (u[i] > 1) os << "^" << u[i];
        }
    }
    return os.str();
}

} // namespace dfsing
