#include "modinv/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace modinv {

Mono mono_lcm(Mono a, Mono b) {
    Mono r = 0;
    for (int i = 0; i < kMaxVars; ++i) r |= mono_var(i, std::max(mono_exp(a, i), mono_exp(b, i)));
    return r;
}

Mono mono_mul(Mono a, Mono b) {
    int deg = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        int e = mono_exp(a, i) + mono_exp(b, i);
        if (e > kMaxExp) fail(ErrorCode::Resource, "monomial exponent overflow");
        deg += e;
    }
    if (deg > kMaxDeg) fail(ErrorCode::Resource, "monomial degree overflow");
    return a + b;
}

uint64_t grevlex_key(Mono m, int nv) {
    uint64_t key = static_cast<uint64_t>(mono_deg(m)) << 56;
    for (int k = 0; k < nv; ++k) {
        int i = nv - 1 - k;
        key |= static_cast<uint64_t>(kMaxExp - mono_exp(m, i)) << (8 * (6 - k));
    }
    return key;
}

int grlex_cmp(Mono a, Mono b, int nv) {
    int da = mono_deg(a), db = mono_deg(b);
    if (da != db) return da > db ? 1 : -1;
    for (int i = 0; i < nv; ++i) {
        int ea = mono_exp(a, i), eb = mono_exp(b, i);
        if (ea != eb) return ea > eb ? 1 : -1;
    }
    return 0;
}

std::vector<std::string> default_var_names(int nv) {
    std::vector<std::string> n;
    for (int i = 0; i < nv; ++i) n.push_back("t" + std::to_string(i + 1));
    return n;
}

MPoly::MPoly(uint32_t p, int nv) : p_(p), nv_(nv) {
    if (nv < 0 || nv > kMaxVars) fail(ErrorCode::Dimension, "variable count out of range");
}

MPoly MPoly::constant(uint32_t p, int nv, long long c) {
    MPoly f(p, nv);
    uint32_t v = fp_from_int(c, p);
    if (v) f.t_.push_back({0, grevlex_key(0, nv), v});
    return f;
}

MPoly MPoly::var(uint32_t p, int nv, int i) {
    if (i < 0 || i >= nv) fail(ErrorCode::Index, "variable index out of range");
    return monomial(p, nv, mono_var(i), 1);
}

MPoly MPoly::monomial(uint32_t p, int nv, Mono m, uint32_t c) {
    MPoly f(p, nv);
    c %= p;
    if (c) f.t_.push_back({m, grevlex_key(m, nv), c});
    return f;
}

MPoly MPoly::from_terms(uint32_t p, int nv, std::vector<std::pair<Mono, uint32_t>> t) {
    MPoly f(p, nv);
    f.t_.reserve(t.size());
    for (auto& [m, c] : t) f.t_.push_back({m, grevlex_key(m, nv), c % p});
    f.normalize_sorted();
    return f;
}

void MPoly::normalize_sorted() {
    std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return a.key > b.key; });
    size_t w = 0;
    for (size_t i = 0; i < t_.size();) {
        uint32_t c = 0;
        size_t j = i;
        while (j < t_.size() && t_[j].key == t_[i].key) { c = fp_add(c, t_[j].c, p_); ++j; }
        if (c) { t_[w] = t_[i]; t_[w].c = c; ++w; }
        i = j;
    }
    t_.resize(w);
}

void MPoly::check_compat(const MPoly& o) const {
    if (nv_ != o.nv_) fail(ErrorCode::Dimension, "mismatched variable counts");
    if (p_ != o.p_) fail(ErrorCode::Dimension, "mismatched moduli");
}

Term MPoly::lead_grlex() const {
    Term best = t_.front();
    for (const auto& t : t_)
        if (grlex_cmp(t.m, best.m, nv_) > 0) best = t;
    return best;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, mono_deg(t.m));
    return d;
}

int MPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, mono_exp(t.m, var));
    return d;
}

Homogeneity MPoly::homogeneity() const {
    if (t_.empty()) return {Homogeneity::Zero, -1};
    int d = mono_deg(t_.front().m);
    for (const auto& t : t_)
        if (mono_deg(t.m) != d) return {Homogeneity::Inhomogeneous, -1};
    return {Homogeneity::Homogeneous, d};
}

uint32_t MPoly::coeff(Mono m) const {
    for (const auto& t : t_)
        if (t.m == m) return t.c;
    return 0;
}

MPoly MPoly::operator+(const MPoly& o) const {
    check_compat(o);
    MPoly r(p_, nv_);
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        if (j == o.t_.size() || (i < t_.size() && t_[i].key > o.t_[j].key)) {
            r.t_.push_back(t_[i++]);
        } else if (i == t_.size() || o.t_[j].key > t_[i].key) {
            r.t_.push_back(o.t_[j++]);
        } else {
            uint32_t c = fp_add(t_[i].c, o.t_[j].c, p_);
            if (c) r.t_.push_back({t_[i].m, t_[i].key, c});
            ++i;
            ++j;
        }
    }
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r(*this);
    for (auto& t : r.t_) t.c = fp_neg(t.c, p_);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::scale(uint32_t c) const {
    c %= p_;
    MPoly r(p_, nv_);
    if (!c) return r;
    r.t_ = t_;
    for (auto& t : r.t_) t.c = fp_mul(t.c, c, p_);
    return r;
}

MPoly MPoly::mul_term(Mono m, uint32_t c) const {
    MPoly r(p_, nv_);
    c %= p_;
    if (!c) return r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) {
        Mono mm = mono_mul(t.m, m);
        r.t_.push_back({mm, grevlex_key(mm, nv_), fp_mul(t.c, c, p_)});
    }
    return r;
}

MPoly MPoly::sub_mul(Mono m, uint32_t c, const MPoly& g) const {
    return *this - g.mul_term(m, c);
}

MPoly MPoly::operator*(const MPoly& o) const {
    check_compat(o);
    MPoly r(p_, nv_);
    if (t_.empty() || o.t_.empty()) return r;
    if (t_.size() == 1) return o.mul_term(t_[0].m, t_[0].c);
    if (o.t_.size() == 1) return mul_term(o.t_[0].m, o.t_[0].c);
    r.t_.reserve(t_.size() * o.t_.size());
    for (const auto& a : t_)
        for (const auto& b : o.t_) {
            Mono mm = mono_mul(a.m, b.m);
            r.t_.push_back({mm, grevlex_key(mm, nv_), fp_mul(a.c, b.c, p_)});
        }
    r.normalize_sorted();
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    if (nv_ != o.nv_ || p_ != o.p_ || t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
    return true;
}

MPoly MPoly::pow(int k) const {
    MPoly r = constant(p_, nv_, 1), b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

GF::Elem MPoly::eval(const GF& F, const std::vector<GF::Elem>& pt) const {
    if (static_cast<int>(pt.size()) != nv_) fail(ErrorCode::Dimension, "evaluation point has wrong length");
    if (F.p() != p_) fail(ErrorCode::Dimension, "evaluation field has wrong characteristic");
    std::vector<std::vector<GF::Elem>> pw(nv_);
    for (int i = 0; i < nv_; ++i) {
        int d = degree_in(i);
        pw[i].assign(std::max(d, 0) + 1, 1);
        for (int k = 1; k <= d; ++k) pw[i][k] = F.mul(pw[i][k - 1], pt[i]);
    }
    GF::Elem s = 0;
    for (const auto& t : t_) {
        GF::Elem v = t.c;
        for (int i = 0; i < nv_; ++i) {
            int e = mono_exp(t.m, i);
            if (e) v = F.mul(v, pw[i][e]);
        }
        s = F.add(s, v);
    }
    return s;
}

MPoly MPoly::substitute(const std::vector<MPoly>& vals) const {
    if (static_cast<int>(vals.size()) != nv_) fail(ErrorCode::Dimension, "substitution arity mismatch");
    if (nv_ == 0) {
        fail(ErrorCode::Dimension, "substitution into a polynomial with no variables");
    }
    uint32_t p = vals[0].p();
    int nv = vals[0].nvars();
    for (const auto& v : vals)
        if (v.p() != p || v.nvars() != nv) fail(ErrorCode::Dimension, "substitution values disagree");
    std::vector<std::vector<MPoly>> pw(nv_);
    for (int i = 0; i < nv_; ++i) {
        int d = degree_in(i);
        pw[i].push_back(constant(p, nv, 1));
        for (int k = 1; k <= d; ++k) pw[i].push_back(pw[i].back() * vals[i]);
    }
    MPoly s(p, nv);
    for (const auto& t : t_) {
        MPoly v = constant(p, nv, t.c);
        for (int i = 0; i < nv_; ++i) {
            int e = mono_exp(t.m, i);
            if (e) v = v * pw[i][e];
        }
        s += v;
    }
    return s;
}

MPoly MPoly::monic() const {
    if (t_.empty()) return *this;
    uint32_t li = fp_inv(lead_grlex().c, p_);
    return scale(li);
}

MPoly MPoly::with_nvars(int nv) const {
    if (nv < nv_) {
        for (const auto& t : t_)
            for (int i = nv; i < nv_; ++i)
                if (mono_exp(t.m, i)) fail(ErrorCode::Dimension, "cannot drop a variable that occurs");
    }
    MPoly r(p_, nv);
    for (const auto& t : t_) r.t_.push_back({t.m, grevlex_key(t.m, nv), t.c});
    r.normalize_sorted();
    return r;
}

MPoly MPoly::dehomogenize(int var) const {
    MPoly r(p_, nv_);
    Mono mask = ~mono_var(var, 0xff);
    for (const auto& t : t_) {
        Mono m = t.m & mask;
        r.t_.push_back({m, grevlex_key(m, nv_), t.c});
    }
    r.normalize_sorted();
    return r;
}

MPoly MPoly::homogenize(int var, int deg) const {
    MPoly r(p_, nv_);
    for (const auto& t : t_) {
        int d = mono_deg(t.m);
        if (d > deg) fail(ErrorCode::Internal, "homogenize: degree too small");
        Mono m = mono_mul(t.m, mono_var(var, deg - d));
        r.t_.push_back({m, grevlex_key(m, nv_), t.c});
    }
    r.normalize_sorted();
    return r;
}

std::vector<MPoly> MPoly::coeffs_in(int var) const {
    int d = degree_in(var);
    std::vector<MPoly> c(std::max(d, -1) + 1, MPoly(p_, nv_));
    std::vector<std::vector<std::pair<Mono, uint32_t>>> buckets(c.size());
    Mono mask = ~mono_var(var, 0xff);
    for (const auto& t : t_) buckets[mono_exp(t.m, var)].push_back({t.m & mask, t.c});
    for (size_t k = 0; k < c.size(); ++k) c[k] = from_terms(p_, nv_, std::move(buckets[k]));
    return c;
}

MPoly MPoly::from_coeffs_in(const std::vector<MPoly>& c, int var, uint32_t p, int nv) {
    MPoly r(p, nv);
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        r += c[k].mul_term(mono_var(var, static_cast<int>(k)), 1);
    }
    return r;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
    auto nm = names.empty() ? default_var_names(nv_) : names;
    if (t_.empty()) return "0";
    // print in graded lex descending for readability
    std::vector<Term> ts = t_;
    std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) { return grlex_cmp(a.m, b.m, nv_) > 0; });
    std::string s;
    for (const auto& t : ts) {
        if (!s.empty()) s += " + ";
        std::string mon;
        for (int i = 0; i < nv_; ++i) {
            int e = mono_exp(t.m, i);
            if (!e) continue;
            if (!mon.empty()) mon += "*";
            mon += nm[i];
            if (e > 1) mon += "^" + std::to_string(e);
        }
        if (mon.empty()) s += std::to_string(t.c);
        else if (t.c == 1) s += mon;
        else s += std::to_string(t.c) + "*" + mon;
    }
    return s;
}

bool divides(const MPoly& g, const MPoly& f, MPoly* quotient) {
    if (g.is_zero()) fail(ErrorCode::DivisionByZero, "division by the zero polynomial");
    if (g.p() != f.p() || g.nvars() != f.nvars()) fail(ErrorCode::Dimension, "mismatched rings in division");
    MPoly r = f, q(f.p(), f.nvars());
    const Term& lg = g.lead();
    uint32_t li = fp_inv(lg.c, f.p());
    std::vector<std::pair<Mono, uint32_t>> qt;
    while (!r.is_zero()) {
        const Term& lr = r.lead();
        if (!mono_divides(lg.m, lr.m)) return false;
        Mono m = lr.m - lg.m;
        uint32_t c = fp_mul(lr.c, li, f.p());
        qt.push_back({m, c});
        r = r.sub_mul(m, c, g);
    }
    if (quotient) *quotient = MPoly::from_terms(f.p(), f.nvars(), std::move(qt));
    return true;
}

MPoly divexact(const MPoly& f, const MPoly& g) {
    MPoly q;
    if (!divides(g, f, &q)) fail(ErrorCode::Divisibility, "polynomial division is not exact");
    return q;
}

namespace {

int highest_var(const MPoly& f) {
    int v = -1;
    for (const auto& t : f.terms())
        for (int i = f.nvars() - 1; i > v; --i)
            if (mono_exp(t.m, i)) { v = i; break; }
    return v;
}

UPoly to_upoly(const MPoly& f, int var) {
    UPoly u(std::max(f.degree_in(var), 0) + 1, 0);
    for (const auto& t : f.terms()) u[mono_exp(t.m, var)] = t.c;
    upoly_trim(u);
    return u;
}

MPoly from_upoly(const UPoly& u, int var, uint32_t p, int nv) {
    std::vector<std::pair<Mono, uint32_t>> t;
    for (size_t k = 0; k < u.size(); ++k)
        if (u[k]) t.push_back({mono_var(var, static_cast<int>(k)), u[k]});
    return MPoly::from_terms(p, nv, std::move(t));
}

MPoly gcd_rec(const MPoly& f, const MPoly& g);

MPoly content_in(const std::vector<MPoly>& coeffs) {
    std::vector<MPoly> nz;
    for (const auto& c : coeffs)
        if (!c.is_zero()) nz.push_back(c);
    MPoly c = nz.front();
    for (size_t i = 1; i < nz.size() && !c.is_constant(); ++i) c = gcd_rec(c, nz[i]);
    return c.monic();
}

void trim(std::vector<MPoly>& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

std::vector<MPoly> primitive(std::vector<MPoly> a) {
    MPoly c = content_in(a);
    if (!c.is_constant())
        for (auto& x : a)
            if (!x.is_zero()) x = divexact(x, c);
    return a;
}

// gcd of non-zero polynomials, recursive primitive PRS in the highest variable
MPoly gcd_rec(const MPoly& f, const MPoly& g) {
    uint32_t p = f.p();
    int nv = f.nvars();
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f.is_constant() || g.is_constant()) return MPoly::constant(p, nv, 1);
    int vf = highest_var(f), vg = highest_var(g);
    int v = std::max(vf, vg);
    if (vf != vg) {
        const MPoly& has = vf > vg ? f : g;
        const MPoly& other = vf > vg ? g : f;
        return gcd_rec(content_in(has.coeffs_in(v)), other).monic();
    }
    // univariate shortcut
    bool uni = true;
    for (const MPoly* h : {&f, &g})
        for (const auto& t : h->terms())
            if (t.m != 0 && t.m != mono_var(v, mono_exp(t.m, v))) uni = false;
    if (uni) return from_upoly(upoly_gcd(to_upoly(f, v), to_upoly(g, v), p), v, p, nv);

    auto A = f.coeffs_in(v), B = g.coeffs_in(v);
    MPoly ca = content_in(A), cb = content_in(B);
    MPoly c = gcd_rec(ca, cb);
    A = primitive(A);
    B = primitive(B);
    if (A.size() < B.size()) std::swap(A, B);
    while (true) {
        if (B.size() == 1) { B = {MPoly::constant(p, nv, 1)}; break; }
        // pseudo remainder of A by B
        std::vector<MPoly> R = A;
        const MPoly& lb = B.back();
        while (R.size() >= B.size()) {
            MPoly lr = R.back();
            size_t shift = R.size() - B.size();
            for (auto& x : R) x = x * lb;
            for (size_t i = 0; i < B.size(); ++i) R[shift + i] = R[shift + i] - lr * B[i];
            trim(R);
        }
        if (R.empty()) break;
        A = std::move(B);
        B = primitive(R);
    }
    MPoly h = MPoly::from_coeffs_in(primitive(B), v, p, nv);
    return (c * h).monic();
}

int min_exp(const MPoly& f, int var) {
    int m = kMaxExp;
    for (const auto& t : f.terms()) m = std::min(m, mono_exp(t.m, var));
    return m;
}

MPoly strip_var(const MPoly& f, int var, int e) {
    if (e == 0) return f;
    return divexact(f, MPoly::monomial(f.p(), f.nvars(), mono_var(var, e), 1));
}

}  // namespace

MPoly gcd(const MPoly& f, const MPoly& g) {
    if (f.is_zero() && g.is_zero()) fail(ErrorCode::UndefinedGcd, "gcd of zero polynomials");
    if (f.p() != g.p() || f.nvars() != g.nvars()) fail(ErrorCode::Dimension, "mismatched rings in gcd");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    auto hf = f.homogeneity(), hg = g.homogeneity();
    if (f.nvars() >= 2 && hf.kind == Homogeneity::Homogeneous && hg.kind == Homogeneity::Homogeneous) {
        // pull out the power of the first variable, dehomogenize, rehomogenize
        int a = min_exp(f, 0), b = min_exp(g, 0);
        MPoly f1 = strip_var(f, 0, a).dehomogenize(0);
        MPoly g1 = strip_var(g, 0, b).dehomogenize(0);
        MPoly h = gcd_rec(f1, g1);
        h = h.homogenize(0, std::max(h.total_degree(), 0));
        return (h * MPoly::monomial(f.p(), f.nvars(), mono_var(0, std::min(a, b)), 1)).monic();
    }
    return gcd_rec(f, g);
}

MPoly gcd(const std::vector<MPoly>& fs) {
    MPoly h;
    bool have = false;
    for (const auto& f : fs) {
        if (f.is_zero()) continue;
        if (!have) { h = f.monic(); have = true; continue; }
        h = gcd(h, f);
        if (h.is_constant()) break;
    }
    if (!have) fail(ErrorCode::UndefinedGcd, "gcd of an all-zero list");
    return h;
}

}  // namespace modinv

namespace modinv {

MPoly parse_poly(const std::string& text, uint32_t p, int nv) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) fail(ErrorCode::Parse, "empty polynomial");
    size_t i = 0;
    auto number = [&]() -> long long {
        size_t st = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (st == i) fail(ErrorCode::Parse, "expected a number at position " + std::to_string(st) + " in '" + text + "'");
        return std::stoll(s.substr(st, i - st));
    };
    MPoly out(p, nv);
    while (i < s.size()) {
        long long sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        } else if (i > 0) {
            fail(ErrorCode::Parse, "expected + or - at position " + std::to_string(i) + " in '" + text + "'");
        }
        long long coef = 1;
        Mono m = 0;
        while (true) {
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                coef *= number() % static_cast<long long>(p);
            } else if (i < s.size() && (s[i] == 't' || s[i] == 'x')) {
                ++i;
                long long v = number();
                if (v < 1 || v > nv) fail(ErrorCode::Parse, "variable index out of range in '" + text + "'");
                long long e = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    e = number();
                }
                if (e > kMaxExp) fail(ErrorCode::Parse, "exponent too large in '" + text + "'");
                m = mono_mul(m, mono_var(static_cast<int>(v - 1), static_cast<int>(e)));
            } else {
                fail(ErrorCode::Parse, "unexpected character at position " + std::to_string(i) + " in '" + text + "'");
            }
            if (i < s.size() && s[i] == '*') { ++i; continue; }
            break;
        }
        uint32_t c = fp_from_int(sign * coef, p);
        if (c) out += MPoly::monomial(p, nv, m, c);
    }
    return out;
}

}  // namespace modinv
