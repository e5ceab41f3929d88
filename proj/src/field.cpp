#include "modinv/field.hpp"

#include <map>
#include <mutex>

namespace modinv {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DivisionByZero: return "division-by-zero";
        case ErrorCode::Dimension: return "dimension";
        case ErrorCode::Divisibility: return "divisibility";
        case ErrorCode::UndefinedGcd: return "undefined-gcd";
        case ErrorCode::Resource: return "resource";
        case ErrorCode::Index: return "index";
        case ErrorCode::Degeneracy: return "degeneracy";
        case ErrorCode::InvalidFrame: return "invalid-frame";
        case ErrorCode::Catalog: return "catalog";
        case ErrorCode::Compatibility: return "compatibility";
        case ErrorCode::Invertibility: return "invertibility";
        case ErrorCode::NotPPoint: return "not-a-p-point";
        case ErrorCode::Range: return "range";
        case ErrorCode::Parse: return "parse";
        case ErrorCode::Unsupported: return "unsupported-input";
        case ErrorCode::UndefinedSystem: return "undefined-system";
        case ErrorCode::ParityViolation: return "parity-violation";
        case ErrorCode::Internal: return "internal";
    }
    return "unknown";
}

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint32_t fp_inv(uint32_t a, uint32_t p) {
    if (a % p == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in F_" + std::to_string(p));
    long long t = 0, nt = 1, r = p, nr = a % p;
    while (nr) {
        long long qq = r / nr;
        t -= qq * nt; std::swap(t, nt);
        r -= qq * nr; std::swap(r, nr);
    }
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

uint32_t fp_from_int(long long v, uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<uint32_t>(r);
}

/* univariate helpers */

void upoly_trim(UPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int upoly_deg(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

UPoly upoly_mul(const UPoly& a, const UPoly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    UPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    upoly_trim(c);
    return c;
}

UPoly upoly_sub(const UPoly& a, const UPoly& b, uint32_t p) {
    UPoly c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] = fp_sub(c[i], b[i], p);
    upoly_trim(c);
    return c;
}

void upoly_divmod(const UPoly& a, const UPoly& b, uint32_t p, UPoly& q, UPoly& r) {
    if (b.empty()) fail(ErrorCode::DivisionByZero, "univariate division by zero");
    r = a;
    upoly_trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
    uint32_t li = fp_inv(b.back(), p);
    while (r.size() >= b.size()) {
        size_t shift = r.size() - b.size();
        uint32_t c = fp_mul(r.back(), li, p);
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            r[shift + i] = fp_sub(r[shift + i], fp_mul(c, b[i], p), p);
        upoly_trim(r);
    }
    upoly_trim(q);
}

UPoly upoly_mod(const UPoly& a, const UPoly& b, uint32_t p) {
    UPoly q, r;
    upoly_divmod(a, b, p, q, r);
    return r;
}

UPoly upoly_monic(const UPoly& f, uint32_t p) {
    if (f.empty()) return f;
    uint32_t li = fp_inv(f.back(), p);
    UPoly g(f);
    for (auto& c : g) c = fp_mul(c, li, p);
    return g;
}

UPoly upoly_gcd(UPoly a, UPoly b, uint32_t p) {
    upoly_trim(a);
    upoly_trim(b);
    while (!b.empty()) {
        UPoly r = upoly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return upoly_monic(a, p);
}

UPoly upoly_powmod(const UPoly& base, uint64_t k, const UPoly& m, uint32_t p) {
    UPoly result{1};
    UPoly b = upoly_mod(base, m, p);
    while (k) {
        if (k & 1) result = upoly_mod(upoly_mul(result, b, p), m, p);
        b = upoly_mod(upoly_mul(b, b, p), m, p);
        k >>= 1;
    }
    return result;
}

bool upoly_irreducible(const UPoly& f, uint32_t p) {
    int n = upoly_deg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    UPoly x{0, 1};
    // x^(p^n) == x mod f
    UPoly t = x;
    for (int i = 0; i < n; ++i) t = upoly_powmod(t, p, f, p);
    if (upoly_sub(t, x, p).size() != 0) return false;
    for (int l = 2; l <= n; ++l) {
        if (n % l != 0 || !is_prime(l)) continue;
        UPoly s = x;
        for (int i = 0; i < n / l; ++i) s = upoly_powmod(s, p, f, p);
        UPoly g = upoly_gcd(upoly_sub(s, x, p), f, p);
        if (upoly_deg(g) > 0) return false;
    }
    return true;
}

/* GF */

GF::GF(uint32_t p, uint32_t e) : p_(p), e_(e) {
    if (!is_prime(p) || p > kMaxPrime)
        fail(ErrorCode::Range, "field characteristic must be a prime <= " + std::to_string(kMaxPrime));
    if (e < 1 || e > kMaxExtDegree)
        fail(ErrorCode::Range, "extension degree must be in 1.." + std::to_string(kMaxExtDegree));
    pw_.resize(e + 1);
    pw_[0] = 1;
    for (uint32_t k = 1; k <= e; ++k) pw_[k] = pw_[k - 1] * p;
    q_ = pw_[e];
    inv_base_.assign(p, 0);
    for (uint32_t a = 1; a < p; ++a) inv_base_[a] = fp_inv(a, p);
    if (e == 1) {
        modulus_ = {0, 1};
        return;
    }
    // First monic irreducible of degree e, constant coefficients counted up.
    for (uint32_t code = 0; code < q_; ++code) {
        UPoly f(e + 1);
        uint32_t c = code;
        for (uint32_t k = 0; k < e; ++k) { f[k] = c % p; c /= p; }
        f[e] = 1;
        if (f[0] != 0 && upoly_irreducible(f, p)) { modulus_ = f; break; }
    }
    if (modulus_.empty()) fail(ErrorCode::Internal, "no irreducible modulus found");
    if (q_ <= (1u << 20)) {
        // find a generator of the multiplicative group and tabulate
        std::vector<uint32_t> primes;
        uint32_t m = q_ - 1;
        for (uint32_t d = 2; d * d <= m; ++d)
            if (m % d == 0) { primes.push_back(d); while (m % d == 0) m /= d; }
        if (m > 1) primes.push_back(m);
        auto pw = [&](uint32_t a, uint64_t k) {
            uint32_t r = 1;
            while (k) { if (k & 1) r = mul_poly(r, a); a = mul_poly(a, a); k >>= 1; }
            return r;
        };
        uint32_t g = 0;
        for (uint32_t cand = 2; cand < q_; ++cand) {
            bool ok = true;
            for (uint32_t l : primes) if (pw(cand, (q_ - 1) / l) == 1) { ok = false; break; }
            if (ok) { g = cand; break; }
        }
        exp_.resize(2 * (q_ - 1));
        log_.assign(q_, 0);
        uint32_t x = 1;
        for (uint32_t k = 0; k < q_ - 1; ++k) {
            exp_[k] = x;
            exp_[k + q_ - 1] = x;
            log_[x] = k;
            x = mul_poly(x, g);
        }
        tables_ = true;
    }
}

std::shared_ptr<const GF> GF::get(uint32_t p, uint32_t e) {
    static std::mutex mu;
    static std::map<std::pair<uint32_t, uint32_t>, std::shared_ptr<const GF>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<const GF>(p, e);
    cache.emplace(key, f);
    return f;
}

GF::Elem GF::from_int(long long v) const { return fp_from_int(v, p_); }

GF::Elem GF::add_ext(Elem a, Elem b) const {
    Elem r = 0;
    for (uint32_t k = 0; k < e_; ++k) {
        uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        r += s * pw_[k];
        a /= p_;
        b /= p_;
    }
    return r;
}

GF::Elem GF::neg(Elem a) const {
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    Elem r = 0;
    for (uint32_t k = 0; k < e_; ++k) {
        uint32_t c = a % p_;
        r += (c == 0 ? 0 : p_ - c) * pw_[k];
        a /= p_;
    }
    return r;
}

GF::Elem GF::mul_poly(Elem a, Elem b) const {
    uint32_t ca[kMaxExtDegree], cb[kMaxExtDegree], prod[2 * kMaxExtDegree] = {0};
    for (uint32_t k = 0; k < e_; ++k) { ca[k] = a % p_; a /= p_; cb[k] = b % p_; b /= p_; }
    for (uint32_t i = 0; i < e_; ++i)
        if (ca[i])
            for (uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    for (int d = 2 * static_cast<int>(e_) - 2; d >= static_cast<int>(e_); --d) {
        uint32_t c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (uint32_t k = 0; k < e_; ++k)
            prod[d - e_ + k] = fp_sub(prod[d - e_ + k], fp_mul(c, modulus_[k], p_), p_);
    }
    Elem r = 0;
    for (uint32_t k = 0; k < e_; ++k) r += prod[k] * pw_[k];
    return r;
}

GF::Elem GF::mul_ext(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (tables_) return exp_[log_[a] + log_[b]];
    return mul_poly(a, b);
}

GF::Elem GF::inv(Elem a) const {
    if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in field of order " + std::to_string(q_));
    if (e_ == 1) return inv_base_[a];
    if (tables_) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, q_ - 2);
}

GF::Elem GF::pow(Elem a, uint64_t k) const {
    Elem r = 1;
    while (k) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

std::vector<uint32_t> GF::coords(Elem a) const {
    std::vector<uint32_t> c(e_);
    for (uint32_t k = 0; k < e_; ++k) { c[k] = a % p_; a /= p_; }
    return c;
}

GF::Elem GF::from_coords(const std::vector<uint32_t>& c) const {
    Elem r = 0;
    for (uint32_t k = 0; k < e_ && k < c.size(); ++k) r += (c[k] % p_) * pw_[k];
    return r;
}

GF::Elem GF::random(std::mt19937_64& rng) const {
    return static_cast<Elem>(rng() % q_);
}

std::string GF::to_string(Elem a) const {
    if (e_ == 1) return std::to_string(a);
    std::string s;
    auto c = coords(a);
    for (int k = static_cast<int>(e_) - 1; k >= 0; --k) {
        if (!c[k]) continue;
        if (!s.empty()) s += "+";
        if (k == 0 || c[k] != 1) s += std::to_string(c[k]);
        if (k >= 1) s += "w";
        if (k >= 2) s += "^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

}  // namespace modinv
