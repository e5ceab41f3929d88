#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "modinv/errors.hpp"

namespace modinv {

constexpr uint32_t kMaxPrime = 31;
constexpr uint32_t kMaxExtDegree = 6;

bool is_prime(uint32_t n);

// Elements of F_p are plain residues.  Elements of F_{p^e} are encoded as
// base-p integers c_0 + c_1 p + ... + c_{e-1} p^{e-1}, where c_k is the
// coefficient of w^k and w is a root of the stored modulus.  F_p embeds as
// the encodings 0..p-1, so base-field code never needs to convert.
class GF {
public:
    using Elem = uint32_t;

    static std::shared_ptr<const GF> get(uint32_t p, uint32_t e = 1);

    uint32_t p() const { return p_; }
    uint32_t e() const { return e_; }
    uint32_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long long v) const;

    Elem add(Elem a, Elem b) const {
        if (e_ == 1) {
            uint32_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        return add_ext(a, b);
    }
    Elem sub(Elem a, Elem b) const {
        if (e_ == 1) return a >= b ? a - b : a + p_ - b;
        return add_ext(a, neg(b));
    }
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const {
        if (e_ == 1) return (a * b) % p_;
        return mul_ext(a, b);
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, uint64_t k) const;

    bool in_base(Elem a) const { return a < p_; }
    std::vector<uint32_t> coords(Elem a) const;
    Elem from_coords(const std::vector<uint32_t>& c) const;
    Elem random(std::mt19937_64& rng) const;
    std::string to_string(Elem a) const;

    GF(uint32_t p, uint32_t e);

private:
    Elem add_ext(Elem a, Elem b) const;
    Elem mul_ext(Elem a, Elem b) const;
    Elem mul_poly(Elem a, Elem b) const;

    uint32_t p_, e_, q_;
    std::vector<uint32_t> modulus_;  // monic, low to high, size e+1
    std::vector<uint32_t> pw_;       // p^k
    std::vector<uint32_t> inv_base_;
    bool tables_ = false;
    std::vector<uint32_t> log_, exp_;
};

using FieldPtr = std::shared_ptr<const GF>;

// Scalar helpers on F_p.
inline uint32_t fp_add(uint32_t a, uint32_t b, uint32_t p) { uint32_t s = a + b; return s >= p ? s - p : s; }
inline uint32_t fp_sub(uint32_t a, uint32_t b, uint32_t p) { return a >= b ? a - b : a + p - b; }
inline uint32_t fp_mul(uint32_t a, uint32_t b, uint32_t p) { return (a * b) % p; }
inline uint32_t fp_neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }
uint32_t fp_inv(uint32_t a, uint32_t p);
uint32_t fp_from_int(long long v, uint32_t p);

// Dense univariate polynomials over F_p, low degree first, no trailing zeros.
using UPoly = std::vector<uint32_t>;

void upoly_trim(UPoly& f);
int upoly_deg(const UPoly& f);
UPoly upoly_mul(const UPoly& a, const UPoly& b, uint32_t p);
UPoly upoly_sub(const UPoly& a, const UPoly& b, uint32_t p);
void upoly_divmod(const UPoly& a, const UPoly& b, uint32_t p, UPoly& q, UPoly& r);
UPoly upoly_mod(const UPoly& a, const UPoly& b, uint32_t p);
UPoly upoly_gcd(UPoly a, UPoly b, uint32_t p);
UPoly upoly_monic(const UPoly& f, uint32_t p);
UPoly upoly_powmod(const UPoly& base, uint64_t k, const UPoly& m, uint32_t p);
bool upoly_irreducible(const UPoly& f, uint32_t p);

}  // namespace modinv
