#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modinv/field.hpp"

namespace modinv {

// Packed monomial: byte i holds the exponent of variable i.
using Mono = uint64_t;
constexpr int kMaxVars = 7;
constexpr int kMaxExp = 127;
constexpr int kMaxDeg = 255;

inline int mono_exp(Mono m, int i) { return static_cast<int>((m >> (8 * i)) & 0xff); }
inline Mono mono_var(int i, int e = 1) { return static_cast<Mono>(e) << (8 * i); }
inline int mono_deg(Mono m) {
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) d += mono_exp(m, i);
    return d;
}
inline bool mono_divides(Mono a, Mono b) {
    constexpr uint64_t H = 0x8080808080808080ULL;
    return (((b | H) - a) & H) == H;
}
Mono mono_lcm(Mono a, Mono b);
Mono mono_mul(Mono a, Mono b);  // checks exponent bounds
// grevlex sort key for nv variables: larger key = larger monomial
uint64_t grevlex_key(Mono m, int nv);
// graded lex comparison: >0 if a > b
int grlex_cmp(Mono a, Mono b, int nv);

struct Term {
    Mono m;
    uint64_t key;
    uint32_t c;
};

struct Homogeneity {
    enum Kind { Zero, Homogeneous, Inhomogeneous } kind;
    int degree;  // valid for Homogeneous
};

// Sparse polynomial over F_p in nv variables; terms sorted by grevlex
// descending, no zero coefficients.
class MPoly {
public:
    MPoly() : p_(2), nv_(0) {}
    MPoly(uint32_t p, int nv);

    static MPoly constant(uint32_t p, int nv, long long c);
    static MPoly var(uint32_t p, int nv, int i);
    static MPoly monomial(uint32_t p, int nv, Mono m, uint32_t c);
    static MPoly from_terms(uint32_t p, int nv, std::vector<std::pair<Mono, uint32_t>> t);

    uint32_t p() const { return p_; }
    int nvars() const { return nv_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m == 0); }
    size_t nterms() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }
    const Term& lead() const { return t_.front(); }  // grevlex
    Term lead_grlex() const;
    int total_degree() const;
    int degree_in(int var) const;
    Homogeneity homogeneity() const;
    uint32_t coeff(Mono m) const;

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator-() const;
    MPoly scale(uint32_t c) const;
    MPoly mul_term(Mono m, uint32_t c) const;
    MPoly& operator+=(const MPoly& o) { *this = *this + o; return *this; }
    MPoly& operator-=(const MPoly& o) { *this = *this - o; return *this; }
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }
    MPoly pow(int k) const;

    // f - c*m*g, the workhorse of reductions
    MPoly sub_mul(Mono m, uint32_t c, const MPoly& g) const;

    GF::Elem eval(const GF& F, const std::vector<GF::Elem>& pt) const;
    MPoly substitute(const std::vector<MPoly>& vals) const;
    MPoly monic() const;  // leading coefficient 1 in graded lex
    MPoly with_nvars(int nv) const;
    MPoly dehomogenize(int var) const;       // set var := 1
    MPoly homogenize(int var, int deg) const;  // inverse, padding with var
    std::vector<MPoly> coeffs_in(int var) const;
    static MPoly from_coeffs_in(const std::vector<MPoly>& c, int var, uint32_t p, int nv);

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void check_compat(const MPoly& o) const;
    void normalize_sorted();

    uint32_t p_;
    int nv_;
    std::vector<Term> t_;
};

std::vector<std::string> default_var_names(int nv);

// Parses sums of terms like "2*t1^2*t3 - t2" (variables t1..t_nv); throws Parse.
MPoly parse_poly(const std::string& text, uint32_t p, int nv);

// exact quotient f / g; throws Divisibility when g does not divide f
MPoly divexact(const MPoly& f, const MPoly& g);
bool divides(const MPoly& g, const MPoly& f, MPoly* quotient = nullptr);

// gcd normalized monic in graded lex order
MPoly gcd(const MPoly& f, const MPoly& g);
MPoly gcd(const std::vector<MPoly>& fs);

}  // namespace modinv
