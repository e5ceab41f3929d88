#pragma once

#include <vector>

#include "modinv/linalg.hpp"
#include "modinv/mpoly.hpp"

namespace modinv {

// Homogeneous polynomials of a common degree defining a map to P^m.
struct DefiningSystem {
    std::vector<MPoly> f;
    int degree = 0;
    bool reduced = false;

    static DefiningSystem make(std::vector<MPoly> f);
    uint32_t p() const { return f.front().p(); }
    int nvars() const { return f.front().nvars(); }
    size_t size() const { return f.size(); }
};

struct ReducedSystem {
    DefiningSystem system;
    MPoly divisor;
};

ReducedSystem reduce_defining_system(const DefiningSystem& s);
int degree_of_morphism(const DefiningSystem& s);
DefiningSystem compose_systems(const DefiningSystem& outer, const DefiningSystem& inner);
DefiningSystem line_restrict(const DefiningSystem& s, const std::vector<long long>& a, const std::vector<long long>& b);

// Scale so that the first nonzero entry is monic in graded lex order.
std::vector<MPoly> normalize_tuple(const std::vector<MPoly>& t);
bool proportional(const std::vector<MPoly>& a, const std::vector<MPoly>& b);

// Every monomial of degree d in nvars variables, graded lex descending.
DefiningSystem veronese(uint32_t p, int nvars, int d);
// (x:y) -> (xy : x^2 : -y^2 : -xy), the degree 2 map attached to sl(2)
DefiningSystem sl2_zeta(uint32_t p);

}  // namespace modinv
