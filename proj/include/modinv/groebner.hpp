#pragma once

#include <functional>
#include <string>
#include <vector>

#include "modinv/mpoly.hpp"

namespace modinv {

struct GroebnerOptions {
    size_t pair_budget = 200000;
};

// Reduced Groebner basis in graded reverse lexicographic order.
struct GroebnerBasis {
    uint32_t p = 2;
    int nv = 0;
    std::vector<MPoly> basis;  // monic, sorted by leading monomial ascending
    size_t pairs_processed = 0;
    bool complete = true;      // false when stopped early by a predicate
};

// stop: optional predicate on the current (partial) basis; returning true
// ends the computation early with complete = false.
GroebnerBasis buchberger(const std::vector<MPoly>& gens, const GroebnerOptions& opt = {},
                         const std::function<bool(const std::vector<MPoly>&)>& stop = {});
MPoly normal_form(const MPoly& f, const GroebnerBasis& g);
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& g);
bool ideal_member(const MPoly& f, const GroebnerBasis& g);

// f in sqrt(I), decided by 1 in I + (1 - z f).
bool radical_membership(const MPoly& f, const std::vector<MPoly>& ideal, const GroebnerOptions& opt = {});

struct EmptinessCertificate {
    bool empty = false;
    std::string route;                // "r1", "gcd" or "groebner"
    MPoly gcd;                        // gcd route
    std::vector<int> pure_powers;     // groebner route: degree of t_i^k found, -1 if none
    size_t pairs = 0;
    std::string describe() const;
};

// Is the common zero locus of homogeneous generators in P^{r-1} empty?
EmptinessCertificate projective_zero_empty(const std::vector<MPoly>& gens, const GroebnerOptions& opt = {});

}  // namespace modinv
