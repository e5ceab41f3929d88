#pragma once

#include <string>
#include <vector>

#include "modinv/linalg.hpp"
#include "modinv/mpoly.hpp"

namespace modinv {

struct Limits {
    size_t max_dim = 64;
    size_t max_regular = 3125;  // cap on p^r for regular modules
};

// r generator matrices over F_p acting on F_p^n.
struct ModuleRep {
    uint32_t p = 2;
    int r = 1;
    size_t n = 0;
    std::vector<Mat> gens;
    bool commuting = false;
    std::string name;

    FieldPtr field() const { return GF::get(p); }
    static ModuleRep make(uint32_t p, std::vector<Mat> gens, std::string name = "", const Limits& lim = {});
    static ModuleRep make_zero(uint32_t p, int r, size_t n, std::string name = "");
};

struct Submodule {
    Subspace space;
    uint32_t p = 2;
    int r = 1;
    size_t n = 0;
    size_t dim() const { return space.dim(); }
};

struct FrameCertificate {
    std::string route;  // "commuting" or "expansion"
};

// Accepts iff theta^p = 0; throws InvalidFrame naming a witness monomial.
FrameCertificate validate_frame(const ModuleRep& m);
bool frame_commutes(const std::vector<Mat>& gens);

// Exponent vectors of the monomial basis of k[x_1..x_r]/(x_i^p), by degree
// then lexicographically descending (x_1 before x_2).
std::vector<std::vector<int>> monomial_basis(uint32_t p, int r);
ModuleRep regular_module(uint32_t p, int r, const Limits& lim = {});

Subspace radical_power(const ModuleRep& m, int s);
Subspace socle_power(const ModuleRep& m, int s);
int loewy_length(const ModuleRep& m);
ModuleRep rad_quotient(const ModuleRep& m, int s);
Submodule socle_submodule(const ModuleRep& m, int s);
Submodule radical_submodule(const ModuleRep& m, int s);
std::vector<Submodule> series(const ModuleRep& m, bool radical);
Submodule submodule_span(const ModuleRep& m, const std::vector<Vec>& vectors);
bool is_submodule(const ModuleRep& m, const Subspace& s);

// Induced frames on a submodule (basis = canonical RREF rows) and on a
// quotient (basis = standard vectors off the pivot positions).
ModuleRep restrict_to(const ModuleRep& m, const Subspace& s, std::string name = "");
ModuleRep quotient(const ModuleRep& m, const Subspace& s, std::string name = "");

ModuleRep dual_module(const ModuleRep& m);
ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);
// Y_i = sum_j g_{ji} X_j
ModuleRep change_of_generators(const ModuleRep& m, const Mat& g);
// u: polynomial in the generators, zero constant term, nonzero linear part
Mat pullback_ppoint(const ModuleRep& m, const MPoly& u);

// Catalogue of examples.
ModuleRep trivial_module(uint32_t p, int r, size_t n);
ModuleRep v_module(uint32_t p, int r);     // x_i v_j = delta_ij v_{r+1}
ModuleRep soc2_module(uint32_t p, int r);  // Soc_2 of the regular module
ModuleRep mr2_module(uint32_t p, int r);   // k v_r + Soc_2 inside the regular module
ModuleRep hmod_module(uint32_t p, int r);  // Rad / Soc of the regular module
ModuleRep heisenberg3(uint32_t p);
ModuleRep rad_module(uint32_t p, int r, int s);
ModuleRep mn_module(uint32_t p, int n);    // U/Rad^n for r = 2
ModuleRep m3xy_module(uint32_t p);         // (U/Rad^3) / k xy for r = 2

// "name:key=val,key=val"; an extra dual=1 dualizes any entry
ModuleRep zoo(const std::string& spec, const Limits& lim = {});
std::vector<std::string> zoo_names();
std::vector<std::string> zoo_catalog(uint32_t p);

// On-disk JSON: {"dim","generators","p","r"} with sorted keys.
std::string module_to_json(const ModuleRep& m);
ModuleRep module_from_json(const std::string& text, const Limits& lim = {});
ModuleRep load_module(const std::string& path, const Limits& lim = {});
void save_module(const ModuleRep& m, const std::string& path);

}  // namespace modinv
