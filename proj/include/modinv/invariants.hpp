#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modinv/groebner.hpp"
#include "modinv/linalg.hpp"
#include "modinv/modrep.hpp"

namespace modinv {

struct InvariantOptions {
    uint32_t max_ext = 3;              // witness and sampling fields F_{p^e}, e <= max_ext
    size_t groebner_budget = 200000;   // S-pairs per Groebner run
    double minor_budget = 20000;       // minors per block for full ideals and chart tuples
    size_t point_budget = 20000;       // points per field in witness searches
    size_t selfdual_max_dim = 32;
    size_t selfdual_enum_budget = 1 << 16;
    size_t selfdual_random_trials = 24;
    size_t kernel_max_dim = 12;
    bool degrees = true;               // report: compute j-degrees
    bool kernel = true;                // report: compute the generic kernel when applicable
    uint64_t seed = 0x5eed;
};

enum class Tri { Yes, No, Undet };
std::string tri_name(Tri t);  // "yes", "no", "undet"

// A point of P^{r-1} over F_{p^e}.
struct Point {
    uint32_t e = 1;
    Vec coords;
    std::string to_string() const;
};

Mat operator_at(const ModuleRep& m, FieldPtr F, const Vec& point);
size_t rank_at_point(const ModuleRep& m, int j, FieldPtr F, const Vec& point);
size_t rank_at_point(const ModuleRep& m, int j, const std::vector<long long>& point);
Subspace image_at(const ModuleRep& m, int j, FieldPtr F, const Vec& point);
size_t generic_jrank(const ModuleRep& m, int j);

struct Constancy {
    Tri constant = Tri::Undet;
    size_t generic_rank = 0;
    std::string route;  // "rank0", "r1", "gcd", "groebner", "witness", "groebner-nonempty"
    std::optional<Point> witness;
    std::string reason;  // why undetermined
};
Constancy constant_jrank_certify(const ModuleRep& m, int j, const InvariantOptions& opt = {});

struct JordanType {
    std::vector<size_t> a;  // a[i-1] = number of blocks of size i, i = 1..p
    std::string to_string() const;   // "a1:a2:...:ap"
    std::string pretty() const;      // "2[2]+1[3]"
    bool operator==(const JordanType& o) const { return a == o.a; }
};
// ranks[k] = rank of the k-th power, k = 0..p (ranks[0] = n)
JordanType jordan_from_ranks(const std::vector<size_t>& ranks);
JordanType jordan_type_of(const Mat& A, uint32_t p);
JordanType jordan_type_at(const ModuleRep& m, FieldPtr F, const Vec& point);
JordanType jordan_type_at(const ModuleRep& m, const MPoly& u);
JordanType generic_jordan_type(const ModuleRep& m);

struct Degree {
    bool determined = false;
    int value = 0;
    size_t rank = 0;
    std::string route;   // "rank0", "minors", "hermite"
    IndexSet chart;      // global column set
    IndexSet chart2;
    int divisor_degree = 0;
    std::string reason;
};
Degree jdegree(const ModuleRep& m, int j, const InvariantOptions& opt = {});

// Full chart minor tuple over all row subsets (lexicographic), divided by
// its gcd and normalized.  Small modules only.
std::vector<MPoly> reduced_chart_tuple(const ModuleRep& m, int j, double budget = 20000);
// Chart minor tuples of the connected blocks of theta^j (blocks of generic
// rank 0 are skipped); the full tuple is their product up to sign.
std::vector<std::vector<MPoly>> block_chart_tuples(const ModuleRep& m, int j, double budget = 20000);

struct PropertyResult {
    std::vector<Tri> per_j;  // index j-1
    Tri overall = Tri::Undet;
};
// Uses constancy results when supplied (index j-1), otherwise certifies.
PropertyResult eip_test(const ModuleRep& m, const InvariantOptions& opt = {}, const std::vector<Constancy>* cons = nullptr);
PropertyResult ekp_test(const ModuleRep& m, const InvariantOptions& opt = {}, const std::vector<Constancy>* cons = nullptr);
// im X_1 = im X_2 for modules of constant 1-rank with r >= 2
bool eip_fast_path(const ModuleRep& m);

struct GenericKernel {
    Submodule kernel;
    std::string tag;  // "verified" or "unverified-greedy"
    size_t codim = 0;
    int degree1 = 0;
};
GenericKernel generic_kernel(const ModuleRep& m, const InvariantOptions& opt = {});

// Basis of {P : Y_i P = P X_i} with P : a -> b.
std::vector<Mat> hom_space(const ModuleRep& a, const ModuleRep& b);

struct SelfDual {
    Tri status = Tri::Undet;
    std::string route;  // "invariants", "hom-zero", "random", "enumeration", "generic-det", "budget"
    size_t hom_dim = 0;
    std::optional<Mat> iso;
};
SelfDual self_dual_test(const ModuleRep& m, const InvariantOptions& opt = {});

struct InvariantReport {
    std::string name;
    uint32_t p = 2;
    int r = 1;
    size_t n = 0;
    std::vector<size_t> ranks;          // rk^j, j = 1..p-1
    std::vector<Constancy> constancy;   // j = 1..p-1
    std::vector<Degree> degrees;        // j = 1..p-1
    JordanType jordan;
    Tri constant_jordan = Tri::Undet;
    PropertyResult eip, ekp;
    SelfDual self_dual;
    std::optional<GenericKernel> kernel;  // empty when not applicable
    std::vector<std::string> checks;      // cross-identities verified

    bool any_undetermined() const;
};

// Computes every field and verifies the cross-identities; parity
// violations throw ParityViolation, other inconsistencies Internal.
InvariantReport report(const ModuleRep& m, const InvariantOptions& opt = {});

// Columns run over j = 1..pmax-1; rows of smaller p show "na" there.
std::string csv_header(uint32_t pmax);
std::string csv_row(const InvariantReport& rep, uint32_t pmax);
std::string report_json(const InvariantReport& rep);

}  // namespace modinv
