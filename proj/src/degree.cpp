#include <numeric>

#include "modinv/invariants.hpp"
#include "modinv/projmaps.hpp"

namespace modinv {

namespace {

using UMat = std::vector<std::vector<UPoly>>;

// Binary form -> univariate polynomial in the variable `keep` after setting
// the other variable to 1.
UPoly dehom2(const MPoly& f, int keep) {
    UPoly u;
    for (const auto& t : f.terms()) {
        int e = mono_exp(t.m, keep);
        if (static_cast<int>(u.size()) <= e) u.resize(e + 1, 0);
        u[e] = fp_add(u[e], t.c, f.p());
    }
    upoly_trim(u);
    return u;
}

// Product of the diagonal of a Hermite triangularization over F_p[x]; this
// is the gcd of the maximal minors up to a unit.  Empty on rank deficiency.
UPoly hermite_gcd(UMat A, uint32_t p) {
    size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    UPoly prod = {1};
    size_t r = 0;
    for (size_t c = 0; c < cols; ++c) {
        while (true) {
            size_t piv = rows;
            for (size_t i = r; i < rows; ++i)
                if (!A[i][c].empty() && (piv == rows || upoly_deg(A[i][c]) < upoly_deg(A[piv][c]))) piv = i;
            if (piv == rows) return {};
            std::swap(A[piv], A[r]);
            bool more = false;
            for (size_t i = r + 1; i < rows; ++i) {
                if (A[i][c].empty()) continue;
                UPoly q, rem;
                upoly_divmod(A[i][c], A[r][c], p, q, rem);
                for (size_t k = c; k < cols; ++k)
                    if (!A[r][k].empty()) A[i][k] = upoly_sub(A[i][k], upoly_mul(q, A[r][k], p), p);
                if (!A[i][c].empty()) more = true;
            }
            if (!more) break;
        }
        prod = upoly_mul(prod, A[r][c], p);
        ++r;
    }
    return upoly_monic(prod, p);
}

// Degree of the gcd of the maximal minors of a tall matrix of binary forms.
int binary_minor_gcd_degree(const PolyMat& A) {
    UMat a1(A.rows, std::vector<UPoly>(A.cols)), a2 = a1;
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t k = 0; k < A.cols; ++k) {
            a1[i][k] = dehom2(A.at(i, k), 1);
            a2[i][k] = dehom2(A.at(i, k), 0);
        }
    UPoly g1 = hermite_gcd(a1, A.p), g2 = hermite_gcd(a2, A.p);
    if (g1.empty() || g2.empty()) fail(ErrorCode::Internal, "chart columns are generically dependent");
    int ord = 0;
    while (ord < static_cast<int>(g2.size()) && g2[ord] == 0) ++ord;
    return upoly_deg(g1) + ord;
}

IndexSet all_rows(size_t n) {
    IndexSet a(n);
    std::iota(a.begin(), a.end(), 0);
    return a;
}

std::vector<MPoly> reduce_tuple(const std::vector<MPoly>& t, MPoly* h) {
    MPoly g = gcd(t);
    std::vector<MPoly> out;
    for (const auto& x : t) out.push_back(x.is_zero() ? x : divexact(x, g));
    if (h) *h = g;
    return normalize_tuple(out);
}

}  // namespace

Degree jdegree(const ModuleRep& m, int j, const InvariantOptions& opt) {
    if (j < 1 || j > static_cast<int>(m.p) - 1) fail(ErrorCode::Range, "j must lie in 1..p-1");
    Degree out;
    if (m.n == 0) {
        out.determined = true;
        out.route = "rank0";
        return out;
    }
    PolyMat T = theta_power(m.gens, j);
    int hdeg = 0;
    std::string route = "minors";
    for (const auto& b : blocks(T)) {
        PolyMat B = T.submatrix(b.rows, b.cols);
        IndexSet J = greedy_chart(B), J2 = greedy_chart_reverse(B);
        size_t d = J.size();
        out.rank += d;
        for (size_t c : J) out.chart.push_back(b.cols[c]);
        for (size_t c : J2) out.chart2.push_back(b.cols[c]);
        if (d == 0 || !out.reason.empty()) continue;
        if (binomial(B.rows, d) <= opt.minor_budget) {
            MPoly h1, h2;
            auto t1 = reduce_tuple(pluecker_vector(B, d, J, opt.minor_budget), &h1);
            if (J2 != J) {
                auto t2 = reduce_tuple(pluecker_vector(B, d, J2, opt.minor_budget), &h2);
                if (t1 != t2) fail(ErrorCode::Internal, "reduced minor tuples of two charts are not proportional");
            }
            hdeg += h1.total_degree();
        } else if (m.r == 2) {
            IndexSet R = all_rows(B.rows);
            int h1 = binary_minor_gcd_degree(B.submatrix(R, J));
            if (J2 != J && binary_minor_gcd_degree(B.submatrix(R, J2)) != h1)
                fail(ErrorCode::Internal, "charts disagree on the divisor degree");
            hdeg += h1;
            route = "hermite";
        } else if (out.reason.empty()) {
            out.reason = "chart tuple of a " + std::to_string(B.rows) + "x" + std::to_string(d) + " block exceeds the minor budget";
        }
    }
    std::sort(out.chart.begin(), out.chart.end());
    std::sort(out.chart2.begin(), out.chart2.end());
    if (!out.reason.empty()) return out;
    if (out.rank == 0) {
        out.determined = true;
        out.route = "rank0";
        return out;
    }
    out.divisor_degree = hdeg;
    out.value = j * static_cast<int>(out.rank) - hdeg;
    out.route = route;
    out.determined = true;
    return out;
}

std::vector<MPoly> reduced_chart_tuple(const ModuleRep& m, int j, double budget) {
    if (j < 1 || j > static_cast<int>(m.p) - 1) fail(ErrorCode::Range, "j must lie in 1..p-1");
    PolyMat T = theta_power(m.gens, j);
    IndexSet J = greedy_chart(T);
    if (J.empty()) fail(ErrorCode::Degeneracy, "generic rank 0 has no chart");
    return reduce_tuple(pluecker_vector(T, J.size(), J, budget), nullptr);
}

std::vector<std::vector<MPoly>> block_chart_tuples(const ModuleRep& m, int j, double budget) {
    if (j < 1 || j > static_cast<int>(m.p) - 1) fail(ErrorCode::Range, "j must lie in 1..p-1");
    PolyMat T = theta_power(m.gens, j);
    std::vector<std::vector<MPoly>> out;
    for (const auto& b : blocks(T)) {
        PolyMat B = T.submatrix(b.rows, b.cols);
        IndexSet J = greedy_chart(B);
        if (!J.empty()) out.push_back(pluecker_vector(B, J.size(), J, budget));
    }
    return out;
}

}  // namespace modinv
