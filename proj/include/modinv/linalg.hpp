#pragma once

#include <cstddef>
#include <vector>

#include "modinv/field.hpp"
#include "modinv/mpoly.hpp"

namespace modinv {

using Vec = std::vector<GF::Elem>;
using IndexSet = std::vector<size_t>;  // sorted, 0-based

// Dense matrix over F_p or F_{p^e}, row major.
struct Mat {
    FieldPtr F;
    size_t rows = 0, cols = 0;
    std::vector<GF::Elem> a;

    Mat() = default;
    Mat(FieldPtr f, size_t r, size_t c) : F(std::move(f)), rows(r), cols(c), a(r * c, 0) {}
    static Mat identity(FieldPtr f, size_t n);
    static Mat from_rows(FieldPtr f, const std::vector<std::vector<long long>>& rows);

    GF::Elem& at(size_t i, size_t j) { return a[i * cols + j]; }
    GF::Elem at(size_t i, size_t j) const { return a[i * cols + j]; }
    Vec row(size_t i) const;
    Vec col(size_t j) const;

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Vec apply(const Vec& v) const;
    Mat scale(GF::Elem c) const;
    Mat transpose() const;
    Mat pow(unsigned k) const;
    Mat submatrix(const IndexSet& I, const IndexSet& J) const;
    Mat lift(FieldPtr ext) const;  // embed base-field entries
    bool is_zero() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }
};

struct Rref {
    Mat R;
    size_t rank = 0;
    std::vector<size_t> pivots;
};

Rref rref(Mat m);
size_t rank(const Mat& m);
GF::Elem det(Mat m);
Mat inverse(const Mat& m);
GF::Elem minor(const Mat& m, const IndexSet& I, const IndexSet& J);

// Subspace of F^n stored by its reduced row echelon basis; equality of
// subspaces is equality of these canonical forms.
struct Subspace {
    FieldPtr F;
    size_t ambient = 0;
    Mat basis;  // dim x ambient, RREF

    size_t dim() const { return basis.rows; }
    static Subspace zero(FieldPtr f, size_t n);
    static Subspace full(FieldPtr f, size_t n);
    static Subspace span(FieldPtr f, size_t n, const std::vector<Vec>& vs);
    std::vector<Vec> vectors() const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;
    Subspace operator+(const Subspace& o) const;
    Vec reduce(const Vec& v) const;  // remainder modulo the subspace (zero at pivots)
    std::vector<size_t> pivots() const;
    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }
};

struct RankKernelImage {
    size_t rank;
    Subspace kernel;  // {x : m x = 0}
    Subspace image;   // column space
};

RankKernelImage rref_rank_kernel_image(const Mat& m);
Subspace kernel(const Mat& m);
Subspace image(const Mat& m);

// Write v (over F_{p^e}) as sum w^k v_k with v_k over F_p.
std::vector<Vec> base_components(const GF& F, const Vec& v);

// Gram matrix (f_i(w_k)) of basis vectors; its determinant is the pairing
// of the top wedges.
Mat pairing_check(const Subspace& a, const Subspace& b);

// Matrix of polynomials over F_p.
struct PolyMat {
    uint32_t p = 2;
    int nv = 0;
    size_t rows = 0, cols = 0;
    std::vector<MPoly> a;

    PolyMat() = default;
    PolyMat(uint32_t p, int nv, size_t r, size_t c);
    MPoly& at(size_t i, size_t j) { return a[i * cols + j]; }
    const MPoly& at(size_t i, size_t j) const { return a[i * cols + j]; }
    PolyMat operator*(const PolyMat& o) const;
    PolyMat operator+(const PolyMat& o) const;
    PolyMat submatrix(const IndexSet& I, const IndexSet& J) const;
    PolyMat transpose() const;
    bool is_zero() const;
    bool operator==(const PolyMat& o) const;
};

// theta = sum_i t_i X_i for the generator matrices X_i over F_p
PolyMat theta(const std::vector<Mat>& gens);
PolyMat theta_power(const std::vector<Mat>& gens, int j);

MPoly det(const PolyMat& m);  // fraction-free elimination
MPoly minor(const PolyMat& m, const IndexSet& I, const IndexSet& J);
size_t generic_rank_of(const PolyMat& m);
size_t generic_rank_by_minors(const PolyMat& m);  // cross-check, small sizes only
Mat specialize(const PolyMat& m, FieldPtr F, const Vec& point);

// All d-subsets of {0..n-1} in lexicographic order.
std::vector<IndexSet> subsets(size_t n, size_t d);
bool next_subset(IndexSet& s, size_t n);
double binomial(size_t n, size_t k);

// (det m_{(I,J)}) for I over all d-subsets of rows in lexicographic order.
std::vector<MPoly> pluecker_vector(const PolyMat& m, size_t d, const IndexSet& J, double budget = 2e5);

// Connected components of the bipartite row/column graph of nonzero entries.
struct Block {
    IndexSet rows, cols;
};
std::vector<Block> blocks(const PolyMat& m);

// Lexicographically smallest set of generically independent columns.
IndexSet greedy_chart(const PolyMat& m);
IndexSet greedy_chart_reverse(const PolyMat& m);

}  // namespace modinv
