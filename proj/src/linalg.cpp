#include "modinv/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace modinv {

Mat Mat::identity(FieldPtr f, size_t n) {
    Mat m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(FieldPtr f, const std::vector<std::vector<long long>>& rs) {
    size_t r = rs.size(), c = r ? rs[0].size() : 0;
    Mat m(f, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rs[i].size() != c) fail(ErrorCode::Dimension, "ragged matrix rows");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = f->from_int(rs[i][j]);
    }
    return m;
}

Vec Mat::row(size_t i) const { return Vec(a.begin() + i * cols, a.begin() + (i + 1) * cols); }

Vec Mat::col(size_t j) const {
    Vec v(rows);
    for (size_t i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols != o.rows) fail(ErrorCode::Dimension, "matrix product shape mismatch");
    Mat r(F, rows, o.cols);
    const GF& f = *F;
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < cols; ++k) {
            GF::Elem x = at(i, k);
            if (!x) continue;
            for (size_t j = 0; j < o.cols; ++j) {
                GF::Elem y = o.at(k, j);
                if (y) r.at(i, j) = f.add(r.at(i, j), f.mul(x, y));
            }
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) fail(ErrorCode::Dimension, "matrix sum shape mismatch");
    Mat r(F, rows, cols);
    for (size_t k = 0; k < a.size(); ++k) r.a[k] = F->add(a[k], o.a[k]);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) fail(ErrorCode::Dimension, "matrix difference shape mismatch");
    Mat r(F, rows, cols);
    for (size_t k = 0; k < a.size(); ++k) r.a[k] = F->sub(a[k], o.a[k]);
    return r;
}

Vec Mat::apply(const Vec& v) const {
    if (v.size() != cols) fail(ErrorCode::Dimension, "vector length mismatch");
    Vec r(rows, 0);
    for (size_t i = 0; i < rows; ++i) {
        GF::Elem s = 0;
        for (size_t j = 0; j < cols; ++j)
            if (at(i, j) && v[j]) s = F->add(s, F->mul(at(i, j), v[j]));
        r[i] = s;
    }
    return r;
}

Mat Mat::scale(GF::Elem c) const {
    Mat r(*this);
    for (auto& x : r.a) x = F->mul(x, c);
    return r;
}

Mat Mat::transpose() const {
    Mat r(F, cols, rows);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::pow(unsigned k) const {
    if (rows != cols) fail(ErrorCode::Dimension, "power of a non-square matrix");
    Mat r = identity(F, rows), b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

Mat Mat::submatrix(const IndexSet& I, const IndexSet& J) const {
    Mat r(F, I.size(), J.size());
    for (size_t i = 0; i < I.size(); ++i) {
        if (I[i] >= rows) fail(ErrorCode::Index, "row index out of range");
        for (size_t j = 0; j < J.size(); ++j) {
            if (J[j] >= cols) fail(ErrorCode::Index, "column index out of range");
            r.at(i, j) = at(I[i], J[j]);
        }
    }
    return r;
}

Mat Mat::lift(FieldPtr ext) const {
    if (ext->p() != F->p()) fail(ErrorCode::Dimension, "lift to a field of different characteristic");
    if (F->e() != 1 && ext != F) fail(ErrorCode::Unsupported, "lift only from the prime field");
    Mat r(*this);
    r.F = ext;
    return r;
}

bool Mat::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](GF::Elem x) { return x == 0; });
}

bool Mat::operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a && F->q() == o.F->q();
}

Rref rref(Mat m) {
    const GF& f = *m.F;
    Rref out;
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t piv = r;
        while (piv < m.rows && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        GF::Elem inv = f.inv(m.at(r, c));
        for (size_t j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            GF::Elem x = m.at(i, c);
            if (!x) continue;
            for (size_t j = c; j < m.cols; ++j)
                if (m.at(r, j)) m.at(i, j) = f.sub(m.at(i, j), f.mul(x, m.at(r, j)));
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.R = std::move(m);
    return out;
}

size_t rank(const Mat& m) { return rref(m).rank; }

GF::Elem det(Mat m) {
    if (m.rows != m.cols) fail(ErrorCode::Dimension, "determinant of a non-square matrix");
    const GF& f = *m.F;
    size_t n = m.rows;
    GF::Elem d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m.at(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
            d = f.neg(d);
        }
        d = f.mul(d, m.at(c, c));
        GF::Elem inv = f.inv(m.at(c, c));
        for (size_t i = c + 1; i < n; ++i) {
            GF::Elem x = f.mul(m.at(i, c), inv);
            if (!x) continue;
            for (size_t j = c; j < n; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(x, m.at(c, j)));
        }
    }
    return d;
}

Mat inverse(const Mat& m) {
    if (m.rows != m.cols) fail(ErrorCode::Dimension, "inverse of a non-square matrix");
    size_t n = m.rows;
    Mat aug(m.F, n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    Rref r = rref(aug);
    if (r.rank < n || r.pivots[n - 1] != n - 1) fail(ErrorCode::Invertibility, "matrix is singular");
    Mat inv(m.F, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = r.R.at(i, n + j);
    return inv;
}

GF::Elem minor(const Mat& m, const IndexSet& I, const IndexSet& J) {
    if (I.size() != J.size()) fail(ErrorCode::Dimension, "minor needs equal index set sizes");
    return det(m.submatrix(I, J));
}

/* Subspace */

Subspace Subspace::zero(FieldPtr f, size_t n) {
    Subspace s;
    s.F = f;
    s.ambient = n;
    s.basis = Mat(f, 0, n);
    return s;
}

Subspace Subspace::full(FieldPtr f, size_t n) {
    Subspace s;
    s.F = f;
    s.ambient = n;
    s.basis = Mat::identity(f, n);
    return s;
}

Subspace Subspace::span(FieldPtr f, size_t n, const std::vector<Vec>& vs) {
    Mat m(f, vs.size(), n);
    for (size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].size() != n) fail(ErrorCode::Dimension, "vector length mismatch in span");
        for (size_t j = 0; j < n; ++j) m.at(i, j) = vs[i][j];
    }
    Rref r = rref(m);
    Subspace s;
    s.F = f;
    s.ambient = n;
    s.basis = Mat(f, r.rank, n);
    std::copy(r.R.a.begin(), r.R.a.begin() + r.rank * n, s.basis.a.begin());
    return s;
}

std::vector<Vec> Subspace::vectors() const {
    std::vector<Vec> out;
    for (size_t i = 0; i < basis.rows; ++i) out.push_back(basis.row(i));
    return out;
}

std::vector<size_t> Subspace::pivots() const {
    std::vector<size_t> pv;
    for (size_t i = 0; i < basis.rows; ++i) {
        size_t j = 0;
        while (basis.at(i, j) == 0) ++j;
        pv.push_back(j);
    }
    return pv;
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient) fail(ErrorCode::Dimension, "vector length mismatch");
    Vec w = v;
    auto pv = pivots();
    for (size_t i = 0; i < pv.size(); ++i) {
        GF::Elem x = w[pv[i]];
        if (!x) continue;
        for (size_t j = pv[i]; j < ambient; ++j)
            if (basis.at(i, j)) w[j] = F->sub(w[j], F->mul(x, basis.at(i, j)));
    }
    return w;
}

bool Subspace::contains(const Vec& v) const {
    Vec w = reduce(v);
    return std::all_of(w.begin(), w.end(), [](GF::Elem x) { return x == 0; });
}

bool Subspace::contains(const Subspace& o) const {
    for (size_t i = 0; i < o.basis.rows; ++i)
        if (!contains(o.basis.row(i))) return false;
    return true;
}

Subspace Subspace::operator+(const Subspace& o) const {
    if (ambient != o.ambient) fail(ErrorCode::Dimension, "ambient dimension mismatch");
    auto vs = vectors();
    auto ws = o.vectors();
    vs.insert(vs.end(), ws.begin(), ws.end());
    return span(F, ambient, vs);
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient == o.ambient && basis == o.basis;
}

RankKernelImage rref_rank_kernel_image(const Mat& m) {
    Rref r = rref(m);
    std::vector<bool> is_piv(m.cols, false);
    for (size_t c : r.pivots) is_piv[c] = true;
    std::vector<Vec> kv;
    for (size_t f = 0; f < m.cols; ++f) {
        if (is_piv[f]) continue;
        Vec x(m.cols, 0);
        x[f] = 1;
        for (size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = m.F->neg(r.R.at(i, f));
        kv.push_back(std::move(x));
    }
    RankKernelImage out{r.rank, Subspace::span(m.F, m.cols, kv), Subspace()};
    std::vector<Vec> cols;
    for (size_t c : r.pivots) cols.push_back(m.col(c));
    out.image = Subspace::span(m.F, m.rows, cols);
    return out;
}

Subspace kernel(const Mat& m) { return rref_rank_kernel_image(m).kernel; }
Subspace image(const Mat& m) { return rref_rank_kernel_image(m).image; }

std::vector<Vec> base_components(const GF& F, const Vec& v) {
    std::vector<Vec> out(F.e(), Vec(v.size(), 0));
    for (size_t i = 0; i < v.size(); ++i) {
        auto c = F.coords(v[i]);
        for (uint32_t k = 0; k < F.e(); ++k) out[k][i] = c[k];
    }
    return out;
}

Mat pairing_check(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient || a.dim() != b.dim())
        fail(ErrorCode::Dimension, "pairing needs equal ambient and subspace dimensions");
    size_t d = a.dim();
    Mat g(a.F, d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t k = 0; k < d; ++k) {
            GF::Elem s = 0;
            for (size_t x = 0; x < a.ambient; ++x)
                s = a.F->add(s, a.F->mul(a.basis.at(i, x), b.basis.at(k, x)));
            g.at(i, k) = s;
        }
    return g;
}

/* PolyMat */

PolyMat::PolyMat(uint32_t p_, int nv_, size_t r, size_t c)
    : p(p_), nv(nv_), rows(r), cols(c), a(r * c, MPoly(p_, nv_)) {}

PolyMat PolyMat::operator*(const PolyMat& o) const {
    if (cols != o.rows) fail(ErrorCode::Dimension, "polynomial matrix product shape mismatch");
    PolyMat r(p, nv, rows, o.cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < cols; ++k) {
            const MPoly& x = at(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < o.cols; ++j) {
                const MPoly& y = o.at(k, j);
                if (!y.is_zero()) r.at(i, j) += x * y;
            }
        }
    return r;
}

PolyMat PolyMat::operator+(const PolyMat& o) const {
    if (rows != o.rows || cols != o.cols) fail(ErrorCode::Dimension, "polynomial matrix sum shape mismatch");
    PolyMat r(*this);
    for (size_t k = 0; k < a.size(); ++k) r.a[k] += o.a[k];
    return r;
}

PolyMat PolyMat::submatrix(const IndexSet& I, const IndexSet& J) const {
    PolyMat r(p, nv, I.size(), J.size());
    for (size_t i = 0; i < I.size(); ++i) {
        if (I[i] >= rows) fail(ErrorCode::Index, "row index out of range");
        for (size_t j = 0; j < J.size(); ++j) {
            if (J[j] >= cols) fail(ErrorCode::Index, "column index out of range");
            r.at(i, j) = at(I[i], J[j]);
        }
    }
    return r;
}

PolyMat PolyMat::transpose() const {
    PolyMat r(p, nv, cols, rows);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool PolyMat::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const MPoly& f) { return f.is_zero(); });
}

bool PolyMat::operator==(const PolyMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
}

PolyMat theta(const std::vector<Mat>& gens) {
    if (gens.empty()) fail(ErrorCode::Dimension, "theta needs at least one generator");
    size_t n = gens[0].rows;
    uint32_t p = gens[0].F->p();
    int r = static_cast<int>(gens.size());
    PolyMat t(p, r, n, n);
    for (int i = 0; i < r; ++i) {
        if (gens[i].rows != n || gens[i].cols != n) fail(ErrorCode::Dimension, "generators must be square of equal size");
        MPoly ti = MPoly::var(p, r, i);
        for (size_t x = 0; x < n; ++x)
            for (size_t y = 0; y < n; ++y)
                if (gens[i].at(x, y)) t.at(x, y) += ti.scale(gens[i].at(x, y));
    }
    return t;
}

PolyMat theta_power(const std::vector<Mat>& gens, int j) {
    if (j < 1) fail(ErrorCode::Range, "theta power must be positive");
    PolyMat t = theta(gens);
    PolyMat r = t;
    for (int k = 1; k < j; ++k) r = r * t;
    return r;
}

namespace {

// Fraction-free row echelon form. Returns pivot columns; optionally the
// determinant sign and the last pivot.
IndexSet bareiss(PolyMat m, int* sign = nullptr, MPoly* last = nullptr) {
    IndexSet pcols;
    MPoly prev = MPoly::constant(m.p, m.nv, 1);
    size_t r = 0;
    int sg = 1;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t piv = m.rows;
        for (size_t i = r; i < m.rows; ++i) {
            if (m.at(i, c).is_zero()) continue;
            if (piv == m.rows || m.at(i, c).nterms() < m.at(piv, c).nterms()) piv = i;
        }
        if (piv == m.rows) continue;
        if (piv != r) {
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
            sg = -sg;
        }
        const MPoly pv = m.at(r, c);
        for (size_t i = r + 1; i < m.rows; ++i) {
            MPoly x = m.at(i, c);
            for (size_t j = c + 1; j < m.cols; ++j) {
                MPoly v = pv * m.at(i, j);
                if (!x.is_zero() && !m.at(r, j).is_zero()) v -= x * m.at(r, j);
                m.at(i, j) = prev.is_constant() ? v.scale(fp_inv(prev.lead().c, m.p)) : divexact(v, prev);
            }
            m.at(i, c) = MPoly(m.p, m.nv);
        }
        prev = pv;
        pcols.push_back(c);
        ++r;
    }
    if (sign) *sign = sg;
    if (last) *last = prev;
    return pcols;
}

}  // namespace

MPoly det(const PolyMat& m) {
    if (m.rows != m.cols) fail(ErrorCode::Dimension, "determinant of a non-square matrix");
    if (m.rows == 0) return MPoly::constant(m.p, m.nv, 1);
    int sg = 1;
    MPoly last;
    IndexSet pc = bareiss(m, &sg, &last);
    if (pc.size() < m.rows) return MPoly(m.p, m.nv);
    return sg > 0 ? last : -last;
}

MPoly minor(const PolyMat& m, const IndexSet& I, const IndexSet& J) {
    if (I.size() != J.size()) fail(ErrorCode::Dimension, "minor needs equal index set sizes");
    return det(m.submatrix(I, J));
}

size_t generic_rank_of(const PolyMat& m) {
    size_t total = 0;
    for (const auto& b : blocks(m)) total += bareiss(m.submatrix(b.rows, b.cols)).size();
    return total;
}

size_t generic_rank_by_minors(const PolyMat& m) {
    size_t best = 0;
    for (size_t d = 1; d <= std::min(m.rows, m.cols); ++d) {
        bool found = false;
        for (const auto& I : subsets(m.rows, d)) {
            for (const auto& J : subsets(m.cols, d))
                if (!minor(m, I, J).is_zero()) { found = true; break; }
            if (found) break;
        }
        if (!found) break;
        best = d;
    }
    return best;
}

Mat specialize(const PolyMat& m, FieldPtr F, const Vec& point) {
    if (static_cast<int>(point.size()) != m.nv) fail(ErrorCode::Dimension, "point has wrong length");
    Mat r(F, m.rows, m.cols);
    for (size_t k = 0; k < m.a.size(); ++k)
        if (!m.a[k].is_zero()) r.a[k] = m.a[k].eval(*F, point);
    return r;
}

double binomial(size_t n, size_t k) {
    if (k > n) return 0;
    double r = 1;
    for (size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

bool next_subset(IndexSet& s, size_t n) {
    size_t d = s.size();
    for (size_t i = d; i-- > 0;) {
        if (s[i] < n - d + i) {
            ++s[i];
            for (size_t j = i + 1; j < d; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<IndexSet> subsets(size_t n, size_t d) {
    std::vector<IndexSet> out;
    if (d > n) return out;
    IndexSet s(d);
    std::iota(s.begin(), s.end(), 0);
    do out.push_back(s);
    while (d > 0 && next_subset(s, n));
    return out;
}

std::vector<MPoly> pluecker_vector(const PolyMat& m, size_t d, const IndexSet& J, double budget) {
    if (J.size() != d) fail(ErrorCode::Dimension, "chart must have d columns");
    if (d > m.cols || d > m.rows) fail(ErrorCode::Dimension, "chart size exceeds matrix size");
    if (binomial(m.rows, d) > budget) fail(ErrorCode::Resource, "too many Pluecker coordinates");
    PolyMat cols = m.submatrix([&] { IndexSet all(m.rows); std::iota(all.begin(), all.end(), 0); return all; }(), J);
    std::vector<MPoly> out;
    for (const auto& I : subsets(m.rows, d)) out.push_back(det(cols.submatrix(I, [&] { IndexSet a(d); std::iota(a.begin(), a.end(), 0); return a; }())));
    return out;
}

std::vector<Block> blocks(const PolyMat& m) {
    // union-find over rows (0..rows-1) and columns (rows..rows+cols-1)
    std::vector<size_t> parent(m.rows + m.cols);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<bool> used(m.rows + m.cols, false);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j)
            if (!m.at(i, j).is_zero()) {
                used[i] = used[m.rows + j] = true;
                size_t a = find(i), b = find(m.rows + j);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
    std::vector<Block> out;
    std::vector<long> slot(m.rows + m.cols, -1);
    for (size_t x = 0; x < m.rows + m.cols; ++x) {
        if (!used[x]) continue;
        size_t root = find(x);
        if (slot[root] < 0) { slot[root] = static_cast<long>(out.size()); out.push_back({}); }
        Block& b = out[slot[root]];
        if (x < m.rows) b.rows.push_back(x);
        else b.cols.push_back(x - m.rows);
    }
    // order blocks by their first column for determinism
    std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) { return a.cols.front() < b.cols.front(); });
    return out;
}

IndexSet greedy_chart(const PolyMat& m) {
    IndexSet J;
    for (const auto& b : blocks(m)) {
        IndexSet pc = bareiss(m.submatrix(b.rows, b.cols));
        for (size_t c : pc) J.push_back(b.cols[c]);
    }
    std::sort(J.begin(), J.end());
    return J;
}

IndexSet greedy_chart_reverse(const PolyMat& m) {
    IndexSet J;
    for (const auto& b : blocks(m)) {
        IndexSet rc(b.cols.rbegin(), b.cols.rend());
        IndexSet pc = bareiss(m.submatrix(b.rows, rc));
        for (size_t c : pc) J.push_back(rc[c]);
    }
    std::sort(J.begin(), J.end());
    return J;
}

}  // namespace modinv
