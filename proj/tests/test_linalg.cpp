#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "modinv/linalg.hpp"
#include "oracles.hpp"

using namespace modinv;

namespace {

Mat random_mat(std::mt19937_64& rng, FieldPtr F, size_t r, size_t c, int zero_pct = 30) {
    Mat m(F, r, c);
    for (auto& x : m.a) x = static_cast<int>(rng() % 100) < zero_pct ? 0 : F->random(rng);
    return m;
}

Mat low_rank(std::mt19937_64& rng, FieldPtr F, size_t r, size_t c, size_t k) {
    return random_mat(rng, F, r, k, 0) * random_mat(rng, F, k, c, 0);
}

// determinant by the Leibniz expansion, for the Pluecker oracle
MPoly leibniz(const PolyMat& m) {
    size_t n = m.rows;
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    MPoly total(m.p, m.nv);
    do {
        size_t inversions = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t k = i + 1; k < n; ++k) inversions += perm[i] > perm[k];
        MPoly term = MPoly::constant(m.p, m.nv, 1);
        for (size_t i = 0; i < n; ++i) term *= m.at(i, perm[i]);
        total = inversions % 2 ? total - term : total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

PolyMat random_polymat(std::mt19937_64& rng, uint32_t p, int nv, size_t r, size_t c, int zero_pct = 40) {
    PolyMat m(p, nv, r, c);
    for (auto& x : m.a) {
        x = MPoly(p, nv);
        if (static_cast<int>(rng() % 100) < zero_pct) continue;
        for (int i = 0; i < nv; ++i) x += MPoly::var(p, nv, i).scale(static_cast<uint32_t>(rng() % p));
    }
    return m;
}

}  // namespace

TEST_CASE("rref and rank agree with the oracle") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 80; ++t) {
        uint32_t p = std::vector<uint32_t>{2, 3, 5, 7, 31}[t % 5];
        auto F = GF::get(p);
        size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
        Mat m = t % 3 == 0 ? low_rank(rng, F, r, c, 1 + rng() % 3) : random_mat(rng, F, r, c);
        auto R = rref(m);
        CHECK(R.rank == oracle::rank(oracle::from_mat(m), p));
        CHECK(rank(m) == R.rank);
        CHECK(rank(m.transpose()) == R.rank);
        // kernel: dimension and annihilation
        auto K = kernel(m);
        CHECK(K.dim() == c - R.rank);
        for (const auto& v : K.vectors()) {
            Vec w = m.apply(v);
            CHECK(std::all_of(w.begin(), w.end(), [](auto x) { return x == 0; }));
        }
        auto rki = rref_rank_kernel_image(m);
        CHECK(rki.kernel == K);
        CHECK(rki.image == image(m));
        CHECK(rki.image.dim() == R.rank);
        for (size_t j = 0; j < c; ++j) CHECK(rki.image.contains(m.col(j)));
    }
}

TEST_CASE("determinant and inverse") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 40; ++t) {
        uint32_t p = std::vector<uint32_t>{3, 5, 7}[t % 3];
        auto F = GF::get(p, 1 + t % 2);
        size_t n = 1 + rng() % 5;
        Mat a = random_mat(rng, F, n, n), b = random_mat(rng, F, n, n);
        CHECK(det(a * b) == F->mul(det(a), det(b)));
        CHECK(det(a.transpose()) == det(a));
        CHECK((det(a) == 0) == (rank(a) < n));
        if (det(a) != 0) {
            CHECK(a * inverse(a) == Mat::identity(F, n));
        } else {
            CHECK_THROWS_AS(inverse(a), Error);
        }
    }
    auto F = GF::get(5);
    Mat m = Mat::from_rows(F, {{1, 2}, {3, 4}});
    CHECK(det(m) == F->from_int(-2));
    CHECK(minor(Mat::from_rows(F, {{1, 2, 0}, {3, 4, 1}, {0, 0, 1}}), {0, 1}, {1, 2}) == 2);
}

TEST_CASE("subspace canonical forms") {
    auto F = GF::get(3);
    auto a = Subspace::span(F, 3, {{1, 1, 0}, {0, 1, 1}});
    auto b = Subspace::span(F, 3, {{1, 2, 1}, {2, 2, 0}});
    CHECK(a.dim() == 2);
    CHECK(a == b);
    CHECK(a.contains(Vec{1, 2, 1}));
    CHECK(!a.contains(Vec{1, 0, 0}));
    CHECK((a + Subspace::span(F, 3, {{1, 0, 0}})) == Subspace::full(F, 3));
    CHECK(Subspace::zero(F, 3).dim() == 0);
    Vec r = a.reduce(Vec{1, 0, 0});
    for (size_t piv : a.pivots()) CHECK(r[piv] == 0);
    CHECK(a.contains(Subspace::span(F, 3, {{2, 2, 0}})));
    // pairing of a space with itself under the dot product
    auto e = Subspace::span(F, 3, {{1, 0, 0}, {0, 1, 0}});
    CHECK(pairing_check(e, e) == Mat::identity(F, 2));
    CHECK_THROWS_AS(pairing_check(e, a + e), Error);
}

TEST_CASE("base components recombine") {
    auto F = GF::get(5, 3);
    std::mt19937_64 rng(4);
    Vec v(6);
    for (auto& x : v) x = F->random(rng);
    auto parts = base_components(*F, v);
    REQUIRE(parts.size() == 3);
    GF::Elem w = F->from_coords({0, 1, 0});
    for (size_t i = 0; i < v.size(); ++i) {
        GF::Elem s = 0;
        for (size_t k = 0; k < 3; ++k) {
            CHECK(parts[k][i] < 5);
            s = F->add(s, F->mul(F->pow(w, k), parts[k][i]));
        }
        CHECK(s == v[i]);
    }
}

TEST_CASE("subsets enumerate in lexicographic order") {
    auto s = subsets(5, 3);
    CHECK(s.size() == 10);
    CHECK(binomial(5, 3) == 10);
    CHECK(s.front() == IndexSet{0, 1, 2});
    CHECK(s.back() == IndexSet{2, 3, 4});
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(subsets(3, 0).size() == 1);
}

TEST_CASE("polynomial matrices: theta, determinant, generic rank") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 30; ++t) {
        uint32_t p = std::vector<uint32_t>{3, 5, 7}[t % 3];
        auto F = GF::get(p);
        int r = 2 + t % 2;
        size_t n = 2 + rng() % 3;
        std::vector<Mat> gens;
        for (int i = 0; i < r; ++i) gens.push_back(random_mat(rng, F, n, n, 50));
        PolyMat T = theta(gens);
        auto E = GF::get(p, 2);
        Vec pt;
        for (int i = 0; i < r; ++i) pt.push_back(E->random(rng));
        Mat want(E, n, n);
        for (int i = 0; i < r; ++i) want = want + gens[i].lift(E).scale(pt[i]);
        CHECK(specialize(T, E, pt) == want);
        CHECK(specialize(theta_power(gens, 2), E, pt) == want * want);
        CHECK(det(T) == leibniz(T));
        CHECK(det(T).eval(*E, pt) == modinv::det(want));
        CHECK(generic_rank_of(T) == generic_rank_by_minors(T));
    }
    for (int t = 0; t < 30; ++t) {
        auto m = random_polymat(rng, 5, 3, 2 + rng() % 4, 2 + rng() % 4, 55);
        CHECK(generic_rank_of(m) == generic_rank_by_minors(m));
    }
}

TEST_CASE("Pluecker vectors match Leibniz minors") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 15; ++t) {
        auto m = random_polymat(rng, 7, 2, 5, 3, 20);
        IndexSet J = greedy_chart(m);
        size_t d = J.size();
        if (d == 0) continue;
        auto pv = pluecker_vector(m, d, J);
        auto rows = subsets(m.rows, d);
        REQUIRE(pv.size() == rows.size());
        for (size_t k = 0; k < rows.size(); ++k) {
            CHECK(pv[k] == leibniz(m.submatrix(rows[k], J)));
            CHECK(pv[k] == minor(m, rows[k], J));
        }
        CHECK_THROWS_AS(pluecker_vector(m, d, J, 1), Error);
    }
}

TEST_CASE("blocks and charts") {
    uint32_t p = 5;
    PolyMat m(p, 2, 4, 4);
    auto s = MPoly::var(p, 2, 0), t = MPoly::var(p, 2, 1);
    m.at(0, 0) = s;
    m.at(1, 2) = t;
    m.at(2, 2) = s;
    m.at(3, 3) = s + t;
    auto bs = blocks(m);
    CHECK(bs.size() == 3);
    size_t total_rows = 0;
    for (const auto& b : bs) total_rows += b.rows.size();
    CHECK(total_rows == 4);
    CHECK(greedy_chart(m) == IndexSet{0, 2, 3});
    CHECK(generic_rank_of(m) == 3);
    // duplicated column: the two charts pick different copies
    PolyMat d(p, 2, 2, 2);
    d.at(0, 0) = s;
    d.at(0, 1) = s;
    d.at(1, 0) = t;
    d.at(1, 1) = t;
    CHECK(greedy_chart(d) == IndexSet{0});
    CHECK(greedy_chart_reverse(d) == IndexSet{1});
}
