#include <random>

#include "doctest.h"
#include "modinv/invariants.hpp"
#include "modinv/projmaps.hpp"
#include "oracles.hpp"

using namespace modinv;

namespace {

std::vector<ModuleRep> catalog(uint32_t p) {
    std::vector<ModuleRep> out;
    for (const auto& s : zoo_catalog(p)) out.push_back(zoo(s));
    return out;
}

Mat random_invertible(std::mt19937_64& rng, FieldPtr F, size_t n) {
    while (true) {
        Mat g(F, n, n);
        for (auto& x : g.a) x = F->random(rng);
        if (det(g) != 0) return g;
    }
}

// nilpotent operator built with the oracle's arithmetic: sum c * prod X_i^e
oracle::Dense ppoint_operator_oracle(const ModuleRep& m, const MPoly& u) {
    int64_t p = m.p;
    oracle::Dense out(m.n, oracle::Row(m.n, 0));
    for (const auto& t : u.terms()) {
        oracle::Dense term(m.n, oracle::Row(m.n, 0));
        for (size_t i = 0; i < m.n; ++i) term[i][i] = 1;
        for (int i = 0; i < m.r; ++i)
            for (int e = 0; e < mono_exp(t.m, i); ++e) term = oracle::mul(term, oracle::from_mat(m.gens[i]), p);
        for (size_t i = 0; i < m.n; ++i)
            for (size_t k = 0; k < m.n; ++k) out[i][k] = (out[i][k] + t.c * term[i][k]) % p;
    }
    return out;
}

std::vector<size_t> sizes_of(const JordanType& jt) {
    std::vector<size_t> s;
    for (size_t i = 0; i < jt.a.size(); ++i)
        for (size_t k = 0; k < jt.a[i]; ++k) s.push_back(i + 1);
    return s;
}

}  // namespace

TEST_CASE("known degrees of small modules, p = 3") {
    auto check = [](const std::string& spec, std::vector<int> want) {
        CAPTURE(spec);
        auto m = zoo(spec);
        for (int j = 1; j <= 2; ++j) {
            auto d = jdegree(m, j);
            REQUIRE(d.determined);
            CHECK(d.value == want[j - 1]);
        }
    };
    check("regular:p=3,r=2", {3, 3});
    check("rad:p=3,r=2,s=1", {2, 1});
    check("mn:p=3,n=2", {1, 0});
    check("mn:p=3,n=3", {3, 2});
    check("mn:p=3,n=4", {3, 3});
    check("v:p=3,r=2", {0, 0});
    check("v:p=3,r=2,dual=1", {1, 0});
}

TEST_CASE("regular module degrees follow j(p-j)/2 p^(r-1)") {
    for (uint32_t p : {3u, 5u}) {
        auto m = regular_module(p, 2);
        for (int j = 1; j < static_cast<int>(p); ++j) {
            auto d = jdegree(m, j);
            REQUIRE(d.determined);
            CHECK(d.value == j * static_cast<int>(p - j) * static_cast<int>(p) / 2);
        }
    }
}

TEST_CASE("ranks and generic ranks") {
    for (uint32_t p : {2u, 3u, 5u}) {
        for (const auto& m : catalog(p)) {
            CAPTURE(m.name);
            size_t prev = m.n;
            for (int j = 1; j < static_cast<int>(p); ++j) {
                size_t rk = generic_jrank(m, j);
                CHECK(rk <= prev);
                prev = rk;
                // every F_p point has rank at most the generic one
                auto F = m.field();
                for (uint32_t a = 0; a < p; ++a) {
                    Vec pt(m.r, 0);
                    pt[0] = 1;
                    if (m.r > 1) pt[1] = a;
                    CHECK(rank_at_point(m, j, F, pt) <= rk);
                }
            }
        }
    }
}

TEST_CASE("constancy routes and witnesses") {
    auto u = regular_module(3, 2);
    for (int j = 1; j <= 2; ++j) {
        auto c = constant_jrank_certify(u, j);
        CHECK(c.constant == Tri::Yes);
    }
    auto mr = zoo("mr2:p=5");
    auto c1 = constant_jrank_certify(mr, 1);
    CHECK(c1.constant == Tri::Yes);
    auto c2 = constant_jrank_certify(mr, 2);
    CHECK(c2.constant == Tri::No);
    REQUIRE(c2.witness);
    CHECK(c2.witness->to_string() == "(1,2)");
    CHECK(c2.route == "witness");
    // x^2 + y^2 style degeneracy only visible over F_9
    auto n = zoo("m3xy:p=3");
    auto cn = constant_jrank_certify(n, 1);
    CHECK(cn.constant == Tri::No);
    REQUIRE(cn.witness);
    CHECK(rank_at_point(n, 1, GF::get(3, cn.witness->e), cn.witness->coords) < cn.generic_rank);
    auto triv = constant_jrank_certify(zoo("trivial:p=5,r=2,dim=3"), 1);
    CHECK(triv.constant == Tri::Yes);
    CHECK(triv.route == "rank0");
    CHECK_THROWS_AS(constant_jrank_certify(u, 3), Error);
}

TEST_CASE("witnesses are genuine rank drops") {
    for (uint32_t p : {3u, 5u})
        for (const auto& m : catalog(p))
            for (int j = 1; j < static_cast<int>(p); ++j) {
                auto c = constant_jrank_certify(m, j);
                CAPTURE(m.name);
                CHECK(c.constant != Tri::Undet);
                if (c.constant == Tri::No) {
                    REQUIRE(c.witness);
                    CHECK(rank_at_point(m, j, GF::get(p, c.witness->e), c.witness->coords) < c.generic_rank);
                }
            }
}

TEST_CASE("rank-degree identity for modules of constant rank") {
    size_t checked = 0;
    for (uint32_t p : {3u, 5u})
        for (const auto& m : catalog(p)) {
            auto d = dual_module(m);
            for (int j = 1; j < static_cast<int>(p); ++j) {
                if (constant_jrank_certify(m, j).constant != Tri::Yes) continue;
                auto a = jdegree(m, j), b = jdegree(d, j);
                REQUIRE(a.determined);
                REQUIRE(b.determined);
                CAPTURE(m.name);
                CHECK(a.value + b.value == j * static_cast<int>(a.rank));
                ++checked;
            }
        }
    CHECK(checked >= 20);
}

TEST_CASE("invariants do not depend on the choice of generators") {
    std::mt19937_64 rng(77);
    std::vector<std::string> specs = {"regular:p=3,r=2", "mn:p=3,n=3", "mr2:p=5", "hmod:p=3,r=2", "v:p=5,r=3", "m3xy:p=3"};
    for (int t = 0; t < 20; ++t) {
        auto m = zoo(specs[t % specs.size()]);
        auto g = random_invertible(rng, m.field(), m.r);
        auto c = change_of_generators(m, g);
        CAPTURE(m.name);
        CHECK(generic_jordan_type(c) == generic_jordan_type(m));
        for (int j = 1; j < static_cast<int>(m.p); ++j) {
            CHECK(generic_jrank(c, j) == generic_jrank(m, j));
            CHECK(constant_jrank_certify(c, j).constant == constant_jrank_certify(m, j).constant);
            auto a = jdegree(m, j), b = jdegree(c, j);
            CHECK(a.determined == b.determined);
            CHECK(a.value == b.value);
        }
    }
}

TEST_CASE("direct sums add ranks and degrees") {
    std::vector<std::pair<std::string, std::string>> pairs = {
        {"mn:p=3,n=2", "v:p=3,r=2"}, {"regular:p=3,r=2", "mn:p=3,n=3"}, {"mr2:p=5", "mn:p=5,n=3"}};
    for (const auto& [x, y] : pairs) {
        auto a = zoo(x), b = zoo(y), s = direct_sum(a, b);
        for (int j = 1; j < static_cast<int>(a.p); ++j) {
            CHECK(generic_jrank(s, j) == generic_jrank(a, j) + generic_jrank(b, j));
            CHECK(jdegree(s, j).value == jdegree(a, j).value + jdegree(b, j).value);
        }
    }
}

TEST_CASE("images of point operators lie in the radical") {
    std::mt19937_64 rng(5);
    for (uint32_t p : {3u, 5u})
        for (const auto& m : catalog(p)) {
            auto rad = radical_power(m, 1);
            auto E = GF::get(p, 2);
            Vec pt(m.r);
            for (auto& x : pt) x = E->random(rng);
            auto img = image_at(m, 1, E, pt);
            for (const auto& v : img.vectors()) {
                Mat col(E, 1, m.n);
                for (size_t k = 0; k < m.n; ++k) col.at(0, k) = v[k];
                // v lies in the lifted radical: rank does not grow
                Mat both(E, rad.dim() + 1, m.n);
                for (size_t i = 0; i < rad.dim(); ++i)
                    for (size_t k = 0; k < m.n; ++k) both.at(i, k) = rad.basis.at(i, k);
                for (size_t k = 0; k < m.n; ++k) both.at(rad.dim(), k) = v[k];
                CHECK(rank(both) == rad.dim());
            }
        }
}

TEST_CASE("Hermite route agrees with the minor route") {
    InvariantOptions small;
    small.minor_budget = 1;
    size_t hermite = 0;
    for (uint32_t p : {3u, 5u})
        for (const auto& spec : zoo_catalog(p)) {
            auto m = zoo(spec);
            if (m.r != 2) continue;
            for (int j = 1; j < static_cast<int>(p); ++j) {
                auto a = jdegree(m, j);
                auto b = jdegree(m, j, small);
                CAPTURE(spec);
                REQUIRE(a.determined);
                REQUIRE(b.determined);
                CHECK(a.value == b.value);
                hermite += b.route == "hermite";
            }
        }
    CHECK(hermite >= 20);
}

TEST_CASE("reduced chart tuple of U/Rad^3 at j = 2") {
    auto m = zoo("mn:p=3,n=3");
    auto t = reduced_chart_tuple(m, 2);
    auto s = MPoly::var(3, 2, 0), u = MPoly::var(3, 2, 1);
    std::vector<MPoly> want = {MPoly(3, 2), MPoly(3, 2), MPoly(3, 2), s * s, (s * u).scale(2), u * u};
    CHECK(proportional(t, want));
}

TEST_CASE("EIP and EKP match the degree characterization") {
    for (uint32_t p : {3u, 5u})
        for (const auto& m : catalog(p)) {
            std::vector<Constancy> cons;
            for (int j = 1; j < static_cast<int>(p); ++j) cons.push_back(constant_jrank_certify(m, j));
            auto eip = eip_test(m, {}, &cons), ekp = ekp_test(m, {}, &cons);
            CAPTURE(m.name);
            for (int j = 1; j < static_cast<int>(p); ++j) {
                if (cons[j - 1].constant != Tri::Yes) {
                    CHECK(eip.per_j[j - 1] == Tri::No);
                    continue;
                }
                auto d = jdegree(m, j);
                CHECK((eip.per_j[j - 1] == Tri::Yes) == (d.value == 0));
                CHECK((ekp.per_j[j - 1] == Tri::Yes) == (d.value == j * static_cast<int>(d.rank)));
            }
        }
    CHECK(eip_fast_path(zoo("v:p=3,r=2")));
    CHECK(!eip_fast_path(regular_module(3, 2)));
}

TEST_CASE("generic kernel") {
    auto check = [](const std::string& spec, size_t dim) {
        auto m = zoo(spec);
        auto k = generic_kernel(m);
        CAPTURE(spec);
        CHECK(k.kernel.dim() == dim);
        CHECK(k.tag == "verified");
        CHECK(k.codim == static_cast<size_t>(k.degree1));
        CHECK(is_submodule(m, k.kernel.space));
        // the kernel itself has the equal images property
        auto sub = restrict_to(m, k.kernel.space);
        if (sub.n > 0) CHECK(eip_test(sub).overall == Tri::Yes);
    };
    check("regular:p=3,r=2", 6);
    check("mn:p=3,n=2", 2);
    check("mn:p=3,n=4", 5);
    check("mr2:p=5", 3);
    check("v:p=3,r=2", 3);
}

TEST_CASE("Jordan types against the explicit Jordan basis oracle") {
    std::mt19937_64 rng(88);
    for (uint32_t p : {2u, 3u, 5u})
        for (const auto& m : catalog(p)) {
            auto F = m.field();
            for (uint32_t a = 0; a < p; ++a) {
                Vec pt(m.r, 0);
                pt[0] = 1;
                if (m.r > 1) pt[1] = a;
                auto want = oracle::jordan_blocks(oracle::from_mat(operator_at(m, F, pt)), p);
                CAPTURE(m.name);
                REQUIRE(!want.empty());
                CHECK(sizes_of(jordan_type_at(m, F, pt)) == want);
            }
            if (!m.commuting) continue;
            for (int t = 0; t < 3; ++t) {
                MPoly u(p, m.r);
                u += MPoly::var(p, m.r, 0).scale(1 + rng() % (p - 1));
                for (int i = 1; i < m.r; ++i) u += MPoly::var(p, m.r, i).scale(rng() % p);
                if (p > 2) u += (MPoly::var(p, m.r, 0) * MPoly::var(p, m.r, m.r - 1)).scale(rng() % p);
                auto want = oracle::jordan_blocks(ppoint_operator_oracle(m, u), p);
                REQUIRE(!want.empty());
                CHECK(sizes_of(jordan_type_at(m, u)) == want);
            }
        }
    CHECK(generic_jordan_type(zoo("hmod:p=3,r=2")).pretty() == "2[2]+1[3]");
    CHECK(jordan_from_ranks({4, 2, 0, 0}).to_string() == "0:2:0");
}

TEST_CASE("hom spaces against the Kronecker system") {
    std::vector<ModuleRep> ms = catalog(3);
    for (size_t i = 0; i < ms.size(); ++i)
        for (size_t k = 0; k < ms.size(); ++k) {
            if (ms[i].r != ms[k].r || ms[i].n * ms[k].n > 100) continue;
            auto H = hom_space(ms[i], ms[k]);
            CAPTURE(ms[i].name);
            CAPTURE(ms[k].name);
            CHECK(H.size() == oracle::hom_dim(ms[i], ms[k]));
            for (const auto& P : H)
                for (int g = 0; g < ms[i].r; ++g) CHECK(ms[k].gens[g] * P == P * ms[i].gens[g]);
        }
}

TEST_CASE("self-duality") {
    auto sd = [](const std::string& spec) { return self_dual_test(zoo(spec)); };
    CHECK(sd("regular:p=3,r=2").status == Tri::Yes);
    CHECK(sd("hmod:p=3,r=2").status == Tri::Yes);
    CHECK(sd("mr2:p=5").status == Tri::Yes);
    CHECK(sd("trivial:p=3,r=2,dim=2").status == Tri::Yes);
    auto v = sd("v:p=3,r=2");
    CHECK(v.status == Tri::No);
    CHECK(v.route == "invariants");
    CHECK(sd("mn:p=3,n=3").status == Tri::No);
    auto m = zoo("hmod:p=3,r=2");
    auto s = self_dual_test(m);
    if (s.iso) {
        auto d = dual_module(m);
        CHECK(det(*s.iso) != 0);
        for (int g = 0; g < m.r; ++g) CHECK(d.gens[g] * *s.iso == *s.iso * m.gens[g]);
    }
    InvariantOptions capped;
    capped.selfdual_max_dim = 4;
    auto u = self_dual_test(regular_module(3, 2), capped);
    CHECK(u.status == Tri::Undet);
    CHECK(u.route == "dimension-cap");
}

TEST_CASE("small modules of constant rank have rank zero") {
    std::mt19937_64 rng(9);
    auto F = GF::get(3);
    int constant_seen = 0;
    for (int t = 0; t < 200; ++t) {
        int r = 2 + t % 2;
        size_t n = 1 + rng() % r;
        Mat N(F, n, n);
        for (size_t i = 0; i + 1 < n; ++i) N.at(i + 1, i) = rng() % 3;
        std::vector<Mat> gens;
        for (int i = 0; i < r; ++i) gens.push_back(N.scale(rng() % 3) + N.pow(2).scale(rng() % 3));
        auto m = ModuleRep::make(3, gens);
        auto c = constant_jrank_certify(m, 1);
        if (c.constant != Tri::Yes) continue;
        ++constant_seen;
        CHECK(c.generic_rank == 0);
    }
    CHECK(constant_seen > 0);
    CHECK(generic_jrank(v_module(3, 3), 1) == 1);
    CHECK(constant_jrank_certify(v_module(3, 3), 1).constant == Tri::Yes);
}

TEST_CASE("reports and their rendering") {
    auto rep = report(regular_module(3, 2));
    CHECK(rep.ranks == std::vector<size_t>{6, 3});
    CHECK(rep.jordan.pretty() == "3[3]");
    CHECK(rep.constant_jordan == Tri::Yes);
    CHECK(rep.self_dual.status == Tri::Yes);
    REQUIRE(rep.kernel);
    CHECK(rep.kernel->kernel.dim() == 6);
    CHECK(!rep.checks.empty());
    CHECK(csv_header(3) == "name,p,r,dim,rk_1,constant_1,deg_1,rk_2,constant_2,deg_2,jordan_type,eip,ekp,self_dual,generic_kernel_dim\n");
    CHECK(csv_row(rep, 5).find(",na,na,na,na,na,na,") != std::string::npos);
    CHECK(report_json(rep).find("\"levels\"") != std::string::npos);
    for (uint32_t p : {3u, 5u})
        for (const auto& m : catalog(p)) CHECK_NOTHROW(report(m));
}
