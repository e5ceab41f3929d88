// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "modinv/invariants.hpp"
#include "modinv/projmaps.hpp"
#include "oracles.hpp"

using namespace modinv;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    void expect(bool c, const std::string& what) {
        if (!c) {
            if (!ok) detail << "; ";
            ok = false;
            detail << what;
        }
    }
};

int failures = 0;

void criterion(int n, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail << "exception: " << e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && s >= limit_s) {
        o.ok = false;
        o.detail << " (took " << s << " s, limit " << limit_s << " s)";
    }
    if (!o.ok) ++failures;
    std::string d = o.detail.str();
    if (!d.empty() && d[0] != ' ') d = " " + d;
    std::printf("criterion %d: %s (%.2f s)%s\n", n, o.ok ? "PASS" : "FAIL", s, d.c_str());
    std::fflush(stdout);
}

int deg(const ModuleRep& m, int j, const InvariantOptions& opt = {}) {
    auto d = jdegree(m, j, opt);
    if (!d.determined) throw std::runtime_error(m.name + ": degree undetermined: " + d.reason);
    return d.value;
}

std::vector<size_t> sizes_of(const JordanType& jt) {
    std::vector<size_t> s;
    for (size_t i = 0; i < jt.a.size(); ++i)
        for (size_t k = 0; k < jt.a[i]; ++k) s.push_back(i + 1);
    return s;
}

oracle::Dense ppoint_operator(const ModuleRep& m, const MPoly& u) {
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

ModuleRep first_two_generators(const ModuleRep& m) { return ModuleRep::make(m.p, {m.gens[0], m.gens[1]}, m.name + "|x1,x2"); }

MPoly random_binary_form(std::mt19937_64& rng, uint32_t p, int nv, int deg) {
    MPoly f(p, nv);
    std::function<void(int, int, Mono)> rec = [&](int i, int left, Mono cur) {
        if (i == nv - 1) {
            f += MPoly::monomial(p, nv, cur | mono_var(i, left), static_cast<uint32_t>(rng() % p));
            return;
        }
        for (int e = left; e >= 0; --e) rec(i + 1, left - e, cur | mono_var(i, e));
    };
    rec(0, deg, 0);
    return f;
}

}  // namespace

int main() {
    criterion(1, 5, [](Outcome& o) {
        auto u = zoo("regular:p=3,r=2"), rad = zoo("rad:p=3,r=2,s=1"), m2 = zoo("mn:p=3,n=2"), m4 = zoo("mn:p=3,n=4");
        struct Row {
            const ModuleRep* m;
            int j, want;
        };
        for (auto r : std::vector<Row>{{&u, 1, 3}, {&u, 2, 3}, {&rad, 1, 2}, {&rad, 2, 1}, {&m2, 1, 1}, {&m2, 2, 0}, {&m4, 1, 3}, {&m4, 2, 3}}) {
            int got = deg(*r.m, r.j);
            o.expect(got == r.want, r.m->name + " deg^" + std::to_string(r.j) + " = " + std::to_string(got));
        }
    });

    criterion(2, 2, [](Outcome& o) {
        auto m3 = zoo("mn:p=3,n=3"), n = zoo("m3xy:p=3");
        auto a = MPoly::var(3, 2, 0), b = MPoly::var(3, 2, 1), z = MPoly(3, 2);
        o.expect(proportional(reduced_chart_tuple(m3, 2), {z, z, z, a * a, (a * b).scale(2), b * b}), "M3 chart tuple");
        o.expect(deg(m3, 2) == 2, "deg^2(M3)");
        o.expect(deg(n, 2) == 2, "deg^2(N)");
        auto F9 = GF::get(3, 2);
        size_t n_collide = 0, m_collide = 0, total = 0;
        for (GF::Elem beta = 1; beta < F9->q(); ++beta) {
            if (F9->in_base(beta)) continue;
            ++total;
            Vec p1 = {1, beta}, p2 = {1, F9->neg(beta)};
            n_collide += image_at(n, 2, F9, p1) == image_at(n, 2, F9, p2);
            m_collide += image_at(m3, 2, F9, p1) == image_at(m3, 2, F9, p2);
        }
        o.expect(n_collide == total, "N separates some (1:b), (1:-b)");
        o.expect(m_collide == 0, "M3 collides somewhere");
    });

    criterion(3, 60, [](Outcome& o) {
        size_t modules = 0, pairs = 0;
        for (uint32_t p : {3u, 5u})
            for (const auto& spec : zoo_catalog(p)) {
                auto m = zoo(spec);
                auto d = dual_module(m);
                bool any = false;
                for (int j = 1; j < static_cast<int>(p); ++j) {
                    auto c = constant_jrank_certify(m, j);
                    if (c.constant != Tri::Yes) continue;
                    any = true;
                    ++pairs;
                    int lhs = deg(m, j) + deg(d, j);
                    o.expect(lhs == j * static_cast<int>(c.generic_rank), spec + " j=" + std::to_string(j));
                }
                modules += any;
            }
        o.expect(modules >= 10, "fewer than 10 constant modules");
        o.detail << (o.ok ? "" : "; ") << modules << " modules, " << pairs << " levels";
    });

    criterion(4, 30, [](Outcome& o) {
        auto u = zoo("regular:p=3,r=2");
        for (int j = 1; j <= 2; ++j) {
            auto c = constant_jrank_certify(u, j);
            o.expect(c.constant == Tri::Yes && c.route == "gcd", "U0(e2) j=" + std::to_string(j) + " route " + c.route);
        }
        auto mr = zoo("mr2:p=5");
        o.expect(constant_jrank_certify(mr, 1).constant == Tri::Yes, "M_{r+2} j=1");
        auto c2 = constant_jrank_certify(mr, 2);
        o.expect(c2.constant == Tri::No && c2.witness && c2.witness->to_string() == "(1,2)", "M_{r+2} j=2 witness");
        auto u3 = zoo("regular:p=3,r=3");
        auto c3 = constant_jrank_certify(u3, 1);
        o.expect(c3.constant == Tri::Yes && c3.route == "groebner", "U0(e3) route " + c3.route);
    });

    criterion(5, 0, [](Outcome& o) {
        for (const std::string spec : {"regular:p=3,r=2", "mn:p=3,n=2", "mn:p=3,n=4", "v:p=3,r=2", "mr2:p=5"}) {
            auto m = zoo(spec);
            auto k = generic_kernel(m);
            o.expect(k.tag == "verified", spec + " tag " + k.tag);
            o.expect(m.n - k.kernel.dim() == static_cast<size_t>(deg(m, 1)), spec + " codim");
            if (spec == "regular:p=3,r=2") o.expect(k.kernel.dim() == 6, "dim K(U0(e2))");
        }
    });

    criterion(6, 0, [](Outcome& o) {
        for (const std::string spec : {"soc2:p=3,r=3", "regular:p=3,r=3"}) {
            auto m = zoo(spec);
            auto m2 = first_two_generators(m);
            for (int j = 1; j <= 2; ++j) {
                int global = deg(m, j);
                int restricted = deg(m2, j);
                int via_lines = 0;
                for (const auto& t : block_chart_tuples(m, j)) {
                    auto reduced = reduce_defining_system(DefiningSystem::make(t)).system;
                    via_lines += degree_of_morphism(line_restrict(reduced, {1, 0, 0}, {0, 1, 0}));
                }
                std::string tag = spec + " j=" + std::to_string(j);
                o.expect(global == restricted, tag + ": " + std::to_string(global) + " vs module on x1,x2 " + std::to_string(restricted));
                o.expect(global == via_lines, tag + ": " + std::to_string(global) + " vs restricted tuples " + std::to_string(via_lines));
            }
        }
    });

    criterion(7, 0, [](Outcome& o) {
        for (uint32_t p : {3u, 5u}) {
            std::string P = std::to_string(p);
            for (const std::string spec : {"regular:p=" + P + ",r=2", "regular:p=" + P + ",r=3", "hmod:p=" + P + ",r=2"}) {
                Limits lim;
                lim.max_dim = 200;
                auto m = zoo(spec, lim);
                InvariantOptions opt;
                opt.selfdual_max_dim = 200;
                opt.degrees = false;
                auto rep = report(m, opt);
                bool parity = std::find(rep.checks.begin(), rep.checks.end(), "self-dual-parity") != rep.checks.end();
                o.expect(parity, spec + " parity check not run (self-dual " + tri_name(rep.self_dual.status) + ")");
                if (spec.rfind("regular", 0) == 0) {
                    size_t want = (m.n / p) * (p - 1);
                    o.expect(rep.ranks[0] == want && want % 2 == 0, spec + " rk^1");
                }
            }
        }
        auto h = report(zoo("hmod:p=3,r=2"));
        o.expect(h.constant_jordan == Tri::Yes && h.jordan.pretty() == "2[2]+1[3]", "H(e2) Jordan type " + h.jordan.pretty());
    });

    criterion(8, 0, [](Outcome& o) {
        for (int r : {2, 3, 4}) {
            auto v = v_module(3, r);
            auto c = constant_jrank_certify(v, 1);
            o.expect(v.n == static_cast<size_t>(r + 1) && c.constant == Tri::Yes && c.generic_rank == 1, "V_{r+1} r=" + std::to_string(r));
        }
        std::mt19937_64 rng(2024);
        size_t certified = 0, attempts = 0, nonzero = 0;
        while (certified < 500 && attempts < 100000) {
            ++attempts;
            int r = 2 + static_cast<int>(rng() % 3);
            size_t n = 1 + rng() % r;
            // p >= n keeps every polynomial in a nilpotent n x n matrix p-nilpotent
            uint32_t p = std::vector<uint32_t>{2, 3, 5}[rng() % 3];
            while (p < n) p = p == 2 ? 3 : 5;
            auto F = GF::get(p);
            std::vector<Mat> gens;
            if (rng() % 2) {
                // polynomials without constant term in one nilpotent matrix
                Mat N(F, n, n);
                for (size_t i = 0; i < n; ++i)
                    for (size_t k = 0; k < i; ++k) N.at(i, k) = static_cast<GF::Elem>(rng() % p);
                for (int i = 0; i < r; ++i) {
                    Mat X(F, n, n);
                    Mat P = N;
                    for (size_t e = 1; e < n; ++e, P = P * N) X = X + P.scale(static_cast<GF::Elem>(rng() % p));
                    gens.push_back(X);
                }
            } else {
                // U / (Rad^2 + W): e_0 maps onto a quotient of the span of x_1..x_r
                size_t k = n - 1;
                for (int i = 0; i < r; ++i) {
                    Mat X(F, n, n);
                    for (size_t a = 0; a < k; ++a) X.at(1 + a, 0) = static_cast<GF::Elem>(rng() % p);
                    gens.push_back(X);
                }
            }
            auto m = ModuleRep::make(p, gens);
            validate_frame(m);
            auto c = constant_jrank_certify(m, 1);
            if (c.constant != Tri::Yes) continue;
            ++certified;
            nonzero += c.generic_rank != 0;
        }
        o.expect(certified == 500, "only " + std::to_string(certified) + " certified frames");
        o.expect(nonzero == 0, std::to_string(nonzero) + " frames of constant nonzero rank");
        if (o.ok) o.detail << " " << certified << " certified of " << attempts;
    });

    criterion(9, 0, [](Outcome& o) {
        for (int d : {2, 3}) o.expect(degree_of_morphism(veronese(3, 2, d)) == d, "nu_" + std::to_string(d));
        std::mt19937_64 rng(99);
        int done = 0;
        while (done < 50) {
            uint32_t p = std::vector<uint32_t>{3, 5, 7}[rng() % 3];
            int d1 = 1 + static_cast<int>(rng() % 3), d2 = 1 + static_cast<int>(rng() % 3);
            DefiningSystem phi, psi;
            if (rng() % 2) {
                phi = DefiningSystem::make({random_binary_form(rng, p, 2, d1), random_binary_form(rng, p, 2, d1)});
                psi = DefiningSystem::make({random_binary_form(rng, p, 2, d2), random_binary_form(rng, p, 2, d2)});
                // a map P^1 -> P^1 is base-point free iff its components are coprime
            } else {
                phi = DefiningSystem::make({random_binary_form(rng, p, 2, d1), random_binary_form(rng, p, 2, d1),
                                            random_binary_form(rng, p, 2, d1)});
                psi = veronese(p, 3, d2);
            }
            if (!phi.reduced || !psi.reduced || phi.degree != d1 || psi.degree != d2) continue;
            int got = degree_of_morphism(compose_systems(psi, phi));
            o.expect(got == d1 * d2, "pair " + std::to_string(done));
            ++done;
        }
    });

    criterion(10, 0, [](Outcome& o) {
        std::vector<ModuleRep> zoo_all;
        for (uint32_t p : {2u, 3u, 5u})
            for (const auto& s : zoo_catalog(p)) zoo_all.push_back(zoo(s));
        for (const std::string s : {"regular:p=3,r=3", "soc2:p=3,r=3", "v:p=3,r=3", "v:p=5,r=4"}) zoo_all.push_back(zoo(s));
        size_t points = 0, ppoints = 0, levels = 0;
        std::mt19937_64 rng(10);
        for (const auto& m : zoo_all) {
            auto F = m.field();
            // every point of P^{r-1}(F_p), first nonzero coordinate 1
            for (int lead = 0; lead < m.r; ++lead) {
                size_t count = 1;
                for (int i = lead + 1; i < m.r; ++i) count *= m.p;
                for (size_t idx = 0; idx < count; ++idx) {
                    Vec pt(m.r, 0);
                    pt[lead] = 1;
                    size_t x = idx;
                    for (int i = lead + 1; i < m.r; ++i, x /= m.p) pt[i] = static_cast<GF::Elem>(x % m.p);
                    auto want = oracle::jordan_blocks(oracle::from_mat(operator_at(m, F, pt)), m.p);
                    o.expect(!want.empty() && sizes_of(jordan_type_at(m, F, pt)) == want, m.name + " at a point");
                    ++points;
                }
            }
            auto E = GF::get(m.p, 3);
            for (int j = 1; j < static_cast<int>(m.p); ++j) {
                PolyMat T = theta_power(m.gens, j);
                size_t best = 0;
                for (int s = 0; s < 200; ++s) {
                    Vec pt(m.r);
                    for (auto& c : pt) c = E->random(rng);
                    best = std::max(best, rank(specialize(T, E, pt)));
                }
                o.expect(best == generic_rank_of(T), m.name + " generic rank j=" + std::to_string(j));
                ++levels;
            }
        }
        std::vector<ModuleRep> commuting;
        for (const auto& m : zoo_all)
            if (m.commuting && m.n > 0) commuting.push_back(m);
        for (int t = 0; t < 50; ++t) {
            const auto& m = commuting[rng() % commuting.size()];
            uint32_t p = m.p;
            MPoly u(p, m.r);
            while (true) {
                u = MPoly(p, m.r);
                for (int i = 0; i < m.r; ++i) u += MPoly::var(p, m.r, i).scale(static_cast<uint32_t>(rng() % p));
                if (!u.is_zero()) break;
            }
            for (int i = 0; i < m.r; ++i)
                for (int k = i; k < m.r; ++k)
                    if (p > 2 || i != k)
                        u += (MPoly::var(p, m.r, i) * MPoly::var(p, m.r, k)).scale(static_cast<uint32_t>(rng() % p));
            auto want = oracle::jordan_blocks(ppoint_operator(m, u), p);
            o.expect(!want.empty() && sizes_of(jordan_type_at(m, u)) == want, m.name + " at p-point " + u.to_string());
            ++ppoints;
        }
        if (o.ok) o.detail << " " << points << " points, " << ppoints << " p-points, " << levels << " theta powers";
    });

    return failures == 0 ? 0 : 1;
}
