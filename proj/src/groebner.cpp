#include "modinv/groebner.hpp"

#include <algorithm>

namespace modinv {

namespace {

struct Pair {
    size_t i, j;
    Mono lcm;
    int deg;
    uint64_t key;
};

bool is_pure_power(Mono m, int nv, int* var) {
    int found = -1;
    for (int i = 0; i < nv; ++i) {
        if (mono_exp(m, i)) {
            if (found >= 0) return false;
            found = i;
        }
    }
    if (var) *var = found;
    return found >= 0;
}

class Reducer {
public:
    Reducer(uint32_t p, int nv) : p_(p), nv_(nv) {}

    // full reduction of f modulo polys[active]
    MPoly reduce(const MPoly& f, const std::vector<MPoly>& polys, const std::vector<bool>& active) const {
        std::vector<std::pair<Mono, uint32_t>> done;
        MPoly r = f;
        while (!r.is_zero()) {
            const Term lt = r.lead();
            const MPoly* g = nullptr;
            for (size_t k = 0; k < polys.size(); ++k) {
                if (!active[k]) continue;
                if (mono_divides(polys[k].lead().m, lt.m)) { g = &polys[k]; break; }
            }
            if (g) {
                uint32_t c = fp_mul(lt.c, fp_inv(g->lead().c, p_), p_);
                r = r.sub_mul(lt.m - g->lead().m, c, *g);
            } else {
                done.push_back({lt.m, lt.c});
                r = r - MPoly::monomial(p_, nv_, lt.m, lt.c);
            }
        }
        return MPoly::from_terms(p_, nv_, std::move(done));
    }

private:
    uint32_t p_;
    int nv_;
};

MPoly spoly(const MPoly& f, const MPoly& g, Mono lcm) {
    uint32_t p = f.p();
    MPoly a = f.mul_term(lcm - f.lead().m, fp_inv(f.lead().c, p));
    MPoly b = g.mul_term(lcm - g.lead().m, fp_inv(g.lead().c, p));
    return a - b;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<MPoly>& gens, const GroebnerOptions& opt,
                         const std::function<bool(const std::vector<MPoly>&)>& stop) {
    GroebnerBasis out;
    std::vector<MPoly> G;
    std::vector<bool> active;  // not redundant
    std::vector<Pair> B;
    uint32_t p = 2;
    int nv = 0;
    bool have = false;
    for (const auto& g : gens) {
        if (have && (g.p() != p || g.nvars() != nv)) fail(ErrorCode::Dimension, "generators live in different rings");
        p = g.p();
        nv = g.nvars();
        have = true;
    }
    if (!have) fail(ErrorCode::Dimension, "empty generator list");
    out.p = p;
    out.nv = nv;
    Reducer red(p, nv);

    auto insert = [&](MPoly h) {
        h = h.scale(fp_inv(h.lead().c, p));
        size_t k = G.size();
        Mono lk = h.lead().m;
        // Gebauer-Moeller: drop old pairs whose lcm is strictly covered by the new element
        std::vector<Pair> kept;
        for (const auto& pr : B) {
            Mono li = mono_lcm(G[pr.i].lead().m, lk), lj = mono_lcm(G[pr.j].lead().m, lk);
            if (mono_divides(lk, pr.lcm) && li != pr.lcm && lj != pr.lcm) continue;
            kept.push_back(pr);
        }
        B.swap(kept);
        // new pairs
        std::vector<Pair> fresh;
        for (size_t i = 0; i < k; ++i) {
            if (!active[i]) continue;
            Mono l = mono_lcm(G[i].lead().m, lk);
            fresh.push_back({i, k, l, mono_deg(l), grevlex_key(l, nv)});
        }
        // drop pairs whose lcm is a proper multiple of another fresh lcm; keep one per lcm
        std::vector<Pair> sel;
        std::sort(fresh.begin(), fresh.end(), [](const Pair& a, const Pair& b) { return a.key < b.key; });
        for (const auto& pr : fresh) {
            bool drop = false;
            for (const auto& s : sel)
                if (mono_divides(s.lcm, pr.lcm)) { drop = true; break; }
            if (!drop) sel.push_back(pr);
        }
        for (const auto& pr : sel) {
            // coprime leading terms: the S-polynomial reduces to zero
            if (pr.lcm == mono_mul(G[pr.i].lead().m, lk)) continue;
            B.push_back(pr);
        }
        for (size_t i = 0; i < k; ++i)
            if (active[i] && mono_divides(lk, G[i].lead().m)) active[i] = false;
        G.push_back(std::move(h));
        active.push_back(true);
    };

    std::vector<MPoly> init;
    for (const auto& g : gens)
        if (!g.is_zero()) init.push_back(g);
    std::sort(init.begin(), init.end(), [](const MPoly& a, const MPoly& b) { return a.lead().key < b.lead().key; });
    for (const auto& g : init) {
        MPoly h = red.reduce(g, G, active);
        if (!h.is_zero()) insert(h);
        if (stop && stop(G)) { out.complete = false; break; }
    }

    size_t processed = 0;
    while (out.complete && !B.empty()) {
        auto it = std::min_element(B.begin(), B.end(), [](const Pair& a, const Pair& b) {
            return a.deg != b.deg ? a.deg < b.deg : a.key < b.key;
        });
        Pair pr = *it;
        B.erase(it);
        if (++processed > opt.pair_budget)
            fail(ErrorCode::Resource, "Groebner pair budget of " + std::to_string(opt.pair_budget) + " exceeded");
        MPoly s = spoly(G[pr.i], G[pr.j], pr.lcm);
        MPoly h = red.reduce(s, G, active);
        if (h.is_zero()) continue;
        insert(h);
        if (h.is_constant()) break;
        if (stop && stop(G)) { out.complete = false; break; }
    }
    out.pairs_processed = processed;

    // minimal, then inter-reduced
    std::vector<MPoly> mins;
    for (size_t k = 0; k < G.size(); ++k) {
        if (!active[k]) continue;
        bool dup = false;
        for (const auto& m : mins)
            if (mono_divides(m.lead().m, G[k].lead().m)) { dup = true; break; }
        if (!dup) mins.push_back(G[k]);
    }
    for (const auto& g : G)
        if (g.is_constant()) mins = {MPoly::constant(p, nv, 1)};
    std::vector<MPoly> reduced;
    for (size_t k = 0; k < mins.size(); ++k) {
        std::vector<bool> act(mins.size(), true);
        act[k] = false;
        MPoly tail = mins[k] - MPoly::monomial(p, nv, mins[k].lead().m, mins[k].lead().c);
        MPoly r = red.reduce(tail, mins, act) + MPoly::monomial(p, nv, mins[k].lead().m, mins[k].lead().c);
        reduced.push_back(r.scale(fp_inv(r.lead().c, p)));
    }
    std::sort(reduced.begin(), reduced.end(), [](const MPoly& a, const MPoly& b) { return a.lead().key < b.lead().key; });
    out.basis = std::move(reduced);
    return out;
}

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& g) {
    Reducer red(f.p(), f.nvars());
    return red.reduce(f, g, std::vector<bool>(g.size(), true));
}

MPoly normal_form(const MPoly& f, const GroebnerBasis& g) { return normal_form(f, g.basis); }

bool ideal_member(const MPoly& f, const GroebnerBasis& g) { return normal_form(f, g).is_zero(); }

bool radical_membership(const MPoly& f, const std::vector<MPoly>& ideal, const GroebnerOptions& opt) {
    if (f.is_zero()) fail(ErrorCode::Dimension, "radical membership of the zero polynomial");
    int nv = f.nvars();
    if (nv + 1 > kMaxVars) fail(ErrorCode::Resource, "too many variables for the Rabinowitsch extension");
    uint32_t p = f.p();
    std::vector<MPoly> gens;
    for (const auto& g : ideal) gens.push_back(g.with_nvars(nv + 1));
    MPoly z = MPoly::var(p, nv + 1, nv);
    gens.push_back(MPoly::constant(p, nv + 1, 1) - z * f.with_nvars(nv + 1));
    auto gb = buchberger(gens, opt, [](const std::vector<MPoly>& G) {
        return std::any_of(G.begin(), G.end(), [](const MPoly& g) { return g.is_constant(); });
    });
    return std::any_of(gb.basis.begin(), gb.basis.end(), [](const MPoly& g) { return g.is_constant(); });
}

std::string EmptinessCertificate::describe() const {
    std::string s = std::string(empty ? "empty" : "nonempty") + " via " + route;
    if (route == "gcd") s += " (gcd " + gcd.to_string() + ")";
    if (route == "groebner") {
        s += " (pure powers:";
        for (size_t i = 0; i < pure_powers.size(); ++i)
            s += " t" + std::to_string(i + 1) + "^" + (pure_powers[i] < 0 ? std::string("-") : std::to_string(pure_powers[i]));
        s += "; pairs " + std::to_string(pairs) + ")";
    }
    return s;
}

EmptinessCertificate projective_zero_empty(const std::vector<MPoly>& gens, const GroebnerOptions& opt) {
    EmptinessCertificate cert;
    std::vector<MPoly> nz;
    for (const auto& g : gens) {
        auto h = g.homogeneity();
        if (h.kind == Homogeneity::Inhomogeneous) fail(ErrorCode::Dimension, "projective emptiness needs homogeneous generators");
        if (h.kind == Homogeneity::Homogeneous) nz.push_back(g);
    }
    if (nz.empty()) {
        cert.route = "trivial";
        cert.empty = false;
        return cert;
    }
    int r = nz[0].nvars();
    if (r <= 1) {
        cert.route = "r1";
        cert.empty = true;
        return cert;
    }
    if (r == 2) {
        cert.route = "gcd";
        cert.gcd = gcd(nz);
        cert.empty = cert.gcd.total_degree() == 0;
        return cert;
    }
    cert.route = "groebner";
    auto powers = [r](const std::vector<MPoly>& G) {
        std::vector<int> pw(r, -1);
        for (const auto& g : G) {
            if (g.is_constant()) { std::fill(pw.begin(), pw.end(), 0); return pw; }
            int v;
            if (is_pure_power(g.lead().m, r, &v)) {
                int d = mono_exp(g.lead().m, v);
                if (pw[v] < 0 || d < pw[v]) pw[v] = d;
            }
        }
        return pw;
    };
    auto gb = buchberger(nz, opt, [&](const std::vector<MPoly>& G) {
        auto pw = powers(G);
        return std::all_of(pw.begin(), pw.end(), [](int d) { return d >= 0; });
    });
    cert.pairs = gb.pairs_processed;
    cert.pure_powers = powers(gb.basis);
    cert.empty = std::all_of(cert.pure_powers.begin(), cert.pure_powers.end(), [](int d) { return d >= 0; });
    return cert;
}

}  // namespace modinv
