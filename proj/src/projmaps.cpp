#include "modinv/projmaps.hpp"

namespace modinv {

DefiningSystem DefiningSystem::make(std::vector<MPoly> f) {
    if (f.empty()) fail(ErrorCode::UndefinedSystem, "empty defining system");
    DefiningSystem s;
    int deg = -1;
    for (const auto& g : f) {
        if (g.nvars() != f[0].nvars() || g.p() != f[0].p())
            fail(ErrorCode::Dimension, "defining system entries live in different rings");
        auto h = g.homogeneity();
        if (h.kind == Homogeneity::Zero) continue;
        if (h.kind == Homogeneity::Inhomogeneous) fail(ErrorCode::UndefinedSystem, "entry is not homogeneous");
        if (deg >= 0 && h.degree != deg) fail(ErrorCode::UndefinedSystem, "entries have different degrees");
        deg = h.degree;
    }
    if (deg < 0) fail(ErrorCode::UndefinedSystem, "all entries of the defining system are zero");
    s.f = std::move(f);
    s.degree = deg;
    s.reduced = gcd(s.f).total_degree() == 0;
    return s;
}

ReducedSystem reduce_defining_system(const DefiningSystem& s) {
    ReducedSystem out;
    out.divisor = gcd(s.f);
    std::vector<MPoly> g;
    for (const auto& x : s.f) g.push_back(x.is_zero() ? x : divexact(x, out.divisor));
    out.system = DefiningSystem::make(std::move(g));
    out.system.reduced = true;
    return out;
}

int degree_of_morphism(const DefiningSystem& s) { return reduce_defining_system(s).system.degree; }

DefiningSystem compose_systems(const DefiningSystem& outer, const DefiningSystem& inner) {
    if (static_cast<int>(inner.size()) != outer.nvars())
        fail(ErrorCode::Dimension, "inner system size must equal the outer variable count");
    std::vector<MPoly> g;
    for (const auto& x : outer.f) g.push_back(x.is_zero() ? MPoly(inner.p(), inner.nvars()) : x.substitute(inner.f));
    return DefiningSystem::make(std::move(g));
}

DefiningSystem line_restrict(const DefiningSystem& s, const std::vector<long long>& a, const std::vector<long long>& b) {
    int r = s.nvars();
    if (static_cast<int>(a.size()) != r || static_cast<int>(b.size()) != r)
        fail(ErrorCode::Dimension, "line points have the wrong length");
    uint32_t p = s.p();
    auto F = GF::get(p);
    Mat m(F, 2, r);
    for (int i = 0; i < r; ++i) { m.at(0, i) = F->from_int(a[i]); m.at(1, i) = F->from_int(b[i]); }
    if (rank(m) < 2) fail(ErrorCode::Degeneracy, "line restriction needs independent points");
    MPoly u = MPoly::var(p, 2, 0), v = MPoly::var(p, 2, 1);
    std::vector<MPoly> sub;
    for (int i = 0; i < r; ++i) sub.push_back(u.scale(m.at(0, i)) + v.scale(m.at(1, i)));
    std::vector<MPoly> g;
    for (const auto& x : s.f) g.push_back(x.is_zero() ? MPoly(p, 2) : x.substitute(sub));
    bool all_zero = true;
    for (const auto& x : g) all_zero = all_zero && x.is_zero();
    if (all_zero) fail(ErrorCode::Degeneracy, "the line lies in the base locus of the system");
    return DefiningSystem::make(std::move(g));
}

std::vector<MPoly> normalize_tuple(const std::vector<MPoly>& t) {
    std::vector<MPoly> out = t;
    for (const auto& x : t) {
        if (x.is_zero()) continue;
        uint32_t li = fp_inv(x.lead_grlex().c, x.p());
        for (auto& y : out) y = y.scale(li);
        break;
    }
    return out;
}

bool proportional(const std::vector<MPoly>& a, const std::vector<MPoly>& b) {
    if (a.size() != b.size()) return false;
    auto na = normalize_tuple(a), nb = normalize_tuple(b);
    for (size_t i = 0; i < na.size(); ++i)
        if (na[i] != nb[i]) return false;
    return true;
}

namespace {
void monomials_rec(int nv, int i, int left, Mono cur, std::vector<Mono>& out) {
    if (i == nv - 1) { out.push_back(cur | mono_var(i, left)); return; }
    for (int e = left; e >= 0; --e) monomials_rec(nv, i + 1, left - e, cur | mono_var(i, e), out);
}
}  // namespace

DefiningSystem veronese(uint32_t p, int nvars, int d) {
    if (nvars < 1 || d < 0) fail(ErrorCode::Range, "bad Veronese parameters");
    std::vector<Mono> ms;
    monomials_rec(nvars, 0, d, 0, ms);
    std::vector<MPoly> f;
    for (Mono m : ms) f.push_back(MPoly::monomial(p, nvars, m, 1));
    return DefiningSystem::make(std::move(f));
}

DefiningSystem sl2_zeta(uint32_t p) {
    MPoly x = MPoly::var(p, 2, 0), y = MPoly::var(p, 2, 1);
    return DefiningSystem::make({x * y, x * x, -(y * y), -(x * y)});
}

}  // namespace modinv
