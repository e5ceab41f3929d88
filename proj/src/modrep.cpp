#include "modinv/modrep.hpp"

#include <algorithm>

namespace modinv {

ModuleRep ModuleRep::make(uint32_t p, std::vector<Mat> gens, std::string name, const Limits& lim) {
    if (!is_prime(p) || p > kMaxPrime) fail(ErrorCode::Range, "p must be a prime <= 31");
    if (gens.empty()) fail(ErrorCode::Dimension, "a frame needs at least one generator");
    if (static_cast<int>(gens.size()) > kMaxVars - 1)
        fail(ErrorCode::Range, "at most " + std::to_string(kMaxVars - 1) + " generators are supported");
    ModuleRep m;
    m.p = p;
    m.r = static_cast<int>(gens.size());
    m.n = gens[0].rows;
    if (m.n > lim.max_dim) fail(ErrorCode::Resource, "module dimension " + std::to_string(m.n) + " exceeds the cap " + std::to_string(lim.max_dim));
    for (const auto& g : gens) {
        if (g.rows != m.n || g.cols != m.n) fail(ErrorCode::Dimension, "generators must be square of equal size");
        if (g.F->p() != p || g.F->e() != 1) fail(ErrorCode::Dimension, "generators must have entries in F_p");
    }
    m.gens = std::move(gens);
    m.commuting = frame_commutes(m.gens);
    m.name = std::move(name);
    return m;
}

ModuleRep ModuleRep::make_zero(uint32_t p, int r, size_t n, std::string name) {
    auto F = GF::get(p);
    return make(p, std::vector<Mat>(r, Mat(F, n, n)), std::move(name), Limits{std::max<size_t>(n, 64), 3125});
}

bool frame_commutes(const std::vector<Mat>& gens) {
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    return true;
}

FrameCertificate validate_frame(const ModuleRep& m) {
    if (m.commuting) {
        bool ok = true;
        for (const auto& g : m.gens) ok = ok && g.pow(m.p).is_zero();
        if (ok) return {"commuting"};
    }
    PolyMat t = theta(m.gens);
    PolyMat tp = t;
    for (uint32_t k = 1; k < m.p; ++k) tp = tp * t;
    for (size_t i = 0; i < m.n; ++i)
        for (size_t j = 0; j < m.n; ++j) {
            const MPoly& f = tp.at(i, j);
            if (f.is_zero()) continue;
            MPoly lead = MPoly::monomial(m.p, m.r, f.lead_grlex().m, f.lead_grlex().c);
            fail(ErrorCode::InvalidFrame, "theta^" + std::to_string(m.p) + " is not zero: entry (" + std::to_string(i + 1) + "," +
                                              std::to_string(j + 1) + ") contains " + lead.to_string());
        }
    return {"expansion"};
}

std::vector<std::vector<int>> monomial_basis(uint32_t p, int r) {
    std::vector<std::vector<int>> all;
    std::vector<int> a(r, 0);
    while (true) {
        all.push_back(a);
        int i = r - 1;
        while (i >= 0 && a[i] == static_cast<int>(p) - 1) { a[i] = 0; --i; }
        if (i < 0) break;
        ++a[i];
    }
    std::stable_sort(all.begin(), all.end(), [](const std::vector<int>& x, const std::vector<int>& y) {
        int dx = 0, dy = 0;
        for (int v : x) dx += v;
        for (int v : y) dy += v;
        if (dx != dy) return dx < dy;
        return x > y;
    });
    return all;
}

ModuleRep regular_module(uint32_t p, int r, const Limits& lim) {
    if (r < 1) fail(ErrorCode::Range, "r must be positive");
    double size = 1;
    for (int i = 0; i < r; ++i) size *= p;
    if (size > static_cast<double>(lim.max_regular))
        fail(ErrorCode::Resource, "p^r exceeds the regular module cap " + std::to_string(lim.max_regular));
    auto basis = monomial_basis(p, r);
    size_t n = basis.size();
    auto index_of = [&](const std::vector<int>& a) {
        return static_cast<size_t>(std::find(basis.begin(), basis.end(), a) - basis.begin());
    };
    auto F = GF::get(p);
    std::vector<Mat> gens;
    for (int i = 0; i < r; ++i) {
        Mat X(F, n, n);
        for (size_t c = 0; c < n; ++c) {
            auto a = basis[c];
            if (a[i] + 1 >= static_cast<int>(p)) continue;
            ++a[i];
            X.at(index_of(a), c) = 1;
        }
        gens.push_back(std::move(X));
    }
    return ModuleRep::make(p, std::move(gens), "regular:p=" + std::to_string(p) + ";r=" + std::to_string(r), lim);
}

Subspace radical_power(const ModuleRep& m, int s) {
    auto F = m.field();
    Subspace cur = Subspace::full(F, m.n);
    for (int k = 0; k < s && cur.dim() > 0; ++k) {
        std::vector<Vec> vs;
        for (const auto& g : m.gens)
            for (const auto& v : cur.vectors()) vs.push_back(g.apply(v));
        cur = Subspace::span(F, m.n, vs);
    }
    return cur;
}

Subspace socle_power(const ModuleRep& m, int s) {
    auto F = m.field();
    Subspace cur = Subspace::zero(F, m.n);
    for (int k = 0; k < s && cur.dim() < m.n; ++k) {
        Mat big(F, m.n * m.r, m.n);
        for (int i = 0; i < m.r; ++i)
            for (size_t c = 0; c < m.n; ++c) {
                Vec w = cur.reduce(m.gens[i].col(c));
                for (size_t x = 0; x < m.n; ++x) big.at(i * m.n + x, c) = w[x];
            }
        cur = kernel(big);
    }
    return cur;
}

int loewy_length(const ModuleRep& m) {
    int s = 0;
    Subspace cur = Subspace::full(m.field(), m.n);
    while (cur.dim() > 0) {
        ++s;
        cur = radical_power(m, s);
    }
    return s;
}

Submodule radical_submodule(const ModuleRep& m, int s) { return {radical_power(m, s), m.p, m.r, m.n}; }

ModuleRep rad_quotient(const ModuleRep& m, int s) {
    int ll = loewy_length(m);
    if (s < 1 || s > std::max(ll, 1)) fail(ErrorCode::Range, "radical layer out of range");
    return quotient(m, radical_power(m, s), m.name + "/Rad^" + std::to_string(s));
}

Submodule socle_submodule(const ModuleRep& m, int s) {
    int ll = loewy_length(m);
    if (s < 1 || s > std::max(ll, 1)) fail(ErrorCode::Range, "socle layer out of range");
    return {socle_power(m, s), m.p, m.r, m.n};
}

std::vector<Submodule> series(const ModuleRep& m, bool radical) {
    std::vector<Submodule> out;
    auto F = m.field();
    if (radical) {
        Subspace cur = Subspace::full(F, m.n);
        out.push_back({cur, m.p, m.r, m.n});
        int s = 0;
        while (cur.dim() > 0) {
            cur = radical_power(m, ++s);
            out.push_back({cur, m.p, m.r, m.n});
        }
    } else {
        Subspace cur = Subspace::zero(F, m.n);
        out.push_back({cur, m.p, m.r, m.n});
        int s = 0;
        while (cur.dim() < m.n) {
            Subspace nxt = socle_power(m, ++s);
            if (nxt.dim() == cur.dim()) fail(ErrorCode::Internal, "socle series stalled");
            cur = nxt;
            out.push_back({cur, m.p, m.r, m.n});
        }
    }
    return out;
}

bool is_submodule(const ModuleRep& m, const Subspace& s) {
    for (const auto& g : m.gens)
        for (const auto& v : s.vectors())
            if (!s.contains(g.apply(v))) return false;
    return true;
}

Submodule submodule_span(const ModuleRep& m, const std::vector<Vec>& vectors) {
    auto F = m.field();
    Subspace cur = Subspace::span(F, m.n, vectors);
    while (true) {
        std::vector<Vec> vs = cur.vectors();
        for (const auto& g : m.gens)
            for (const auto& v : cur.vectors()) vs.push_back(g.apply(v));
        Subspace nxt = Subspace::span(F, m.n, vs);
        if (nxt.dim() == cur.dim()) break;
        cur = nxt;
    }
    if (!is_submodule(m, cur)) fail(ErrorCode::Internal, "span is not closed under the generators");
    return {cur, m.p, m.r, m.n};
}

ModuleRep restrict_to(const ModuleRep& m, const Subspace& s, std::string name) {
    if (!is_submodule(m, s)) fail(ErrorCode::Dimension, "subspace is not a submodule");
    auto F = m.field();
    auto pv = s.pivots();
    size_t d = s.dim();
    std::vector<Mat> gens;
    for (const auto& g : m.gens) {
        Mat Y(F, d, d);
        for (size_t k = 0; k < d; ++k) {
            Vec w = g.apply(s.basis.row(k));
            for (size_t l = 0; l < d; ++l) Y.at(l, k) = w[pv[l]];
        }
        gens.push_back(std::move(Y));
    }
    return ModuleRep::make(m.p, std::move(gens), std::move(name), Limits{std::max<size_t>(d, 64), 3125});
}

ModuleRep quotient(const ModuleRep& m, const Subspace& s, std::string name) {
    if (!is_submodule(m, s)) fail(ErrorCode::Dimension, "subspace is not a submodule");
    auto F = m.field();
    auto pv = s.pivots();
    std::vector<size_t> rest;
    for (size_t c = 0; c < m.n; ++c)
        if (!std::binary_search(pv.begin(), pv.end(), c)) rest.push_back(c);
    size_t d = rest.size();
    std::vector<Mat> gens;
    for (const auto& g : m.gens) {
        Mat Y(F, d, d);
        for (size_t k = 0; k < d; ++k) {
            Vec w = s.reduce(g.col(rest[k]));
            for (size_t l = 0; l < d; ++l) Y.at(l, k) = w[rest[l]];
        }
        gens.push_back(std::move(Y));
    }
    return ModuleRep::make(m.p, std::move(gens), std::move(name), Limits{std::max<size_t>(d, 64), 3125});
}

ModuleRep dual_module(const ModuleRep& m) {
    std::vector<Mat> gens;
    for (const auto& g : m.gens) {
        Mat t = g.transpose();
        for (auto& x : t.a) x = fp_neg(x, m.p);
        gens.push_back(std::move(t));
    }
    return ModuleRep::make(m.p, std::move(gens), "dual(" + m.name + ")", Limits{std::max<size_t>(m.n, 64), 3125});
}

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
    if (a.p != b.p || a.r != b.r) fail(ErrorCode::Compatibility, "direct sum needs equal p and r");
    auto F = a.field();
    size_t n = a.n + b.n;
    std::vector<Mat> gens;
    for (int i = 0; i < a.r; ++i) {
        Mat X(F, n, n);
        for (size_t x = 0; x < a.n; ++x)
            for (size_t y = 0; y < a.n; ++y) X.at(x, y) = a.gens[i].at(x, y);
        for (size_t x = 0; x < b.n; ++x)
            for (size_t y = 0; y < b.n; ++y) X.at(a.n + x, a.n + y) = b.gens[i].at(x, y);
        gens.push_back(std::move(X));
    }
    return ModuleRep::make(a.p, std::move(gens), a.name + "+" + b.name, Limits{std::max<size_t>(n, 64), 3125});
}

ModuleRep change_of_generators(const ModuleRep& m, const Mat& g) {
    if (g.rows != static_cast<size_t>(m.r) || g.cols != static_cast<size_t>(m.r))
        fail(ErrorCode::Dimension, "change of generators needs an r x r matrix");
    if (det(g) == 0) fail(ErrorCode::Invertibility, "change of generators matrix is singular");
    auto F = m.field();
    std::vector<Mat> gens;
    for (int i = 0; i < m.r; ++i) {
        Mat Y(F, m.n, m.n);
        for (int j = 0; j < m.r; ++j)
            if (g.at(j, i)) Y = Y + m.gens[j].scale(g.at(j, i));
        gens.push_back(std::move(Y));
    }
    return ModuleRep::make(m.p, std::move(gens), m.name, Limits{std::max<size_t>(m.n, 64), 3125});
}

Mat pullback_ppoint(const ModuleRep& m, const MPoly& u) {
    if (!m.commuting) fail(ErrorCode::Unsupported, "p-point evaluation needs a commuting frame");
    if (u.nvars() != m.r || u.p() != m.p) fail(ErrorCode::Dimension, "p-point lives in the wrong ring");
    bool linear = false;
    for (const auto& t : u.terms()) {
        if (t.m == 0) fail(ErrorCode::NotPPoint, "p-point must have zero constant term");
        if (mono_deg(t.m) == 1) linear = true;
        for (int i = 0; i < m.r; ++i)
            if (mono_exp(t.m, i) >= static_cast<int>(m.p)) fail(ErrorCode::NotPPoint, "p-point exponents must be below p");
    }
    if (!linear) fail(ErrorCode::NotPPoint, "p-point needs a nonzero linear part");
    auto F = m.field();
    Mat out(F, m.n, m.n);
    for (const auto& t : u.terms()) {
        Mat term = Mat::identity(F, m.n);
        for (int i = 0; i < m.r; ++i) {
            int e = mono_exp(t.m, i);
            if (e) term = term * m.gens[i].pow(e);
        }
        out = out + term.scale(t.c);
    }
    return out;
}

/* catalogue */

ModuleRep trivial_module(uint32_t p, int r, size_t n) {
    auto m = ModuleRep::make_zero(p, r, n);
    m.name = "trivial:p=" + std::to_string(p) + ";r=" + std::to_string(r) + ";dim=" + std::to_string(n);
    return m;
}

ModuleRep v_module(uint32_t p, int r) {
    auto F = GF::get(p);
    size_t n = r + 1;
    std::vector<Mat> gens;
    for (int i = 0; i < r; ++i) {
        Mat X(F, n, n);
        X.at(r, i) = 1;
        gens.push_back(std::move(X));
    }
    return ModuleRep::make(p, std::move(gens), "v:p=" + std::to_string(p) + ";r=" + std::to_string(r));
}

ModuleRep soc2_module(uint32_t p, int r) {
    auto u = regular_module(p, r);
    return restrict_to(u, socle_power(u, 2), "soc2:p=" + std::to_string(p) + ";r=" + std::to_string(r));
}

ModuleRep mr2_module(uint32_t p, int r) {
    if (p < 3) fail(ErrorCode::Range, "this module needs p >= 3");
    auto F = GF::get(p);
    size_t n = r + 2;
    std::vector<Mat> gens;
    for (int i = 0; i < r; ++i) {
        Mat X(F, n, n);
        X.at(1 + i, 0) = 1;
        X.at(r + 1, 1 + i) = 1;
        gens.push_back(std::move(X));
    }
    return ModuleRep::make(p, std::move(gens), "mr2:p=" + std::to_string(p) + ";r=" + std::to_string(r));
}

ModuleRep hmod_module(uint32_t p, int r) {
    auto u = regular_module(p, r);
    auto rad = restrict_to(u, radical_power(u, 1));
    return quotient(rad, socle_power(rad, 1), "hmod:p=" + std::to_string(p) + ";r=" + std::to_string(r));
}

ModuleRep heisenberg3(uint32_t p) {
    if (p < 3) fail(ErrorCode::Range, "this frame needs p >= 3");
    auto F = GF::get(p);
    Mat e12(F, 3, 3), e23(F, 3, 3), e13(F, 3, 3);
    e12.at(0, 1) = 1;
    e23.at(1, 2) = 1;
    e13.at(0, 2) = 1;
    return ModuleRep::make(p, {e12, e23, e13}, "heis:p=" + std::to_string(p));
}

ModuleRep rad_module(uint32_t p, int r, int s) {
    auto u = regular_module(p, r);
    if (s < 0 || s >= loewy_length(u)) fail(ErrorCode::Range, "radical power out of range");
    return restrict_to(u, radical_power(u, s),
                       "rad:p=" + std::to_string(p) + ";r=" + std::to_string(r) + ";s=" + std::to_string(s));
}

ModuleRep mn_module(uint32_t p, int n) {
    auto u = regular_module(p, 2);
    if (n < 1 || n > loewy_length(u)) fail(ErrorCode::Range, "quotient index out of range");
    auto m = rad_quotient(u, n);
    m.name = "mn:p=" + std::to_string(p) + ";n=" + std::to_string(n);
    return m;
}

ModuleRep m3xy_module(uint32_t p) {
    if (p < 3) fail(ErrorCode::Range, "this module needs p >= 3");
    auto m3 = mn_module(p, 3);
    // basis 1, x, y, x^2, xy, y^2
    Vec xy(6, 0);
    xy[4] = 1;
    return quotient(m3, Subspace::span(m3.field(), 6, {xy}), "m3xy:p=" + std::to_string(p));
}

}  // namespace modinv
