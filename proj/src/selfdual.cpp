#include <random>

#include "modinv/invariants.hpp"

namespace modinv {

namespace {

// Echelon rows with distinct pivots, each reduced against the earlier ones.
struct Echelon {
    const GF* F;
    size_t len;
    std::vector<Vec> rows;
    std::vector<size_t> piv;

    Vec reduce(Vec v) const {
        for (size_t k = 0; k < rows.size(); ++k) {
            GF::Elem x = v[piv[k]];
            if (!x) continue;
            for (size_t c = 0; c < len; ++c)
                if (rows[k][c]) v[c] = F->sub(v[c], F->mul(x, rows[k][c]));
        }
        return v;
    }
    bool add(Vec v) {
        v = reduce(std::move(v));
        size_t c = 0;
        while (c < len && !v[c]) ++c;
        if (c == len) return false;
        GF::Elem inv = F->inv(v[c]);
        for (auto& x : v) x = F->mul(x, inv);
        rows.push_back(std::move(v));
        piv.push_back(c);
        return true;
    }
};

}  // namespace

std::vector<Mat> hom_space(const ModuleRep& a, const ModuleRep& b) {
    if (a.p != b.p || a.r != b.r) fail(ErrorCode::Compatibility, "hom space needs modules over the same frame type");
    auto F = a.field();
    const GF& f = *F;
    size_t na = a.n, nb = b.n;
    if (na == 0 || nb == 0) return {};
    // Spin up a basis of a from module generators; basis[k] = X_gen[k] basis[parent[k]].
    Echelon span{&f, na, {}, {}};
    std::vector<Vec> basis;
    std::vector<long> parent;
    std::vector<int> via;
    std::vector<size_t> slot;
    size_t nslots = 0;
    for (size_t s = 0; s < na && basis.size() < na; ++s) {
        Vec e(na, 0);
        e[s] = 1;
        if (!span.add(e)) continue;
        size_t start = basis.size();
        basis.push_back(e);
        parent.push_back(-1);
        via.push_back(-1);
        slot.push_back(nslots++);
        for (size_t k = start; k < basis.size(); ++k)
            for (int i = 0; i < a.r; ++i) {
                Vec w = a.gens[i].apply(basis[k]);
                if (!span.add(w)) continue;
                basis.push_back(std::move(w));
                parent.push_back(static_cast<long>(k));
                via.push_back(i);
                slot.push_back(0);
            }
    }
    size_t u = nslots * nb;  // unknowns: images of the generators
    Mat Bm(F, na, na);
    for (size_t k = 0; k < na; ++k)
        for (size_t x = 0; x < na; ++x) Bm.at(x, k) = basis[k][x];
    Mat Binv = inverse(Bm);
    // T[k]: nb x u matrix with P(basis[k]) = T[k] * unknowns
    std::vector<Mat> T(na);
    for (size_t k = 0; k < na; ++k) {
        if (parent[k] < 0) {
            T[k] = Mat(F, nb, u);
            for (size_t x = 0; x < nb; ++x) T[k].at(x, slot[k] * nb + x) = 1;
        } else {
            T[k] = b.gens[via[k]] * T[parent[k]];
        }
    }
    Echelon cons{&f, u, {}, {}};
    for (int i = 0; i < a.r; ++i) {
        Mat C = Binv * a.gens[i] * Bm;  // coordinates of X_i basis[k] in the spun basis
        for (size_t k = 0; k < na; ++k) {
            Mat lhs = b.gens[i] * T[k];
            for (size_t mm = 0; mm < na; ++mm) {
                GF::Elem c = C.at(mm, k);
                if (!c) continue;
                for (size_t z = 0; z < lhs.a.size(); ++z)
                    if (T[mm].a[z]) lhs.a[z] = f.sub(lhs.a[z], f.mul(c, T[mm].a[z]));
            }
            for (size_t x = 0; x < nb; ++x) {
                Vec row = lhs.row(x);
                bool nz = false;
                for (auto v : row) nz = nz || v;
                if (nz) cons.add(std::move(row));
            }
        }
    }
    Mat cm(F, cons.rows.size(), u);
    for (size_t k = 0; k < cons.rows.size(); ++k)
        for (size_t c = 0; c < u; ++c) cm.at(k, c) = cons.rows[k][c];
    std::vector<Mat> out;
    for (const auto& sol : kernel(cm).vectors()) {
        Mat img(F, nb, na);
        for (size_t k = 0; k < na; ++k) {
            Vec y = T[k].apply(sol);
            for (size_t x = 0; x < nb; ++x) img.at(x, k) = y[x];
        }
        out.push_back(img * Binv);
    }
    return out;
}

namespace {

std::vector<size_t> layer_dims(const ModuleRep& m, bool radical) {
    std::vector<size_t> out;
    int ll = loewy_length(m);
    for (int s = 0; s < ll; ++s) {
        if (radical) out.push_back(radical_power(m, s).dim() - radical_power(m, s + 1).dim());
        else out.push_back(socle_power(m, s + 1).dim() - socle_power(m, s).dim());
    }
    return out;
}

Mat combine(const std::vector<Mat>& H, const std::vector<GF::Elem>& c, FieldPtr F) {
    Mat s(F, H[0].rows, H[0].cols);
    for (size_t i = 0; i < H.size(); ++i) {
        if (!c[i]) continue;
        for (size_t z = 0; z < s.a.size(); ++z)
            if (H[i].a[z]) s.a[z] = F->add(s.a[z], F->mul(c[i], H[i].a[z]));
    }
    return s;
}

}  // namespace

SelfDual self_dual_test(const ModuleRep& m, const InvariantOptions& opt) {
    SelfDual out;
    if (m.n == 0) {
        out.status = Tri::Yes;
        out.route = "invariants";
        return out;
    }
    if (m.n > opt.selfdual_max_dim) {
        out.route = "dimension-cap";
        return out;
    }
    // Rad^s M*/Rad^{s+1} M* is dual to Soc^{s+1} M/Soc^s M.
    if (layer_dims(m, true) != layer_dims(m, false)) {
        out.status = Tri::No;
        out.route = "invariants";
        return out;
    }
    ModuleRep d = dual_module(m);
    auto H = hom_space(m, d);
    out.hom_dim = H.size();
    if (H.empty()) {
        out.status = Tri::No;
        out.route = "hom-zero";
        return out;
    }
    std::mt19937_64 rng(opt.seed);
    // An invertible intertwiner over any F_{p^e} gives one over F_p as well.
    for (uint32_t e = 1; e <= std::max<uint32_t>(opt.max_ext, 1); ++e) {
        auto F = GF::get(m.p, e);
        std::vector<Mat> He;
        for (const auto& h : H) He.push_back(e == 1 ? h : h.lift(F));
        for (size_t t = 0; t < opt.selfdual_random_trials; ++t) {
            std::vector<GF::Elem> c(H.size());
            for (auto& x : c) x = F->random(rng);
            Mat P = combine(He, c, F);
            if (det(P) != 0) {
                out.status = Tri::Yes;
                out.route = "random";
                if (e == 1) out.iso = P;
                return out;
            }
        }
    }
    for (int j = 1; j < static_cast<int>(m.p); ++j) {
        Degree a = jdegree(m, j, opt), b = jdegree(d, j, opt);
        if (a.determined && b.determined && a.value != b.value) {
            out.status = Tri::No;
            out.route = "invariants";
            return out;
        }
    }
    double count = 1;
    for (size_t i = 0; i < H.size(); ++i) count *= m.p;
    if (count <= static_cast<double>(opt.selfdual_enum_budget)) {
        auto F = m.field();
        std::vector<GF::Elem> c(H.size(), 0);
        while (true) {
            size_t i = 0;
            while (i < c.size() && c[i] == m.p - 1) c[i++] = 0;
            if (i == c.size()) break;
            ++c[i];
            Mat P = combine(H, c, F);
            if (det(P) != 0) {
                out.status = Tri::Yes;
                out.route = "enumeration";
                out.iso = P;
                return out;
            }
        }
        out.status = Tri::No;
        out.route = "enumeration";
        return out;
    }
    if (H.size() <= static_cast<size_t>(kMaxVars)) {
        int h = static_cast<int>(H.size());
        PolyMat G(m.p, h, m.n, m.n);
        for (int i = 0; i < h; ++i) {
            MPoly ui = MPoly::var(m.p, h, i);
            for (size_t z = 0; z < G.a.size(); ++z)
                if (H[i].a[z]) G.a[z] += ui.scale(H[i].a[z]);
        }
        out.status = generic_rank_of(G) == m.n ? Tri::Yes : Tri::No;
        out.route = "generic-det";
        return out;
    }
    out.route = "budget";
    return out;
}

}  // namespace modinv
