#include <map>

#include "modinv/invariants.hpp"

namespace modinv {

namespace {

// F_p-span of the coefficient vectors of the columns (or rows) of theta^j.
size_t coefficient_span_dim(const ModuleRep& m, int j, bool rows) {
    PolyMat T = theta_power(m.gens, j);
    auto F = m.field();
    std::vector<Vec> vs;
    size_t outer = rows ? T.rows : T.cols, inner = rows ? T.cols : T.rows;
    for (size_t c = 0; c < outer; ++c) {
        std::map<Mono, Vec> by_mono;
        for (size_t i = 0; i < inner; ++i) {
            const MPoly& f = rows ? T.at(c, i) : T.at(i, c);
            for (const auto& t : f.terms()) {
                auto& v = by_mono[t.m];
                if (v.empty()) v.assign(inner, 0);
                v[i] = t.c;
            }
        }
        for (auto& [mono, v] : by_mono) vs.push_back(std::move(v));
    }
    return Subspace::span(F, inner, vs).dim();
}

PropertyResult equal_property(const ModuleRep& m, const InvariantOptions& opt, const std::vector<Constancy>* cons, bool kernels) {
    PropertyResult out;
    bool all_yes = true, any_no = false;
    for (int j = 1; j < static_cast<int>(m.p); ++j) {
        Constancy c = cons ? (*cons)[j - 1] : constant_jrank_certify(m, j, opt);
        Tri t;
        if (c.constant == Tri::No) t = Tri::No;
        else if (c.constant == Tri::Undet) t = Tri::Undet;
        else if (m.n == 0 || c.generic_rank == 0) t = Tri::Yes;
        else t = coefficient_span_dim(m, j, kernels) == c.generic_rank ? Tri::Yes : Tri::No;
        out.per_j.push_back(t);
        all_yes = all_yes && t == Tri::Yes;
        any_no = any_no || t == Tri::No;
    }
    out.overall = any_no ? Tri::No : all_yes ? Tri::Yes : Tri::Undet;
    return out;
}

}  // namespace

PropertyResult eip_test(const ModuleRep& m, const InvariantOptions& opt, const std::vector<Constancy>* cons) {
    return equal_property(m, opt, cons, false);
}

// Columns of the dual's theta^j are the rows of theta^j, and pointwise
// ranks agree with the dual's, so the dual is never formed.
PropertyResult ekp_test(const ModuleRep& m, const InvariantOptions& opt, const std::vector<Constancy>* cons) {
    return equal_property(m, opt, cons, true);
}

bool eip_fast_path(const ModuleRep& m) {
    if (m.r < 2) fail(ErrorCode::Unsupported, "the images test needs two generators");
    return image(m.gens[0]) == image(m.gens[1]);
}

namespace {

Subspace kernel_seed(const ModuleRep& m, const InvariantOptions& opt) {
    auto Fp = m.field();
    Subspace prev;
    bool have_prev = false;
    Subspace K = Subspace::zero(Fp, m.n);
    for (uint32_t e = 1; e <= std::max<uint32_t>(opt.max_ext, 2); ++e) {
        auto F = GF::get(m.p, e);
        std::vector<Vec> vs = K.vectors();
        // P^1(F_q): (0,1) and (1,c)
        std::vector<Vec> pts = {{0, 1}};
        for (uint32_t c = 0; c < F->q() && pts.size() < opt.point_budget; ++c) pts.push_back({1, c});
        for (const auto& pt : pts) {
            if (e > 1 && F->in_base(pt[1])) continue;
            for (const auto& v : kernel(operator_at(m, F, pt)).vectors())
                for (auto& w : base_components(*F, v)) vs.push_back(std::move(w));
        }
        K = submodule_span(m, vs).space;
        if (have_prev && K == prev) break;
        prev = K;
        have_prev = true;
    }
    return K;
}

bool eip_submodule(const ModuleRep& m, const Subspace& K, const InvariantOptions& opt) {
    ModuleRep s = restrict_to(m, K);
    return eip_test(s, opt).overall == Tri::Yes;
}

// Representatives of the nonzero projective points of span(vs), in a fixed order.
std::vector<Vec> projective_points(const GF& F, const std::vector<Vec>& vs, size_t n, size_t limit) {
    std::vector<Vec> out;
    size_t k = vs.size();
    for (size_t lead = k; lead-- > 0;) {
        std::vector<uint32_t> c(k, 0);
        c[lead] = 1;
        while (true) {
            Vec v(n, 0);
            for (size_t i = 0; i < k; ++i)
                if (c[i])
                    for (size_t x = 0; x < n; ++x) v[x] = F.add(v[x], F.mul(c[i], vs[i][x]));
            out.push_back(std::move(v));
            if (out.size() >= limit) return out;
            size_t i = k - 1;
            while (i > lead && c[i] == F.p() - 1) c[i--] = 0;
            if (i == lead) break;
            ++c[i];
        }
    }
    return out;
}

}  // namespace

GenericKernel generic_kernel(const ModuleRep& m, const InvariantOptions& opt) {
    if (m.r != 2) fail(ErrorCode::Unsupported, "the generic kernel is computed for two generators only");
    if (!m.commuting) fail(ErrorCode::Unsupported, "the generic kernel needs a commuting frame");
    if (m.n > opt.kernel_max_dim) fail(ErrorCode::Unsupported, "module too large for the generic kernel search");
    auto c1 = constant_jrank_certify(m, 1, opt);
    if (c1.constant != Tri::Yes) fail(ErrorCode::Unsupported, "the generic kernel needs constant rank");
    auto F = m.field();
    Subspace K = kernel_seed(m, opt);
    if (!eip_submodule(m, K, opt)) fail(ErrorCode::Internal, "the sum of point kernels is not an equal images module");
    while (K.dim() < m.n) {
        // candidates: first the socle of M/K lifted to M, then everything else
        ModuleRep Q = quotient(m, K);
        auto pivK = K.pivots();
        std::vector<bool> in_piv(m.n, false);
        for (size_t c : pivK) in_piv[c] = true;
        std::vector<size_t> offpiv;
        for (size_t c = 0; c < m.n; ++c)
            if (!in_piv[c]) offpiv.push_back(c);
        auto lift = [&](const Vec& q) {
            Vec v(m.n, 0);
            for (size_t i = 0; i < offpiv.size(); ++i) v[offpiv[i]] = q[i];
            return v;
        };
        std::vector<Vec> soc_lift, rest_lift;
        for (const auto& q : socle_power(Q, 1).vectors()) soc_lift.push_back(lift(q));
        for (size_t i = 0; i < offpiv.size(); ++i) {
            Vec v(m.n, 0);
            v[offpiv[i]] = 1;
            rest_lift.push_back(v);
        }
        std::vector<Vec> cands = projective_points(*F, soc_lift, m.n, 4096);
        auto more = projective_points(*F, rest_lift, m.n, 4096);
        cands.insert(cands.end(), more.begin(), more.end());
        bool grown = false;
        for (const auto& v : cands) {
            if (K.contains(v)) continue;
            auto vs = K.vectors();
            vs.push_back(v);
            Subspace K2 = submodule_span(m, vs).space;
            if (eip_submodule(m, K2, opt)) {
                K = K2;
                grown = true;
                break;
            }
        }
        if (!grown) break;
    }
    GenericKernel out;
    out.kernel = Submodule{K, m.p, m.r, m.n};
    out.codim = m.n - K.dim();
    Degree d1 = jdegree(m, 1, opt);
    out.degree1 = d1.value;
    out.tag = d1.determined && static_cast<size_t>(d1.value) == out.codim ? "verified" : "unverified-greedy";
    return out;
}

}  // namespace modinv
