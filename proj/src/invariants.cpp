#include "modinv/invariants.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace modinv {

std::string tri_name(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        default: return "undet";
    }
}

std::string Point::to_string() const {
    // coordinates of F_{p^e} points are the base-p encodings
    std::string s = e > 1 ? "e" + std::to_string(e) + "(" : "(";
    for (size_t i = 0; i < coords.size(); ++i) s += (i ? "," : "") + std::to_string(coords[i]);
    return s + ")";
}

namespace {

void check_j(const ModuleRep& m, int j) {
    if (j < 1 || j > static_cast<int>(m.p) - 1) fail(ErrorCode::Range, "j must lie in 1..p-1");
}

}  // namespace

Mat operator_at(const ModuleRep& m, FieldPtr F, const Vec& point) {
    if (static_cast<int>(point.size()) != m.r) fail(ErrorCode::Dimension, "point must have r coordinates");
    if (F->p() != m.p) fail(ErrorCode::Compatibility, "point field has the wrong characteristic");
    bool nz = false;
    for (auto c : point) {
        if (c >= F->q()) fail(ErrorCode::Range, "point coordinate outside the field");
        nz = nz || c != 0;
    }
    if (!nz) fail(ErrorCode::Degeneracy, "the zero point has no operator");
    Mat A(F, m.n, m.n);
    for (int i = 0; i < m.r; ++i) {
        if (!point[i]) continue;
        const Mat& X = m.gens[i];
        for (size_t k = 0; k < A.a.size(); ++k)
            if (X.a[k]) A.a[k] = F->add(A.a[k], F->mul(point[i], X.a[k]));
    }
    return A;
}

size_t rank_at_point(const ModuleRep& m, int j, FieldPtr F, const Vec& point) {
    check_j(m, j);
    return rank(operator_at(m, F, point).pow(static_cast<unsigned>(j)));
}

size_t rank_at_point(const ModuleRep& m, int j, const std::vector<long long>& point) {
    auto F = m.field();
    Vec v;
    for (long long x : point) v.push_back(F->from_int(x));
    return rank_at_point(m, j, F, v);
}

Subspace image_at(const ModuleRep& m, int j, FieldPtr F, const Vec& point) {
    check_j(m, j);
    return image(operator_at(m, F, point).pow(static_cast<unsigned>(j)));
}

size_t generic_jrank(const ModuleRep& m, int j) {
    check_j(m, j);
    if (m.n == 0) return 0;
    return generic_rank_of(theta_power(m.gens, j));
}

namespace {

// Normalized points of P^{r-1}(F_q) in lexicographic order; with skip_base
// only points not defined over F_p.  Returns false when the budget ran out.
bool for_each_point(const GF& F, int r, bool skip_base, size_t budget, const std::function<bool(const Vec&)>& f) {
    size_t used = 0;
    uint32_t q = F.q();
    for (int lead = r - 1; lead >= 0; --lead) {
        Vec pt(r, 0);
        pt[lead] = 1;
        while (true) {
            bool base = true;
            for (int i = lead + 1; i < r; ++i) base = base && F.in_base(pt[i]);
            if (!(skip_base && base)) {
                if (used++ >= budget) return false;
                if (f(pt)) return true;
            }
            int i = r - 1;
            while (i > lead && pt[i] == q - 1) pt[i--] = 0;
            if (i == lead) break;
            ++pt[i];
        }
    }
    return true;
}

struct WitnessSearch {
    std::optional<Point> witness;
    bool complete = true;
};

WitnessSearch search_witness(const ModuleRep& m, int j, size_t d, uint32_t e, size_t budget) {
    WitnessSearch out;
    auto F = GF::get(m.p, e);
    bool done = for_each_point(*F, m.r, e > 1, budget, [&](const Vec& pt) {
        if (rank(operator_at(m, F, pt).pow(static_cast<unsigned>(j))) < d) {
            out.witness = Point{e, pt};
            return true;
        }
        return false;
    });
    out.complete = done;
    return out;
}

// Minors of a block that do not vanish at the given point.
void add_cover_minor(const PolyMat& B, size_t d, FieldPtr F, const Vec& pt, std::map<std::pair<IndexSet, IndexSet>, MPoly>& cover) {
    Mat Bp = specialize(B, F, pt);
    Rref rc = rref(Bp);
    if (rc.rank < d) return;
    IndexSet J(rc.pivots.begin(), rc.pivots.begin() + d);
    IndexSet all(B.rows);
    std::iota(all.begin(), all.end(), 0);
    Rref rr = rref(Bp.submatrix(all, J).transpose());
    IndexSet I(rr.pivots.begin(), rr.pivots.begin() + d);
    auto key = std::make_pair(I, J);
    if (cover.count(key)) return;
    cover[key] = minor(B, I, J);
}

enum class BlockStatus { Empty, Nonempty, Unknown };

struct BlockCert {
    BlockStatus status = BlockStatus::Unknown;
    std::string route;
    std::string reason;
};

BlockCert certify_block(const ModuleRep& m, const PolyMat& B, size_t d, const InvariantOptions& opt) {
    BlockCert out;
    GroebnerOptions gopt;
    gopt.pair_budget = opt.groebner_budget;
    std::map<std::pair<IndexSet, IndexSet>, MPoly> cover;
    auto F = m.field();
    for_each_point(*F, m.r, false, opt.point_budget, [&](const Vec& pt) {
        add_cover_minor(B, d, F, pt, cover);
        return false;
    });
    if (opt.max_ext >= 2) {
        auto F2 = GF::get(m.p, 2);
        std::mt19937_64 rng(opt.seed);
        for (int t = 0; t < 2 * m.r; ++t) {
            Vec pt(m.r);
            for (auto& c : pt) c = F2->random(rng);
            if (std::all_of(pt.begin(), pt.end(), [](GF::Elem c) { return c == 0; })) continue;
            add_cover_minor(B, d, F2, pt, cover);
        }
    }
    std::vector<MPoly> gens;
    for (auto& [k, f] : cover) gens.push_back(f);
    try {
        if (!gens.empty()) {
            auto c = projective_zero_empty(gens, gopt);
            if (c.empty) {
                out.status = BlockStatus::Empty;
                out.route = c.route;
                return out;
            }
        }
        double count = binomial(B.rows, d) * binomial(B.cols, d);
        if (count > opt.minor_budget) {
            out.reason = "minor ideal of a " + std::to_string(B.rows) + "x" + std::to_string(B.cols) + " block exceeds the budget";
            return out;
        }
        std::vector<MPoly> all;
        for (const auto& I : subsets(B.rows, d)) {
            for (const auto& J : subsets(B.cols, d)) {
                auto key = std::make_pair(I, J);
                auto it = cover.find(key);
                MPoly f = it != cover.end() ? it->second : minor(B, I, J);
                if (!f.is_zero()) all.push_back(f);
            }
        }
        auto c = projective_zero_empty(all, gopt);
        out.status = c.empty ? BlockStatus::Empty : BlockStatus::Nonempty;
        out.route = c.route;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::Resource) throw;
        out.status = BlockStatus::Unknown;
        out.reason = std::string("groebner budget exhausted: ") + e.what();
    }
    return out;
}

}  // namespace

Constancy constant_jrank_certify(const ModuleRep& m, int j, const InvariantOptions& opt) {
    check_j(m, j);
    Constancy out;
    if (m.n == 0) {
        out.constant = Tri::Yes;
        out.route = "rank0";
        return out;
    }
    PolyMat T = theta_power(m.gens, j);
    auto bl = blocks(T);
    std::vector<PolyMat> bm;
    std::vector<size_t> bd;
    size_t d = 0;
    for (const auto& b : bl) {
        bm.push_back(T.submatrix(b.rows, b.cols));
        bd.push_back(generic_rank_of(bm.back()));
        d += bd.back();
    }
    out.generic_rank = d;
    if (d == 0) {
        out.constant = Tri::Yes;
        out.route = "rank0";
        return out;
    }
    if (m.r == 1) {
        out.constant = Tri::Yes;
        out.route = "r1";
        return out;
    }
    auto w1 = search_witness(m, j, d, 1, opt.point_budget);
    if (w1.witness) {
        out.constant = Tri::No;
        out.route = "witness";
        out.witness = w1.witness;
        return out;
    }
    bool nonempty = false, unknown = false;
    std::string route, reason;
    for (size_t b = 0; b < bm.size(); ++b) {
        if (bd[b] == 0) continue;
        auto c = certify_block(m, bm[b], bd[b], opt);
        if (c.status == BlockStatus::Nonempty) nonempty = true;
        if (c.status == BlockStatus::Unknown) {
            unknown = true;
            if (reason.empty()) reason = c.reason;
        }
        if (c.status == BlockStatus::Empty && (route.empty() || c.route == "groebner")) route = c.route;
        if (nonempty) break;
    }
    if (!nonempty && !unknown) {
        out.constant = Tri::Yes;
        out.route = route;
        return out;
    }
    for (uint32_t e = 2; e <= opt.max_ext; ++e) {
        auto w = search_witness(m, j, d, e, opt.point_budget);
        if (w.witness) {
            out.constant = Tri::No;
            out.route = "witness";
            out.witness = w.witness;
            return out;
        }
    }
    if (nonempty) {
        out.constant = Tri::No;
        out.route = "groebner-nonempty";
        return out;
    }
    out.constant = Tri::Undet;
    out.route = "budget";
    out.reason = reason;
    return out;
}

/* Jordan types */

std::string JordanType::to_string() const {
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) s += (i ? ":" : "") + std::to_string(a[i]);
    return s;
}

std::string JordanType::pretty() const {
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        if (!s.empty()) s += "+";
        s += std::to_string(a[i]) + "[" + std::to_string(i + 1) + "]";
    }
    return s.empty() ? "0" : s;
}

JordanType jordan_from_ranks(const std::vector<size_t>& ranks) {
    if (ranks.size() < 2) fail(ErrorCode::Dimension, "rank sequence too short");
    JordanType jt;
    size_t p = ranks.size() - 1;
    for (size_t i = 1; i <= p; ++i) {
        long long next = i + 1 <= p ? static_cast<long long>(ranks[i + 1]) : 0;
        long long ai = static_cast<long long>(ranks[i - 1]) - 2 * static_cast<long long>(ranks[i]) + next;
        if (ai < 0) fail(ErrorCode::Internal, "rank sequence is not that of a nilpotent operator");
        jt.a.push_back(static_cast<size_t>(ai));
    }
    return jt;
}

JordanType jordan_type_of(const Mat& A, uint32_t p) {
    if (A.rows != A.cols) fail(ErrorCode::Dimension, "Jordan type of a non-square matrix");
    std::vector<size_t> rk = {A.rows};
    Mat P = A;
    for (uint32_t k = 1; k <= p; ++k) {
        rk.push_back(rank(P));
        if (k < p) P = P * A;
    }
    if (rk[p] != 0) fail(ErrorCode::InvalidFrame, "operator is not annihilated by its p-th power");
    return jordan_from_ranks(rk);
}

JordanType jordan_type_at(const ModuleRep& m, FieldPtr F, const Vec& point) {
    return jordan_type_of(operator_at(m, F, point), m.p);
}

JordanType jordan_type_at(const ModuleRep& m, const MPoly& u) { return jordan_type_of(pullback_ppoint(m, u), m.p); }

JordanType generic_jordan_type(const ModuleRep& m) {
    std::vector<size_t> rk = {m.n};
    for (int j = 1; j < static_cast<int>(m.p); ++j) rk.push_back(generic_jrank(m, j));
    rk.push_back(0);
    return jordan_from_ranks(rk);
}

}  // namespace modinv
