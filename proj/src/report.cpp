#include "json.hpp"
#include "modinv/invariants.hpp"

namespace modinv {

bool InvariantReport::any_undetermined() const {
    for (const auto& c : constancy)
        if (c.constant == Tri::Undet) return true;
    for (const auto& d : degrees)
        if (!d.determined) return true;
    return eip.overall == Tri::Undet || ekp.overall == Tri::Undet || self_dual.status == Tri::Undet;
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) fail(ErrorCode::Internal, "consistency check failed: " + what);
}

}  // namespace

InvariantReport report(const ModuleRep& m, const InvariantOptions& opt) {
    InvariantReport rep;
    rep.name = m.name;
    rep.p = m.p;
    rep.r = m.r;
    rep.n = m.n;
    int p = static_cast<int>(m.p);
    for (int j = 1; j < p; ++j) {
        Constancy c = constant_jrank_certify(m, j, opt);
        if (c.witness) {
            auto F = GF::get(m.p, c.witness->e);
            require(rank_at_point(m, j, F, c.witness->coords) < c.generic_rank, "witness does not drop the rank");
        }
        rep.ranks.push_back(c.generic_rank);
        rep.constancy.push_back(std::move(c));
    }
    std::vector<size_t> rk = {m.n};
    rk.insert(rk.end(), rep.ranks.begin(), rep.ranks.end());
    rk.push_back(0);
    for (size_t k = 1; k < rk.size(); ++k) require(rk[k] <= rk[k - 1], "ranks decrease in j");
    rep.checks.push_back("ranks-decreasing");
    rep.jordan = jordan_from_ranks(rk);
    bool all_yes = true, any_no = false;
    for (const auto& c : rep.constancy) {
        all_yes = all_yes && c.constant == Tri::Yes;
        any_no = any_no || c.constant == Tri::No;
    }
    rep.constant_jordan = any_no ? Tri::No : all_yes ? Tri::Yes : Tri::Undet;
    if (opt.degrees)
        for (int j = 1; j < p; ++j) {
            Degree d = jdegree(m, j, opt);
            if (d.determined) {
                require(d.rank == rep.ranks[j - 1], "chart size equals the generic rank");
                require(d.value >= 0 && d.value <= j * static_cast<int>(d.rank), "degree bound");
            }
            rep.degrees.push_back(std::move(d));
        }
    rep.eip = eip_test(m, opt, &rep.constancy);
    rep.ekp = ekp_test(m, opt, &rep.constancy);
    if (opt.degrees) {
        for (int j = 1; j < p; ++j) {
            const Degree& d = rep.degrees[j - 1];
            if (!d.determined || rep.constancy[j - 1].constant != Tri::Yes) continue;
            Tri ei = rep.eip.per_j[j - 1], ek = rep.ekp.per_j[j - 1];
            require((ei == Tri::Yes) == (d.value == 0), "equal j-images iff deg^j = 0");
            require((ek == Tri::Yes) == (d.value == j * static_cast<int>(d.rank)), "equal j-kernels iff deg^j = j rk^j");
        }
        rep.checks.push_back("eip-ekp-degree");
    }
    if (m.r >= 2 && rep.constancy[0].constant == Tri::Yes && m.n > 0 && eip_fast_path(m)) {
        require(rep.eip.overall != Tri::No, "images of two generators agree but the module fails EIP");
        rep.checks.push_back("eip-fast-path");
    }
    rep.self_dual = self_dual_test(m, opt);
    if (rep.self_dual.status == Tri::Yes) {
        if (m.r >= 2)
            for (int j = 1; j < p; j += 2)
                if (rep.constancy[j - 1].constant == Tri::Yes && rep.ranks[j - 1] % 2 != 0)
                    fail(ErrorCode::ParityViolation, "self-dual module of constant " + std::to_string(j) + "-rank has odd rank " +
                                                         std::to_string(rep.ranks[j - 1]));
        if (rep.constant_jordan == Tri::Yes)
            for (size_t i = 2; i <= rep.jordan.a.size(); i += 2)
                if (rep.jordan.a[i - 1] % 2 != 0)
                    fail(ErrorCode::ParityViolation, "self-dual module of constant Jordan type has an odd number of blocks of size " +
                                                         std::to_string(i));
        rep.checks.push_back("self-dual-parity");
    }
    if (opt.kernel && m.r == 2 && m.commuting && m.n <= opt.kernel_max_dim && rep.constancy[0].constant == Tri::Yes) {
        rep.kernel = generic_kernel(m, opt);
        rep.checks.push_back("generic-kernel-" + rep.kernel->tag);
    }
    return rep;
}

/* rendering */

namespace {

std::string degree_cell(const InvariantReport& rep, int j) {
    if (rep.degrees.empty()) return "na";
    const Degree& d = rep.degrees[j - 1];
    return d.determined ? std::to_string(d.value) : "undet";
}

}  // namespace

std::string csv_header(uint32_t pmax) {
    std::string s = "name,p,r,dim";
    for (uint32_t j = 1; j < pmax; ++j) {
        std::string J = std::to_string(j);
        s += ",rk_" + J + ",constant_" + J + ",deg_" + J;
    }
    return s + ",jordan_type,eip,ekp,self_dual,generic_kernel_dim\n";
}

std::string csv_row(const InvariantReport& rep, uint32_t pmax) {
    std::string s = rep.name + "," + std::to_string(rep.p) + "," + std::to_string(rep.r) + "," + std::to_string(rep.n);
    for (uint32_t j = 1; j < pmax; ++j) {
        if (j >= rep.p) {
            s += ",na,na,na";
            continue;
        }
        s += "," + std::to_string(rep.ranks[j - 1]) + "," + tri_name(rep.constancy[j - 1].constant) + "," +
             degree_cell(rep, static_cast<int>(j));
    }
    s += "," + rep.jordan.to_string() + "," + tri_name(rep.eip.overall) + "," + tri_name(rep.ekp.overall) + "," +
         tri_name(rep.self_dual.status) + "," + (rep.kernel ? std::to_string(rep.kernel->kernel.dim()) : std::string("na"));
    return s + "\n";
}

std::string report_json(const InvariantReport& rep) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["name"] = rep.name;
    j["p"] = rep.p;
    j["r"] = rep.r;
    j["dim"] = rep.n;
    ordered_json levels = ordered_json::array();
    for (size_t k = 0; k < rep.ranks.size(); ++k) {
        ordered_json l;
        const auto& c = rep.constancy[k];
        l["j"] = k + 1;
        l["rank"] = rep.ranks[k];
        l["constant"] = tri_name(c.constant);
        l["constancy_route"] = c.route;
        if (c.witness) l["witness"] = c.witness->to_string();
        if (!c.reason.empty()) l["constancy_reason"] = c.reason;
        if (!rep.degrees.empty()) {
            const auto& d = rep.degrees[k];
            if (d.determined) l["degree"] = d.value;
            else l["degree"] = "undet";
            if (d.determined && c.constant != Tri::Yes && d.rank > 0) l["degree_kind"] = "generic-chart";
            l["degree_route"] = d.route;
            l["chart"] = d.chart;
            if (!d.reason.empty()) l["degree_reason"] = d.reason;
        } else {
            l["degree"] = "na";
        }
        l["eip"] = tri_name(rep.eip.per_j[k]);
        l["ekp"] = tri_name(rep.ekp.per_j[k]);
        levels.push_back(l);
    }
    j["levels"] = levels;
    j["jordan_type"] = rep.jordan.to_string();
    j["jordan_type_pretty"] = rep.jordan.pretty();
    j["constant_jordan_type"] = tri_name(rep.constant_jordan);
    j["eip"] = tri_name(rep.eip.overall);
    j["ekp"] = tri_name(rep.ekp.overall);
    j["self_dual"] = tri_name(rep.self_dual.status);
    j["self_dual_route"] = rep.self_dual.route;
    if (rep.kernel) {
        j["generic_kernel_dim"] = rep.kernel->kernel.dim();
        j["generic_kernel_tag"] = rep.kernel->tag;
    } else {
        j["generic_kernel_dim"] = "na";
    }
    j["checks"] = rep.checks;
    return j.dump();
}

}  // namespace modinv
