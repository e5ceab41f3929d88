#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "modinv/modrep.hpp"

namespace modinv {

namespace {

struct ZooSpec {
    std::string name;
    std::map<std::string, long long> params;
};

ZooSpec parse_spec(const std::string& spec) {
    ZooSpec z;
    auto colon = spec.find(':');
    z.name = spec.substr(0, colon);
    if (z.name.empty()) fail(ErrorCode::Catalog, "empty zoo name");
    if (colon == std::string::npos) return z;
    std::string rest = spec.substr(colon + 1);
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, rest.find(';') != std::string::npos ? ';' : ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) fail(ErrorCode::Catalog, "zoo parameter without value: " + item);
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        try {
            size_t used = 0;
            long long v = std::stoll(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
            z.params[key] = v;
        } catch (const std::exception&) {
            fail(ErrorCode::Catalog, "zoo parameter is not an integer: " + item);
        }
    }
    return z;
}

}  // namespace

std::vector<std::string> zoo_names() {
    return {"trivial", "regular", "rad", "hmod", "mn", "m3xy", "v", "soc2", "mr2", "heis"};
}

ModuleRep zoo(const std::string& spec, const Limits& lim) {
    ZooSpec z = parse_spec(spec);
    std::map<std::string, std::vector<std::string>> allowed = {
        {"trivial", {"p", "r", "dim"}}, {"regular", {"p", "r"}}, {"rad", {"p", "r", "s"}},
        {"hmod", {"p", "r"}},           {"mn", {"p", "n"}},      {"m3xy", {"p"}},
        {"v", {"p", "r"}},              {"soc2", {"p", "r"}},    {"mr2", {"p", "r"}},
        {"heis", {"p"}}};
    auto it = allowed.find(z.name);
    if (it == allowed.end()) fail(ErrorCode::Catalog, "unknown zoo module '" + z.name + "'");
    for (const auto& [k, v] : z.params) {
        (void)v;
        if (k == "dual") continue;
        if (std::find(it->second.begin(), it->second.end(), k) == it->second.end())
            fail(ErrorCode::Catalog, "parameter '" + k + "' is not accepted by " + z.name);
    }
    auto get = [&](const std::string& k, long long dflt) {
        auto f = z.params.find(k);
        return f == z.params.end() ? dflt : f->second;
    };
    long long p = get("p", -1);
    if (p < 2 || p > kMaxPrime || !is_prime(static_cast<uint32_t>(p)))
        fail(ErrorCode::Catalog, "zoo entry needs a prime p <= 31");
    long long r = get("r", 2);
    if (r < 1 || r > kMaxVars - 1) fail(ErrorCode::Catalog, "r out of range");
    uint32_t pp = static_cast<uint32_t>(p);
    int rr = static_cast<int>(r);
    ModuleRep m;
    try {
        if (z.name == "trivial") {
            long long d = get("dim", 1);
            if (d < 0 || static_cast<size_t>(d) > lim.max_dim) fail(ErrorCode::Catalog, "dim out of range");
            m = trivial_module(pp, rr, static_cast<size_t>(d));
        } else if (z.name == "regular") {
            m = regular_module(pp, rr, lim);
        } else if (z.name == "rad") {
            regular_module(pp, rr, lim);
            m = rad_module(pp, rr, static_cast<int>(get("s", 1)));
        } else if (z.name == "hmod") {
            regular_module(pp, rr, lim);
            m = hmod_module(pp, rr);
        } else if (z.name == "mn") {
            m = mn_module(pp, static_cast<int>(get("n", 2)));
        } else if (z.name == "m3xy") {
            m = m3xy_module(pp);
        } else if (z.name == "v") {
            m = v_module(pp, rr);
        } else if (z.name == "soc2") {
            regular_module(pp, rr, lim);
            m = soc2_module(pp, rr);
        } else if (z.name == "mr2") {
            m = mr2_module(pp, rr);
        } else {
            m = heisenberg3(pp);
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Resource) throw;
        fail(ErrorCode::Catalog, std::string("bad zoo parameters: ") + e.what());
    }
    if (m.n > lim.max_dim) fail(ErrorCode::Resource, "module dimension exceeds the cap " + std::to_string(lim.max_dim));
    if (get("dual", 0)) {
        std::string nm = m.name + ";dual=1";
        m = dual_module(m);
        m.name = nm;
    }
    return m;
}

std::vector<std::string> zoo_catalog(uint32_t p) {
    std::string P = std::to_string(p);
    std::vector<std::string> out = {"trivial:p=" + P + ",r=2,dim=1", "regular:p=" + P + ",r=2", "rad:p=" + P + ",r=2,s=1",
                                    "hmod:p=" + P + ",r=2"};
    for (uint32_t n = 2; n + 1 < 2 * p; ++n) out.push_back("mn:p=" + P + ",n=" + std::to_string(n));
    if (p >= 3) out.push_back("m3xy:p=" + P);
    out.push_back("v:p=" + P + ",r=2");
    out.push_back("v:p=" + P + ",r=2,dual=1");
    out.push_back("soc2:p=" + P + ",r=2");
    if (p >= 3) {
        out.push_back("mr2:p=" + P);
        out.push_back("heis:p=" + P);
    }
    return out;
}

std::string module_to_json(const ModuleRep& m) {
    nlohmann::json j;
    j["p"] = m.p;
    j["r"] = m.r;
    j["dim"] = m.n;
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : m.gens) {
        nlohmann::json rows = nlohmann::json::array();
        for (size_t i = 0; i < m.n; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (size_t k = 0; k < m.n; ++k) row.push_back(g.at(i, k));
            rows.push_back(row);
        }
        gens.push_back(rows);
    }
    j["generators"] = gens;
    return j.dump() + "\n";
}

ModuleRep module_from_json(const std::string& text, const Limits& lim) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        fail(ErrorCode::Parse, std::string("malformed module file: ") + e.what());
    }
    auto need_int = [&](const char* key) -> long long {
        if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
            fail(ErrorCode::Parse, std::string("module file needs an integer field '") + key + "'");
        return j[key].get<long long>();
    };
    long long p = need_int("p"), r = need_int("r"), n = need_int("dim");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "p" && it.key() != "r" && it.key() != "dim" && it.key() != "generators")
            fail(ErrorCode::Parse, "unexpected field '" + it.key() + "'");
    if (p < 2 || p > kMaxPrime || !is_prime(static_cast<uint32_t>(p))) fail(ErrorCode::Parse, "p must be a prime <= 31");
    if (r < 1 || r > kMaxVars - 1) fail(ErrorCode::Parse, "r out of range");
    if (n < 0) fail(ErrorCode::Parse, "negative dimension");
    if (static_cast<size_t>(n) > lim.max_dim) fail(ErrorCode::Resource, "module dimension exceeds the cap");
    if (!j.contains("generators") || !j["generators"].is_array() || static_cast<long long>(j["generators"].size()) != r)
        fail(ErrorCode::Parse, "generators must be an array of r matrices");
    auto F = GF::get(static_cast<uint32_t>(p));
    std::vector<Mat> gens;
    for (const auto& g : j["generators"]) {
        if (!g.is_array() || static_cast<long long>(g.size()) != n) fail(ErrorCode::Parse, "generator has the wrong number of rows");
        Mat X(F, n, n);
        for (long long i = 0; i < n; ++i) {
            const auto& row = g[i];
            if (!row.is_array() || static_cast<long long>(row.size()) != n) fail(ErrorCode::Parse, "generator row has the wrong length");
            for (long long k = 0; k < n; ++k) {
                if (!row[k].is_number_integer()) fail(ErrorCode::Parse, "matrix entries must be integers");
                long long v = row[k].get<long long>();
                if (v < 0 || v >= p)
                    fail(ErrorCode::Parse, "entry " + std::to_string(v) + " is outside [0, " + std::to_string(p) + ")");
                X.at(i, k) = static_cast<GF::Elem>(v);
            }
        }
        gens.push_back(std::move(X));
    }
    ModuleRep m = ModuleRep::make(static_cast<uint32_t>(p), std::move(gens), "", lim);
    validate_frame(m);
    return m;
}

ModuleRep load_module(const std::string& path, const Limits& lim) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::Parse, "cannot open module file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    ModuleRep m = module_from_json(ss.str(), lim);
    std::string base = path.substr(path.find_last_of('/') == std::string::npos ? 0 : path.find_last_of('/') + 1);
    m.name = base;
    return m;
}

void save_module(const ModuleRep& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::Parse, "cannot write module file " + path);
    out << module_to_json(m);
}

}  // namespace modinv
