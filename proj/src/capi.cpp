#include <cstdlib>
#include <cstring>

#include "json.hpp"
#include "modinv/invariants.hpp"
#include "modinv/modinv.h"

using namespace modinv;

struct mi_module {
    ModuleRep m;
};

struct mi_report {
    InvariantReport rep;
};

namespace {

thread_local std::string g_last_error;

Limits limits_of(const mi_options* opt) {
    Limits l;
    if (opt) {
        l.max_dim = opt->max_dim;
        l.max_regular = opt->max_regular;
    }
    return l;
}

InvariantOptions inv_options(const mi_options* opt) {
    InvariantOptions o;
    if (!opt) return o;
    o.max_ext = opt->max_ext;
    o.groebner_budget = opt->groebner_budget;
    o.minor_budget = opt->minor_budget;
    o.point_budget = opt->point_budget;
    o.selfdual_max_dim = opt->selfdual_max_dim;
    o.degrees = opt->degrees != 0;
    o.kernel = opt->kernel != 0;
    return o;
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F>
int guard(F&& f) {
    try {
        f();
        g_last_error.clear();
        return MI_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return static_cast<int>(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return MI_E_RESOURCE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MI_E_INTERNAL;
    }
}

void need(const void* p, const char* what) {
    if (!p) fail(ErrorCode::Range, std::string("null argument: ") + what);
}

Vec point_of(const ModuleRep& m, const long long* pt, size_t len) {
    need(pt, "point");
    auto F = m.field();
    Vec v;
    for (size_t i = 0; i < len; ++i) v.push_back(F->from_int(pt[i]));
    return v;
}

nlohmann::ordered_json constancy_json(const Constancy& c) {
    nlohmann::ordered_json j;
    j["constant"] = tri_name(c.constant);
    j["rank"] = c.generic_rank;
    j["route"] = c.route;
    if (c.witness) j["witness"] = c.witness->to_string();
    if (!c.reason.empty()) j["reason"] = c.reason;
    return j;
}

}  // namespace

extern "C" {

void mi_options_default(mi_options* opt) {
    if (!opt) return;
    InvariantOptions o;
    Limits l;
    opt->max_ext = o.max_ext;
    opt->groebner_budget = o.groebner_budget;
    opt->minor_budget = o.minor_budget;
    opt->point_budget = o.point_budget;
    opt->selfdual_max_dim = o.selfdual_max_dim;
    opt->max_dim = l.max_dim;
    opt->max_regular = l.max_regular;
    opt->degrees = 1;
    opt->kernel = 1;
}

const char* mi_last_error(void) { return g_last_error.c_str(); }

const char* mi_status_name(int status) {
    if (status == MI_OK) return "ok";
    if (status == MI_E_ARGUMENT) return "argument";
    return error_code_name(static_cast<ErrorCode>(status));
}

void mi_string_free(char* s) { std::free(s); }

int mi_module_from_zoo(const char* spec, const mi_options* opt, mi_module** out) {
    return guard([&] {
        need(spec, "spec");
        need(out, "out");
        *out = new mi_module{zoo(spec, limits_of(opt))};
    });
}

int mi_module_load(const char* path, const mi_options* opt, mi_module** out) {
    return guard([&] {
        need(path, "path");
        need(out, "out");
        *out = new mi_module{load_module(path, limits_of(opt))};
    });
}

int mi_module_from_json(const char* text, const mi_options* opt, mi_module** out) {
    return guard([&] {
        need(text, "text");
        need(out, "out");
        *out = new mi_module{module_from_json(text, limits_of(opt))};
    });
}

int mi_module_save(const mi_module* m, const char* path) {
    return guard([&] {
        need(m, "module");
        need(path, "path");
        save_module(m->m, path);
    });
}

int mi_module_to_json(const mi_module* m, char** out) {
    return guard([&] {
        need(m, "module");
        need(out, "out");
        *out = dup(module_to_json(m->m));
    });
}

int mi_module_dual(const mi_module* m, mi_module** out) {
    return guard([&] {
        need(m, "module");
        need(out, "out");
        *out = new mi_module{dual_module(m->m)};
    });
}

int mi_module_info(const mi_module* m, unsigned* p, int* r, size_t* dim) {
    return guard([&] {
        need(m, "module");
        if (p) *p = m->m.p;
        if (r) *r = m->m.r;
        if (dim) *dim = m->m.n;
    });
}

int mi_module_name(const mi_module* m, char** out) {
    return guard([&] {
        need(m, "module");
        need(out, "out");
        *out = dup(m->m.name);
    });
}

void mi_module_free(mi_module* m) { delete m; }

int mi_zoo_catalog(unsigned p, char** out) {
    return guard([&] {
        need(out, "out");
        if (p < 2 || p > kMaxPrime || !is_prime(p)) fail(ErrorCode::Catalog, "catalog needs a prime p <= 31");
        std::string s;
        for (const auto& e : zoo_catalog(p)) s += e + "\n";
        *out = dup(s);
    });
}

int mi_validate(const mi_module* m, char** route) {
    return guard([&] {
        need(m, "module");
        auto c = validate_frame(m->m);
        if (route) *route = dup(c.route);
    });
}

int mi_generic_rank(const mi_module* m, int j, size_t* out) {
    return guard([&] {
        need(m, "module");
        need(out, "out");
        *out = generic_jrank(m->m, j);
    });
}

int mi_rank_at_point(const mi_module* m, int j, const long long* point, size_t len, size_t* out) {
    return guard([&] {
        need(m, "module");
        need(out, "out");
        *out = rank_at_point(m->m, j, m->m.field(), point_of(m->m, point, len));
    });
}

int mi_certify(const mi_module* m, int j, const mi_options* opt, char** json) {
    return guard([&] {
        need(m, "module");
        need(json, "out");
        auto c = constant_jrank_certify(m->m, j, inv_options(opt));
        nlohmann::ordered_json js;
        js["j"] = j;
        auto cj = constancy_json(c);
        for (auto& [k, v] : cj.items()) js[k] = v;
        *json = dup(js.dump());
    });
}

int mi_degree(const mi_module* m, int j, const mi_options* opt, char** json) {
    return guard([&] {
        need(m, "module");
        need(json, "out");
        auto d = jdegree(m->m, j, inv_options(opt));
        nlohmann::ordered_json js;
        js["j"] = j;
        js["rank"] = d.rank;
        if (d.determined) js["degree"] = d.value;
        else js["degree"] = "undet";
        js["route"] = d.route;
        js["chart"] = d.chart;
        js["chart2"] = d.chart2;
        js["divisor_degree"] = d.divisor_degree;
        if (!d.reason.empty()) js["reason"] = d.reason;
        *json = dup(js.dump());
    });
}

int mi_jordan_generic(const mi_module* m, char** out) {
    return guard([&] {
        need(m, "module");
        need(out, "out");
        *out = dup(generic_jordan_type(m->m).to_string());
    });
}

int mi_jordan_at_point(const mi_module* m, const long long* point, size_t len, char** out) {
    return guard([&] {
        need(m, "module");
        need(out, "out");
        *out = dup(jordan_type_at(m->m, m->m.field(), point_of(m->m, point, len)).to_string());
    });
}

int mi_jordan_at_ppoint(const mi_module* m, const char* poly, char** out) {
    return guard([&] {
        need(m, "module");
        need(poly, "poly");
        need(out, "out");
        *out = dup(jordan_type_at(m->m, parse_poly(poly, m->m.p, m->m.r)).to_string());
    });
}

int mi_generic_kernel(const mi_module* m, const mi_options* opt, char** json) {
    return guard([&] {
        need(m, "module");
        need(json, "out");
        auto k = generic_kernel(m->m, inv_options(opt));
        nlohmann::ordered_json js;
        js["dim"] = k.kernel.dim();
        js["codim"] = k.codim;
        js["degree1"] = k.degree1;
        js["tag"] = k.tag;
        nlohmann::ordered_json basis = nlohmann::ordered_json::array();
        for (const auto& v : k.kernel.space.vectors()) basis.push_back(v);
        js["basis"] = basis;
        *json = dup(js.dump());
    });
}

int mi_self_dual(const mi_module* m, const mi_options* opt, char** json) {
    return guard([&] {
        need(m, "module");
        need(json, "out");
        auto s = self_dual_test(m->m, inv_options(opt));
        nlohmann::ordered_json js;
        js["self_dual"] = tri_name(s.status);
        js["route"] = s.route;
        js["hom_dim"] = s.hom_dim;
        *json = dup(js.dump());
    });
}

int mi_report_compute(const mi_module* m, const mi_options* opt, mi_report** out) {
    return guard([&] {
        need(m, "module");
        need(out, "out");
        *out = new mi_report{report(m->m, inv_options(opt))};
    });
}

int mi_report_csv_header(unsigned pmax, char** out) {
    return guard([&] {
        need(out, "out");
        *out = dup(csv_header(pmax));
    });
}

int mi_report_csv_row(const mi_report* rep, unsigned pmax, char** out) {
    return guard([&] {
        need(rep, "report");
        need(out, "out");
        *out = dup(csv_row(rep->rep, pmax));
    });
}

int mi_report_json(const mi_report* rep, char** out) {
    return guard([&] {
        need(rep, "report");
        need(out, "out");
        *out = dup(report_json(rep->rep));
    });
}

int mi_report_undetermined(const mi_report* rep) { return rep && rep->rep.any_undetermined() ? 1 : 0; }

unsigned mi_report_p(const mi_report* rep) { return rep ? rep->rep.p : 0; }

void mi_report_free(mi_report* rep) { delete rep; }

}  // extern "C"
