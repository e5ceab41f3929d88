// modinv command line front end; talks to the library only through modinv.h.
#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "modinv/modinv.h"

namespace {

constexpr int kExitOk = 0, kExitInvalid = 1, kExitUndetermined = 2;

struct Failure {
    std::string msg;
};

std::string take(char* s) {
    std::string out = s ? s : "";
    mi_string_free(s);
    return out;
}

void check(int status, const std::string& what) {
    if (status != MI_OK) throw Failure{what + ": " + mi_status_name(status) + ": " + mi_last_error()};
}

using ModulePtr = std::unique_ptr<mi_module, decltype(&mi_module_free)>;

struct Input {
    std::string spec;
    bool is_file;
};

struct Config {
    std::vector<std::string> zoo, files;
    std::vector<int> js;
    unsigned ext = 3;
    size_t budget = 200000;
    std::string format = "csv";
    std::string out;
    unsigned workers = 0;
    size_t max_dim = 64;
    std::vector<unsigned> primes;
    std::vector<std::string> only;
    std::string point, ppoint, save;
};

mi_options options_of(const Config& c) {
    mi_options o;
    mi_options_default(&o);
    o.max_ext = c.ext;
    o.groebner_budget = c.budget;
    o.max_dim = c.max_dim;
    return o;
}

std::vector<Input> inputs_of(const Config& c) {
    std::vector<Input> in;
    for (const auto& z : c.zoo) in.push_back({z, false});
    for (const auto& f : c.files) in.push_back({f, true});
    return in;
}

ModulePtr load(const Input& in, const mi_options& o) {
    mi_module* m = nullptr;
    int st = in.is_file ? mi_module_load(in.spec.c_str(), &o, &m) : mi_module_from_zoo(in.spec.c_str(), &o, &m);
    check(st, in.spec);
    return ModulePtr(m, mi_module_free);
}

void emit(const Config& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw Failure{"cannot write " + c.out};
    f << text;
}

std::vector<long long> parse_point(const std::string& s) {
    std::vector<long long> pt;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            pt.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Failure{"bad point coordinate '" + item + "'"};
        }
    }
    return pt;
}

std::vector<int> levels(const Config& c, unsigned p) {
    if (!c.js.empty()) return c.js;
    std::vector<int> out;
    for (unsigned j = 1; j < p; ++j) out.push_back(static_cast<int>(j));
    return out;
}

std::string name_of(const mi_module* m) {
    char* s = nullptr;
    check(mi_module_name(m, &s), "name");
    return take(s);
}

unsigned prime_of(const mi_module* m) {
    unsigned p = 0;
    check(mi_module_info(m, &p, nullptr, nullptr), "info");
    return p;
}

// Reports for all inputs, computed in parallel and emitted in input order.
int run_reports(const Config& c, const std::vector<Input>& in) {
    mi_options o = options_of(c);
    struct Row {
        std::unique_ptr<mi_report, decltype(&mi_report_free)> rep{nullptr, mi_report_free};
        std::string error;
    };
    std::vector<Row> rows(in.size());
    std::atomic<size_t> next{0};
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    unsigned nw = c.workers ? c.workers : std::min(hw, 8u);
    nw = std::max(1u, std::min<unsigned>(nw, static_cast<unsigned>(in.size())));
    auto work = [&] {
        for (size_t k; (k = next++) < in.size();) {
            try {
                auto m = load(in[k], o);
                mi_report* r = nullptr;
                check(mi_report_compute(m.get(), &o, &r), in[k].spec);
                rows[k].rep.reset(r);
            } catch (const Failure& f) {
                rows[k].error = f.msg;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nw; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    for (const auto& r : rows)
        if (!r.error.empty()) throw Failure{r.error};
    unsigned pmax = 2;
    for (const auto& r : rows) pmax = std::max(pmax, mi_report_p(r.rep.get()));
    std::string text;
    bool undet = false;
    if (c.format == "csv") {
        char* h = nullptr;
        check(mi_report_csv_header(pmax, &h), "header");
        text = take(h);
        for (const auto& r : rows) {
            char* s = nullptr;
            check(mi_report_csv_row(r.rep.get(), pmax, &s), "row");
            text += take(s);
        }
    } else {
        text = "[";
        for (size_t k = 0; k < rows.size(); ++k) {
            char* s = nullptr;
            check(mi_report_json(rows[k].rep.get(), &s), "json");
            text += (k ? ",\n" : "\n") + take(s);
        }
        text += rows.empty() ? "]\n" : "\n]\n";
    }
    for (const auto& r : rows) undet = undet || mi_report_undetermined(r.rep.get());
    emit(c, text);
    return undet ? kExitUndetermined : kExitOk;
}

int run_zoo(const Config& c) {
    std::vector<unsigned> primes = c.primes.empty() ? std::vector<unsigned>{3, 5} : c.primes;
    std::sort(primes.begin(), primes.end());
    // catalog order, then p ascending
    std::vector<std::vector<std::string>> per_p;
    size_t longest = 0;
    for (unsigned p : primes) {
        char* s = nullptr;
        check(mi_zoo_catalog(p, &s), "catalog");
        std::vector<std::string> names;
        std::stringstream ss(take(s));
        for (std::string line; std::getline(ss, line);) {
            bool keep = c.only.empty();
            for (const auto& pre : c.only) keep = keep || line.rfind(pre + ":", 0) == 0 || line == pre;
            if (keep) names.push_back(line);
        }
        longest = std::max(longest, names.size());
        per_p.push_back(std::move(names));
    }
    std::vector<Input> in;
    for (size_t k = 0; k < longest; ++k)
        for (const auto& names : per_p)
            if (k < names.size()) in.push_back({names[k], false});
    return run_reports(c, in);
}

// One line per input and j for the per-level commands.
template <class F>
int per_level(const Config& c, const std::string& header, F&& f) {
    mi_options o = options_of(c);
    std::string text = c.format == "csv" ? header + "\n" : "[";
    bool first = true, undet = false;
    for (const auto& in : inputs_of(c)) {
        auto m = load(in, o);
        for (int j : levels(c, prime_of(m.get()))) {
            auto [csv, json, u] = f(m.get(), j, o);
            undet = undet || u;
            if (c.format == "csv") text += name_of(m.get()) + "," + csv + "\n";
            else {
                text += (first ? "\n" : ",\n") + json;
                first = false;
            }
        }
    }
    if (c.format != "csv") text += first ? "]\n" : "\n]\n";
    emit(c, text);
    return undet ? kExitUndetermined : kExitOk;
}

std::string json_field(const std::string& json, const std::string& key) {
    auto pos = json.find("\"" + key + "\":");
    if (pos == std::string::npos) return "";
    pos += key.size() + 3;
    if (json[pos] == '"') {
        auto end = json.find('"', pos + 1);
        return json.substr(pos + 1, end - pos - 1);
    }
    auto end = json.find_first_of(",}", pos);
    return json.substr(pos, end - pos);
}

std::string with_name(const std::string& json, const std::string& name) {
    return "{\"name\":\"" + name + "\"," + json.substr(1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rank, degree and Jordan type invariants of modules over elementary abelian group schemes"};
    app.require_subcommand(1);
    Config cfg;
    auto common = [&](CLI::App* sc, bool inputs = true) {
        if (inputs) {
            sc->add_option("--zoo", cfg.zoo, "catalog module NAME:key=val,... (repeatable)");
            sc->add_option("--in", cfg.files, "module JSON file (repeatable)");
        }
        sc->add_option("-j", cfg.js, "level j (repeatable; default all 1..p-1)");
        sc->add_option("--ext", cfg.ext, "largest extension degree e for point searches")->check(CLI::Range(1, 3));
        sc->add_option("--budget", cfg.budget, "S-pair budget per Groebner run")->check(CLI::PositiveNumber);
        sc->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sc->add_option("--out", cfg.out, "output path (default stdout)");
        sc->add_option("--max-dim", cfg.max_dim, "largest accepted module dimension");
    };
    auto* report = app.add_subcommand("report", "full invariant report per module");
    common(report);
    report->add_option("--workers", cfg.workers, "parallel rows (default: cores, at most 8)");
    auto* zoo = app.add_subcommand("zoo", "report table of the example catalog");
    common(zoo, false);
    zoo->add_option("--p", cfg.primes, "primes (repeatable; default 3 and 5)");
    zoo->add_option("--only", cfg.only, "restrict to catalog names (repeatable)");
    zoo->add_option("--workers", cfg.workers, "parallel rows");
    auto* validate = app.add_subcommand("validate", "check the frame condition");
    common(validate);
    validate->add_option("--save", cfg.save, "write the canonical module file");
    auto* degree = app.add_subcommand("degree", "j-degrees");
    common(degree);
    auto* rank = app.add_subcommand("rank", "generic or pointwise j-ranks");
    common(rank);
    rank->add_option("--point", cfg.point, "point over F_p, comma separated");
    auto* jordan = app.add_subcommand("jordan", "generic or pointwise Jordan type");
    common(jordan);
    jordan->add_option("--point", cfg.point, "point over F_p, comma separated");
    jordan->add_option("--ppoint", cfg.ppoint, "p-point as a polynomial in t1..tr");
    auto* certify = app.add_subcommand("certify", "constant j-rank certificates");
    common(certify);
    auto* kernel = app.add_subcommand("kernel", "generic kernel");
    common(kernel);
    auto* selfdual = app.add_subcommand("selfdual", "self-duality test");
    common(selfdual);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (report->parsed()) return run_reports(cfg, inputs_of(cfg));
        if (zoo->parsed()) return run_zoo(cfg);
        mi_options o = options_of(cfg);
        if (validate->parsed()) {
            auto in = inputs_of(cfg);
            if (!cfg.save.empty() && in.size() != 1) throw Failure{"--save needs exactly one module"};
            std::string text;
            for (const auto& i : in) {
                auto m = load(i, o);
                char* route = nullptr;
                check(mi_validate(m.get(), &route), i.spec);
                text += name_of(m.get()) + ",valid," + take(route) + "\n";
                if (!cfg.save.empty()) check(mi_module_save(m.get(), cfg.save.c_str()), "save");
            }
            emit(cfg, text);
            return kExitOk;
        }
        if (degree->parsed())
            return per_level(cfg, "name,j,rank,degree,route", [](mi_module* m, int j, const mi_options& o) {
                char* s = nullptr;
                check(mi_degree(m, j, &o, &s), "degree");
                std::string js = take(s);
                std::string deg = json_field(js, "degree");
                std::string csv = std::to_string(j) + "," + json_field(js, "rank") + "," + deg + "," + json_field(js, "route");
                return std::make_tuple(csv, with_name(js, name_of(m)), deg == "undet");
            });
        if (certify->parsed())
            return per_level(cfg, "name,j,rank,constant,route,witness", [](mi_module* m, int j, const mi_options& o) {
                char* s = nullptr;
                check(mi_certify(m, j, &o, &s), "certify");
                std::string js = take(s);
                std::string st = json_field(js, "constant");
                std::string w = json_field(js, "witness");
                std::replace(w.begin(), w.end(), ',', ' ');
                std::string csv = std::to_string(j) + "," + json_field(js, "rank") + "," + st + "," + json_field(js, "route") + "," +
                                  (w.empty() ? "na" : w);
                return std::make_tuple(csv, with_name(js, name_of(m)), st == "undet");
            });
        if (rank->parsed()) {
            std::vector<long long> pt = cfg.point.empty() ? std::vector<long long>{} : parse_point(cfg.point);
            return per_level(cfg, "name,j,rank", [&](mi_module* m, int j, const mi_options&) {
                size_t rk = 0;
                if (pt.empty()) check(mi_generic_rank(m, j, &rk), "rank");
                else check(mi_rank_at_point(m, j, pt.data(), pt.size(), &rk), "rank");
                std::string csv = std::to_string(j) + "," + std::to_string(rk);
                std::string js = "{\"name\":\"" + name_of(m) + "\",\"j\":" + std::to_string(j) + ",\"rank\":" + std::to_string(rk) + "}";
                return std::make_tuple(csv, js, false);
            });
        }
        if (jordan->parsed()) {
            std::string text = cfg.format == "csv" ? "name,jordan_type\n" : "[";
            bool first = true;
            for (const auto& in : inputs_of(cfg)) {
                auto m = load(in, o);
                char* s = nullptr;
                if (!cfg.ppoint.empty()) check(mi_jordan_at_ppoint(m.get(), cfg.ppoint.c_str(), &s), "jordan");
                else if (!cfg.point.empty()) {
                    auto pt = parse_point(cfg.point);
                    check(mi_jordan_at_point(m.get(), pt.data(), pt.size(), &s), "jordan");
                } else {
                    check(mi_jordan_generic(m.get(), &s), "jordan");
                }
                std::string jt = take(s);
                if (cfg.format == "csv") text += name_of(m.get()) + "," + jt + "\n";
                else {
                    text += std::string(first ? "\n" : ",\n") + "{\"name\":\"" + name_of(m.get()) + "\",\"jordan_type\":\"" + jt + "\"}";
                    first = false;
                }
            }
            if (cfg.format != "csv") text += first ? "]\n" : "\n]\n";
            emit(cfg, text);
            return kExitOk;
        }
        if (kernel->parsed() || selfdual->parsed()) {
            bool k = kernel->parsed();
            std::string text = cfg.format == "csv" ? (k ? "name,dim,codim,degree1,tag\n" : "name,self_dual,route,hom_dim\n") : "[";
            bool first = true, undet = false;
            for (const auto& in : inputs_of(cfg)) {
                auto m = load(in, o);
                char* s = nullptr;
                check(k ? mi_generic_kernel(m.get(), &o, &s) : mi_self_dual(m.get(), &o, &s), k ? "kernel" : "selfdual");
                std::string js = take(s), nm = name_of(m.get());
                if (!k) undet = undet || json_field(js, "self_dual") == "undet";
                if (cfg.format == "csv") {
                    if (k)
                        text += nm + "," + json_field(js, "dim") + "," + json_field(js, "codim") + "," + json_field(js, "degree1") + "," +
                                json_field(js, "tag") + "\n";
                    else
                        text += nm + "," + json_field(js, "self_dual") + "," + json_field(js, "route") + "," + json_field(js, "hom_dim") + "\n";
                } else {
                    text += (first ? "\n" : ",\n") + with_name(js, nm);
                    first = false;
                }
            }
            if (cfg.format != "csv") text += first ? "]\n" : "\n]\n";
            emit(cfg, text);
            return undet ? kExitUndetermined : kExitOk;
        }
    } catch (const Failure& f) {
        std::cerr << "modinv: " << f.msg << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
