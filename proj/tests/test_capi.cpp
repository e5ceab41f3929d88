#include <string>

#include "doctest.h"
#include "modinv/modinv.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    mi_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("module handles") {
    mi_options opt;
    mi_options_default(&opt);
    CHECK(opt.max_ext == 3);
    mi_module* m = nullptr;
    REQUIRE(mi_module_from_zoo("regular:p=3,r=2", &opt, &m) == MI_OK);
    unsigned p = 0;
    int r = 0;
    size_t n = 0;
    CHECK(mi_module_info(m, &p, &r, &n) == MI_OK);
    CHECK(p == 3);
    CHECK(r == 2);
    CHECK(n == 9);
    char* s = nullptr;
    CHECK(mi_module_name(m, &s) == MI_OK);
    CHECK(take(s) == "regular:p=3;r=2");
    CHECK(mi_validate(m, &s) == MI_OK);
    CHECK(take(s) == "commuting");

    size_t rk = 0;
    CHECK(mi_generic_rank(m, 1, &rk) == MI_OK);
    CHECK(rk == 6);
    long long pt[2] = {1, 2};
    CHECK(mi_rank_at_point(m, 2, pt, 2, &rk) == MI_OK);
    CHECK(rk == 3);
    CHECK(mi_degree(m, 1, &opt, &s) == MI_OK);
    CHECK(take(s).find("\"degree\":3") != std::string::npos);
    CHECK(mi_certify(m, 1, &opt, &s) == MI_OK);
    CHECK(take(s).find("\"constant\":\"yes\"") != std::string::npos);
    CHECK(mi_jordan_generic(m, &s) == MI_OK);
    CHECK(take(s) == "0:0:3");
    CHECK(mi_jordan_at_point(m, pt, 2, &s) == MI_OK);
    CHECK(take(s) == "0:0:3");
    CHECK(mi_jordan_at_ppoint(m, "t1 + t1*t2", &s) == MI_OK);
    CHECK(take(s) == "0:0:3");
    CHECK(mi_generic_kernel(m, &opt, &s) == MI_OK);
    CHECK(take(s).find("\"dim\":6") != std::string::npos);
    CHECK(mi_self_dual(m, &opt, &s) == MI_OK);
    CHECK(take(s).find("\"self_dual\":\"yes\"") != std::string::npos);

    mi_module* d = nullptr;
    CHECK(mi_module_dual(m, &d) == MI_OK);
    CHECK(mi_module_to_json(d, &s) == MI_OK);
    std::string js = take(s);
    mi_module* back = nullptr;
    CHECK(mi_module_from_json(js.c_str(), &opt, &back) == MI_OK);
    CHECK(mi_module_info(back, nullptr, nullptr, &n) == MI_OK);
    CHECK(n == 9);
    mi_module_free(back);
    mi_module_free(d);
    mi_module_free(m);
}

TEST_CASE("error statuses") {
    mi_module* m = nullptr;
    CHECK(mi_module_from_zoo("nothing:p=3", nullptr, &m) == MI_E_CATALOG);
    CHECK(std::string(mi_last_error()).find("nothing") != std::string::npos);
    CHECK(std::string(mi_status_name(MI_E_CATALOG)) != "");
    CHECK(mi_module_from_json("{", nullptr, &m) == MI_E_PARSE);
    CHECK(mi_module_from_json(R"({"p":3,"r":1,"dim":1,"generators":[[[1]]]})", nullptr, &m) == MI_E_INVALID_FRAME);
    CHECK(mi_module_from_zoo(nullptr, nullptr, &m) == MI_E_RANGE);
    CHECK(mi_module_load("/nonexistent.json", nullptr, &m) == MI_E_PARSE);
    REQUIRE(mi_module_from_zoo("heis:p=3", nullptr, &m) == MI_OK);
    char* s = nullptr;
    CHECK(mi_jordan_at_ppoint(m, "t1", &s) == MI_E_UNSUPPORTED);
    size_t rk = 0;
    CHECK(mi_generic_rank(m, 5, &rk) == MI_E_RANGE);
    mi_module_free(m);
    REQUIRE(mi_module_from_zoo("v:p=3,r=2", nullptr, &m) == MI_OK);
    CHECK(mi_jordan_at_ppoint(m, "t1^2", &s) == MI_E_NOT_PPOINT);
    CHECK(mi_jordan_at_ppoint(m, "t1 +", &s) == MI_E_PARSE);
    mi_module_free(m);
    CHECK(mi_zoo_catalog(4, &s) == MI_E_CATALOG);
    CHECK(mi_zoo_catalog(3, &s) == MI_OK);
    CHECK(take(s).find("m3xy:p=3\n") != std::string::npos);
    mi_options opt;
    mi_options_default(&opt);
    opt.max_dim = 4;
    CHECK(mi_module_from_zoo("regular:p=3,r=2", &opt, &m) == MI_E_RESOURCE);
}

TEST_CASE("reports") {
    mi_module* m = nullptr;
    REQUIRE(mi_module_from_zoo("mr2:p=5", nullptr, &m) == MI_OK);
    mi_report* rep = nullptr;
    REQUIRE(mi_report_compute(m, nullptr, &rep) == MI_OK);
    CHECK(mi_report_p(rep) == 5);
    CHECK(mi_report_undetermined(rep) == 0);
    char* s = nullptr;
    CHECK(mi_report_csv_header(5, &s) == MI_OK);
    std::string header = take(s);
    CHECK(header.rfind("name,p,r,dim,rk_1,", 0) == 0);
    CHECK(mi_report_csv_row(rep, 5, &s) == MI_OK);
    CHECK(take(s).rfind("mr2:p=5;r=2,5,2,4,2,yes,1,1,no,", 0) == 0);
    CHECK(mi_report_json(rep, &s) == MI_OK);
    CHECK(take(s).find("\"levels\"") != std::string::npos);
    mi_report_free(rep);
    mi_module_free(m);
    CHECK(mi_report_csv_row(nullptr, 5, &s) == MI_E_RANGE);
}
