#include "doctest.h"

#include "chromcoh/algebra_io.hpp"
#include "chromcoh/verify.hpp"
#include "corpus.hpp"

using namespace chromcoh;
using namespace testsupport;

namespace {

void require_all_pass(const std::vector<CheckReport>& reports) {
    REQUIRE_FALSE(reports.empty());
    for (const auto& r : reports) {
        CAPTURE(r.check);
        CAPTURE(r.instance);
        CAPTURE(r.witness);
        CHECK(r.passed);
    }
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("individual checks pass on valid instances") {
    const auto zx2 = builtin_algebra("zx2"), zx3 = builtin_algebra("zx3"), r11 = builtin_algebra("rank2:1,1");
    CHECK(check_d_squared(polygon(3), zx3).passed);
    CHECK(check_cube_faces(polygon(3), zx3).passed);
    CHECK(check_euler(polygon(3), zx3).passed);
    CHECK(check_euler(loop_graph(), zx2).passed);
    CHECK(check_euler(bowtie(), builtin_algebra("rank2:5,-2")).passed);
    CHECK(check_edge_order(polygon(3), zx3, 5, 1).passed);
    CHECK(check_edge_order(path_tree(3), zx2, 6, 2).passed);
    CHECK(check_edge_order(bowtie(), zx2, 3, 3).passed);
    CHECK(check_ses(polygon(3), zx3, 2).passed);
    CHECK(check_ses(double_edge(), zx2, 0).passed);
    CHECK(check_ses(double_edge(), zx2, 1).passed);
    CHECK(check_ses(path_tree(2), r11, 1).passed);
    CHECK(check_loops_and_multiedges(loop_graph(), zx3).passed);
    CHECK(check_loops_and_multiedges(double_edge(), zx2).passed);
    CHECK(check_loops_and_multiedges(Graph(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1}}), zx3).passed);
    CHECK(check_pendant(path_tree(1), zx3, 0).passed);
    CHECK(check_pendant(Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}), zx2, 3).passed);
    CHECK(check_kunneth(polygon(3), polygon(3), zx3).passed);
    CHECK(check_kunneth(Graph(2, {}), Graph(3, {}), zx2).passed);
}

TEST_CASE("twisted checks") {
    const auto zx = builtin_algebra("zx-nilpotent");
    const auto f = Endomorphism::zero(1);
    CHECK(check_d_squared(bowtie(), zx, f).passed);
    CHECK(check_cube_faces(bowtie(), zx, f).passed);
    CHECK(check_euler(bowtie(), zx, f).passed);
    CHECK(check_ses(triangles_on_edge(), zx, 5, f).passed);
    const auto zx2 = builtin_algebra("zx2");
    Endomorphism scale{IntMatrix{{1, 0}, {0, -1}}};
    CHECK(check_d_squared(polygon(3), zx2, scale).passed);
    CHECK(check_edge_order(polygon(3), zx2, 4, 9, scale).passed);
}

TEST_CASE("failures carry witnesses") {
    const auto bad = load_algebra(std::string(CHROMCOH_TEST_DATA) + "/badalg.json");
    auto r = check_algebra(bad.algebra);
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.witness.empty());
    // Validation failure stops the suite before any complex is built.
    SuiteOptions opts;
    auto reports = run_checks(polygon(3), bad.algebra, opts);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].check == "algebra");
    CHECK_FALSE(reports[0].passed);
    // Pendant precondition.
    CHECK_FALSE(check_pendant(polygon(3), builtin_algebra("zx2"), 0).passed);
    CHECK_FALSE(check_pendant(polygon(3), builtin_algebra("zx2"), 0).witness.empty());
}

TEST_CASE("suite runner") {
    SuiteOptions opts;
    opts.graph_name = "p3";
    auto reports = run_checks(polygon(3), builtin_algebra("zx3"), opts);
    require_all_pass(reports);
    CHECK(std::is_sorted(reports.begin(), reports.end(),
                         [](const CheckReport& a, const CheckReport& b) { return a.check < b.check; }));
    opts.only = {"d_squared"};
    reports = run_checks(polygon(3), builtin_algebra("zx3"), opts);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].instance == "p3/zx3");

    SuiteOptions tw;
    tw.twist = Endomorphism::zero(1);
    reports = run_checks(bowtie(), builtin_algebra("zx-nilpotent"), tw);
    require_all_pass(reports);
    for (const auto& r : reports) CHECK(r.check != "kunneth");

    SuiteOptions pend;
    reports = run_checks(path_tree(2), builtin_algebra("rank2:1,1"), pend);
    require_all_pass(reports);
    CHECK(std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.check == "pendant"; }));
    CHECK(is_pendant_edge(path_tree(2), 0));
    CHECK_FALSE(is_pendant_edge(polygon(3), 0));
    CHECK(instance_name(polygon(3), builtin_algebra("zx2")) == "v3e3/zx2");
    CHECK(instance_name(polygon(3), builtin_algebra("zx2"), Endomorphism::zero(2), "p3") == "p3/zx2/twist=zero");
}

TEST_CASE("every builtin on a small corpus") {
    std::vector<NamedGraph> graphs = {{"n1", Graph(1, {})}, {"t2", path_tree(2)},  {"p3", polygon(3)},
                                      {"p4", polygon(4)},   {"loop", loop_graph()}, {"double", double_edge()}};
    for (const auto& name : builtin_algebra_names())
        for (const auto& [gname, g] : graphs) {
            SuiteOptions opts;
            opts.graph_name = gname;
            require_all_pass(run_checks(g, builtin_algebra(name), opts));
        }
}

}
