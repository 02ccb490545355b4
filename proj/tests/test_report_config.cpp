#include "vhh/config.hpp"
#include "vhh/report.hpp"
#include "vhh/util.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace vhh;

TEST_SUITE("report") {

TEST_CASE("tag registry gates report rows") {
    CHECK(tag_known("chi-support"));
    CHECK(tag_known("ring-minimax"));
    CHECK(tag_known("resolvent-lambda-stability"));
    CHECK_FALSE(tag_known("no-such-tag"));
    BoundReport rep;
    rep.suite = "cutoffs";
    CHECK_THROWS_AS(rep.add({"no-such-tag", "x", 0, "", 0, true, true, ""}),
                    StructuralError);
}

TEST_CASE("csv layout and pass aggregation") {
    BoundReport rep;
    rep.suite = "cutoffs";
    rep.add({"chi-support", "a", 1.0, "<= 2", 0.5, true, true, ""});
    rep.add({"chi-partition", "b", 3.0, "<= 2", 1.5, false, false, "reported only"});
    std::ostringstream os;
    rep.write_csv(os);
    const std::string csv = os.str();
    CHECK(csv.rfind("tag,name,measured,bound,ratio,asserted,pass,note", 0) == 0);
    CHECK(rep.pass());  // the failing row is not asserted
    rep.add({"sector-partition", "c", 3.0, "<= 2", 1.5, false, true, ""});
    CHECK_FALSE(rep.pass());
}

TEST_CASE("merge refuses mixed configurations per tag") {
    BoundReport a;
    a.suite = "cutoffs";
    a.add({"chi-support", "a", 1.0, "<= 2", 0.5, true, true, ""});
    BoundReport b;
    b.suite = "cutoffs";
    b.add({"chi-support", "a", 1.1, "<= 2", 0.55, true, true, ""});

    const std::string merged = merge_reports({a.to_json(42, 1.0), b.to_json(42, 2.0)});
    CHECK(!merged.empty());
    CHECK_THROWS_AS(merge_reports({a.to_json(42, 1.0), b.to_json(43, 2.0)}),
                    std::invalid_argument);
}

TEST_CASE("configuration layering and validation") {
    RunConfig cfg;
    apply_kv(cfg, "gamma", "12");
    apply_kv(cfg, "temperature_list", "0.1,0.05");
    apply_kv(cfg, "seed", "99");
    CHECK(cfg.gamma == 12.0);
    REQUIRE(cfg.temperature_list.size() == 2);
    CHECK(cfg.temperature_list[1] == 0.05);
    CHECK(cfg.seed == 99);
    cfg.validate();
    cfg.gamma = 2.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    CHECK_THROWS_AS(apply_kv(cfg, "no_such_key", "1"), std::invalid_argument);
}

TEST_CASE("config hash tracks the values that matter") {
    RunConfig a, b;
    CHECK(a.hash() == b.hash());
    b.gamma = 11.0;
    CHECK(a.hash() != b.hash());
}

TEST_CASE("file layer loads key=value lines with comments") {
    const std::string path = "vhh_test_config.tmp";
    {
        std::ofstream f(path);
        f << "# comment line\n";
        f << "gamma = 13\n";
        f << "resolution=32\n";
    }
    const RunConfig cfg = load_config(path, {"resolution=48"});
    CHECK(cfg.gamma == 13.0);
    CHECK(cfg.resolution == 48);  // explicit override wins over the file
    std::remove(path.c_str());
}

TEST_CASE("fmt17 round trips doubles") {
    for (double x : {0.1, 1.0 / 3.0, 1e-17, 12345.6789}) {
        CHECK(std::stod(fmt17(x)) == x);
    }
}

TEST_CASE("linfit recovers an exact line") {
    const auto fit = linfit({1.0, 2.0, 3.0, 4.0}, {3.0, 5.0, 7.0, 9.0});
    CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-12));
}

} // TEST_SUITE
