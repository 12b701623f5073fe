#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

// End-to-end runs of the installed binary (path injected by the build).

namespace {

    namespace fs = std::filesystem;

    struct Sandbox {
        fs::path dir;
        Sandbox()
        {
            dir = fs::temp_directory_path() / ("graphlabel_cli_" + std::to_string(::getpid()));
            fs::create_directories(dir);
        }
        ~Sandbox() { fs::remove_all(dir); }
        std::string path(const std::string & name) const { return (dir / name).string(); }
    };

    int run(const std::string & args)
    {
        const std::string cmd = std::string(GRAPHLABEL_BIN) + " " + args + " >/dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    std::string slurp(const std::string & path)
    {
        std::ifstream in(path, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

} // namespace

TEST_CASE("gen writes the documented header")
{
    Sandbox box;
    CHECK(run("gen --spec hypercube:4 --out " + box.path("q4.el")) == 0);
    std::ifstream in(box.path("q4.el"));
    int n = 0, m = 0;
    in >> n >> m;
    CHECK(n == 16);
    CHECK(m == 32);
}

TEST_CASE("label then eval reports an exact scheme")
{
    Sandbox box;
    REQUIRE(run("gen --spec hypercube:4 --out " + box.path("q4.el")) == 0);
    REQUIRE(run("label --in " + box.path("q4.el") + " --kind distance --r 2 --order degeneracy --out " +
                box.path("q4.r2.json")) == 0);
    REQUIRE(run("--json " + box.path("report.json") + " eval --in " + box.path("q4.el") + " --labels " +
                box.path("q4.r2.json") + " --predicate dist_leq --r 2") == 0);

    nlohmann::json report;
    std::ifstream(box.path("report.json")) >> report;
    CHECK(report.at("errors").get<long>() == 0);
    CHECK(report.at("exact").get<bool>());
}

TEST_CASE("identical seed gives byte-identical artifacts")
{
    Sandbox box;
    REQUIRE(run("gen --spec gnp:60:0.1:5 --out " + box.path("a.el")) == 0);
    REQUIRE(run("gen --spec gnp:60:0.1:5 --out " + box.path("b.el")) == 0);
    CHECK(slurp(box.path("a.el")) == slurp(box.path("b.el")));

    REQUIRE(run("label --in " + box.path("a.el") + " --kind adjacency --out " + box.path("l.json")) == 0);
    REQUIRE(run("--seed 42 sketch --labels " + box.path("l.json") + " --out " + box.path("s1.json")) == 0);
    REQUIRE(run("--seed 42 sketch --labels " + box.path("l.json") + " --out " + box.path("s2.json")) == 0);
    REQUIRE(run("--seed 43 sketch --labels " + box.path("l.json") + " --out " + box.path("s3.json")) == 0);
    CHECK(slurp(box.path("s1.json")) == slurp(box.path("s2.json")));
    CHECK(slurp(box.path("s1.json")) != slurp(box.path("s3.json")));
}

TEST_CASE("stored sketches evaluate")
{
    Sandbox box;
    REQUIRE(run("gen --spec tree:40:3 --out " + box.path("t.el")) == 0);
    REQUIRE(run("label --in " + box.path("t.el") + " --kind adjacency --out " + box.path("l.json")) == 0);
    REQUIRE(run("sketch --labels " + box.path("l.json") + " --out " + box.path("s.json")) == 0);
    REQUIRE(run("--json " + box.path("r.json") + " eval --in " + box.path("t.el") + " --sketch " +
                box.path("s.json") + " --predicate adjacency") == 0);
    nlohmann::json report;
    std::ifstream(box.path("r.json")) >> report;
    CHECK(report.at("pairs_checked").get<long>() == 40L * 39 / 2);
}

TEST_CASE("schema version is validated before decoding")
{
    Sandbox box;
    REQUIRE(run("gen --spec path:5 --out " + box.path("p.el")) == 0);
    REQUIRE(run("label --in " + box.path("p.el") + " --kind adjacency --out " + box.path("l.json")) == 0);
    auto text = slurp(box.path("l.json"));
    const auto at = text.find("\"version\": 1");
    REQUIRE(at != std::string::npos);
    text.replace(at, 12, "\"version\": 9");
    std::ofstream(box.path("l.json")) << text;
    CHECK(run("eval --in " + box.path("p.el") + " --labels " + box.path("l.json")) == 2);
}

TEST_CASE("exit codes")
{
    Sandbox box;
    CHECK(run("gen --no-such-flag") == 64);
    CHECK(run("nonsense") == 64);
    CHECK(run("gen --spec nonsense:1 --out " + box.path("x.el")) == 2);
    CHECK(run("eval --in " + box.path("missing.el") + " --labels nope.json") == 2);
    CHECK(run("--help") == 0);
}

TEST_CASE("pds subcommand reports rates")
{
    Sandbox box;
    REQUIRE(run("gen --spec grid:8:8 --out " + box.path("g.el")) == 0);
    REQUIRE(run("--jobs 2 --json " + box.path("r.json") + " adt --in " + box.path("g.el") +
                " --kind pds --r 2 --beta 4 --delta 0.2 --trials 300") == 0);
    nlohmann::json report;
    std::ifstream(box.path("r.json")) >> report;
    CHECK(report.at("bits").get<int>() == 2);
    CHECK(report.at("near_rate").get<double>() > 0.3);
}

TEST_CASE("shrubdepth labels from a model file")
{
    Sandbox box;
    // C4 as a cotree: join root over two unions holding {0,2} and {1,3}
    std::ofstream(box.path("model.json")) << R"({
        "depth": 2, "colors": 3,
        "nodes": [{"id":0,"parent":-1,"color":1},
                  {"id":1,"parent":0,"color":2}, {"id":2,"parent":0,"color":2},
                  {"id":3,"parent":1,"color":0}, {"id":4,"parent":1,"color":0},
                  {"id":5,"parent":2,"color":0}, {"id":6,"parent":2,"color":0}],
        "leaf_of": {"0":3, "1":5, "2":4, "3":6},
        "phi": [[0,0,1,1]]
    })";
    REQUIRE(run("gen --spec cycle:4 --out " + box.path("c4.el")) == 0);
    REQUIRE(run("label --kind shrubdepth --model " + box.path("model.json") + " --in " + box.path("c4.el") +
                " --out " + box.path("l.json")) == 0);
    REQUIRE(run("--json " + box.path("r.json") + " eval --in " + box.path("c4.el") + " --labels " +
                box.path("l.json") + " --predicate adjacency") == 0);
    nlohmann::json report;
    std::ifstream(box.path("r.json")) >> report;
    CHECK(report.at("exact").get<bool>());

    // a model that does not match the graph is rejected
    CHECK(run("label --kind shrubdepth --model " + box.path("model.json") + " --in " + box.path("c4.el") +
              " --out " + box.path("l2.json") + " --r 1") == 0);
    REQUIRE(run("gen --spec path:4 --out " + box.path("p4.el")) == 0);
    CHECK(run("label --kind shrubdepth --model " + box.path("model.json") + " --in " + box.path("p4.el") +
              " --out " + box.path("l3.json")) == 2);
}

TEST_CASE("config round trip")
{
    Sandbox box;
    REQUIRE(run("--seed 9 --write-config " + box.path("cfg.toml") + " gen --spec gnp:30:0.2:9 --out " +
                box.path("direct.el")) == 0);
    REQUIRE(run("--config " + box.path("cfg.toml") + " gen --out " + box.path("fromcfg.el") +
                " --spec gnp:30:0.2:9") == 0);
    CHECK(slurp(box.path("direct.el")) == slurp(box.path("fromcfg.el")));
}
