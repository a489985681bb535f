#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"

namespace {

struct Run {
    int rc;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int rc = parastat::cli::run(std::move(args), out, err);
    return {rc, out.str(), err.str()};
}

} // namespace

TEST_CASE("basis listing sizes and exit codes") {
    auto r = cli({"basis", "--m", "1", "--n", "1", "--p", "2", "--level", "1"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("size=3") != std::string::npos);

    CHECK(cli({"basis", "--m", "1", "--n", "1", "--p", "1", "--level", "0"}).out.find("size=1") !=
          std::string::npos);
    CHECK(cli({"basis", "--m", "0", "--n", "1"}).rc == 2);
    CHECK(cli({"nonsense"}).rc == 2);
}

TEST_CASE("outputs are deterministic and newline-terminated") {
    std::vector<std::string> args{"matrix", "f1+", "--m", "2", "--n", "1",
                                  "--p", "2", "--level", "3", "--format", "json"};
    auto a = cli(args), b = cli(args);
    CHECK(a.rc == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
    CHECK(a.out.back() == '\n');
}

TEST_CASE("matrix dumps") {
    // the defining realization in dimension five
    auto r = cli({"matrix", "f1+", "--defining", "--m", "1", "--n", "1", "--format", "json"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("\"dimension\":5") != std::string::npos);
    CHECK(r.out.find("\"radicand\":2") != std::string::npos);

    // adjoint pair: transposed sparse triplets
    auto plus = cli({"matrix", "f1+", "--m", "1", "--n", "1", "--p", "2", "--level", "2",
                     "--format", "csv"});
    auto minus = cli({"matrix", "f1-", "--m", "1", "--n", "1", "--p", "2", "--level", "2",
                      "--format", "csv"});
    std::istringstream ps(plus.out);
    std::string line;
    std::getline(ps, line); // header
    int checked = 0;
    while (std::getline(ps, line)) {
        auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
        std::string flipped = line.substr(c1 + 1, c2 - c1 - 1) + "," + line.substr(0, c1) + ",";
        CHECK(minus.out.find(flipped) != std::string::npos);
        ++checked;
    }
    CHECK(checked > 0);

    // pso parafermion dump equals the osp one with per-column sign twists
    auto osp = cli({"matrix", "f1+", "--m", "1", "--n", "1", "--p", "2", "--level", "3",
                    "--variant", "osp", "--format", "csv"});
    auto pso = cli({"matrix", "f1+", "--m", "1", "--n", "1", "--p", "2", "--level", "3",
                    "--variant", "pso", "--format", "csv"});
    CHECK(osp.rc == 0);
    CHECK(pso.rc == 0);
    CHECK(osp.out != pso.out); // twisted columns differ...
    auto bo = cli({"matrix", "b1-", "--m", "1", "--n", "1", "--p", "2", "--level", "3",
                   "--variant", "osp", "--format", "csv"});
    auto bp = cli({"matrix", "b1-", "--m", "1", "--n", "1", "--p", "2", "--level", "3",
                   "--variant", "pso", "--format", "csv"});
    CHECK(bo.out == bp.out); // ...while paraboson dumps coincide

    CHECK(cli({"matrix", "x1+", "--m", "1", "--n", "1"}).rc == 2);
    CHECK(cli({"matrix", "f2+", "--m", "1", "--n", "1"}).rc == 2);
}

TEST_CASE("verify command contract") {
    auto ok = cli({"verify", "--all", "--m", "1", "--n", "1", "--p", "2", "--level", "5"});
    CHECK(ok.rc == 0);
    CHECK(ok.out.find("\"status\":\"ok\"") != std::string::npos);

    auto golden = cli({"verify", "--closed-forms", "--p", "3", "--level", "8"});
    CHECK(golden.rc == 0);

    auto defining = cli({"verify", "--defining", "--m", "3", "--n", "3"});
    CHECK(defining.rc == 0);

    CHECK(cli({"verify", "--m", "1", "--n", "1"}).rc == 2); // nothing selected

    // the surfaced disagreement exits with the violation code
    auto route = cli({"verify", "--gtilde-route", "--m", "1", "--n", "1", "--p", "2", "--level", "3"});
    CHECK(route.rc == 1);
    CHECK(route.out.find("\"status\":\"violated\"") != std::string::npos);

    // the closed-form suite needs the smallest signature
    CHECK(cli({"verify", "--closed-forms", "--m", "2", "--n", "1", "--p", "1"}).rc == 2);
}

TEST_CASE("character table") {
    auto r = cli({"character", "--m", "1", "--n", "1", "--p", "2", "--level", "3", "--format",
                  "csv"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("level,partition,dimension,patterns,match") == 0);
    CHECK(r.out.find("false") == std::string::npos);
}

TEST_CASE("reduced element table") {
    auto r = cli({"gtable", "--m", "1", "--n", "1", "--p", "2", "--level", "2"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("top,k,value") == 0);
    // vacuum slot-1 value encodes sqrt(p)
    CHECK(r.out.find("\"0,0\",1,\"{\"\"terms\"\":[{\"\"num\"\":1,\"\"den\"\":1,\"\"radicand\"\":2}]}\"") !=
          std::string::npos);
    auto tw = cli({"gtable", "--twisted", "--m", "1", "--n", "1", "--p", "2", "--level", "2"});
    CHECK(tw.rc == 0);
    CHECK(tw.out != r.out);
}

TEST_CASE("coupling breakdown") {
    auto r = cli({"cgc", "--gen", "f1+", "--source", "1,0/0", "--m", "1", "--n", "1", "--p", "2",
                  "--level", "3"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("super-ff") != std::string::npos);
    CHECK(r.out.find("parity-prefactor") != std::string::npos);
    CHECK(cli({"cgc", "--gen", "f1+", "--source", "0,1/0", "--m", "1", "--n", "1"}).rc == 2);
}

TEST_CASE("config file merges under explicit flags") {
    std::string path = "test_cli_config.tmp";
    {
        std::ofstream f(path);
        f << "# comment\nm = 2\nn = 2\nlevel = 1\n";
    }
    auto merged = cli({"basis", "--config", path, "--p", "1"});
    CHECK(merged.rc == 0);
    CHECK(merged.out.find("m=2 n=2") != std::string::npos);
    auto overridden = cli({"basis", "--config", path, "--m", "1", "--p", "1"});
    CHECK(overridden.out.find("m=1 n=2") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("output file ends with a newline") {
    std::string path = "test_cli_out.tmp";
    auto r = cli({"basis", "--m", "1", "--n", "1", "--p", "1", "--level", "1", "--output", path});
    CHECK(r.rc == 0);
    CHECK(r.out.empty());
    std::ifstream f(path, std::ios::binary);
    std::stringstream buf;
    buf << f.rdbuf();
    REQUIRE(!buf.str().empty());
    CHECK(buf.str().back() == '\n');
    std::remove(path.c_str());
}
