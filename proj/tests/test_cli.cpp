#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using nlohmann::json;
using linrel::cli::run_cli;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
    json j() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// sets an environment variable for one scope
struct EnvGuard {
    std::string name;
    EnvGuard(std::string n, const char* value) : name(std::move(n)) { ::setenv(name.c_str(), value, 1); }
    ~EnvGuard() { ::unsetenv(name.c_str()); }
};

}  // namespace

TEST(CliCoeff, Hermite) {
    const auto r = run({"coeff", "--family", "hermite", "--degrees", "1,1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto c = r.j()["coefficients"];
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c[0]["k"], 0);
    EXPECT_EQ(c[0]["degree"], 2);
    EXPECT_EQ(c[0]["value"], "1");
    EXPECT_EQ(c[1]["degree"], 0);
    EXPECT_EQ(c[1]["value"], "2");
}

TEST(CliCoeff, JacobiLegendre) {
    const auto r = run({"coeff", "--family", "jacobi", "--alpha", "0", "--beta", "0", "--degrees", "1,1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = r.j();
    std::vector<std::string> vals;
    for (const auto& c : j["coefficients"]) vals.push_back(c["value"]);
    EXPECT_EQ(vals, (std::vector<std::string>{"1/3", "0", "2/3"}));
}

TEST(CliCoeff, GegenbauerTripleMatchesOracleMethod) {
    const std::vector<std::string> base{"coeff", "--family", "gegenbauer", "--lambda", "1/2", "--degrees", "1,1,1"};
    auto closed = base, oracle = base;
    oracle.insert(oracle.end(), {"--method", "oracle"});
    const auto a = run(closed), b = run(oracle);
    ASSERT_EQ(a.code, 0) << a.err;
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(a.j()["coefficients"], b.j()["coefficients"]);
    EXPECT_EQ(a.j()["coefficients"].size(), 2u);
}

TEST(CliCoeff, Csv) {
    const auto r = run({"coeff", "--family", "laguerre", "--alpha", "1/2", "--degrees", "1,1", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("3/2"), std::string::npos);
    EXPECT_NE(r.out.find("-2"), std::string::npos);
}

TEST(CliVerify, ContiguousHermite) {
    const auto r = run({"verify", "--suite", "contiguous", "--family", "hermite", "--max-degree", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.j();
    EXPECT_EQ(j["passed"], 125);
    EXPECT_EQ(j["failed"], 0);
    EXPECT_EQ(j["skipped"], 0);
    for (const char* key : {"version", "suite", "family", "params", "grid", "witnesses", "wall_time_ms", "threads"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["version"], linrel::cli::kReportVersion);
}

TEST(CliVerify, OracleJacobiParamsAreExactStrings) {
    const auto r = run({"verify", "--suite", "oracle", "--family", "jacobi", "--alpha", "1/2", "--beta", "2/6",
                        "--max-degree", "6"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.j();
    EXPECT_EQ(j["params"]["alpha"], "1/2");
    EXPECT_EQ(j["params"]["beta"], "1/3");
    EXPECT_GT(j["passed"].get<long>(), 0);
}

TEST(CliVerify, QuadScaledLaguerre) {
    const auto r = run({"verify", "--suite", "quad", "--family", "scaled-laguerre", "--alpha", "0", "--scales", "2,3",
                        "--max-degree", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.j()["passed"], 64);
}

TEST(CliVerify, AllSuites) {
    for (std::vector<std::string> fam : {std::vector<std::string>{"--family", "gegenbauer", "--lambda", "1/3"},
                                         {"--family", "hermite"},
                                         {"--family", "jacobi", "--alpha", "1/2", "--beta", "3/2"},
                                         {"--family", "laguerre", "--alpha", "1/2"},
                                         {"--family", "scaled-laguerre", "--alpha", "1/2", "--scales", "1/2,5"}}) {
        std::vector<std::string> args{"verify", "--suite", "all", "--max-degree", "2"};
        args.insert(args.end(), fam.begin(), fam.end());
        const auto r = run(args);
        EXPECT_EQ(r.code, 0) << fam[1] << " " << r.err;
        const json j = r.j();
        EXPECT_EQ(j["failed"], 0);
        long sum = 0;
        for (const auto& s : j["suites"]) sum += s["passed"].get<long>();
        EXPECT_EQ(j["passed"].get<long>(), sum);
    }
}

TEST(CliVerify, EmptyGrid) {
    const auto r = run({"verify", "--suite", "contiguous", "--family", "hermite", "--max-degree", "-1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.j();
    EXPECT_EQ(j["passed"], 0);
    EXPECT_EQ(j["failed"], 0);
    EXPECT_EQ(j["skipped"], 0);
}

TEST(CliVerify, InjectedFailure) {
    const auto r = run({"verify", "--suite", "contiguous", "--family", "hermite", "--max-degree", "2", "--inject-failure"});
    EXPECT_EQ(r.code, 1);
    const auto j = r.j();
    EXPECT_EQ(j["failed"], 1);
    ASSERT_EQ(j["witnesses"].size(), 1u);
    EXPECT_EQ(j["witnesses"][0]["degrees"], json::array({0, 0, 0}));
    EXPECT_TRUE(j["witnesses"][0].contains("residual"));
    EXPECT_TRUE(j["witnesses"][0]["residual"].is_string());
}

TEST(CliVerify, CsvRowCountIsTupleCount) {
    const auto r = run({"verify", "--suite", "contiguous", "--family", "gegenbauer", "--lambda", "1/2", "--factors", "4",
                        "--max-degree", "2", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "suite,kind,degrees,status,residual,message");
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    EXPECT_EQ(rows, 81);
}

TEST(CliVerify, DeterministicAcrossThreads) {
    auto strip_time = [](json j) {
        j.erase("wall_time_ms");
        j.erase("threads");
        return j;
    };
    const std::vector<std::string> base{"verify", "--suite", "contiguous", "--family", "laguerre", "--alpha", "1/3",
                                        "--max-degree", "3", "--format", "csv"};
    auto one = base, four = base;
    one.insert(one.end(), {"--threads", "1"});
    four.insert(four.end(), {"--threads", "4"});
    EXPECT_EQ(run(one).out, run(four).out);
    auto j1 = base, j4 = base;
    j1.resize(j1.size() - 2);
    j4.resize(j4.size() - 2);
    j1.insert(j1.end(), {"--threads", "1"});
    j4.insert(j4.end(), {"--threads", "3"});
    EXPECT_EQ(strip_time(run(j1).j()), strip_time(run(j4).j()));
}

TEST(CliThreads, Precedence) {
    const std::vector<std::string> base{"verify", "--suite", "contiguous", "--family", "hermite", "--max-degree", "1"};
    {
        EnvGuard env("LINREL_THREADS", "3");
        EXPECT_EQ(run(base).j()["threads"], 3);
        auto flagged = base;
        flagged.insert(flagged.end(), {"--threads", "2"});
        EXPECT_EQ(run(flagged).j()["threads"], 2);
    }
    {
        EnvGuard env("LINREL_THREADS", "zero");
        EXPECT_EQ(run(base).code, 2);
    }
    {
        EnvGuard env("LINREL_THREADS", "0");
        EXPECT_EQ(run(base).code, 2);
    }
}

TEST(CliErrors, UsageAndDomain) {
    EXPECT_EQ(run({"coeff", "--family", "gegenbauer", "--lambda", "1/0x", "--degrees", "1,1"}).code, 2);
    EXPECT_EQ(run({"coeff", "--family", "gegenbauer", "--lambda", "1/0", "--degrees", "1,1"}).code, 2);
    EXPECT_EQ(run({"coeff", "--family", "gegenbauer", "--lambda", "0.5", "--degrees", "1,1"}).code, 2);
    EXPECT_EQ(run({"coeff", "--family", "chebyshev", "--degrees", "1,1"}).code, 2);
    EXPECT_EQ(run({"coeff", "--family", "hermite", "--degrees", "1,x"}).code, 2);
    EXPECT_EQ(run({"coeff", "--family", "hermite", "--degrees", "1,-1"}).code, 2);
    EXPECT_EQ(run({"coeff", "--family", "hermite"}).code, 2);
    EXPECT_EQ(run({"verify", "--family", "hermite", "--suite", "nope"}).code, 2);
    EXPECT_EQ(run({"verify", "--family", "hermite", "--suite", "x1"}).code, 2);
    EXPECT_EQ(run({"verify", "--family", "laguerre", "--alpha", "-2", "--max-degree", "1"}).code, 2);
    EXPECT_EQ(run({"verify", "--family", "hermite", "--format", "xml", "--max-degree", "1"}).code, 2);
    EXPECT_EQ(run({"quad", "--family", "hermite", "--degrees", "1,1", "--method", "magic"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    const auto r = run({"coeff", "--family", "gegenbauer", "--lambda", "1/0x", "--degrees", "1,1"});
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
}

TEST(CliHelp, ExitsZero) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE((r.out + r.err).find("verify"), std::string::npos);
}

TEST(CliQuad, HermiteAndScaled) {
    auto r = run({"quad", "--family", "hermite", "--degrees", "2,1,1"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = r.j();
    EXPECT_EQ(j["exact_ratio"], "8");
    EXPECT_TRUE(j["agree"].get<bool>());
    r = run({"quad", "--family", "scaled-laguerre", "--alpha", "0", "--scales", "2,3", "--degrees", "1,1,1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.j()["exact_ratio"], "-19");
    r = run({"quad", "--family", "laguerre", "--alpha", "1/3", "--degrees", "5,6,7", "--rtol", "1e-8", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "degrees,exact,h0,numeric,agree");
    EXPECT_NE(r.out.find(",true"), std::string::npos);
}
