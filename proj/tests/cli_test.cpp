#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "evoaut/autgroup.hpp"
#include "evoaut/cli.hpp"
#include "evoaut/io.hpp"
#include "support.hpp"

using namespace evoaut;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  for (std::string& a : args) {
    if (a.rfind("data/", 0) == 0) a = std::string(EVOAUT_DATA_DIR) + a.substr(4);
  }
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, DiagGolden) {
  const CliResult r = run({"diag", "data/cycle_with_ear.graph", "--field", "F7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "Diag(A;B) ≅ mu_3(K)\n"
            "over F7: order = 3\n"
            "  (1, 1, 1, 1, 1)\n"
            "  (2, 4, 2, 4, 4)\n"
            "  (4, 2, 4, 2, 2)\n");
  EXPECT_EQ(run({"diag", "data/cycle_with_ear.graph", "--field", "Q"}).out, "Diag(A;B) ≅ mu_3(K)\n");
  EXPECT_NE(run({"diag", "data/star3.alg"}).out.find("(K^x)^1 x mu_2(K)^2"), std::string::npos);
  EXPECT_NE(run({"diag", "data/no_edges_f5.alg"}).out.find("(K^x)^2\nover F5: order = 16\n"), std::string::npos);
}

TEST(Cli, AutGolden) {
  const CliResult r = run({"aut", "data/cyclic3.alg"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "Diag(A;B) ≅ 1\n"
            "lift () scales (1, 1, 1) matrix [[1,0,0],[0,1,0],[0,0,1]]\n"
            "lift (1 2 3) scales (-1, -1/2, 2) matrix [[0,0,2],[-1,0,0],[0,-1/2,0]]\n"
            "lift (1 3 2) scales (1/2, -1, -2) matrix [[0,-1,0],[0,0,-2],[1/2,0,0]]\n"
            "quotient order = 3\n"
            "|U| = 3\n"
            "U = Aut(A)\n"
            "|Aut(A)| = 3\n");
  const CliResult swap = run({"aut", "data/swap_infeasible.alg"});
  EXPECT_NE(swap.out.find("(1 2) does not lift: system infeasible"), std::string::npos);
  EXPECT_NE(swap.out.find("Aut(A,B) = {1}"), std::string::npos);
  const CliResult zero = run({"aut", "data/zero3.alg"});
  EXPECT_NE(zero.out.find("U ⊆ Aut(A)"), std::string::npos);
  EXPECT_NE(zero.out.find("quotient order = 6"), std::string::npos);
}

TEST(Cli, Check) {
  const CliResult r = run({"check", "data/chain_loop3.alg"});
  EXPECT_NE(r.out.find("2LI: false (witness u1^2, u2^2)"), std::string::npos);
  EXPECT_NE(run({"check", "data/chain4.alg"}).out.find("2LI: true"), std::string::npos);
  EXPECT_NE(run({"check", "data/char2_equal_squares.alg", "--vector", "1,1,1"}).out.find("natural (1,1,1): false"),
            std::string::npos);
  EXPECT_EQ(run({"check", "data/chain4.alg", "--vector", "0,0,0,0"}).code, 2);
}

TEST(Cli, Oracle) {
  EXPECT_NE(run({"oracle", "data/cycle_with_ear.graph", "--field", "F7"}).out.find("PASS (3 = 3)"), std::string::npos);
  const CliResult swap = run({"oracle", "data/swap_infeasible_f5.alg"});
  EXPECT_EQ(swap.code, 0);
  EXPECT_NE(swap.out.find("PASS (1 = 1)"), std::string::npos);
  const CliResult zero = run({"oracle", "data/zero2_f3.alg"});
  EXPECT_EQ(zero.code, 0);
  EXPECT_NE(zero.out.find("48"), std::string::npos);
  EXPECT_NE(zero.out.find("U ⊆ Aut(A): PASS"), std::string::npos);
  EXPECT_NE(zero.out.find("FAIL-as-expected"), std::string::npos);
  EXPECT_EQ(run({"oracle", "data/cyclic3.alg"}).code, 2);
}

TEST(Cli, TateAndChain) {
  EXPECT_EQ(run({"tate", "--field", "F13"}).out, "T_2 = 1 (stationary index 2)\n");
  EXPECT_EQ(run({"tate", "--field", "acl-not2"}).out, "T_2 ≅ Z_2\n");
  EXPECT_NE(run({"tate", "--field", "F17", "--depth", "7"}).out.find("PASS"), std::string::npos);
  EXPECT_EQ(run({"tate", "--field", "F13", "--depth", "2"}).code, 2);
  EXPECT_EQ(run({"tate", "--field", "bogus"}).code, 2);
  const CliResult c = run({"chain", "--field", "F7", "--exp", "2,2,2"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("compatible tuples: 6"), std::string::npos);
  EXPECT_NE(run({"chain", "--field", "F7", "--exp", "2", "--depth", "3"}).out.find("compatible tuples: 6"),
            std::string::npos);
}

TEST(Cli, ExitCodes) {
  const std::string bad = temp_file("bad.alg", "field Q\nbasis a\nsq a = 1*b\n");
  const CliResult parse = run({"diag", bad});
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.err.find("line 3, column"), std::string::npos);
  EXPECT_EQ(run({"diag", "data/zero3.alg", "--cap", "dim=2"}).code, 3);
  EXPECT_EQ(run({"oracle", "data/zero2_f3.alg", "--cap", "brute=10"}).code, 3);
  EXPECT_EQ(run({"diag", "data/cyclic3.alg", "--field", "F7"}).code, 2);
  EXPECT_EQ(run({"nosuch"}).code, 2);
  EXPECT_EQ(run({"diag", "data/missing.alg"}).code, 2);
  EXPECT_EQ(run({"diag", "data/zero3.alg", "--cap", "nonsense"}).code, 2);
}

TEST(Cli, EnvironmentCap) {
  ::setenv("EVOAUT_CAP", "dim=2", 1);
  const int code = run({"diag", "data/zero3.alg"}).code;
  ::unsetenv("EVOAUT_CAP");
  EXPECT_EQ(code, 3);
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"aut", "data/cycle_with_ear.graph", "--field", "F7"},
                                                                {"aut", "data/star3.alg", "--structured"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(Cli, StructuredRoundTrip) {
  const auto j = nlohmann::json::parse(run({"aut", "data/cubic_root_f7.alg", "--structured"}).out);
  EXPECT_EQ(j["format"], "evoaut/1");
  const EvolutionAlgebra a = evoaut::testing::load_data("cubic_root_f7.alg");
  EXPECT_EQ(GroupDescription::parse(j["diag"]["description"].get<std::string>()).to_string(),
            j["diag"]["description"].get<std::string>());
  ASSERT_EQ(j["lifted"].size(), 2u);
  for (const auto& l : j["lifted"]) {
    Vector scales;
    for (const auto& s : l["scales"]) scales.push_back(a.field().parse(s.get<std::string>()));
    const auto perm = l["sigma"].get<std::string>() == "()" ? Permutation::identity(2) : Permutation({1, 0});
    EXPECT_TRUE(satisfies_law(a, perm, scales));
    EXPECT_EQ(MonomialAutomorphism(a, perm, scales).to_matrix().to_string(), l["matrix"].get<std::string>());
  }
  const auto d = nlohmann::json::parse(run({"diag", "data/star3.alg", "--structured"}).out);
  const GroupDescription g = GroupDescription::parse(d["diag"]["description"].get<std::string>());
  EXPECT_EQ(g.free_rank, d["diag"]["free_rank"].get<std::size_t>());
  EXPECT_EQ(g.torsion.size(), d["diag"]["torsion"].size());
}

TEST(Cli, ConvertRoundTrip) {
  for (const char* name : {"cyclic3.alg", "star3.alg", "cubic_root_f7.alg", "cycle_with_ear.graph"}) {
    const std::string once = run({"convert", std::string("data/") + name}).out;
    const std::string path = temp_file("converted.txt", once);
    const std::string twice = run({"convert", path}).out;
    const EvolutionAlgebra original = evoaut::testing::load_data(name, std::nullopt);
    const std::optional<FieldSpec> field =
        looks_like_graph_file(once) ? std::optional<FieldSpec>(original.field()) : std::nullopt;
    EXPECT_EQ(load_algebra(once, field), original) << name;
    EXPECT_EQ(load_algebra(twice, std::nullopt), original) << name;
  }
}

TEST(Io, Parsing) {
  const EvolutionAlgebra a =
      parse_algebra_file("# comment\nfield F7\nbasis x y\nsq x = 3*x - y # tail\nsq y = 0\n");
  EXPECT_EQ(a.omega(1, 0), a.field().from_int(6));
  EXPECT_EQ(write_algebra_file(a), "field F7\nbasis x y\nsq x = 3*x + 6*y\n");
  EXPECT_THROW(parse_algebra_file("field F7\nbasis x y\nsq x = 3*z\n"), Error);
  EXPECT_THROW(parse_algebra_file("field F7\nbasis x x\n"), Error);
  EXPECT_THROW(parse_algebra_file("basis x\n"), Error);
  EXPECT_THROW(parse_graph_file("vertices a b\nedge a -> b w=1\nedge a -> b w=2\n"), Error);
  EXPECT_THROW(parse_graph_file("vertices a b\nedge a -> b w=0\n"), Error);
  EXPECT_THROW(parse_graph_file("vertices a\nedge a -> c w=1\n"), Error);
  EXPECT_TRUE(looks_like_graph_file("field F5\n\nvertices a\n"));
  const FieldSpec q = FieldSpec::rationals();
  EXPECT_EQ(parse_vector(q, "1,-1/2,3"), (Vector{q.one(), q.parse("-1/2"), q.from_int(3)}));
  EXPECT_EQ(format_vector(parse_vector(q, "1,-1/2,3")), "(1, -1/2, 3)");
  try {
    parse_algebra_file("field Q\nbasis a\nsq a = 1/0*a\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}
