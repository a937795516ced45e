// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "evoaut/autgroup.hpp"
#include "evoaut/cli.hpp"
#include "evoaut/limits.hpp"
#include "evoaut/smith.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace evoaut;
using namespace evoaut::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string cli(std::vector<std::string> args) {
  for (std::string& a : args) {
    if (a.rfind("data/", 0) == 0) a = std::string(EVOAUT_DATA_DIR) + a.substr(4);
  }
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  if (code != 0) return "exit " + std::to_string(code) + ": " + err.str();
  return out.str();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

struct Criterion {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

int failures = 0;

void report(int id, const Criterion& c) {
  std::cout << "criterion " << id << ": " << (c.pass ? "PASS" : "FAIL");
  if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
  std::cout << std::endl;
  if (!c.pass) ++failures;
}

Criterion cycle_with_ear() {
  Criterion c;
  const auto t0 = Clock::now();
  c.require(contains(cli({"diag", "data/cycle_with_ear.graph", "--field", "Q"}), "Diag(A;B) ≅ mu_3(K)"), "Q description");
  const std::string f7 = cli({"diag", "data/cycle_with_ear.graph", "--field", "F7"});
  c.require(contains(f7, "over F7: order = 3"), "F7 order");
  const EvolutionAlgebra a7 = load_data("cycle_with_ear.graph", FieldSpec::prime(7));
  const auto brute7 = monomial_scales_bruteforce(a7, Permutation::identity(5));
  c.require(brute7.size() == 3, "F7 brute force count");
  for (const Vector& x : brute7) c.require(contains(f7, format_vector(x)), "F7 element " + format_vector(x));
  c.require(contains(cli({"diag", "data/cycle_with_ear.graph", "--field", "F5"}), "over F5: order = 1"), "F5 order");
  const EvolutionAlgebra a5 = load_data("cycle_with_ear.graph", FieldSpec::prime(5));
  c.require(monomial_scales_bruteforce(a5, Permutation::identity(5)).size() == 1, "F5 brute force count");
  const double dt = seconds_since(t0);
  c.require(dt < 1.0, "runtime " + std::to_string(dt) + " s");
  if (c.pass) c.detail = "mu_3(K); F7 3 = 3, F5 1 = 1";
  return c;
}

Criterion cyclic3() {
  Criterion c;
  const std::string out = cli({"aut", "data/cyclic3.alg"});
  c.require(contains(out, "Diag(A;B) ≅ 1\n"), "Diag not trivial");
  c.require(contains(out, "|Aut(A)| = 3\n"), "|Aut| line");
  const FieldSpec q = FieldSpec::rationals();
  const Matrix m = Matrix::from_rows(q, {{q.zero(), q.zero(), q.from_int(2)},
                                         {q.from_int(-1), q.zero(), q.zero()},
                                         {q.zero(), q.parse("-1/2"), q.zero()}});
  c.require(m.to_string() == "[[0,0,2],[-1,0,0],[0,-1/2,0]]", "matrix literal");
  c.require(contains(out, "matrix " + m.to_string()), "matrix M");
  c.require(contains(out, "matrix " + (m * m).to_string()), "matrix M^2");
  c.require(m * m * m == Matrix::identity(q, 3), "M^3 = 1");
  c.require(is_automorphism_matrix(load_data("cyclic3.alg"), m), "M is an automorphism");
  if (c.pass) c.detail = "|Aut| = 3, M and M^2 listed";
  return c;
}

Criterion swap_infeasible() {
  Criterion c;
  const EvolutionAlgebra base = load_data("swap_infeasible.alg");
  for (std::uint64_t p : {0u, 3u, 5u, 7u, 11u, 13u}) {
    const EvolutionAlgebra a = p == 0 ? base : over(base, FieldSpec::prime(p));
    const std::string tag = p == 0 ? "Q" : "F" + std::to_string(p);
    const AutPresentation aut = assemble_aut(a);
    c.require(aut.non_lifting.size() == 1 && aut.lifted.size() == 1, "swap lifts over " + tag);
    c.require(!twisted_limit(a, GraphAutomorphism{Permutation({1, 0})}).feasible(), "twisted system over " + tag);
    c.require(aut.order() == BigInt(1), "Aut(A,B) over " + tag);
    if (p != 0) c.require(monomial_scales_bruteforce(a, Permutation({1, 0})).empty(), "brute force over " + tag);
  }
  const std::string q = cli({"aut", "data/swap_infeasible.alg"});
  c.require(contains(q, "(1 2) does not lift: system infeasible"), "report note");
  c.require(contains(q, "Aut(A,B) = {1}"), "report group");
  c.require(contains(cli({"oracle", "data/swap_infeasible_f5.alg"}), "U = Aut(A): PASS (1 = 1)"), "F5 oracle");
  c.require(bruteforce_aut(load_data("swap_infeasible_f5.alg")).size() == 1, "F5 brute-force Aut");
  if (c.pass) c.detail = "infeasible over Q, F3, F5, F7, F11, F13; |Aut| = 1 over F5";
  return c;
}

Criterion cubic_root() {
  Criterion c;
  const FieldSpec f = FieldSpec::prime(7);
  c.require(f.from_int(2).pow(3).is_one() && !f.from_int(2).is_one(), "2 is a cube root of unity in F7");
  const std::string lifts = cli({"aut", "data/cubic_root_f7.alg"});
  c.require(contains(lifts, "lift (1 2) scales"), "swap lifts");
  c.require(contains(lifts, "quotient order = 2\n"), "quotient order");
  const EvolutionAlgebra a = load_data("cubic_root_f7.alg");
  c.require(monomial_scales_bruteforce(a, Permutation({1, 0})).size() ==
                monomial_scales_bruteforce(a, Permutation::identity(2)).size(),
            "brute-force coset size");
  const std::string generic = cli({"aut", "data/generic_weights_f7.alg"});
  c.require(contains(generic, "(1 2) does not lift: system infeasible"), "generic weights");
  c.require(monomial_scales_bruteforce(load_data("generic_weights_f7.alg"), Permutation({1, 0})).empty(),
            "generic brute force");
  if (c.pass) c.detail = "quotient Z_2 with w(h) = 2 w(k); generic weights do not lift";
  return c;
}

Criterion tate() {
  Criterion c;
  double worst = 0;
  c.require(tate_module_2(TateField::parse("Q")).to_string() == "1", "Q");
  for (std::uint64_t p : {3u, 5u, 13u, 17u, 97u}) {
    const auto t0 = Clock::now();
    const std::string tag = "F" + std::to_string(p);
    c.require(tate_module_2(TateField::parse(tag)).kind == TateModule::Kind::Trivial, tag + " not trivial");
    const unsigned s = two_adic_valuation(p - 1);
    c.require(verify_stationary_collapse(FieldSpec::prime(p), s + 3), tag + " collapse");
    // independent census: 1 = y_0, y_1, ..., y_N with y_{i+1}^2 = y_i, N = s + 3
    const FieldSpec f = FieldSpec::prime(p);
    const std::size_t depth = s + 3;
    std::vector<Vector> chains{{f.one()}};
    for (std::size_t d = 1; d <= depth; ++d) {
      std::vector<Vector> next;
      for (const Vector& ch : chains) {
        for (std::uint64_t x = 1; x < p; ++x) {
          const Scalar y = f.from_int(static_cast<std::int64_t>(x));
          if (y * y == ch.back()) {
            Vector e = ch;
            e.push_back(y);
            next.push_back(e);
          }
        }
      }
      chains = next;
    }
    c.require(chains.size() == (std::size_t{1} << s), tag + " chain count");
    for (const Vector& ch : chains) {
      for (std::size_t i = 1; i <= depth - s; ++i) c.require(ch[i].is_one(), tag + " coordinate " + std::to_string(i));
    }
    worst = std::max(worst, seconds_since(t0));
  }
  c.require(worst < 1.0, "runtime " + std::to_string(worst) + " s");
  if (c.pass) c.detail = "T_2 = 1 for F3, F5, F13, F17, F97 and Q; collapse verified";
  return c;
}

Criterion root_tower() {
  Criterion c;
  const FieldSpec f17 = FieldSpec::prime(17);
  for (std::size_t n = 1; n <= 6; ++n) {
    const BigInt d = BigInt(1) << (n - 1);
    const EvolutionAlgebra a = diomucho_algebra(FieldSpec::rationals(), n);
    const GroupDescription g = diag_group(a);
    const std::string expected = n == 1 ? "1" : "mu_" + d.str() + "(K)";
    c.require(g.to_string() == expected, "n=" + std::to_string(n) + " gives " + g.to_string());
    const auto inv = smith_normal_form(diag_system(a).exponent_matrix()).invariant_factors();
    c.require(n == 1 ? inv.empty() : inv == std::vector<BigInt>{d}, "invariant factor n=" + std::to_string(n));
    const BigInt count = std::gcd(std::uint64_t{1} << (n - 1), std::uint64_t{16});
    const EvolutionAlgebra b = diomucho_algebra(f17, n);
    c.require(diag_group(b).order_over(f17) == count, "F17 order n=" + std::to_string(n));
    if (n <= 4) {
      c.require(BigInt(monomial_scales_bruteforce(b, Permutation::identity(n)).size()) == count,
                "F17 exhaustive n=" + std::to_string(n));
    }
  }
  if (c.pass) c.detail = "mu_{2^(n-1)}(K) for n = 1..6; F17 counts gcd(2^(n-1), 16)";
  return c;
}

std::string first_failure(const PropertyReport& r) { return r.failures.empty() ? "" : r.failures.front(); }

Criterion solver_vs_oracle(const std::vector<CorpusEntry>& corpus) {
  Criterion c;
  const auto t0 = Clock::now();
  PropertyReport r;
  for (const auto& e : corpus) check_solver_against_oracle(e.algebra, r);
  const double dt = seconds_since(t0);
  c.require(r.ok(), first_failure(r));
  c.require(dt < 60.0, "runtime " + std::to_string(dt) + " s");
  if (c.pass) {
    std::ostringstream s;
    s << r.checked << " algebras, " << r.equality_checked << " equality checks, " << r.skipped
      << " over the brute-force budget, " << static_cast<int>(dt) << " s";
    c.detail = s.str();
  }
  return c;
}

Criterion coset_structure(const std::vector<CorpusEntry>& corpus) {
  Criterion c;
  PropertyReport r;
  for (const auto& e : corpus) check_coset_structure(e.algebra, r);
  c.require(r.ok(), first_failure(r));
  if (c.pass) c.detail = std::to_string(r.checked) + " algebras";
  return c;
}

Criterion round_trip(const std::vector<CorpusEntry>& corpus) {
  Criterion c;
  PropertyReport r;
  for (const auto& e : corpus) check_round_trip(e.algebra, r);
  std::mt19937_64 rng(1000);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::bernoulli_distribution zero(0.4);
  while (r.checked < 1000) {
    const std::size_t n = 1 + r.checked % 6;
    std::vector<std::vector<std::int64_t>> sq(n, std::vector<std::int64_t>(n));
    for (auto& row : sq) {
      for (auto& x : row) x = zero(rng) ? 0 : coeff(rng);
    }
    const FieldSpec f = r.checked % 2 == 0 ? FieldSpec::rationals() : FieldSpec::prime(r.checked % 3 == 0 ? 2 : 11);
    check_round_trip(algebra_of(f, sq), r);
  }
  c.require(r.ok(), first_failure(r));
  if (c.pass) c.detail = std::to_string(r.checked) + " instances";
  return c;
}

Criterion unique_basis(const std::vector<CorpusEntry>& corpus) {
  Criterion c;
  PropertyReport r;
  for (const auto& e : corpus) check_unique_basis(e.algebra, r);
  c.require(r.ok(), first_failure(r));
  const EvolutionAlgebra d = load_data("degenerate_pair_f3.alg");
  const auto bases = enumerate_natural_bases(d);
  const std::vector<Vector> standard{d.basis_vector(0), d.basis_vector(1)};
  std::size_t other_orbits = 0;
  for (const auto& b : bases) other_orbits += same_orbit(d, standard, b).has_value() ? 0 : 1;
  c.require(other_orbits > 0, "degenerate example has a single orbit");
  if (c.pass) {
    c.detail = std::to_string(r.checked) + " 2LI or invertible instances; degenerate example has " +
               std::to_string(other_orbits) + " bases outside the distinguished orbit";
  }
  return c;
}

Criterion loop_trees(const std::vector<CorpusEntry>& corpus) {
  Criterion c;
  PropertyReport r;
  for (const auto& e : corpus) check_loop_trees(e.algebra, r);
  c.require(r.ok(), first_failure(r));
  if (c.pass) c.detail = std::to_string(r.checked) + " algebras";
  return c;
}

template <class F>
Criterion guarded(F f) {
  try {
    return f();
  } catch (const std::exception& e) {
    Criterion c;
    c.require(false, std::string("exception: ") + e.what());
    return c;
  }
}

}  // namespace

int main() {
  report(1, guarded(cycle_with_ear));
  report(2, guarded(cyclic3));
  report(3, guarded(swap_infeasible));
  report(4, guarded(cubic_root));
  report(5, guarded(tate));
  report(6, guarded(root_tower));
  const std::vector<CorpusEntry> corpus = random_corpus(500);
  report(7, guarded([&] { return solver_vs_oracle(corpus); }));
  report(8, guarded([&] { return coset_structure(corpus); }));
  report(9, guarded([&] { return round_trip(corpus); }));
  report(10, guarded([&] { return unique_basis(corpus); }));
  report(11, guarded([&] { return loop_trees(corpus); }));
  return failures == 0 ? 0 : 1;
}
