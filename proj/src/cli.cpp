#include "evoaut/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "evoaut/autgroup.hpp"
#include "evoaut/io.hpp"
#include "evoaut/limits.hpp"

namespace evoaut {

using Json = nlohmann::ordered_json;

void Caps::apply(std::string_view spec) {
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string_view::npos) comma = spec.size();
    const std::string_view item = spec.substr(pos, comma - pos);
    pos = comma + 1;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorKind::InvalidArgument, "cap '" + std::string(item) + "' is not key=value");
    const std::string key(item.substr(0, eq));
    std::uint64_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoull(std::string(item.substr(eq + 1)), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "cap value in '" + std::string(item) + "' is not a number");
    }
    if (key == "dim") dim = value;
    else if (key == "graph") graph = value;
    else if (key == "enum") enumeration = value;
    else if (key == "brute") brute = value;
    else if (key == "basis") basis = value;
    else if (key == "chain") chain = value;
    else if (key == "print") print = value;
    else throw Error(ErrorKind::InvalidArgument, "unknown cap '" + key + "'");
  }
}

namespace {

struct Options {
  std::string file;
  std::string field;
  std::vector<std::string> vectors;
  std::string exponents;
  std::string anchor;
  std::size_t depth = 0;
  bool structured = false;
  std::vector<std::string> caps;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::optional<FieldSpec> field_flag(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  return parse_field(o.field);
}

EvolutionAlgebra load(const Options& o, const Caps& caps) {
  return load_algebra(read_file(o.file), field_flag(o), caps.dim);
}

Json strings(const Vector& v) {
  Json arr = Json::array();
  for (const Scalar& s : v) arr.push_back(s.to_string());
  return arr;
}

Json group_json(const GroupDescription& g, const FieldSpec& field, std::size_t n, const Caps& caps) {
  Json j;
  j["description"] = g.to_string();
  j["free_rank"] = g.free_rank;
  Json torsion = Json::array();
  for (const BigInt& d : g.torsion) torsion.push_back(d.str());
  j["torsion"] = torsion;
  const std::optional<BigInt> order = g.order_over(field);
  j["order"] = order ? Json(order->str()) : Json(nullptr);
  if (order && *order <= caps.print) {
    Json elems = Json::array();
    for (const Vector& x : group_elements(field, n, g, caps.enumeration)) elems.push_back(strings(x));
    j["elements"] = elems;
  }
  return j;
}

void print_group_text(std::ostream& out, const GroupDescription& g, const FieldSpec& field, std::size_t n,
                      const Caps& caps) {
  if (!field.is_prime_field()) return;
  const BigInt order = *g.order_over(field);
  out << "over " << field.to_string() << ": order = " << order << '\n';
  if (order > caps.print) {
    out << "elements omitted (order exceeds print cap " << caps.print << ")\n";
    return;
  }
  for (const Vector& x : group_elements(field, n, g, caps.enumeration)) out << "  " << format_vector(x) << '\n';
}

Json header(const char* command, const EvolutionAlgebra* a) {
  Json j;
  j["format"] = "evoaut/1";
  j["command"] = command;
  if (a) {
    j["field"] = a->field().to_string();
    j["dimension"] = a->dim();
  }
  return j;
}

int cmd_diag(const Options& o, const Caps& caps, std::ostream& out) {
  const EvolutionAlgebra a = load(o, caps);
  const GroupDescription g = diag_group(a);
  if (o.structured) {
    Json j = header("diag", &a);
    j["diag"] = group_json(g, a.field(), a.dim(), caps);
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "Diag(A;B) ≅ " << g.to_string() << '\n';
  print_group_text(out, g, a.field(), a.dim(), caps);
  return 0;
}

int cmd_aut(const Options& o, const Caps& caps, std::ostream& out) {
  const EvolutionAlgebra a = load(o, caps);
  const AutPresentation aut = assemble_aut(a, caps.graph);
  const std::optional<BigInt> order = aut.order();
  const bool full = aut.completeness == Completeness::FullAut;
  if (o.structured) {
    Json j = header("aut", &a);
    j["diag"] = group_json(aut.diag, a.field(), a.dim(), caps);
    Json lifted = Json::array();
    for (const LiftedSigma& l : aut.lifted) {
      Json e;
      e["sigma"] = l.sigma.sigma.cycles();
      e["scales"] = strings(l.lift.scales());
      e["matrix"] = l.lift.to_matrix().to_string();
      lifted.push_back(e);
    }
    j["lifted"] = lifted;
    Json rejected = Json::array();
    for (const GraphAutomorphism& s : aut.non_lifting) rejected.push_back(s.sigma.cycles());
    j["non_lifting"] = rejected;
    j["quotient_order"] = aut.lifted.size();
    j["order"] = order ? Json(order->str()) : Json(nullptr);
    j["completeness"] = full ? "FullAut" : "SubgroupOnly";
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "Diag(A;B) ≅ " << aut.diag.to_string() << '\n';
  for (const LiftedSigma& l : aut.lifted) {
    out << "lift " << l.sigma.sigma.cycles() << " scales " << format_vector(l.lift.scales()) << " matrix "
        << l.lift.to_matrix().to_string() << '\n';
  }
  for (const GraphAutomorphism& s : aut.non_lifting) out << s.sigma.cycles() << " does not lift: system infeasible\n";
  out << "quotient order = " << aut.lifted.size() << '\n';
  if (order) out << "|U| = " << *order << '\n';
  else out << "|U| infinite\n";
  if (order && *order == 1) out << "Aut(A,B) = {1}\n";
  out << (full ? "U = Aut(A)" : "U ⊆ Aut(A)") << '\n';
  if (full && order) out << "|Aut(A)| = " << *order << '\n';
  return 0;
}

int cmd_check(const Options& o, const Caps& caps, std::ostream& out) {
  const EvolutionAlgebra a = load(o, caps);
  const WeightedGraph g = algebra_to_wgraph(a);
  const auto witness = two_li_witness(a);
  std::vector<std::pair<std::string, Naturality>> naturals;
  for (const std::string& v : o.vectors) naturals.emplace_back(v, is_natural_vector(a, parse_vector(a.field(), v)));

  if (o.structured) {
    Json j = header("check", &a);
    j["sing"] = g.satisfies_sing();
    j["2li"] = !witness.has_value();
    if (witness) j["2li_witness"] = {a.labels()[witness->first], a.labels()[witness->second]};
    j["nondegenerate"] = is_nondegenerate(a);
    j["perfect"] = is_perfect(a);
    j["invertible"] = is_invertible(a);
    Json nat = Json::array();
    for (const auto& [v, n] : naturals) nat.push_back({{"vector", v}, {"natural", to_string(n)}});
    j["natural"] = nat;
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "Sing: " << (g.satisfies_sing() ? "true" : "false") << '\n';
  out << "2LI: ";
  if (witness) {
    out << "false (witness " << a.labels()[witness->first] << "^2, " << a.labels()[witness->second] << "^2)\n";
  } else {
    out << "true\n";
  }
  out << "nondegenerate: " << (is_nondegenerate(a) ? "true" : "false") << '\n';
  out << "perfect: " << (is_perfect(a) ? "true" : "false") << '\n';
  out << "invertible: " << (is_invertible(a) ? "true" : "false") << '\n';
  for (const auto& [v, n] : naturals) out << "natural (" << v << "): " << to_string(n) << '\n';
  return 0;
}

int cmd_oracle(const Options& o, const Caps& caps, std::ostream& out) {
  const EvolutionAlgebra a = load(o, caps);
  if (!a.field().is_prime_field()) throw Error(ErrorKind::NotPrimeField, "the oracle runs over F_p only");
  const AutPresentation aut = assemble_aut(a, caps.graph);

  std::size_t agreeing = 0;
  std::string first_divergence;
  const std::vector<GraphAutomorphism> sigmas = enumerate_graph_automorphisms(algebra_to_wgraph(a), caps.graph);
  for (const GraphAutomorphism& s : sigmas) {
    const std::vector<Vector> brute = enumerate_solutions_bruteforce(twisted_system(a, s), caps.enumeration);
    const std::vector<Vector> structured = twisted_limit(a, s).elements(caps.enumeration);
    if (brute == structured) {
      ++agreeing;
    } else if (first_divergence.empty()) {
      first_divergence = s.sigma.cycles() + ": brute force " + std::to_string(brute.size()) + " vs solver " +
                         std::to_string(structured.size());
    }
  }
  const bool systems_ok = agreeing == sigmas.size();

  const std::vector<Matrix> brute = bruteforce_aut(a, caps.brute);
  std::vector<Matrix> assembled;
  for (const MonomialAutomorphism& f : materialize(aut, caps.enumeration)) assembled.push_back(f.to_matrix());
  std::sort(assembled.begin(), assembled.end());
  const bool contained = std::includes(brute.begin(), brute.end(), assembled.begin(), assembled.end());
  const bool equal = brute == assembled;
  const bool full = aut.completeness == Completeness::FullAut;
  const bool pass = systems_ok && contained && (equal || !full);

  if (o.structured) {
    Json j = header("oracle", &a);
    j["twisted_systems"] = {{"checked", sigmas.size()}, {"agreeing", agreeing}};
    if (!first_divergence.empty()) j["first_divergence"] = first_divergence;
    j["bruteforce_order"] = brute.size();
    j["assembled_order"] = assembled.size();
    j["contained"] = contained;
    j["equal"] = equal;
    j["completeness"] = full ? "FullAut" : "SubgroupOnly";
    j["result"] = pass ? "PASS" : "FAIL";
    out << j.dump(2) << '\n';
    return pass ? 0 : 4;
  }
  out << "twisted systems: " << (systems_ok ? "PASS" : "FAIL") << " (" << agreeing << " of " << sigmas.size()
      << " agree with brute force)\n";
  if (!first_divergence.empty()) out << "first divergence: " << first_divergence << '\n';
  out << "Aut(A) by brute force: " << brute.size() << '\n';
  out << "U assembled: " << assembled.size() << '\n';
  out << "U ⊆ Aut(A): " << (contained ? "PASS" : "FAIL") << '\n';
  out << "U = Aut(A): ";
  if (equal) out << "PASS (" << assembled.size() << " = " << brute.size() << ")\n";
  else if (full) out << "FAIL (" << assembled.size() << " != " << brute.size() << ")\n";
  else out << "FAIL-as-expected (" << assembled.size() << " != " << brute.size() << ", SubgroupOnly)\n";
  out << "oracle: " << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? 0 : 4;
}

int cmd_tate(const Options& o, std::ostream& out) {
  if (o.field.empty()) throw Error(ErrorKind::InvalidArgument, "tate needs --field");
  const TateField field = TateField::parse(o.field);
  const TateModule t = tate_module_2(field);
  std::optional<bool> collapse;
  if (o.depth > 0) {
    if (field.kind != TateField::Kind::Prime) throw Error(ErrorKind::InvalidArgument, "--depth needs a prime field");
    collapse = verify_stationary_collapse(FieldSpec::prime(field.p), o.depth);
  }
  if (o.structured) {
    Json j = header("tate", nullptr);
    j["field"] = field.to_string();
    j["T_2"] = t.to_string();
    j["stationary_index"] = t.stationary_index ? Json(*t.stationary_index) : Json(nullptr);
    if (collapse) j["collapse"] = {{"depth", o.depth}, {"result", *collapse ? "PASS" : "FAIL"}};
    out << j.dump(2) << '\n';
  } else {
    if (t.kind == TateModule::Kind::Trivial) out << "T_2 = 1 (stationary index " << *t.stationary_index << ")\n";
    else out << "T_2 ≅ Z_2\n";
    if (collapse) out << "stationary collapse at depth " << o.depth << ": " << (*collapse ? "PASS" : "FAIL") << '\n';
  }
  return collapse && !*collapse ? 4 : 0;
}

int cmd_chain(const Options& o, const Caps& caps, std::ostream& out) {
  if (o.field.empty() || o.exponents.empty()) throw Error(ErrorKind::InvalidArgument, "chain needs --field and --exp");
  const FieldSpec field = parse_field(o.field);
  ChainSpec spec{field, {}, std::nullopt};
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = o.exponents.find(',', pos);
    const std::string item = o.exponents.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      spec.exponents.emplace_back(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "bad exponent '" + item + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (o.depth > 0) {
    if (spec.exponents.size() == 1) spec.exponents.assign(o.depth, spec.exponents.front());
    else if (spec.exponents.size() != o.depth) throw Error(ErrorKind::InvalidArgument, "--depth disagrees with --exp");
  }
  if (!o.anchor.empty()) spec.anchor = field.parse(o.anchor);
  const TruncatedLimit t = truncated_chain(spec, caps.chain);

  std::string exps;
  for (std::size_t k = 0; k < spec.exponents.size(); ++k) exps += (k ? "," : "") + spec.exponents[k].str();
  if (o.structured) {
    Json j = header("chain", nullptr);
    j["field"] = field.to_string();
    j["exponents"] = exps;
    j["anchor"] = spec.anchor ? Json(spec.anchor->to_string()) : Json(nullptr);
    j["count"] = t.elements.size();
    Json elems = Json::array();
    for (const Vector& x : t.elements) elems.push_back(strings(x));
    j["tuples"] = elems;
    j["stabilization_depth"] = t.stabilization_depth ? Json(*t.stabilization_depth) : Json(nullptr);
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "chain over " << field.to_string() << ", exponents (" << exps << ")";
  if (spec.anchor) out << ", anchor " << spec.anchor->to_string();
  out << "\ncompatible tuples: " << t.elements.size() << '\n';
  if (t.elements.size() <= caps.print) {
    for (const Vector& x : t.elements) out << "  " << format_vector(x) << '\n';
  }
  out << "stabilization depth: ";
  if (t.stabilization_depth) out << *t.stabilization_depth << '\n';
  else out << "not detected\n";
  return 0;
}

int cmd_convert(const Options& o, const Caps& caps, std::ostream& out) {
  const std::string text = read_file(o.file);
  const EvolutionAlgebra a = load_algebra(text, field_flag(o), caps.dim);
  if (looks_like_graph_file(text)) out << write_algebra_file(a);
  else out << write_graph_file(algebra_to_wgraph(a), a.field());
  return 0;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooLarge: return 3;
    case ErrorKind::InternalInvariant: return 4;
    default: return 2;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Automorphism groups of evolution algebras over F_p and Q", "evoaut"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub, bool needs_file) {
    if (needs_file) sub->add_option("file", o.file, "algebra or graph file")->required();
    sub->add_option("--field", o.field, "field tag: F<p> or Q");
    sub->add_flag("--structured", o.structured, "emit a JSON document (format evoaut/1)");
    sub->add_option("--cap", o.caps, "resource cap key=value (dim, graph, enum, brute, basis, chain, print)");
  };
  CLI::App* diag = app.add_subcommand("diag", "diagonal automorphism group Diag(A;B)");
  add_common(diag, true);
  CLI::App* aut = app.add_subcommand("aut", "basis-monomial automorphisms and the semidirect presentation");
  add_common(aut, true);
  CLI::App* check = app.add_subcommand("check", "structural predicates");
  add_common(check, true);
  check->add_option("--vector", o.vectors, "comma-separated coordinates to test for naturality");
  CLI::App* oracle = app.add_subcommand("oracle", "compare the solver with brute-force enumeration");
  add_common(oracle, true);
  CLI::App* tate = app.add_subcommand("tate", "2-adic Tate module of K^x");
  add_common(tate, false);
  tate->add_option("--depth", o.depth, "also verify the stationary collapse at this depth");
  CLI::App* chain = app.add_subcommand("chain", "truncated inverse system under power maps");
  add_common(chain, false);
  chain->add_option("--exp", o.exponents, "comma-separated exponents n_1,...,n_N");
  chain->add_option("--anchor", o.anchor, "require x_1^{n_1} = anchor");
  chain->add_option("--depth", o.depth, "repeat a single exponent to this depth");
  CLI::App* convert = app.add_subcommand("convert", "algebra file <-> graph file");
  add_common(convert, true);

  std::vector<const char*> argv{"evoaut"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Caps caps;
    if (const char* env = std::getenv("EVOAUT_CAP")) caps.apply(env);
    for (const std::string& c : o.caps) caps.apply(c);
    if (diag->parsed()) return cmd_diag(o, caps, out);
    if (aut->parsed()) return cmd_aut(o, caps, out);
    if (check->parsed()) return cmd_check(o, caps, out);
    if (oracle->parsed()) return cmd_oracle(o, caps, out);
    if (tate->parsed()) return cmd_tate(o, out);
    if (chain->parsed()) return cmd_chain(o, caps, out);
    if (convert->parsed()) return cmd_convert(o, caps, out);
  } catch (const Error& e) {
    err << "evoaut: " << (o.file.empty() ? "" : o.file + ": ") << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "evoaut: internal error: " << e.what() << '\n';
    return 4;
  }
  return 2;
}

}  // namespace evoaut
