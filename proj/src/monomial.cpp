#include "evoaut/monomial.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include <boost/integer/common_factor.hpp>

namespace evoaut {

using u64 = std::uint64_t;

MonomialSystem::MonomialSystem(FieldSpec field, std::size_t n_vars, std::vector<MonomialRow> rows)
    : field_(std::move(field)), n_vars_(n_vars), rows_(std::move(rows)) {
  for (const MonomialRow& row : rows_) {
    if (row.exponents.size() != n_vars_) throw Error(ErrorKind::DimensionMismatch, "exponent row length");
    require_field(field_, row.rhs);
    if (row.rhs.is_zero()) throw Error(ErrorKind::ZeroArgument, "monomial system with zero right-hand side");
  }
}

IntMatrix MonomialSystem::exponent_matrix() const {
  IntMatrix m(rows_.size(), n_vars_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < n_vars_; ++c) m(r, c) = rows_[r].exponents[c];
  }
  return m;
}

bool MonomialSystem::is_homogeneous() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const MonomialRow& r) { return r.rhs.is_one(); });
}

MonomialSystem MonomialSystem::homogeneous_part() const {
  std::vector<MonomialRow> rows;
  for (const MonomialRow& r : rows_) rows.push_back(MonomialRow{r.exponents, field_.one()});
  return MonomialSystem(field_, n_vars_, std::move(rows));
}

bool MonomialSystem::is_solution(const Vector& x) const {
  if (x.size() != n_vars_) return false;
  for (const Scalar& s : x) {
    if (!field_.contains(s) || s.is_zero()) return false;
  }
  for (const MonomialRow& row : rows_) {
    Scalar prod = field_.one();
    for (std::size_t v = 0; v < n_vars_; ++v) {
      if (!row.exponents[v].is_zero()) prod *= x[v].pow(row.exponents[v]);
    }
    if (!(prod == row.rhs)) return false;
  }
  return true;
}

std::string GroupDescription::to_string() const {
  if (is_trivial()) return "1";
  std::vector<std::string> parts;
  if (free_rank > 0) parts.push_back("(K^x)^" + std::to_string(free_rank));
  for (std::size_t k = 0; k < torsion.size();) {
    std::size_t m = 1;
    while (k + m < torsion.size() && torsion[k + m] == torsion[k]) ++m;
    std::string part = "mu_" + torsion[k].str() + "(K)";
    if (m > 1) part += "^" + std::to_string(m);
    parts.push_back(std::move(part));
    k += m;
  }
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? " x " : "") + parts[k];
  return out;
}

GroupDescription GroupDescription::parse(std::string_view text) {
  static const std::regex free_re(R"(\(K\^x\)\^([0-9]+))");
  static const std::regex mu_re(R"(mu_([0-9]+)\(K\)(?:\^([0-9]+))?)");
  std::string s(text);
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t\r\n") + 1);
  GroupDescription g;
  if (s == "1") return g;
  std::size_t pos = 0;
  bool first = true;
  while (pos <= s.size()) {
    const std::size_t sep = s.find(" x ", pos);
    const std::string token = s.substr(pos, sep == std::string::npos ? std::string::npos : sep - pos);
    std::smatch m;
    if (std::regex_match(token, m, free_re)) {
      if (!first) throw Error(ErrorKind::Parse, "free factor must come first in '" + s + "'");
      g.free_rank = std::stoul(m[1]);
    } else if (std::regex_match(token, m, mu_re)) {
      const BigInt d(m[1].str());
      const unsigned long mult = m[2].matched ? std::stoul(m[2]) : 1;
      if (d < 2 || mult == 0) throw Error(ErrorKind::Parse, "bad factor '" + token + "'");
      for (unsigned long k = 0; k < mult; ++k) g.torsion.push_back(d);
    } else {
      throw Error(ErrorKind::Parse, "unrecognized group factor '" + token + "'");
    }
    first = false;
    if (sep == std::string::npos) break;
    pos = sep + 3;
  }
  for (std::size_t k = 1; k < g.torsion.size(); ++k) {
    if (g.torsion[k] % g.torsion[k - 1] != 0) throw Error(ErrorKind::Parse, "torsion factors must divide each other");
  }
  return g;
}

std::optional<BigInt> GroupDescription::order_over(const FieldSpec& field) const {
  BigInt order = 1;
  if (field.is_prime_field()) {
    const BigInt q = field.characteristic() - 1;
    for (std::size_t k = 0; k < free_rank; ++k) order *= q;
    for (const BigInt& d : torsion) order *= boost::integer::gcd(d, q);
    return order;
  }
  if (free_rank > 0) return std::nullopt;
  for (const BigInt& d : torsion) {
    if (d % 2 == 0) order *= 2;
  }
  return order;
}

std::vector<Vector> group_elements(const FieldSpec& field, std::size_t n_vars, const GroupDescription& group,
                                   std::uint64_t cap) {
  const std::optional<BigInt> order = group.order_over(field);
  if (!order) throw Error(ErrorKind::InvalidArgument, "cannot enumerate the infinite group " + group.to_string());
  if (*order > cap) {
    throw Error(ErrorKind::TooLarge, "group of order " + order->str() + " exceeds enumeration cap " + std::to_string(cap));
  }
  std::vector<Vector> elements{Vector(n_vars, field.one())};
  for (std::size_t k = 0; k < group.generators.size(); ++k) {
    const Vector& gen = group.generators[k];
    const u64 ord = group.generator_orders[k].convert_to<u64>();
    std::vector<Vector> next;
    next.reserve(elements.size() * ord);
    for (const Vector& x : elements) {
      Vector y = x;
      for (u64 j = 0; j < ord; ++j) {
        next.push_back(y);
        for (std::size_t i = 0; i < n_vars; ++i) y[i] *= gen[i];
      }
    }
    elements = std::move(next);
  }
  std::sort(elements.begin(), elements.end());
  if (elements.size() != *order) invariant_failure("generated group has the wrong order");
  return elements;
}

std::vector<Vector> SolutionCoset::elements(std::uint64_t cap) const {
  if (!particular) return {};
  std::vector<Vector> out = group_elements(field, n_vars, homogeneous, cap);
  for (Vector& h : out) {
    for (std::size_t i = 0; i < n_vars; ++i) h[i] *= (*particular)[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

BigInt floor_mod(const BigInt& v, const BigInt& m) {
  BigInt r = v % m;
  if (r < 0) r += m;
  return r;
}

BigInt inverse_mod_big(const BigInt& a, const BigInt& m) {
  if (m == 1) return 0;
  BigInt old_r = floor_mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const BigInt q = old_r / r;
    BigInt t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) invariant_failure("modular inverse of a non-unit");
  return floor_mod(old_s, m);
}

// V * y, optionally reduced modulo m.
std::vector<BigInt> pull_back(const IntMatrix& v, const std::vector<BigInt>& y, const BigInt& m) {
  std::vector<BigInt> x(v.rows());
  for (std::size_t i = 0; i < v.rows(); ++i) {
    for (std::size_t k = 0; k < v.cols(); ++k) x[i] += v(i, k) * y[k];
    if (m != 0) x[i] = floor_mod(x[i], m);
  }
  return x;
}

std::vector<BigInt> column_times(const IntMatrix& v, std::size_t k, const BigInt& factor, const BigInt& m) {
  std::vector<BigInt> y(v.cols());
  y[k] = factor;
  return pull_back(v, y, m);
}

Vector residues_from_logs(const FieldSpec& field, const std::vector<BigInt>& logs) {
  const u64 p = field.characteristic();
  Vector x;
  for (const BigInt& l : logs) x.push_back(Scalar::residue(p, std::int64_t(powmod(field.generator(), l.convert_to<u64>(), p))));
  return x;
}

Vector signs_from_bits(const std::vector<BigInt>& bits) {
  Vector x;
  for (const BigInt& b : bits) x.push_back(Scalar::rational(b == 0 ? 1 : -1));
  return x;
}

GroupDescription homogeneous_from_core(const FieldSpec& field, std::size_t n, const detail::SmithCore& core) {
  GroupDescription g;
  g.free_rank = n - core.rank;
  for (std::size_t k = 0; k < core.rank; ++k) {
    if (core.D(k, k) != 1) g.torsion.push_back(core.D(k, k));
  }
  if (field.is_prime_field()) {
    const BigInt q = field.characteristic() - 1;
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt order = k < core.rank ? BigInt(boost::integer::gcd(core.D(k, k), q)) : q;
      if (order == 1) continue;
      g.generators.push_back(residues_from_logs(field, column_times(core.V, k, q / order, q)));
      g.generator_orders.push_back(order);
    }
  } else {
    for (std::size_t k = 0; k < core.rank; ++k) {
      if (core.D(k, k) % 2 != 0) continue;
      g.generators.push_back(signs_from_bits(column_times(core.V, k, 1, 2)));
      g.generator_orders.push_back(2);
    }
  }
  return g;
}

}  // namespace

GroupDescription solve_homogeneous(const MonomialSystem& system) {
  if (!system.is_homogeneous()) throw Error(ErrorKind::InvalidArgument, "solve_homogeneous needs all right-hand sides 1");
  detail::RowPayload none;
  const detail::SmithCore core = detail::smith_reduce(system.exponent_matrix(), none);
  return homogeneous_from_core(system.field(), system.n_vars(), core);
}

SolutionCoset solve_inhomogeneous(const MonomialSystem& system) {
  const FieldSpec& field = system.field();
  const std::size_t n = system.n_vars();
  const std::size_t m = system.rows().size();

  // log coordinates of the right-hand sides: one column over F_p, a sign
  // column plus one column per prime over Q
  detail::RowPayload payload;
  std::vector<u64> primes;
  if (field.is_prime_field()) {
    std::vector<BigInt> logs;
    for (const MonomialRow& row : system.rows()) logs.push_back(dlog(field, row.rhs));
    payload.cols.push_back(std::move(logs));
    payload.moduli.push_back(field.characteristic() - 1);
  } else {
    std::vector<FactoredRational> factored;
    for (const MonomialRow& row : system.rows()) {
      factored.push_back(FactoredRational::factor(row.rhs.rational_value()));
      for (const auto& [prime, e] : factored.back().exponents) primes.push_back(prime);
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    payload.cols.assign(1 + primes.size(), std::vector<BigInt>(m));
    payload.moduli.assign(1 + primes.size(), 0);
    payload.moduli[0] = 2;
    for (std::size_t r = 0; r < m; ++r) {
      payload.cols[0][r] = factored[r].sign < 0 ? 1 : 0;
      for (std::size_t k = 0; k < primes.size(); ++k) {
        const auto it = factored[r].exponents.find(primes[k]);
        if (it != factored[r].exponents.end()) payload.cols[1 + k][r] = it->second;
      }
    }
  }

  const detail::SmithCore core = detail::smith_reduce(system.exponent_matrix(), payload);
  SolutionCoset coset{field, n, std::nullopt, homogeneous_from_core(field, n, core)};

  for (std::size_t r = core.rank; r < m; ++r) {
    for (const auto& col : payload.cols) {
      if (col[r] != 0) return coset;
    }
  }

  std::vector<std::vector<BigInt>> y(payload.cols.size(), std::vector<BigInt>(n));
  for (std::size_t k = 0; k < core.rank; ++k) {
    const BigInt& d = core.D(k, k);
    for (std::size_t c = 0; c < payload.cols.size(); ++c) {
      const BigInt& rhs = payload.cols[c][k];
      const BigInt& mod = payload.moduli[c];
      if (mod != 0) {
        const BigInt g = boost::integer::gcd(d, mod);
        if (rhs % g != 0) return coset;
        const BigInt reduced = mod / g;
        y[c][k] = floor_mod((rhs / g) * inverse_mod_big(d / g, reduced), reduced);
      } else {
        if (rhs % d != 0) return coset;
        y[c][k] = rhs / d;
      }
    }
  }

  Vector x;
  if (field.is_prime_field()) {
    x = residues_from_logs(field, pull_back(core.V, y[0], payload.moduli[0]));
  } else {
    const Vector signs = signs_from_bits(pull_back(core.V, y[0], 2));
    x = signs;
    for (std::size_t k = 0; k < primes.size(); ++k) {
      const std::vector<BigInt> e = pull_back(core.V, y[1 + k], 0);
      const Scalar prime = Scalar::rational(static_cast<std::int64_t>(primes[k]));
      for (std::size_t i = 0; i < n; ++i) {
        if (e[i] != 0) x[i] *= prime.pow(e[i]);
      }
    }
  }
  if (!system.is_solution(x)) invariant_failure("particular solution does not satisfy the system");
  coset.particular = std::move(x);
  return coset;
}

namespace {

struct BruteScan {
  u64 p;
  std::size_t n;
  std::vector<std::vector<std::vector<u64>>> powers;  // [row][var][x - 1]
  std::vector<u64> target;

  BruteScan(const MonomialSystem& s, std::uint64_t cap) : p(0), n(s.n_vars()) {
    if (!s.field().is_prime_field()) throw Error(ErrorKind::NotPrimeField, "brute-force enumeration needs F_p");
    p = s.field().characteristic();
    BigInt size = 1;
    for (std::size_t v = 0; v < n; ++v) size *= p - 1;
    if (size > cap) {
      throw Error(ErrorKind::TooLarge, "(p-1)^n = " + size.str() + " exceeds enumeration cap " + std::to_string(cap));
    }
    const BigInt q = p - 1;
    for (const MonomialRow& row : s.rows()) {
      std::vector<std::vector<u64>> per_var(n);
      for (std::size_t v = 0; v < n; ++v) {
        const u64 e = q == 0 ? 0 : floor_mod(row.exponents[v], q).convert_to<u64>();
        for (u64 x = 1; x < p; ++x) per_var[v].push_back(powmod(x, e, p));
      }
      powers.push_back(std::move(per_var));
      target.push_back(row.rhs.residue_value());
    }
  }

  bool satisfies(const std::vector<u64>& x) const {
    for (std::size_t r = 0; r < powers.size(); ++r) {
      u64 acc = 1;
      for (std::size_t v = 0; v < n; ++v) acc = acc * powers[r][v][x[v] - 1] % p;
      if (acc != target[r]) return false;
    }
    return true;
  }

  // all solutions with x_0 = first
  void scan(u64 first, std::vector<std::vector<u64>>& out) const {
    std::vector<u64> x(n, 1);
    x[0] = first;
    for (;;) {
      if (satisfies(x)) out.push_back(x);
      std::size_t k = 1;
      while (k < n && x[k] == p - 1) x[k++] = 1;
      if (k >= n) return;
      ++x[k];
    }
  }

  std::vector<Vector> finish(std::vector<std::vector<u64>>& raw) const {
    std::vector<Vector> out;
    for (const auto& x : raw) {
      Vector v;
      for (u64 c : x) v.push_back(Scalar::residue(p, static_cast<std::int64_t>(c)));
      out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

}  // namespace

std::vector<Vector> enumerate_solutions_bruteforce(const MonomialSystem& system, std::uint64_t cap) {
  const BruteScan scan(system, cap);
  std::vector<std::vector<u64>> raw;
  if (scan.n == 0) {
    if (scan.satisfies({})) raw.emplace_back();
    return scan.finish(raw);
  }
  const auto count = static_cast<std::int64_t>(scan.p - 1);
#pragma omp parallel
  {
    std::vector<std::vector<u64>> local;
#pragma omp for schedule(dynamic)
    for (std::int64_t k = 0; k < count; ++k) scan.scan(static_cast<u64>(k) + 1, local);
#pragma omp critical
    raw.insert(raw.end(), local.begin(), local.end());
  }
  return scan.finish(raw);
}

namespace reference {

std::vector<Vector> enumerate_solutions_bruteforce(const MonomialSystem& system, std::uint64_t cap) {
  const BruteScan scan(system, cap);
  std::vector<std::vector<u64>> raw;
  if (scan.n == 0) {
    if (scan.satisfies({})) raw.emplace_back();
    return scan.finish(raw);
  }
  for (u64 first = 1; first < scan.p; ++first) scan.scan(first, raw);
  return scan.finish(raw);
}

}  // namespace reference

}  // namespace evoaut
