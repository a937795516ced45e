#pragma once

// Command-line front end. Exit codes: 0 success, 2 parse or validation
// error, 3 resource cap exceeded, 4 internal invariant violation.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace evoaut {

struct Caps {
  std::size_t dim = 64;
  std::size_t graph = 12;
  std::uint64_t enumeration = 10'000'000;
  std::uint64_t brute = 100'000'000;
  std::uint64_t basis = 4096;
  std::uint64_t chain = 10'000'000;
  /// Concrete elements are printed only for groups at most this large.
  std::uint64_t print = 1000;

  /// Applies "key=value[,key=value...]"; keys: dim, graph, enum, brute,
  /// basis, chain, print.
  void apply(std::string_view spec);
};

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace evoaut
