#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace adeweyl::cli {

enum class Command {
  Info,       // series data: Cartan matrix, edges, positive root count
  Fermionic,  // M(lambda, mu, t), or a sweep over dominant mu <= lambda
  Gch,        // graded character of W(lambda)
  Betti,      // Betti vector of L(alpha, lambda), or a sweep over alpha
  Poincare,   // Poincare polynomial, or a sweep over alpha
  Kl,         // Z_{lambda mu}(t), or a sweep over dominant mu <= lambda
  Loewy,      // Loewy series report for W(lambda)
  Tableaux,   // row-increasing tableaux count (type A)
  Verify,     // internal cross-checks for one lambda
};

enum class Format { Text, Json, Csv };

Command command_from_name(std::string_view name);  // throws std::invalid_argument
Format format_from_name(std::string_view name);    // throws std::invalid_argument
std::string_view command_name(Command c);

struct Request {
  Command command = Command::Info;
  char series = 'A';
  int rank = 1;
  // Coordinate lists: lambda and mu on fundamental weights, alpha on
  // simple roots.
  std::optional<std::vector<int64_t>> lambda;
  std::optional<std::vector<int64_t>> mu;
  std::optional<std::vector<int64_t>> alpha;
  Format format = Format::Text;
  std::optional<std::string> cache_dir;
  // Enumeration step bound; 0 means unlimited.  When absent a generous
  // default bound applies.
  std::optional<uint64_t> max_terms;
  // verify only: limit the alpha sweep to height(alpha) <= depth.
  std::optional<int64_t> depth;
};

struct RunResult {
  int exit_code = 0;
  std::string output;
};

// Executes a request and returns the rendered output.  Output is
// deterministic: the same request always produces identical bytes.
// exit_code 0 means success; 1 reports a computation, validation, or
// verification failure with a diagnostic in output.
RunResult run(const Request& request);

}  // namespace adeweyl::cli
