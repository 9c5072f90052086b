#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "adeweyl/cli.hpp"

namespace {

struct SubcommandFlags {
  std::string series = "A";
  int rank = 0;
  std::vector<int64_t> lambda;
  std::vector<int64_t> mu;
  std::vector<int64_t> alpha;
  std::string format = "text";
  std::string cache_dir;
  uint64_t max_terms = 0;
  bool max_terms_set = false;
  int64_t depth = 0;
  bool depth_set = false;
};

void add_common(CLI::App* cmd, SubcommandFlags& flags) {
  cmd->add_option("-t,--type", flags.series, "series letter: A, D, or E")
      ->required();
  cmd->add_option("-r,--rank", flags.rank, "rank of the root system")
      ->required();
  cmd->add_option("-f,--format", flags.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->default_val("text");
  cmd->add_option("--cache-dir", flags.cache_dir,
                  "directory for persistent character tables");
  cmd->add_option("--max-terms", flags.max_terms,
                  "enumeration step budget, 0 for unlimited")
      ->each([&flags](const std::string&) { flags.max_terms_set = true; });
}

void add_lambda(CLI::App* cmd, SubcommandFlags& flags, bool required) {
  auto* opt = cmd->add_option(
      "-l,--lambda", flags.lambda,
      "weight in fundamental-weight coordinates, e.g. 2,0,1");
  opt->delimiter(',');
  if (required) opt->required();
}

void add_mu(CLI::App* cmd, SubcommandFlags& flags) {
  cmd->add_option("-m,--mu", flags.mu,
                  "weight in fundamental-weight coordinates; omit to sweep "
                  "all dominant mu <= lambda")
      ->delimiter(',');
}

void add_alpha(CLI::App* cmd, SubcommandFlags& flags, bool required,
               const char* help) {
  auto* opt = cmd->add_option("-a,--alpha", flags.alpha, help);
  opt->delimiter(',');
  if (required) opt->required();
}

adeweyl::cli::Request to_request(adeweyl::cli::Command command,
                                 const CLI::App* cmd,
                                 const SubcommandFlags& flags) {
  adeweyl::cli::Request request;
  request.command = command;
  request.series = flags.series.empty() ? 'A' : flags.series[0];
  request.rank = flags.rank;
  auto given = [cmd](const std::string& name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--lambda")) request.lambda = flags.lambda;
  if (given("--mu")) request.mu = flags.mu;
  if (given("--alpha")) request.alpha = flags.alpha;
  request.format = adeweyl::cli::format_from_name(flags.format);
  if (!flags.cache_dir.empty()) request.cache_dir = flags.cache_dir;
  if (flags.max_terms_set) request.max_terms = flags.max_terms;
  if (flags.depth_set) request.depth = flags.depth;
  return request;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Graded structure of Weyl modules for simply laced current algebras:\n"
      "fermionic forms, graded characters, and Betti data of the associated\n"
      "graded nilpotent quiver varieties."};
  app.require_subcommand(1);

  struct Entry {
    adeweyl::cli::Command command;
    CLI::App* cmd;
    SubcommandFlags flags;
  };
  std::vector<Entry> entries;
  entries.reserve(9);

  auto add = [&](adeweyl::cli::Command command, const char* name,
                 const char* help) -> Entry& {
    entries.push_back({command, app.add_subcommand(name, help), {}});
    Entry& e = entries.back();
    add_common(e.cmd, e.flags);
    return e;
  };

  add(adeweyl::cli::Command::Info, "info",
      "Cartan matrix, Dynkin edges, and root counts for one series");

  {
    Entry& e = add(adeweyl::cli::Command::Fermionic, "fermionic",
                   "fermionic form M(lambda, mu, t)");
    add_lambda(e.cmd, e.flags, true);
    add_mu(e.cmd, e.flags);
  }
  {
    Entry& e = add(adeweyl::cli::Command::Gch, "gch",
                   "graded character of the Weyl module W(lambda)");
    add_lambda(e.cmd, e.flags, true);
  }
  {
    Entry& e = add(adeweyl::cli::Command::Betti, "betti",
                   "Betti numbers of the graded nilpotent quiver variety "
                   "L(alpha, lambda)");
    add_lambda(e.cmd, e.flags, true);
    add_alpha(e.cmd, e.flags, false,
              "element of Q+ in simple-root coordinates; omit to sweep all "
              "nonempty alpha");
  }
  {
    Entry& e = add(adeweyl::cli::Command::Poincare, "poincare",
                   "Poincare polynomial of L(alpha, lambda)");
    add_lambda(e.cmd, e.flags, true);
    add_alpha(e.cmd, e.flags, false,
              "element of Q+ in simple-root coordinates; omit to sweep all "
              "nonempty alpha");
  }
  {
    Entry& e = add(adeweyl::cli::Command::Kl, "kl",
                   "Kazhdan-Lusztig-type polynomial Z_{lambda mu}(t)");
    add_lambda(e.cmd, e.flags, true);
    add_mu(e.cmd, e.flags);
  }
  {
    Entry& e = add(adeweyl::cli::Command::Loewy, "loewy",
                   "Loewy series report for W(lambda)");
    add_lambda(e.cmd, e.flags, true);
  }
  {
    Entry& e = add(adeweyl::cli::Command::Tableaux, "tableaux",
                   "row-increasing tableaux count (series A only)");
    add_lambda(e.cmd, e.flags, true);
    add_alpha(e.cmd, e.flags, true,
              "element of Q+ in simple-root coordinates");
  }
  {
    Entry& e = add(adeweyl::cli::Command::Verify, "verify",
                   "run the internal cross-checks for one highest weight");
    add_lambda(e.cmd, e.flags, true);
    e.cmd->add_option("--depth", e.flags.depth,
                      "only sweep alpha with height(alpha) <= depth")
        ->each([&e](const std::string&) { e.flags.depth_set = true; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (const Entry& e : entries) {
    if (!e.cmd->parsed()) continue;
    adeweyl::cli::RunResult result =
        adeweyl::cli::run(to_request(e.command, e.cmd, e.flags));
    std::fputs(result.output.c_str(), result.exit_code == 0 ? stdout : stderr);
    return result.exit_code;
  }
  return 2;
}
