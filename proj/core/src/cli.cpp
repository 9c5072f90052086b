#include "adeweyl/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "adeweyl/budget.hpp"
#include "adeweyl/cartan.hpp"
#include "adeweyl/chars.hpp"
#include "adeweyl/fermionic.hpp"
#include "adeweyl/laurent.hpp"
#include "adeweyl/numeric.hpp"
#include "adeweyl/quiver.hpp"
#include "adeweyl/type_a.hpp"
#include "adeweyl/weylmod.hpp"

namespace adeweyl::cli {
namespace {

using nlohmann::json;

constexpr uint64_t kDefaultMaxTerms = 10'000'000;

[[noreturn]] void usage_error(const std::string& message) {
  throw std::invalid_argument(message);
}

std::string plain_coords(const std::vector<int64_t>& coords) {
  std::string out;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(coords[i]);
  }
  return out;
}

json json_coords(const std::vector<int64_t>& coords) {
  return json(coords);
}

json json_poly(const LaurentPoly& p) {
  return json::parse(laurent_to_json(p));
}

std::string dump_json(const json& value) { return value.dump(1) + "\n"; }

void reject_option(bool present, const char* flag, Command command) {
  if (present) {
    usage_error(std::string(flag) + " is not accepted by '" +
                std::string(command_name(command)) + "'");
  }
}

Weight required_weight(const CartanDatum& datum,
                       const std::optional<std::vector<int64_t>>& coords,
                       const char* flag, Command command) {
  if (!coords) {
    usage_error("'" + std::string(command_name(command)) + "' requires " +
                flag);
  }
  Weight w(*coords);
  datum.check_weight(w);
  return w;
}

RootElem required_root(const CartanDatum& datum,
                       const std::optional<std::vector<int64_t>>& coords,
                       const char* flag, Command command) {
  if (!coords) {
    usage_error("'" + std::string(command_name(command)) + "' requires " +
                flag);
  }
  RootElem a(*coords);
  datum.check_root(a);
  return a;
}

void reject_csv(Format format, Command command) {
  if (format == Format::Csv) {
    usage_error(std::string("csv output is not available for '") +
                std::string(command_name(command)) + "'");
  }
}

// Every alpha in Q+ with a nonzero weight space at lambda - alpha,
// sorted by height then lexicographically.  An optional cap on the
// height keeps large sweeps bounded.
std::vector<RootElem> nonempty_alphas(const CartanDatum& datum,
                                      const Weight& lambda,
                                      const ComputeOptions& opts,
                                      std::optional<int64_t> max_height) {
  std::vector<RootElem> out;
  for (const Weight& nu : all_weights(datum, lambda, opts)) {
    auto alpha = datum.to_root_element(lambda - nu);
    if (!alpha) {
      throw std::logic_error("module weight outside the root-lattice coset");
    }
    if (max_height && alpha->height() > *max_height) continue;
    out.push_back(std::move(*alpha));
  }
  std::sort(out.begin(), out.end(),
            [](const RootElem& x, const RootElem& y) {
              return std::pair(x.height(), x.coords()) <
                     std::pair(y.height(), y.coords());
            });
  return out;
}

std::string betti_row(const BettiVector& bv) {
  std::string row;
  for (size_t j = 0; j < bv.betti.size(); ++j) {
    if (j != 0) row += ' ';
    row += integer_to_string(bv.betti[j]);
  }
  return row;
}

json json_betti(const BettiVector& bv) {
  json entries = json::array();
  for (const Integer& b : bv.betti) {
    entries.push_back(to_int64(b, "betti number"));
  }
  return json{{"alpha", json_coords(bv.alpha.coords())},
              {"d", bv.d},
              {"betti", entries}};
}

json json_layers(const GradedCharacter& gch) {
  json layers = json::array();
  for (const auto& [degree, components] : gch.layers) {
    json comps = json::array();
    for (const auto& [mu, mult] : components) {
      comps.push_back(json{{"mu", json_coords(mu.coords())},
                           {"mult", to_int64(mult, "layer multiplicity")}});
    }
    layers.push_back(json{{"degree", degree}, {"components", comps}});
  }
  return layers;
}

void text_layers(std::ostringstream& out, const GradedCharacter& gch) {
  for (const auto& [degree, components] : gch.layers) {
    out << "layer " << degree << ":";
    bool first = true;
    for (const auto& [mu, mult] : components) {
      out << (first ? " " : ", ") << mu.to_string() << " x"
          << integer_to_string(mult);
      first = false;
    }
    out << "\n";
  }
}

void csv_layers(std::ostringstream& out, const GradedCharacter& gch) {
  out << "degree,mu,mult\n";
  for (const auto& [degree, components] : gch.layers) {
    for (const auto& [mu, mult] : components) {
      out << degree << "," << plain_coords(mu.coords()) << ","
          << integer_to_string(mult) << "\n";
    }
  }
}

RunResult run_info(const Request& request, const CartanDatum& datum) {
  reject_option(request.lambda.has_value(), "--lambda", request.command);
  reject_option(request.mu.has_value(), "--mu", request.command);
  reject_option(request.alpha.has_value(), "--alpha", request.command);
  reject_option(request.depth.has_value(), "--depth", request.command);
  reject_csv(request.format, request.command);

  if (request.format == Format::Json) {
    json edges = json::array();
    for (const auto& [i, j] : datum.edges()) edges.push_back(json{i, j});
    json value{{"series", std::string(1, series_letter(datum.series()))},
               {"rank", datum.rank()},
               {"name", datum.name()},
               {"positive_roots", datum.positive_roots().size()},
               {"edges", edges},
               {"minuscule_nodes", datum.minuscule_nodes()},
               {"cartan", datum.cartan()}};
    return {0, dump_json(value)};
  }

  std::ostringstream out;
  out << "series: " << datum.name() << "\n";
  out << "rank: " << datum.rank() << "\n";
  out << "positive roots: " << datum.positive_roots().size() << "\n";
  out << "edges:";
  for (const auto& [i, j] : datum.edges()) out << " " << i << "-" << j;
  out << "\n";
  out << "minuscule nodes:";
  if (datum.minuscule_nodes().empty()) out << " none";
  for (int i : datum.minuscule_nodes()) out << " " << i;
  out << "\n";
  out << "cartan matrix:\n";
  for (const auto& row : datum.cartan()) {
    for (size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << "\n";
  }
  return {0, out.str()};
}

// Shared driver for the two mu-indexed polynomial commands.  With an
// explicit mu it emits a single polynomial; otherwise it sweeps every
// dominant mu <= lambda and keeps the nonzero values.
template <typename PolyFn>
RunResult run_mu_polynomial(const Request& request, const CartanDatum& datum,
                            const ComputeOptions& opts, PolyFn&& poly_fn) {
  reject_option(request.alpha.has_value(), "--alpha", request.command);
  reject_option(request.depth.has_value(), "--depth", request.command);
  Weight lambda =
      required_weight(datum, request.lambda, "--lambda", request.command);

  if (request.mu) {
    Weight mu(*request.mu);
    datum.check_weight(mu);
    LaurentPoly p = poly_fn(lambda, mu);
    switch (request.format) {
      case Format::Json:
        return {0, dump_json(json_poly(p))};
      case Format::Csv: {
        std::ostringstream out;
        out << "mu,poly\n"
            << plain_coords(mu.coords()) << "," << p.to_string() << "\n";
        return {0, out.str()};
      }
      case Format::Text:
        return {0, p.to_string() + "\n"};
    }
  }

  std::vector<std::pair<Weight, LaurentPoly>> rows;
  for (const Weight& mu : datum.dominant_weights_below(lambda, opts.budget)) {
    LaurentPoly p = poly_fn(lambda, mu);
    if (!p.is_zero()) rows.emplace_back(mu, std::move(p));
  }

  switch (request.format) {
    case Format::Json: {
      json entries = json::array();
      for (const auto& [mu, p] : rows) {
        entries.push_back(
            json{{"mu", json_coords(mu.coords())}, {"poly", json_poly(p)}});
      }
      return {0, dump_json(json{{"lambda", json_coords(lambda.coords())},
                                {"entries", entries}})};
    }
    case Format::Csv: {
      std::ostringstream out;
      out << "mu,poly\n";
      for (const auto& [mu, p] : rows) {
        out << plain_coords(mu.coords()) << "," << p.to_string() << "\n";
      }
      return {0, out.str()};
    }
    case Format::Text: {
      std::ostringstream out;
      for (const auto& [mu, p] : rows) {
        out << "mu=" << mu.to_string() << ": " << p.to_string() << "\n";
      }
      return {0, out.str()};
    }
  }
  usage_error("unknown output format");
}

RunResult run_gch(const Request& request, const CartanDatum& datum,
                  const ComputeOptions& opts) {
  reject_option(request.mu.has_value(), "--mu", request.command);
  reject_option(request.alpha.has_value(), "--alpha", request.command);
  reject_option(request.depth.has_value(), "--depth", request.command);
  Weight lambda =
      required_weight(datum, request.lambda, "--lambda", request.command);
  GradedCharacter gch = graded_character(datum, lambda, opts);

  switch (request.format) {
    case Format::Json:
      return {0, dump_json(json{
                     {"lambda", json_coords(lambda.coords())},
                     {"layers", json_layers(gch)},
                     {"dim", integer_to_string(gch.total_dimension(datum))}})};
    case Format::Csv: {
      std::ostringstream out;
      csv_layers(out, gch);
      return {0, out.str()};
    }
    case Format::Text: {
      std::ostringstream out;
      out << "lambda = " << lambda.to_string() << "\n";
      text_layers(out, gch);
      out << "dim = " << integer_to_string(gch.total_dimension(datum)) << "\n";
      return {0, out.str()};
    }
  }
  usage_error("unknown output format");
}

RunResult run_loewy(const Request& request, const CartanDatum& datum,
                    const ComputeOptions& opts) {
  reject_option(request.mu.has_value(), "--mu", request.command);
  reject_option(request.alpha.has_value(), "--alpha", request.command);
  reject_option(request.depth.has_value(), "--depth", request.command);
  Weight lambda =
      required_weight(datum, request.lambda, "--lambda", request.command);
  LoewyReport report = loewy_report(datum, lambda, opts);

  switch (request.format) {
    case Format::Json:
      return {0, dump_json(json{
                     {"lambda", json_coords(lambda.coords())},
                     {"lambda_min", json_coords(report.lambda_min.coords())},
                     {"loewy_length", report.loewy_length},
                     {"socle", json_coords(report.lambda_min.coords())},
                     {"top_degree", report.top_degree},
                     {"layers", json_layers(report.character)},
                     {"dim", integer_to_string(report.dimension)}})};
    case Format::Csv: {
      std::ostringstream out;
      csv_layers(out, report.character);
      return {0, out.str()};
    }
    case Format::Text: {
      std::ostringstream out;
      out << "lambda = " << lambda.to_string() << "\n";
      out << "lambda_min = " << report.lambda_min.to_string() << "\n";
      out << "loewy length = " << report.loewy_length << "\n";
      out << "socle = V(" << report.lambda_min.to_string() << ")\n";
      text_layers(out, report.character);
      out << "dim = " << integer_to_string(report.dimension) << "\n";
      return {0, out.str()};
    }
  }
  usage_error("unknown output format");
}

RunResult run_betti(const Request& request, const CartanDatum& datum,
                    const ComputeOptions& opts) {
  reject_option(request.mu.has_value(), "--mu", request.command);
  reject_option(request.depth.has_value(), "--depth", request.command);
  Weight lambda =
      required_weight(datum, request.lambda, "--lambda", request.command);
  bool poincare = request.command == Command::Poincare;

  if (request.alpha) {
    RootElem alpha(*request.alpha);
    datum.check_root(alpha);
    BettiVector bv = betti(datum, alpha, lambda, opts);
    if (poincare) {
      LaurentPoly p = poincare_polynomial(datum, alpha, lambda, opts);
      switch (request.format) {
        case Format::Json:
          return {0, dump_json(json_poly(p))};
        case Format::Csv: {
          std::ostringstream out;
          out << "alpha,poly\n"
              << plain_coords(alpha.coords()) << "," << p.to_string() << "\n";
          return {0, out.str()};
        }
        case Format::Text:
          return {0, p.to_string() + "\n"};
      }
    }
    switch (request.format) {
      case Format::Json:
        return {0, dump_json(json_betti(bv))};
      case Format::Csv: {
        std::ostringstream out;
        out << "alpha,d,betti\n"
            << plain_coords(alpha.coords()) << "," << bv.d << ","
            << betti_row(bv) << "\n";
        return {0, out.str()};
      }
      case Format::Text: {
        std::ostringstream out;
        out << "d = " << bv.d << "\n";
        out << "betti = "
            << (bv.betti.empty() ? std::string("(empty)") : betti_row(bv))
            << "\n";
        return {0, out.str()};
      }
    }
  }

  GradedCharacter gch = graded_character(datum, lambda, opts);
  std::vector<BettiVector> rows;
  for (const RootElem& alpha :
       nonempty_alphas(datum, lambda, opts, std::nullopt)) {
    rows.push_back(betti(datum, alpha, gch, opts));
  }

  switch (request.format) {
    case Format::Json: {
      json entries = json::array();
      for (const BettiVector& bv : rows) {
        if (poincare) {
          entries.push_back(
              json{{"alpha", json_coords(bv.alpha.coords())},
                   {"poly", json_poly(poincare_polynomial(datum, bv.alpha,
                                                          gch, opts))}});
        } else {
          entries.push_back(json_betti(bv));
        }
      }
      return {0, dump_json(json{{"lambda", json_coords(lambda.coords())},
                                {"entries", entries}})};
    }
    case Format::Csv: {
      std::ostringstream out;
      out << (poincare ? "alpha,poly\n" : "alpha,d,betti\n");
      for (const BettiVector& bv : rows) {
        out << plain_coords(bv.alpha.coords()) << ",";
        if (poincare) {
          out << poincare_polynomial(datum, bv.alpha, gch, opts).to_string();
        } else {
          out << bv.d << "," << betti_row(bv);
        }
        out << "\n";
      }
      return {0, out.str()};
    }
    case Format::Text: {
      std::ostringstream out;
      for (const BettiVector& bv : rows) {
        out << "alpha=" << bv.alpha.to_string() << ": ";
        if (poincare) {
          out << poincare_polynomial(datum, bv.alpha, gch, opts).to_string();
        } else {
          out << "d=" << bv.d << " betti=" << betti_row(bv);
        }
        out << "\n";
      }
      return {0, out.str()};
    }
  }
  usage_error("unknown output format");
}

RunResult run_tableaux(const Request& request, const CartanDatum& datum,
                       const ComputeOptions& opts) {
  reject_option(request.mu.has_value(), "--mu", request.command);
  reject_option(request.depth.has_value(), "--depth", request.command);
  Weight lambda =
      required_weight(datum, request.lambda, "--lambda", request.command);
  RootElem alpha =
      required_root(datum, request.alpha, "--alpha", request.command);
  Integer count = count_row_increasing_tableaux(datum, alpha, lambda, opts);

  switch (request.format) {
    case Format::Json:
      return {0, dump_json(json{{"lambda", json_coords(lambda.coords())},
                                {"alpha", json_coords(alpha.coords())},
                                {"count", integer_to_string(count)}})};
    case Format::Csv: {
      std::ostringstream out;
      out << "alpha,count\n"
          << plain_coords(alpha.coords()) << "," << integer_to_string(count)
          << "\n";
      return {0, out.str()};
    }
    case Format::Text:
      return {0, integer_to_string(count) + "\n"};
  }
  usage_error("unknown output format");
}

struct CheckResult {
  std::string name;
  enum class Status { Pass, Fail, Skip } status = Status::Pass;
  std::string detail;
};

RunResult run_verify(const Request& request, const CartanDatum& datum,
                     const ComputeOptions& opts) {
  reject_option(request.mu.has_value(), "--mu", request.command);
  reject_option(request.alpha.has_value(), "--alpha", request.command);
  reject_csv(request.format, request.command);
  Weight lambda =
      required_weight(datum, request.lambda, "--lambda", request.command);
  bool type_a = datum.series() == Series::A;

  std::vector<CheckResult> checks;
  auto pass = [&](const std::string& name) {
    checks.push_back({name, CheckResult::Status::Pass, ""});
  };
  auto fail = [&](const std::string& name, const std::string& detail) {
    checks.push_back({name, CheckResult::Status::Fail, detail});
  };
  auto skip = [&](const std::string& name, const std::string& detail) {
    checks.push_back({name, CheckResult::Status::Skip, detail});
  };

  GradedCharacter gch = graded_character(datum, lambda, opts);
  Weight lmin = lambda_min(datum, lambda);

  {
    std::string detail;
    const auto& first = *gch.layers.begin();
    const auto& last = *gch.layers.rbegin();
    std::map<Weight, Integer> top_expect{{lambda, 1}};
    std::map<Weight, Integer> socle_expect{{lmin, 1}};
    if (first.first != 0 || first.second != top_expect) {
      detail = "layer 0 is not exactly V(" + lambda.to_string() + ")";
    } else if (last.second != socle_expect) {
      detail = "top layer is not exactly V(" + lmin.to_string() + ")";
    } else if (gch.layer_count() != loewy_length(datum, lambda)) {
      detail = "layer count " + std::to_string(gch.layer_count()) +
               " != loewy length " +
               std::to_string(loewy_length(datum, lambda));
    } else if (last.first + 1 != gch.layer_count()) {
      detail = "graded degrees are not contiguous";
    }
    detail.empty() ? pass("layer_laws") : fail("layer_laws", detail);
  }

  {
    std::string detail;
    for (const Weight& mu : datum.dominant_weights_below(lambda, opts.budget)) {
      LaurentPoly m = fermionic_M(datum, lambda, mu, opts);
      if (mu == lambda && !(m == LaurentPoly::one())) {
        detail = "M(lambda, lambda) != 1";
        break;
      }
      if (m.is_zero()) continue;
      if (m.max_exponent() > 0) {
        detail = "M(lambda, " + mu.to_string() + ") has a positive exponent";
        break;
      }
      for (const auto& [exp, coef] : m.terms()) {
        if (coef < 0) {
          detail = "M(lambda, " + mu.to_string() + ") has a negative " +
                   "coefficient at t^" + std::to_string(exp);
          break;
        }
      }
      if (!detail.empty()) break;
    }
    detail.empty() ? pass("fermionic_sign_degree")
                   : fail("fermionic_sign_degree", detail);
  }

  std::vector<RootElem> alphas =
      nonempty_alphas(datum, lambda, opts, request.depth);
  std::vector<BettiVector> bettis;
  bettis.reserve(alphas.size());
  for (const RootElem& alpha : alphas) {
    bettis.push_back(betti(datum, alpha, gch, opts));
  }

  {
    std::string detail;
    for (const BettiVector& bv : bettis) {
      std::string where = "alpha=" + bv.alpha.to_string();
      if (bv.d < 0 || bv.betti.size() != static_cast<size_t>(bv.d) + 1) {
        detail = where + ": betti vector has the wrong length";
        break;
      }
      if (bv.betti[0] != 1) {
        detail = where + ": b_0 = " + integer_to_string(bv.betti[0]);
        break;
      }
      if (bv.betti[static_cast<size_t>(bv.d)] < 1) {
        detail = where + ": top betti number vanishes";
        break;
      }
      for (int64_t j = 1; j <= bv.d; j += 2) {
        if (bv.betti[static_cast<size_t>(j)] != 0) {
          detail = where + ": odd betti number b_" + std::to_string(j) +
                   " is nonzero";
          break;
        }
      }
      if (!detail.empty()) break;
    }
    detail.empty() ? pass("betti_contract") : fail("betti_contract", detail);
  }

  if (type_a) {
    std::string detail;
    for (const BettiVector& bv : bettis) {
      LaurentPoly lhs = chari_loktev_polynomial(datum, bv.alpha, lambda, opts);
      LaurentPoly rhs = poincare_polynomial(datum, bv.alpha, gch, opts);
      if (!(lhs == rhs)) {
        detail = "alpha=" + bv.alpha.to_string() + ": " + lhs.to_string() +
                 " != " + rhs.to_string();
        break;
      }
    }
    detail.empty() ? pass("cross_formula") : fail("cross_formula", detail);
  } else {
    skip("cross_formula", "requires series A");
  }

  if (type_a) {
    std::string detail;
    for (const BettiVector& bv : bettis) {
      Integer total = 0;
      for (const Integer& b : bv.betti) total += b;
      Integer count =
          count_row_increasing_tableaux(datum, bv.alpha, lambda, opts);
      if (count != total) {
        detail = "alpha=" + bv.alpha.to_string() + ": tableaux count " +
                 integer_to_string(count) + " != betti sum " +
                 integer_to_string(total);
        break;
      }
    }
    detail.empty() ? pass("tableaux_count") : fail("tableaux_count", detail);
  } else {
    skip("tableaux_count", "requires series A");
  }

  {
    std::string detail;
    Integer dim = gch.total_dimension(datum);
    Integer expected = 1;
    for (int i = 0; i < datum.rank(); ++i) {
      if (lambda[static_cast<size_t>(i)] == 0) continue;
      GradedCharacter unit =
          graded_character(datum, datum.fundamental_weight(i), opts);
      Integer base = unit.total_dimension(datum);
      for (int64_t rep = 0; rep < lambda[static_cast<size_t>(i)]; ++rep) {
        expected *= base;
      }
    }
    if (dim != expected) {
      detail = "dim W = " + integer_to_string(dim) +
               " but the fundamental product gives " +
               integer_to_string(expected);
    } else if (type_a) {
      Integer binom_product = 1;
      for (int i = 0; i < datum.rank(); ++i) {
        Integer choose =
            gauss_binomial(datum.rank() + 1, i + 1).eval_at_one();
        for (int64_t rep = 0; rep < lambda[static_cast<size_t>(i)]; ++rep) {
          binom_product *= choose;
        }
      }
      if (dim != binom_product) {
        detail = "dim W = " + integer_to_string(dim) +
                 " but the binomial product gives " +
                 integer_to_string(binom_product);
      }
    }
    detail.empty() ? pass("dimension_product")
                   : fail("dimension_product", detail);
  }

  int passed = 0, failed = 0, skipped = 0;
  for (const CheckResult& c : checks) {
    switch (c.status) {
      case CheckResult::Status::Pass: ++passed; break;
      case CheckResult::Status::Fail: ++failed; break;
      case CheckResult::Status::Skip: ++skipped; break;
    }
  }

  if (request.format == Format::Json) {
    json rows = json::array();
    for (const CheckResult& c : checks) {
      const char* status = c.status == CheckResult::Status::Pass   ? "pass"
                           : c.status == CheckResult::Status::Fail ? "fail"
                                                                   : "skip";
      rows.push_back(json{
          {"name", c.name}, {"status", status}, {"detail", c.detail}});
    }
    json value{{"series", datum.name()},
               {"lambda", json_coords(lambda.coords())},
               {"checks", rows},
               {"passed", passed},
               {"failed", failed},
               {"skipped", skipped}};
    return {failed == 0 ? 0 : 1, dump_json(value)};
  }

  std::ostringstream out;
  for (const CheckResult& c : checks) {
    switch (c.status) {
      case CheckResult::Status::Pass:
        out << "PASS " << c.name << "\n";
        break;
      case CheckResult::Status::Fail:
        out << "FAIL " << c.name << ": " << c.detail << "\n";
        break;
      case CheckResult::Status::Skip:
        out << "SKIP " << c.name << ": " << c.detail << "\n";
        break;
    }
  }
  out << "verify " << lambda.to_string() << " in " << datum.name() << ": "
      << passed << " passed, " << failed << " failed, " << skipped
      << " skipped\n";
  return {failed == 0 ? 0 : 1, out.str()};
}

}  // namespace

Command command_from_name(std::string_view name) {
  if (name == "info") return Command::Info;
  if (name == "fermionic") return Command::Fermionic;
  if (name == "gch") return Command::Gch;
  if (name == "betti") return Command::Betti;
  if (name == "poincare") return Command::Poincare;
  if (name == "kl") return Command::Kl;
  if (name == "loewy") return Command::Loewy;
  if (name == "tableaux") return Command::Tableaux;
  if (name == "verify") return Command::Verify;
  throw std::invalid_argument("unknown command '" + std::string(name) + "'");
}

Format format_from_name(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Info: return "info";
    case Command::Fermionic: return "fermionic";
    case Command::Gch: return "gch";
    case Command::Betti: return "betti";
    case Command::Poincare: return "poincare";
    case Command::Kl: return "kl";
    case Command::Loewy: return "loewy";
    case Command::Tableaux: return "tableaux";
    case Command::Verify: return "verify";
  }
  return "unknown";
}

RunResult run(const Request& request) {
  try {
    CartanDatum datum(series_from_letter(request.series), request.rank);

    std::optional<CharacterCache> owned_cache;
    if (request.cache_dir) owned_cache.emplace(*request.cache_dir);
    std::optional<Budget> owned_budget;
    uint64_t limit = request.max_terms.value_or(kDefaultMaxTerms);
    if (limit > 0) owned_budget.emplace(limit);

    ComputeOptions opts;
    opts.cache = owned_cache ? &*owned_cache : nullptr;
    opts.budget = owned_budget ? &*owned_budget : nullptr;

    switch (request.command) {
      case Command::Info:
        return run_info(request, datum);
      case Command::Fermionic:
        return run_mu_polynomial(request, datum, opts,
                                 [&](const Weight& l, const Weight& m) {
                                   return fermionic_M(datum, l, m, opts);
                                 });
      case Command::Kl:
        return run_mu_polynomial(request, datum, opts,
                                 [&](const Weight& l, const Weight& m) {
                                   return kl_polynomial(datum, l, m, opts);
                                 });
      case Command::Gch:
        return run_gch(request, datum, opts);
      case Command::Loewy:
        return run_loewy(request, datum, opts);
      case Command::Betti:
      case Command::Poincare:
        return run_betti(request, datum, opts);
      case Command::Tableaux:
        return run_tableaux(request, datum, opts);
      case Command::Verify:
        return run_verify(request, datum, opts);
    }
    usage_error("unknown command");
  } catch (const std::exception& e) {
    return {1, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace adeweyl::cli
