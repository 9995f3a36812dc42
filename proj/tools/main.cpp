// xdescent: exact counting of permutations by prescribed X-descent set.
//
// Subcommands: count, table, verify, series, random, certify. Exit codes:
// 0 success, 2 parse error, 3 method not applicable, 4 size/budget limit,
// 5 cross-method discrepancy.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xdescent/count.hpp"
#include "xdescent/errors.hpp"
#include "xdescent/hampath.hpp"
#include "xdescent/limits.hpp"
#include "xdescent/methods.hpp"
#include "xdescent/periodic.hpp"
#include "xdescent/randmodel.hpp"
#include "xdescent/relation.hpp"
#include "xdescent/relation_json.hpp"

namespace {

using nlohmann::json;
using namespace xdescent;

std::vector<int> parse_positions(const std::string& text) {
  if (text.empty() || text == "empty") return {};
  std::vector<int> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      size_t used = 0;
      const int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (...) {
      throw ParseError("cannot parse position list \"" + text + "\"");
    }
  }
  return out;
}

json positions_json(const PositionSet& I) {
  json a = json::array();
  for (int p : I.positions()) a.push_back(p);
  return a;
}

int cmd_count(const std::string& relation_file, int n, const std::string& positions,
              const std::string& method_str, bool as_json, const Limits& limits) {
  const RelationSpec spec = relation_from_file(relation_file);
  const PositionSet I = PositionSet::of(n, parse_positions(positions));
  const auto method = method_from_name(method_str);
  if (!method) throw ParseError("unknown method \"" + method_str + "\"");

  const CountResult result = compute_count(spec, n, I, *method, limits);
  if (as_json) {
    json out{{"n", n},
             {"I", positions_json(I)},
             {"count", to_decimal(result.value)},
             {"method", method_name(result.used)}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << to_decimal(result.value) << "\n";
    std::cout << "method: " << method_name(result.used) << "\n";
  }
  return 0;
}

int cmd_table(const std::string& relation_file, int n_max, bool all_sets, bool as_json,
              const Limits& limits) {
  const RelationSpec spec = relation_from_file(relation_file);
  const auto rows = make_table(spec, n_max, !all_sets, limits);

  if (as_json) {
    json out = json::array();
    for (const auto& row : rows) {
      json r{{"n", row.n}, {"I", positions_json(row.I)}, {"value", to_decimal(row.value)},
             {"method", method_name(row.used)}};
      if (row.content) r["content"] = row.content->counts();
      if (row.word_count) r["words"] = to_decimal(*row.word_count);
      out.push_back(r);
    }
    std::cout << out.dump() << "\n";
    return 0;
  }

  const bool periodic = !rows.empty() && rows.front().content.has_value();
  if (!all_sets) {
    std::cout << (periodic ? "# n content words d\n" : "# n d\n");
  } else {
    std::cout << "# n I d\n";
  }
  for (const auto& row : rows) {
    if (all_sets) {
      std::cout << row.n << " " << row.I.to_string() << " " << to_decimal(row.value) << "\n";
    } else if (periodic) {
      std::cout << row.n << " " << row.content->to_string() << " " << to_decimal(*row.word_count)
                << " " << to_decimal(row.value) << "\n";
    } else {
      std::cout << row.n << " " << to_decimal(row.value) << "\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& relation_file, int n_max, bool as_json, const Limits& limits) {
  const RelationSpec spec = relation_from_file(relation_file);
  const VerificationReport report = run_verification(spec, n_max, limits);

  if (as_json) {
    json cells = json::array();
    for (const auto& cell : report.cells) {
      json results;
      for (const auto& [method, value] : cell.results) {
        results[method_name(method)] = to_decimal(value);
      }
      cells.push_back(
          {{"n", cell.n}, {"I", positions_json(cell.I)}, {"results", results}, {"agree", cell.agree}});
    }
    json skipped = json::array();
    for (const auto& [method, reason] : report.skipped_methods) {
      skipped.push_back({{"method", method_name(method)}, {"reason", reason}});
    }
    json out{{"agreement", report.agreement}, {"cells", cells}, {"skipped", skipped}};
    if (report.first_discrepancy) {
      const auto& d = *report.first_discrepancy;
      out["first_discrepancy"] = {{"n", d.n},
                                  {"I", positions_json(d.I)},
                                  {method_name(d.a), to_decimal(d.value_a)},
                                  {method_name(d.b), to_decimal(d.value_b)}};
    }
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& [method, reason] : report.skipped_methods) {
      std::cout << "# skipped " << method_name(method) << ": " << reason << "\n";
    }
    for (const auto& cell : report.cells) {
      std::cout << "n=" << cell.n << " I=" << cell.I.to_string();
      for (const auto& [method, value] : cell.results) {
        std::cout << " " << method_name(method) << "=" << to_decimal(value);
      }
      std::cout << (cell.agree ? " ok" : " MISMATCH") << "\n";
    }
    std::cout << "agreement: " << (report.agreement ? "true" : "false") << "\n";
  }
  return report.agreement ? 0 : 5;
}

int cmd_series(const std::string& relation_file, int max_degree, bool as_json,
               const Limits& limits) {
  const RelationSpec spec = relation_from_file(relation_file);
  const ResidueMatrix* f = spec.periodic_matrix();
  if (f == nullptr) {
    throw NotApplicable("series requires a residue-periodic relation spec");
  }
  const TruncatedSeries series =
      transfer_series(ResidueDigraph::from_matrix(*f), max_degree, limits.series_degree_cap);

  if (as_json) {
    json out = json::array();
    for (const auto& [key, value] : series.terms()) {
      out.push_back({{"n", key.first}, {"content", key.second}, {"coefficient", to_decimal(value)}});
    }
    std::cout << out.dump() << "\n";
    return 0;
  }
  for (const auto& [key, value] : series.terms()) {
    const ContentVector content(key.second);
    std::cout << key.first << " " << content.to_string() << " " << to_decimal(value) << "\n";
  }
  return 0;
}

int cmd_random(int n, double p, int trials, std::uint64_t seed, const std::string& csv_path,
               bool as_json, const Limits& limits) {
  ExperimentConfig cfg;
  cfg.n = n;
  cfg.p = p;
  cfg.trials = trials;
  cfg.seed = seed;
  const ExperimentReport report = run_experiment(cfg, limits);
  const SecondMomentCheck check = second_moment_check(report);

  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw ParseError("cannot open CSV output file: " + csv_path);
    csv << "trial,Y,threshold_met\n";
    for (std::size_t t = 0; t < report.samples.size(); ++t) {
      csv << t << "," << to_decimal(report.samples[t]) << ","
          << (report.threshold_met[t] ? 1 : 0) << "\n";
    }
  }

  if (as_json) {
    json out{{"n", n},
             {"p", p},
             {"trials", trials},
             {"seed", seed},
             {"theoretical_mean", report.theoretical_mean},
             {"empirical_mean", report.empirical_mean},
             {"empirical_second_moment", report.empirical_second_moment},
             {"success_threshold", report.success_threshold},
             {"success_frequency", report.success_frequency},
             {"pz_bound", report.pz_bound},
             {"second_moment_ratio", check.ratio},
             {"second_moment_bound", check.bound},
             {"second_moment_within_bound", check.within_bound}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "n: " << n << "  p: " << p << "  trials: " << trials << "  seed: " << seed
              << "\n";
    std::cout << "theoretical_mean: " << report.theoretical_mean << "\n";
    std::cout << "empirical_mean: " << report.empirical_mean << "\n";
    std::cout << "empirical_second_moment: " << report.empirical_second_moment << "\n";
    std::cout << "success_threshold: " << report.success_threshold << "\n";
    std::cout << "success_frequency: " << report.success_frequency << "\n";
    std::cout << "pz_bound: " << report.pz_bound << "\n";
    std::cout << "second_moment_ratio: " << check.ratio << " (bound " << check.bound
              << (check.within_bound ? ", ok" : ", EXCEEDED") << ")\n";
  }
  return 0;
}

int cmd_certify(const std::string& relation_file, int n_max, int mod, bool as_json,
                const Limits& limits) {
  const RelationSpec spec = relation_from_file(relation_file);
  const PropertyCertificate std_cert =
      certify_standardization_invariance(spec, n_max, limits.work_limit);
  const PropertyCertificate tour_cert = certify_tournament(spec, n_max);

  std::optional<PropertyCertificate> periodic_cert;
  int effective_mod = mod;
  if (effective_mod == 0 && spec.periodic_matrix()) {
    effective_mod = spec.periodic_matrix()->modulus();
  }
  if (effective_mod > 0) {
    periodic_cert = certify_periodic(spec, effective_mod, std::max(n_max, 2 * effective_mod));
  }

  auto cert_json = [](const PropertyCertificate& cert) {
    json out{{"holds", cert.holds}, {"verified_up_to", cert.verified_up_to}};
    if (cert.witness_labels) out["witness_S"] = cert.witness_labels->to_string();
    if (cert.witness_positions) out["witness_I"] = cert.witness_positions->to_string();
    if (cert.witness_pair) {
      out["witness_pair"] = {cert.witness_pair->first, cert.witness_pair->second};
    }
    return out;
  };
  auto cert_text = [](const PropertyCertificate& cert) {
    std::ostringstream out;
    out << (cert.holds ? "holds" : "refuted") << " (n_max=" << cert.verified_up_to << ")";
    if (cert.witness_labels) out << " S=" << cert.witness_labels->to_string();
    if (cert.witness_positions) out << " I=" << cert.witness_positions->to_string();
    if (cert.witness_pair) {
      out << " pair=(" << cert.witness_pair->first << "," << cert.witness_pair->second << ")";
    }
    return out.str();
  };

  if (as_json) {
    json out{{property_name(Property::StandardizationInvariant), cert_json(std_cert)},
             {property_name(Property::Tournament), cert_json(tour_cert)},
             {"classification",
              tournament_class_name(classify_tournament_relation(spec, n_max))}};
    if (periodic_cert) {
      json p = cert_json(*periodic_cert);
      p["m"] = effective_mod;
      out[property_name(Property::PeriodicConsistent)] = p;
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << property_name(Property::StandardizationInvariant) << ": " << cert_text(std_cert)
              << "\n";
    std::cout << property_name(Property::Tournament) << ": " << cert_text(tour_cert) << "\n";
    std::cout << "classification: "
              << tournament_class_name(classify_tournament_relation(spec, n_max)) << "\n";
    if (periodic_cert) {
      std::cout << property_name(Property::PeriodicConsistent) << " (mod " << effective_mod
                << "): " << cert_text(*periodic_cert) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-method exact counting of permutations by X-descent set"};
  app.require_subcommand(1);
  const Limits limits = Limits::from_env();

  std::string relation_file;
  std::string positions = "empty";
  std::string method = "auto";
  std::string csv_path;
  int n = 0, n_max = 6, max_degree = 6, trials = 100, mod = 0;
  double p = 0.5;
  std::uint64_t seed = 1;
  bool as_json = false, all_sets = false;

  auto* count = app.add_subcommand("count", "count permutations with X-descent set exactly I");
  count->add_option("--relation", relation_file, "relation spec JSON file")->required();
  count->add_option("--n", n, "permutation length")->required();
  count->add_option("--I", positions, "descent positions, e.g. \"2,5\" or \"empty\"");
  count->add_option("--method", method,
                    "auto|oracle|subset|binomial|ie|insertion|hampath|periodic|succession");
  count->add_flag("--format-json,--json", as_json, "machine-readable output");

  auto* table = app.add_subcommand("table", "tabulate counts for n = 1..n_max");
  table->add_option("--relation", relation_file, "relation spec JSON file")->required();
  table->add_option("--n-max", n_max, "largest n")->required();
  table->add_flag("--all", all_sets, "tabulate every I, not just the descent-free column");
  table->add_flag("--empty-only", [](std::int64_t) {}, "descent-free column only (default)");
  table->add_flag("--format-json,--json", as_json, "machine-readable output");

  auto* verify = app.add_subcommand("verify", "cross-check every applicable method");
  verify->add_option("--relation", relation_file, "relation spec JSON file")->required();
  verify->add_option("--n-max", n_max, "largest n (default 6)");
  verify->add_flag("--format-json,--json", as_json, "machine-readable output");

  auto* series = app.add_subcommand("series", "truncated transfer-matrix series coefficients");
  series->add_option("--relation", relation_file, "relation spec JSON file")->required();
  series->add_option("--max-degree", max_degree, "truncation degree")->required();
  series->add_flag("--format-json,--json", as_json, "machine-readable output");

  auto* random = app.add_subcommand("random", "Monte Carlo study of the random-relation model");
  random->add_option("--n", n, "permutation length")->required();
  random->add_option("--p", p, "edge probability in (0,1)")->required();
  random->add_option("--trials", trials, "number of sampled relations");
  random->add_option("--seed", seed, "RNG seed");
  random->add_option("--emit-csv", csv_path, "write per-trial results as CSV");
  random->add_flag("--format-json,--json", as_json, "machine-readable output");

  auto* certify = app.add_subcommand("certify", "bounded structural property certificates");
  certify->add_option("--relation", relation_file, "relation spec JSON file")->required();
  certify->add_option("--n-max", n_max, "certification bound (default 6)");
  certify->add_option("--mod", mod, "also certify residue-periodicity for this modulus");
  certify->add_flag("--format-json,--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (count->parsed()) return cmd_count(relation_file, n, positions, method, as_json, limits);
    if (table->parsed()) return cmd_table(relation_file, n_max, all_sets, as_json, limits);
    if (verify->parsed()) return cmd_verify(relation_file, n_max, as_json, limits);
    if (series->parsed()) return cmd_series(relation_file, max_degree, as_json, limits);
    if (random->parsed()) return cmd_random(n, p, trials, seed, csv_path, as_json, limits);
    if (certify->parsed()) return cmd_certify(relation_file, n_max, mod, as_json, limits);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotApplicable& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return 3;
  } catch (const NotCertified& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return 3;
  } catch (const HypothesisFailed& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return 3;
  } catch (const NotTournament& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return 3;
  } catch (const SizeLimit& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return 4;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
