// fpmine: frequent itemset mining, association rules, a WEKA-style
// associator report, synthetic basket data, and a bench harness in one
// binary. Results go to stdout, diagnostics to stderr; exit code 0 on
// success, 1 on usage errors, 2 on input errors.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpmine/apriori.hpp"
#include "fpmine/bench.hpp"
#include "fpmine/database.hpp"
#include "fpmine/dataset.hpp"
#include "fpmine/rational.hpp"
#include "fpmine/rules.hpp"
#include "fpmine/synth.hpp"
#include "fpmine/weka.hpp"

namespace {

using nlohmann::json;

struct CliError : std::runtime_error {
  int code;
  CliError(int code_, const std::string& message) : std::runtime_error(message), code(code_) {}
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CliError(2, path + ": cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw CliError(2, path + ": read failed");
  }
  return std::move(buffer).str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw CliError(2, path + ": cannot open file for writing");
  }
  out << text;
  if (!out.good()) {
    throw CliError(2, path + ": write failed");
  }
}

std::string file_stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

bool has_arff_extension(const std::string& path) {
  std::string ext = std::filesystem::path(path).extension().string();
  for (char& c : ext) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return ext == ".arff";
}

fpmine::Ratio parse_ratio_flag(const std::string& text, const char* flag) {
  try {
    return fpmine::Ratio::parse_decimal(text);
  } catch (const std::invalid_argument& e) {
    throw CliError(1, std::string(flag) + ": " + e.what());
  }
}

fpmine::Ratio parse_fraction_flag(const std::string& text, const char* flag) {
  const fpmine::Ratio value = parse_ratio_flag(text, flag);
  if (value < fpmine::Ratio(0, 1) || value > fpmine::Ratio(1, 1)) {
    throw CliError(1, std::string(flag) + ": must lie in [0, 1]");
  }
  return value;
}

// Shared per-subcommand input options. Flags are validated before the file
// is touched, so a bad threshold never reports a file error.
struct InputArgs {
  std::string path;
  std::string format = "auto";

  bool treat_as_arff() const {
    if (format == "arff") return true;
    if (format == "basket") return false;
    return has_arff_extension(path);
  }
};

struct LoadedData {
  fpmine::TransactionDatabase db;
  std::string relation;
  std::vector<std::string> attribute_names;
};

LoadedData load_input(const InputArgs& input) {
  const std::string text = read_file(input.path);
  try {
    LoadedData data;
    if (input.treat_as_arff()) {
      const fpmine::ArffDataset dataset = fpmine::parse_arff(text);
      data.db = fpmine::arff_to_transactions(dataset);
      data.relation = dataset.relation;
      for (const fpmine::ArffAttribute& attribute : dataset.attributes) {
        data.attribute_names.push_back(attribute.name);
      }
    } else {
      data.db = fpmine::parse_basket(text);
      data.relation = file_stem(input.path);
      data.attribute_names = data.db.catalog.labels();
    }
    return data;
  } catch (const fpmine::ParseError& e) {
    throw CliError(2, input.path + ": " + e.what());
  }
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) {
    return text;
  }
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

json label_array(const fpmine::ItemCatalog& catalog, const fpmine::Itemset& items) {
  json array = json::array();
  for (fpmine::ItemId id : items) {
    array.push_back(catalog.label(id));
  }
  return array;
}

void add_input_options(CLI::App* sub, InputArgs& input) {
  sub->add_option("file", input.path, "input data file")->required();
  sub->add_option("--format", input.format, "input format (default: auto, by .arff extension)")
      ->check(CLI::IsMember({"auto", "arff", "basket"}));
}

unsigned checked_threads(int threads) {
  if (threads < 1) {
    throw CliError(1, "--threads: must be at least 1");
  }
  return static_cast<unsigned>(threads);
}

// ---- mine ----------------------------------------------------------------

struct MineArgs {
  InputArgs input;
  std::string minsup;
  std::string output = "text";
  int threads = 1;
};

void run_mine(const MineArgs& args) {
  const fpmine::Ratio minsup = parse_fraction_flag(args.minsup, "--minsup");
  const unsigned threads = checked_threads(args.threads);
  const LoadedData data = load_input(args.input);

  const auto threshold = fpmine::SupportThreshold::from_relative(minsup, data.db.size());
  fpmine::MineOptions options;
  options.threads = threads;
  const fpmine::MiningResult result = fpmine::mine(data.db, threshold, options);

  std::ostringstream out;
  if (args.output == "csv") {
    out << "items,count\n";
  }
  for (const fpmine::LevelSet& level : result.levels) {
    for (const fpmine::FrequentItemset& entry : level.entries) {
      if (args.output == "text") {
        out << fpmine::format_itemset(data.db.catalog, entry.items) << " (" << entry.count
            << ")\n";
      } else if (args.output == "csv") {
        out << csv_field(fpmine::format_itemset(data.db.catalog, entry.items)) << ','
            << entry.count << '\n';
      } else {
        json line;
        line["items"] = label_array(data.db.catalog, entry.items);
        line["count"] = entry.count;
        out << line.dump() << '\n';
      }
    }
  }
  std::cout << out.str();
}

// ---- rules ---------------------------------------------------------------

struct RulesArgs {
  InputArgs input;
  std::string minsup;
  std::string minconf;
  std::size_t top = 0;  // 0: all qualifying rules
  std::string output = "text";
  int threads = 1;
};

void run_rules(const RulesArgs& args) {
  const fpmine::Ratio minsup = parse_fraction_flag(args.minsup, "--minsup");
  const fpmine::Ratio minconf = parse_fraction_flag(args.minconf, "--minconf");
  const unsigned threads = checked_threads(args.threads);
  const LoadedData data = load_input(args.input);

  const auto threshold = fpmine::SupportThreshold::from_relative(minsup, data.db.size());
  fpmine::MineOptions options;
  options.threads = threads;
  const fpmine::MiningResult result = fpmine::mine(data.db, threshold, options);
  std::vector<fpmine::AssociationRule> rules = fpmine::generate_rules(result, minconf);
  const std::size_t limit = args.top == 0 ? rules.size() : args.top;
  rules = fpmine::rank(std::move(rules), limit);

  std::ostringstream out;
  if (args.output == "csv") {
    out << "antecedent,consequent,antecedentCount,ruleCount,confidence\n";
  }
  for (const fpmine::AssociationRule& rule : rules) {
    if (args.output == "text") {
      out << fpmine::format_rule(data.db.catalog, rule) << '\n';
    } else if (args.output == "csv") {
      out << csv_field(fpmine::format_itemset(data.db.catalog, rule.antecedent)) << ','
          << csv_field(fpmine::format_itemset(data.db.catalog, rule.consequent)) << ','
          << rule.antecedent_count << ',' << rule.rule_count << ','
          << fpmine::format_metric(rule.confidence()) << '\n';
    } else {
      json line;
      line["antecedent"] = label_array(data.db.catalog, rule.antecedent);
      line["consequent"] = label_array(data.db.catalog, rule.consequent);
      line["count"] = rule.rule_count;
      line["antecedentCount"] = rule.antecedent_count;
      line["confidence"] = rule.confidence().to_double();
      out << line.dump() << '\n';
    }
  }
  std::cout << out.str();
}

// ---- weka ----------------------------------------------------------------

struct WekaArgs {
  InputArgs input;
  int num_rules = 10;
  int metric_type = 0;
  std::string min_metric = "0.9";
  std::string delta = "0.05";
  std::string upper_bound = "1.0";
  std::string lower_bound = "0.1";
  std::string significance = "-1.0";  // parsed and echoed, not used
  std::string class_index = "-1";     // parsed and echoed, not used
  int threads = 1;
};

void run_weka(const WekaArgs& args) {
  fpmine::WekaParams params;
  params.num_rules = args.num_rules;
  if (args.metric_type != 0) {
    throw CliError(1, "-T: only metric type 0 (confidence) is supported");
  }
  params.metric = fpmine::MetricType::kConfidence;
  params.min_metric = parse_fraction_flag(args.min_metric, "-C");
  params.delta = parse_ratio_flag(args.delta, "-D");
  params.upper_bound = parse_ratio_flag(args.upper_bound, "-U");
  params.lower_bound = parse_ratio_flag(args.lower_bound, "-M");
  const unsigned threads = checked_threads(args.threads);
  try {
    params.validate();
  } catch (const std::invalid_argument& e) {
    throw CliError(1, std::string("weka: ") + e.what());
  }

  const LoadedData data = load_input(args.input);
  if (data.db.transactions.empty()) {
    throw CliError(2, args.input.path + ": no transactions");
  }

  std::string scheme = "weka.associations.Apriori -N " + std::to_string(params.num_rules) +
                       " -T " + std::to_string(args.metric_type) + " -C " +
                       fpmine::to_scheme_decimal(params.min_metric) + " -D " +
                       fpmine::to_scheme_decimal(params.delta) + " -U " +
                       fpmine::to_scheme_decimal(params.upper_bound) + " -M " +
                       fpmine::to_scheme_decimal(params.lower_bound) + " -S " +
                       args.significance + " -c " + args.class_index;

  const fpmine::WekaRun run = fpmine::run_associator(data.db, params, threads);
  std::cout << fpmine::format_report(run, data.db.catalog, data.relation, scheme,
                                     data.attribute_names);
}

// ---- gen -----------------------------------------------------------------

struct GenArgs {
  std::size_t transactions = 1000;
  double avg_transaction_length = 10;
  double avg_pattern_length = 4;
  std::size_t items = 500;
  std::size_t patterns = 100;
  std::uint64_t seed = 1;
  std::string out_path;
};

void run_gen(const GenArgs& args) {
  fpmine::GenParams params;
  params.num_transactions = args.transactions;
  params.avg_transaction_length = args.avg_transaction_length;
  params.avg_pattern_length = args.avg_pattern_length;
  params.num_items = args.items;
  params.num_patterns = args.patterns;
  params.seed = args.seed;
  try {
    params.validate();
  } catch (const std::invalid_argument& e) {
    throw CliError(1, std::string("gen: ") + e.what());
  }
  write_output(args.out_path, fpmine::render_basket(fpmine::generate(params)));
}

// ---- bench ---------------------------------------------------------------

struct BenchArgs {
  InputArgs input;
  std::vector<std::string> minsups;
  std::string output = "text";
  bool timings = false;
  int threads = 1;
};

void run_bench(const BenchArgs& args) {
  std::vector<fpmine::Ratio> thresholds;
  thresholds.reserve(args.minsups.size());
  for (const std::string& text : args.minsups) {
    thresholds.push_back(parse_fraction_flag(text, "--minsup"));
  }
  const unsigned threads = checked_threads(args.threads);
  const LoadedData data = load_input(args.input);

  const std::vector<fpmine::BenchReport> reports =
      fpmine::bench(data.db, thresholds, threads);
  std::ostringstream out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i && args.output == "text") {
      out << '\n';
    }
    out << (args.output == "csv" ? fpmine::format_bench_csv(reports[i], args.timings)
                                 : fpmine::format_bench_text(reports[i], args.timings));
  }
  std::cout << out.str();
}

// ---- convert -------------------------------------------------------------

struct ConvertArgs {
  InputArgs input;
  std::string to;
  std::string present;  // ARFF value marking membership, e.g. TRUE
  std::string relation;
  std::string out_path;
};

void run_convert(const ConvertArgs& args) {
  const std::string text = read_file(args.input.path);
  try {
    fpmine::TransactionDatabase db;
    std::string relation = args.relation;
    if (args.input.treat_as_arff()) {
      const fpmine::ArffDataset dataset = fpmine::parse_arff(text);
      db = args.present.empty() ? fpmine::arff_to_transactions(dataset)
                                : fpmine::arff_to_transactions(dataset, args.present);
      if (relation.empty()) relation = dataset.relation;
    } else {
      db = fpmine::parse_basket(text);
      if (relation.empty()) relation = file_stem(args.input.path);
    }
    const std::string rendered = args.to == "arff" ? fpmine::render_arff(db, relation)
                                                   : fpmine::render_basket(db);
    write_output(args.out_path, rendered);
  } catch (const fpmine::ParseError& e) {
    throw CliError(2, args.input.path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw CliError(1, std::string("--present: ") + e.what());
  }
}

void add_output_option(CLI::App* sub, std::string& output, bool with_json) {
  if (with_json) {
    sub->add_option("--output", output, "output style")
        ->check(CLI::IsMember({"text", "csv", "json-lines"}));
  } else {
    sub->add_option("--output", output, "output style")
        ->check(CLI::IsMember({"text", "csv"}));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frequent pattern mining toolkit"};
  app.require_subcommand(1);

  MineArgs mine_args;
  CLI::App* mine = app.add_subcommand("mine", "list frequent itemsets with their counts");
  mine->add_option("--minsup", mine_args.minsup, "minimum support as a fraction")->required();
  add_output_option(mine, mine_args.output, true);
  mine->add_option("--threads", mine_args.threads, "worker threads for support counting");
  add_input_options(mine, mine_args.input);
  mine->callback([&] { run_mine(mine_args); });

  RulesArgs rules_args;
  CLI::App* rules = app.add_subcommand("rules", "mine and rank association rules");
  rules->add_option("--minsup", rules_args.minsup, "minimum support as a fraction")->required();
  rules->add_option("--minconf", rules_args.minconf, "minimum confidence")->required();
  rules->add_option("--top", rules_args.top, "keep only the best n rules");
  add_output_option(rules, rules_args.output, true);
  rules->add_option("--threads", rules_args.threads, "worker threads for support counting");
  add_input_options(rules, rules_args.input);
  rules->callback([&] { run_rules(rules_args); });

  WekaArgs weka_args;
  CLI::App* weka = app.add_subcommand("weka", "associator with iterative support lowering");
  weka->add_option("-N,--num-rules", weka_args.num_rules, "required number of rules");
  weka->add_option("-T,--metric-type", weka_args.metric_type, "metric type (0: confidence)");
  weka->add_option("-C,--min-metric", weka_args.min_metric, "minimum metric score");
  weka->add_option("-D,--delta", weka_args.delta, "support lowered by this much each cycle");
  weka->add_option("-U,--upper-bound", weka_args.upper_bound, "upper bound for minimum support");
  weka->add_option("-M,--lower-bound", weka_args.lower_bound, "lower bound for minimum support");
  weka->add_option("-S,--significance", weka_args.significance,
                   "significance level (accepted for compatibility, unused)");
  weka->add_option("-c,--class-index", weka_args.class_index,
                   "class index (accepted for compatibility, unused)");
  weka->add_option("--threads", weka_args.threads, "worker threads for support counting");
  add_input_options(weka, weka_args.input);
  weka->callback([&] { run_weka(weka_args); });

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate synthetic basket data");
  gen->add_option("-n,--transactions", gen_args.transactions, "number of transactions (D)");
  gen->add_option("-t,--avg-transaction", gen_args.avg_transaction_length,
                  "average transaction length (T)");
  gen->add_option("-i,--avg-pattern", gen_args.avg_pattern_length, "average pattern length (I)");
  gen->add_option("--items", gen_args.items, "size of the item universe");
  gen->add_option("--patterns", gen_args.patterns, "number of base patterns");
  gen->add_option("--seed", gen_args.seed, "PRNG seed");
  gen->add_option("-o,--out", gen_args.out_path, "output file (default: stdout)");
  gen->callback([&] { run_gen(gen_args); });

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "per-level mining counters and timings");
  bench->add_option("--minsup", bench_args.minsups, "threshold(s) to benchmark")->required();
  add_output_option(bench, bench_args.output, false);
  bench->add_flag("--timings", bench_args.timings, "include wall-clock timings");
  bench->add_option("--threads", bench_args.threads, "worker threads for support counting");
  add_input_options(bench, bench_args.input);
  bench->callback([&] { run_bench(bench_args); });

  ConvertArgs convert_args;
  CLI::App* convert = app.add_subcommand("convert", "rewrite between arff and basket formats");
  convert->add_option("--to", convert_args.to, "target format")
      ->required()
      ->check(CLI::IsMember({"arff", "basket"}));
  convert->add_option("--present", convert_args.present,
                      "treat attributes with this value as the transaction's items");
  convert->add_option("--relation", convert_args.relation, "relation name for arff output");
  convert->add_option("-o,--out", convert_args.out_path, "output file (default: stdout)");
  add_input_options(convert, convert_args.input);
  convert->callback([&] { run_convert(convert_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const CliError& e) {
    std::cerr << "fpmine: " << e.what() << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "fpmine: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
