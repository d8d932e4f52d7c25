// End-to-end checks of the fpmine binary: spawns the real executable and
// inspects exit codes, stdout, and stderr. Arguments: path to the binary,
// path to the data directory, path to the golden directory.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int g_failures = 0;
std::string g_binary;
std::string g_data_dir;
std::string g_golden_dir;
std::string g_tmp_dir;

struct RunResult {
  int status = -1;
  std::string out;
  std::string err;
};

std::string shell_quote(const std::string& s) {
  return "'" + s + "'";
}

RunResult run(const std::string& args) {
  static int counter = 0;
  const std::string err_path = g_tmp_dir + "/stderr." + std::to_string(counter++);
  const std::string command = shell_quote(g_binary) + " " + args + " 2>" + shell_quote(err_path);

  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    std::perror("popen");
    std::exit(2);
  }
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, n);
  }
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;

  std::ifstream err(err_path, std::ios::binary);
  std::ostringstream err_text;
  err_text << err.rdbuf();
  result.err = err_text.str();
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

void check(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "ok: " << what << "\n";
  } else {
    ++g_failures;
    std::cout << "FAILED: " << what << "\n";
  }
}

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (char c : text) {
    if (c == '\n') ++lines;
  }
  return lines;
}

std::string arff() { return shell_quote(g_data_dir + "/TEST_ITEM_TRANS.arff"); }
std::string basket() { return shell_quote(g_data_dir + "/bread_basket.basket"); }

void test_weka_golden() {
  const RunResult r =
      run("weka -N 20 -T 0 -C 0.5 -D 0.05 -U 1.0 -M 0.1 -S -1.0 -c -1 " + arff());
  check(r.status == 0, "weka exits 0");
  check(r.out == read_file(g_golden_dir + "/weka_test_item_trans.txt"),
        "weka output equals the frozen report");

  // the -S/-c compatibility flags may be omitted; the defaults echo the same
  const RunResult defaults = run("weka -N 20 -T 0 -C 0.5 -D 0.05 -U 1.0 -M 0.1 " + arff());
  check(defaults.out == r.out, "weka default -S/-c echo matches");
}

void test_mine() {
  const RunResult r = run("mine --minsup 0.5 " + arff());
  check(r.status == 0, "mine exits 0");
  check(count_lines(r.out) == 25, "mine finds 25 itemsets at half support");
  check(r.out.find("B=TRUE E=TRUE H=TRUE (7)\n") != std::string::npos,
        "mine prints the three-item set with its count");

  const RunResult csv = run("mine --minsup 0.5 --output csv " + arff());
  check(csv.out.rfind("items,count\n", 0) == 0, "mine csv starts with its header");
  check(count_lines(csv.out) == 26, "mine csv has headers plus 25 rows");

  const RunResult json = run("mine --minsup 0.5 --output json-lines " + basket());
  check(json.out.rfind("{\"count\":3,\"items\":[\"bread\"]}\n", 0) == 0,
        "mine json-lines emits items and count fields");
}

void test_rules() {
  const RunResult r = run("rules --minsup 0.5 --minconf 0.5 " + arff());
  check(r.status == 0, "rules exits 0");
  check(count_lines(r.out) == 37, "rules finds 37 rules at 0.5/0.5");
  check(r.out.rfind("E=TRUE 11 ==> H=TRUE 11    conf:(1)\n", 0) == 0,
        "rules ranks the perfect-confidence rule first");

  const RunResult top = run("rules --minsup 0.5 --minconf 0.5 --top 20 " + arff());
  check(count_lines(top.out) == 20, "rules --top caps the listing");

  const RunResult json =
      run("rules --minsup 0.5 --minconf 0.5 --top 1 --output json-lines " + arff());
  check(json.out ==
            "{\"antecedent\":[\"E=TRUE\"],\"antecedentCount\":11,\"confidence\":1.0,"
            "\"consequent\":[\"H=TRUE\"],\"count\":11}\n",
        "rules json-lines carries all five fields");
}

void test_flag_validation_precedes_io() {
  const RunResult r = run("mine --minsup 1.1 " + shell_quote(g_tmp_dir + "/no-such-file.arff"));
  check(r.status == 1, "out-of-range --minsup is a usage error even for a missing file");
  check(r.out.empty(), "usage errors print nothing to stdout");
  check(!r.err.empty(), "usage errors are reported on stderr");

  check(run("mine --minsup abc " + arff()).status == 1, "non-numeric --minsup exits 1");
  check(run("rules --minsup 0.5 --minconf 1.5 " + arff()).status == 1,
        "out-of-range --minconf exits 1");
  check(run("mine --minsup 0.5 --threads 0 " + arff()).status == 1, "zero threads exits 1");
  check(run("weka -T 1 " + arff()).status == 1, "unsupported metric type exits 1");
  check(run("weka -N 0 " + arff()).status == 1, "non-positive -N exits 1");
  check(run("mine " + arff()).status == 1, "missing required --minsup exits 1");
  check(run("mine --minsup 0.5 --output xml " + arff()).status == 1,
        "unknown output style exits 1");
  check(run("frobnicate").status == 1, "unknown subcommand exits 1");
  check(run("").status == 1, "missing subcommand exits 1");
  check(run("mine --minsup 0.5 --bogus-flag " + arff()).status == 1, "unknown flag exits 1");
}

void test_input_errors() {
  const RunResult missing = run("mine --minsup 0.5 " + shell_quote(g_tmp_dir + "/nope.arff"));
  check(missing.status == 2, "unreadable input exits 2");

  const std::string bad = g_tmp_dir + "/bad.arff";
  write_file(bad, "@relation r\n@attribute x {a, b}\n@data\nc\n");
  const RunResult parse = run("mine --minsup 0.5 " + shell_quote(bad));
  check(parse.status == 2, "parse failures exit 2");
  check(parse.err.find(bad + ": line 4:") != std::string::npos,
        "parse failures name the file and line");

  const std::string empty_txn = g_tmp_dir + "/empty_txn.basket";
  write_file(empty_txn, "1: a b\n2:\n");
  const RunResult basket_err = run("mine --minsup 0.5 " + shell_quote(empty_txn));
  check(basket_err.status == 2, "basket parse failures exit 2");
  check(basket_err.err.find("line 2") != std::string::npos,
        "basket parse failures carry the line number");
}

void test_help() {
  check(run("--help").status == 0, "--help exits 0");
  check(run("mine --help").status == 0, "subcommand --help exits 0");
  check(!run("--help").out.empty(), "--help prints to stdout");
}

void test_format_override() {
  // same content, misleading extension: --format wins over sniffing
  const std::string path = g_tmp_dir + "/baskets.arff";
  write_file(path, "a b c\na b\n");
  check(run("mine --minsup 1.0 " + shell_quote(path)).status == 2,
        "basket content under an .arff name fails to parse by default");
  const RunResult forced = run("mine --minsup 1.0 --format basket " + shell_quote(path));
  check(forced.status == 0 && count_lines(forced.out) == 3,
        "--format basket overrides the extension");
}

void test_gen() {
  const std::string flags = "gen -n 80 -t 6 -i 2 --items 30 --patterns 6 --seed 11";
  const RunResult a = run(flags);
  const RunResult b = run(flags);
  check(a.status == 0, "gen exits 0");
  check(a.out == b.out, "gen is deterministic for a fixed seed");
  check(count_lines(a.out) == 80, "gen writes one line per transaction");
  check(run("gen -n 80 -t 6 -i 2 --items 30 --patterns 6 --seed 12").out != a.out,
        "gen output moves with the seed");
  check(run("gen -n 10 -t 9 -i 2 --items 5 --patterns 2").status == 1,
        "inconsistent gen parameters exit 1");

  const std::string out_path = g_tmp_dir + "/gen.basket";
  const RunResult to_file = run("gen -n 40 -t 5 -i 2 --items 20 --patterns 4 -o " +
                                shell_quote(out_path));
  check(to_file.status == 0 && to_file.out.empty(), "gen -o writes the file, not stdout");
  const RunResult mined = run("mine --minsup 0.2 " + shell_quote(out_path));
  check(mined.status == 0 && !mined.out.empty(), "generated baskets feed back into mine");
}

void test_bench() {
  const RunResult text = run("bench --minsup 0.5 " + arff());
  check(text.status == 0, "bench exits 0");
  check(text.out.find("minsup 0.5 (7 transactions required): 25 frequent itemsets") !=
            std::string::npos,
        "bench reports the threshold summary");

  const RunResult csv = run("bench --minsup 0.5 --minsup 0.75 --output csv " + arff());
  check(csv.out.find("level,join,prune,frequent,millis\n") != std::string::npos,
        "bench csv prints the header");
  check(csv.out.find("# minsup=0.75") != std::string::npos,
        "bench csv separates thresholds with comment lines");
  check(csv.out.find("1,16,16,10,0\n") != std::string::npos,
        "bench csv rows carry the counters");

  const RunResult timed = run("bench --minsup 0.5 --timings " + arff());
  check(timed.out.find("millis") != std::string::npos, "bench --timings adds the column");
}

void test_convert_round_trip() {
  const std::string as_arff = g_tmp_dir + "/bread.arff";
  const std::string back = g_tmp_dir + "/bread_again.basket";
  const RunResult to_arff =
      run("convert --to arff --relation bread -o " + shell_quote(as_arff) + " " + basket());
  check(to_arff.status == 0, "convert --to arff exits 0");
  const RunResult to_basket = run("convert --to basket --present TRUE -o " + shell_quote(back) +
                                  " " + shell_quote(as_arff));
  check(to_basket.status == 0, "convert --to basket exits 0");

  const RunResult original = run("convert --to basket " + basket());
  check(read_file(back) == original.out, "basket -> arff -> basket round trip");

  check(run("convert --to basket --present YES " + shell_quote(as_arff)).status == 1,
        "undeclared --present value exits 1");
}

void test_determinism() {
  const std::vector<std::string> invocations = {
      "mine --minsup 0.4 " + arff(),
      "mine --minsup 0.4 --output json-lines " + arff(),
      "rules --minsup 0.4 --minconf 0.6 " + arff(),
      "rules --minsup 0.4 --minconf 0.6 --output csv " + arff(),
      "weka -N 20 -T 0 -C 0.5 -D 0.05 -U 1.0 -M 0.1 " + arff(),
      "gen -n 120 -t 7 -i 3 --items 50 --patterns 9 --seed 5",
      "bench --minsup 0.4 --minsup 0.6 --output csv " + arff(),
      "convert --to arff " + basket(),
  };
  for (const std::string& args : invocations) {
    const RunResult first = run(args);
    const RunResult second = run(args);
    check(first.status == 0 && first.out == second.out,
          "byte-identical reruns: " + args.substr(0, args.find(' ')));
  }

  for (const std::string& base :
       {std::string("mine --minsup 0.4 "), std::string("rules --minsup 0.4 --minconf 0.6 "),
        std::string("weka -N 20 -T 0 -C 0.5 -D 0.05 -U 1.0 -M 0.1 "),
        std::string("bench --minsup 0.4 --output csv ")}) {
    const RunResult one = run(base + "--threads 1 " + arff());
    const RunResult four = run(base + "--threads 4 " + arff());
    check(one.status == 0 && one.out == four.out,
          "threads 1 vs 4: " + base.substr(0, base.find(' ')));
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 4) {
    std::cerr << "usage: " << argv[0] << " <fpmine-binary> <data-dir> <golden-dir>\n";
    return 2;
  }
  g_binary = argv[1];
  g_data_dir = argv[2];
  g_golden_dir = argv[3];

  std::error_code ec;
  const auto tmp = std::filesystem::temp_directory_path(ec) / "fpmine-cli-tests";
  std::filesystem::create_directories(tmp, ec);
  g_tmp_dir = tmp.string();

  test_weka_golden();
  test_mine();
  test_rules();
  test_flag_validation_precedes_io();
  test_input_errors();
  test_help();
  test_format_override();
  test_gen();
  test_bench();
  test_convert_round_trip();
  test_determinism();

  if (g_failures) {
    std::cout << g_failures << " check(s) failed\n";
    return 1;
  }
  std::cout << "all cli checks passed\n";
  return 0;
}
