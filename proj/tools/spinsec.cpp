#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "spinsec/fixtures.hpp"
#include "spinsec/secant.hpp"
#include "spinsec/suites.hpp"

using namespace spinsec;
using nlohmann::json;

namespace {

int default_threads() {
  if (const char* env = std::getenv("SPINSEC_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? int(hw) : 1;
}

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw std::invalid_argument("family must be one of A, B, C, D");
}

// "w3", "2w9", "w9+w5", "3w9+2w1"
Weight parse_weight(const RootDatum& d, const std::string& text) {
  Weight w = d.zero();
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, '+')) {
    size_t wp = token.find('w');
    if (wp == std::string::npos)
      throw std::invalid_argument("bad weight token '" + token + "'");
    int mult = wp == 0 ? 1 : std::stoi(token.substr(0, wp));
    int idx = std::stoi(token.substr(wp + 1));
    if (idx < 1 || idx > d.rank)
      throw std::invalid_argument("fundamental weight index out of range");
    w = weight_add(w, weight_scale(mult, d.fundamental(idx)));
  }
  return w;
}

std::string fundamental_label(const RootDatum& d, const Weight& w) {
  const int n = d.ncoords();
  std::vector<long long> c;
  auto half = [](int x) { return x / 2; };
  switch (d.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) c.push_back(half(w[i] - w[i + 1]));
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) c.push_back(half(w[i] - w[i + 1]));
      c.push_back(w[n - 1]);
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) c.push_back(half(w[i] - w[i + 1]));
      c.push_back(half(w[n - 1]));
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) c.push_back(half(w[i] - w[i + 1]));
      c.push_back(half(w[n - 2] - w[n - 1]));
      c.push_back(half(w[n - 2] + w[n - 1]));
      break;
  }
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (c[i] != 1) s += std::to_string(c[i]);
    s += "w" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

void write_out(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << payload;
}

std::string render_decomposition(const RootDatum& d, const Decomposition& dec,
                                 const std::string& format,
                                 const json& header) {
  if (format == "json") {
    json j = header;
    auto arr = json::array();
    for (const auto& [w, m] : dec.components) {
      json cj;
      cj["label"] = fundamental_label(d, w);
      cj["mult"] = m;
      cj["dim"] = dim_irrep(d, w).get_str();
      cj["coords_doubled"] = w;
      arr.push_back(std::move(cj));
    }
    j["components"] = std::move(arr);
    j["total_dim"] = dec.dim().get_str();
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    std::string s = "label,mult,dim\r\n";
    for (const auto& [w, m] : dec.components)
      s += fundamental_label(d, w) + "," + std::to_string(m) + "," +
           dim_irrep(d, w).get_str() + "\r\n";
    return s;
  }
  std::ostringstream os;
  for (const auto& [w, m] : dec.components)
    os << "  " << m << " x V_{" << fundamental_label(d, w) << "}   "
       << weight_str(w) << "   dim " << dim_irrep(d, w).get_str() << "\n";
  os << "total dimension " << dec.dim().get_str() << "\n";
  return os.str();
}

int cmd_decompose(const std::string& family_s, int rank,
                  const std::string& target,
                  const std::vector<std::string>& weight_args,
                  const std::string& format, const std::string& output) {
  Family family = parse_family(family_s);
  if (rank < 2 || rank > 16)
    throw std::invalid_argument("rank out of the supported range 2..16");
  RootDatum d{family, rank};

  Decomposition dec(d);
  if (target == "sym3-halfspin" || target == "sym4-halfspin") {
    if (family != Family::D)
      throw std::invalid_argument("half-spin targets need family D");
    const int cap = target == "sym3-halfspin" ? kS3RankCap : kS4RankCap;
    if (rank < 4 || rank > cap)
      throw std::invalid_argument("rank out of range for " + target +
                                  " (4.." + std::to_string(cap) + ")");
    dec = target == "sym3-halfspin" ? s3_halfspin(rank)
                                    : s4_halfspin_decomp(rank);
  } else if (target == "sym2" || target == "sym3" || target == "sym4" ||
             target == "ext2") {
    if (weight_args.size() != 1)
      throw std::invalid_argument(target + " needs exactly one --weights entry");
    Weight lam = parse_weight(d, weight_args[0]);
    DominantCharacter ch = freudenthal_char(d, lam);
    const int k = (target == "sym2" || target == "ext2") ? 2
                  : target == "sym3"                     ? 3
                                                         : 4;
    const PowerKind kind = target == "ext2" ? PowerKind::Ext : PowerKind::Sym;
    dec = decompose(power_op(ch, k, kind), target);
  } else if (target == "tensor") {
    if (weight_args.size() != 2)
      throw std::invalid_argument("tensor needs two --weights entries");
    DominantCharacter a = freudenthal_char(d, parse_weight(d, weight_args[0]));
    DominantCharacter b = freudenthal_char(d, parse_weight(d, weight_args[1]));
    dec = decompose(char_mul(a, b), "tensor");
  } else {
    throw std::invalid_argument("unknown target " + target);
  }

  json header = {{"family", family_s}, {"rank", rank}, {"target", target}};
  write_out(output, render_decomposition(d, dec, format, header));
  return 0;
}

int cmd_verify(const std::string& suite, int max_rank, int trials,
               unsigned long long seed, int threads,
               const std::string& output) {
  if (max_rank < 0) {
    if (suite == "cubics") max_rank = 12;
    else if (suite == "quartics") max_rank = 10;
    else if (suite == "freudenthal") max_rank = 6;
    else max_rank = 8;
  }
  RunReport rep = run_suite(suite, max_rank, trials, seed, threads);
  write_out(output, rep.to_json().dump(2) + "\n");
  if (!output.empty())
    for (const auto& c : rep.checks)
      std::cout << "[" << c.status << "] " << c.name << "\n";
  return rep.all_passed() ? 0 : 1;
}

std::string render_table(const TriangularTable& t, const std::string& format) {
  if (format == "csv") {
    std::string s;
    for (int i = 0; i < t.size(); ++i) {
      std::string row;
      for (size_t k = 0; k < t.rows[i].size(); ++k) {
        if (k) row += ",";
        row += std::to_string(t.rows[i][k]);
      }
      s += row + "\r\n";
    }
    return s;
  }
  return format_triangular(t);
}

int cmd_table(const std::string& name, int rank, const std::string& format,
              bool expect_match, const std::string& fixture_path,
              const std::string& output) {
  std::ostringstream payload;
  bool diff_clean = true;
  if (name == "e-quartic" || name == "i4") {
    if (rank < 4 || rank > kS4RankCap)
      throw std::invalid_argument("rank out of range (4.." +
                                  std::to_string(kS4RankCap) + ")");
    TriangularTable computed = name == "e-quartic"
                                   ? quartic_e_triangular(s4_halfspin(rank))
                                   : quartic_ideal_even_triangular(rank);
    const TriangularTable reference =
        fixture_path.empty()
            ? (name == "e-quartic" ? reference_quartic_table()
                                   : reference_quartic_ideal_table())
            : parse_triangular_file(fixture_path);
    payload << render_table(computed, format);
    auto diffs = diff_tables(computed, reference, rank);
    diff_clean = diffs.empty();
    payload << "# diff against reference ("
            << (diff_clean ? "clean" : "mismatches") << ")\n";
    for (const auto& d : diffs) payload << "# " << d << "\n";
    if (name == "i4") {
      Decomposition ideal = quartic_ideal(rank);
      payload << "# components:\n";
      RootDatum d{Family::D, rank};
      for (const auto& [w, m] : ideal.components)
        payload << "#   " << m << " x V_{" << fundamental_label(d, w) << "}\n";
    }
  } else if (name == "a-series") {
    const int count = std::max(4, rank > 0 ? rank : 13);
    auto a = cubic_mult_series().prefix(count);
    auto b = cubic_mult_series_b().prefix(count);
    payload << "# a_j (cubic multiplicities) and b_j = a_{j-4}\n";
    for (int j = 0; j < count; ++j)
      payload << j << " " << a[j].get_str() << " " << b[j].get_str() << "\n";
  } else if (name == "c-audit") {
    const int hi = rank > 2 ? std::min(rank, 12) : 12;
    CAuditReport rep = corollary_c_audit(2, hi);
    payload << "# dimension-bookkeeping audit of the coefficient series\n";
    for (const auto& row : rep.rows)
      payload << "n=" << row.n << " lhs=" << row.lhs.get_str()
              << " printed-series-sum=" << row.printed_sum.get_str()
              << " derived-series-sum=" << row.derived_sum.get_str() << "\n";
    payload << "# derived series (1+x^9)/((1-x^4)(1-x^6)): ";
    for (const auto& c : rep.derived) payload << c.get_str() << " ";
    payload << "\n# printed series (1+x^9)/((1-x^2)(1-x^3)) "
            << (rep.printed_ok ? "passes" : "FAILS the identity") << "\n";
    payload << "# unique nonnegative solution: "
            << (rep.unique_nonnegative ? "yes" : "no") << "\n";
    diff_clean = rep.derived_ok && rep.unique_nonnegative;
  } else if (name == "cgr-audit") {
    const int n = (rank > 4 && rank <= 9 && rank % 2 == 1) ? (rank + 1) / 2
                  : rank > 0 && rank <= 5                  ? rank
                                                           : 4;
    if (n < 2 || n > 5)
      throw std::invalid_argument("cgr-audit needs rank 2..5 (meaning A_{2n-1})");
    payload << "# multiplicities in the symmetric cube of the middle wedge "
               "power, A_"
            << 2 * n - 1 << "\n# a b oracle printed-rule\n";
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b) {
        if (a > 2 * b || b > 2 * a) continue;
        long long o = grassmannian_m_oracle(a, b, n);
        long long r = grassmannian_m_rule_printed(a, b);
        payload << a << " " << b << " " << o << " " << r
                << (o == r ? "" : "   # deviation") << "\n";
      }
  } else {
    throw std::invalid_argument("unknown table " + name);
  }
  write_out(output, payload.str());
  if (expect_match && !diff_clean) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computational workbench for spinor varieties, their "
               "secants, and Pfaffian identities"};
  app.require_subcommand(1);

  std::string family = "D", target = "sym3-halfspin", format = "text";
  std::string output, suite, table_name, fixture_path;
  std::vector<std::string> weights;
  int rank = 8, max_rank = -1, trials = 100;
  unsigned long long seed = 42;
  int threads = default_threads();
  bool expect_match = false;

  auto* dec = app.add_subcommand("decompose",
                                 "decompose tensor and symmetric powers");
  dec->add_option("--family", family, "A, B, C or D");
  dec->add_option("--rank", rank, "Lie rank")->required();
  dec->add_option("--target", target,
                  "sym2|sym3|sym4|ext2|tensor|sym3-halfspin|sym4-halfspin");
  dec->add_option("--weights", weights, "weights like w3 or w9+w5");
  dec->add_option("--format", format, "json|csv|text");
  dec->add_option("--output", output, "write payload to a file");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite,
                  "pfaffian|beta|cubics|quartics|freudenthal|toy|all")
      ->required();
  ver->add_option("--max-rank", max_rank, "largest rank to verify");
  ver->add_option("--trials", trials, "random trials per check");
  ver->add_option("--seed", seed, "random seed");
  ver->add_option("--threads", threads, "worker threads");
  ver->add_option("--output", output, "write the JSON report to a file");

  auto* tab =
      app.add_subcommand("table", "emit computed tables with fixture diffs");
  tab->add_option("name", table_name,
                  "e-quartic|i4|a-series|c-audit|cgr-audit")
      ->required();
  tab->add_option("--rank", rank, "table rank");
  tab->add_option("--format", format, "text|csv");
  tab->add_option("--fixture", fixture_path,
                  "override the reference fixture file");
  tab->add_flag("--expect-match", expect_match,
                "exit 1 when the diff is nonempty");
  tab->add_option("--output", output, "write payload to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (dec->parsed())
      return cmd_decompose(family, rank, target, weights, format, output);
    if (ver->parsed())
      return cmd_verify(suite, max_rank, trials, seed, threads, output);
    if (tab->parsed())
      return cmd_table(table_name, rank, format, expect_match, fixture_path,
                       output);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
