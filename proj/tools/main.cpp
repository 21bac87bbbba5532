#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "f2q/dense.hpp"
#include "f2q/encoding.hpp"
#include "f2q/weight_stats.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& data) {
  if (path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file '" + path + "'");
  out << data;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

f2q::Encoding build_encoding(const std::string& scheme_str, std::size_t n,
                             const std::string& tree_file, const std::string& matrix_file) {
  f2q::Scheme scheme = f2q::scheme_from_name(scheme_str);
  if (scheme == f2q::Scheme::custom) {
    if (!tree_file.empty()) {
      if (n < 1) throw UsageError("custom scheme with --tree-file requires --n >= 1");
      return f2q::encoding_from_forest(f2q::forest_parse(n, read_file(tree_file)));
    }
    if (!matrix_file.empty()) {
      f2q::BitMatrix g = f2q::BitMatrix::parse(read_file(matrix_file));
      if (n != 0 && n != g.rows()) throw UsageError("--n disagrees with the matrix dimension");
      return f2q::encoding_from_matrix(std::move(g));
    }
    throw UsageError("custom scheme requires --tree-file or --matrix-file");
  }
  if (n < 1) throw UsageError("--n must be >= 1");
  return f2q::make_encoding(scheme, n);
}

int run_emit(const std::string& scheme, std::size_t n, const std::string& what,
             const std::string& format, const std::string& output, const std::string& tree_file,
             const std::string& matrix_file) {
  f2q::Encoding e = build_encoding(scheme, n, tree_file, matrix_file);
  std::ostringstream out;

  if (format == "json") {
    if (what == "matrix") {
      if (!e.g_based()) throw UsageError("--what matrix is undefined for the ternary scheme");
      out << f2q::encoding_json(e, false, false).dump(2) << '\n';
    } else if (what == "majoranas") {
      out << f2q::encoding_json(e, true, false).dump(2) << '\n';
    } else if (what == "creation") {
      if (!e.g_based())
        throw UsageError("--what creation is undefined for the ternary scheme");
      out << f2q::encoding_json(e, true, true).dump(2) << '\n';
    } else {
      throw UsageError("--format json supports --what matrix, majoranas or creation");
    }
    write_output(output, out.str());
    return kExitPass;
  }
  if (format != "text") throw UsageError("unknown format '" + format + "'");

  if (what == "matrix") {
    if (!e.g_based()) throw UsageError("--what matrix is undefined for the ternary scheme");
    out << e.G->str();
  } else if (what == "tree") {
    if (e.tree)
      out << f2q::ternary_tree_str(*e.tree);
    else if (e.forest)
      out << f2q::forest_str(*e.forest);
    else
      throw UsageError("--what tree needs a tree-derived scheme");
  } else if (what == "majoranas") {
    for (std::size_t k = 0; k < 2 * e.n; ++k)
      out << "k=" << k << ' ' << f2q::majorana(e, k).sparse_str() << '\n';
  } else if (what == "sets") {
    if (!e.g_based()) throw UsageError("--what sets is undefined for the ternary scheme");
    for (const f2q::IndexSetQuad& q : e.sets) out << f2q::sets_line(q) << '\n';
  } else if (what == "creation") {
    if (!e.g_based()) throw UsageError("--what creation is undefined for the ternary scheme");
    for (std::size_t j = 0; j < e.n; ++j)
      out << "j=" << j << ' ' << f2q::creation(e, j).str() << '\n';
  } else {
    throw UsageError("unknown --what '" + what + "'");
  }
  write_output(output, out.str());
  return kExitPass;
}

int run_stats(const std::string& schemes_csv, std::size_t n_min, std::size_t n_max, bool csv,
              const std::string& convention_str, const std::string& output) {
  if (n_min < 1 || n_max < n_min) throw UsageError("empty n range");
  std::vector<f2q::Scheme> schemes;
  std::stringstream ss(schemes_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) schemes.push_back(f2q::scheme_from_name(item));
  }
  if (schemes.empty()) throw UsageError("--schemes must list at least one scheme");
  for (f2q::Scheme s : schemes)
    if (s == f2q::Scheme::custom) throw UsageError("stats does not support the custom scheme");
  f2q::AvgConvention convention = f2q::convention_from_name(convention_str);
  auto reports = f2q::compare_table(schemes, n_min, n_max);
  write_output(output, csv ? f2q::table_csv(reports, convention) : f2q::table_text(reports));
  return kExitPass;
}

int run_verify(const std::string& scheme_str, std::size_t n, std::string level,
               std::size_t dense_limit, bool corrupt, const std::string& format) {
  if (n < 1) throw UsageError("--n must be >= 1");
  if (dense_limit > f2q::kMaxDenseLimit)
    throw UsageError("--dense-limit capped at " + std::to_string(f2q::kMaxDenseLimit));
  if (format != "text" && format != "json") throw UsageError("verify supports text or json");
  f2q::Scheme scheme = f2q::scheme_from_name(scheme_str);
  if (scheme == f2q::Scheme::custom) throw UsageError("verify does not support the custom scheme");
  f2q::Encoding e = f2q::make_encoding(scheme, n);

  std::vector<f2q::PauliString> strings = f2q::majoranas(e);
  if (corrupt) {
    // Negative control: advance the first letter of Gamma_0 by one.
    f2q::Letter l = strings[0].letter(0);
    strings[0].set_letter(0, static_cast<f2q::Letter>((static_cast<unsigned>(l) + 1) % 4));
  }

  if (level.empty()) level = n <= dense_limit ? "dense" : "symplectic";
  bool all_pass = true;
  std::vector<f2q::VerificationReport> reports;

  if (level == "dense") {
    if (n > dense_limit)
      throw UsageError("n exceeds the dense limit; use --level symplectic or raise --dense-limit");
    reports.push_back(f2q::check_car(strings, scheme, dense_limit));
    if (e.g_based() && !corrupt) {
      reports.push_back(f2q::check_fock_action(e, dense_limit));
      reports.push_back(f2q::check_conjugation(e, dense_limit));
    }
    for (const f2q::VerificationReport& rep : reports) all_pass = all_pass && rep.pass;
    if (format == "json") {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const f2q::VerificationReport& rep : reports) arr.push_back(rep.json());
      std::cout << arr.dump(2) << '\n';
    } else {
      for (const f2q::VerificationReport& rep : reports) std::cout << rep.text() << '\n';
    }
  } else if (level == "symplectic") {
    if (format == "json") throw UsageError("--format json is only available at --level dense");
    bool hermitian = true;
    std::size_t bad_k = 0;
    for (std::size_t k = 0; k < strings.size(); ++k) {
      if (!strings[k].phase().is_real()) {
        hermitian = false;
        bad_k = k;
        break;
      }
    }
    if (hermitian)
      std::cout << "PASS hermiticity scheme=" << scheme_str << " n=" << n << '\n';
    else
      std::cout << "FAIL hermiticity scheme=" << scheme_str << " n=" << n << " k=" << bad_k
                << " detail=non-real phase\n";
    auto pair = f2q::find_commuting_pair(strings);
    if (!pair)
      std::cout << "PASS symplectic_anticommutation scheme=" << scheme_str << " n=" << n << '\n';
    else
      std::cout << "FAIL symplectic_anticommutation scheme=" << scheme_str << " n=" << n
                << " k=" << pair->first << " k'=" << pair->second << " detail=pair commutes\n";
    all_pass = hermitian && !pair;
  } else {
    throw UsageError("unknown --level '" + level + "'");
  }
  return all_pass ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compiler and verifier for prefix-sum fermion-to-qubit encodings"};
  app.require_subcommand(1);

  std::string scheme, what = "majoranas", format = "text", output, tree_file, matrix_file;
  std::size_t n = 0;
  CLI::App* emit = app.add_subcommand("emit", "emit matrices, trees, index sets or operators");
  emit->add_option("--scheme", scheme, "encoding scheme")->required();
  emit->add_option("--n", n, "mode count");
  emit->add_option("--what", what, "matrix|tree|majoranas|sets|creation");
  emit->add_option("--format", format, "text|json");
  emit->add_option("--output", output, "output path (default stdout)");
  emit->add_option("--tree-file", tree_file, "forest file for the custom scheme");
  emit->add_option("--matrix-file", matrix_file, "matrix file for the custom scheme");

  std::string schemes_csv, convention = "majoranas2n", stats_output;
  std::size_t n_min = 0, n_max = 0;
  bool csv = false;
  CLI::App* stats = app.add_subcommand("stats", "Pauli-weight comparison table");
  stats->add_option("--schemes", schemes_csv, "comma-separated scheme list")->required();
  stats->add_option("--n-min", n_min, "smallest n")->required();
  stats->add_option("--n-max", n_max, "largest n")->required();
  stats->add_flag("--csv", csv, "emit CSV instead of text");
  stats->add_option("--convention", convention, "majoranas2n|extended2n+1 (CSV avg columns)");
  stats->add_option("--output", stats_output, "output path (default stdout)");

  std::string v_scheme, level, v_format = "text";
  std::size_t v_n = 0, dense_limit = f2q::kDefaultDenseLimit;
  bool corrupt = false;
  CLI::App* verify = app.add_subcommand("verify", "run algebraic verification suites");
  verify->add_option("--scheme", v_scheme, "encoding scheme")->required();
  verify->add_option("--n", v_n, "mode count")->required();
  verify->add_option("--level", level, "dense|symplectic (default by size)");
  verify->add_option("--dense-limit", dense_limit, "dense-check qubit cap (max 14)");
  verify->add_option("--format", v_format, "text|json report rendering");
  verify->add_flag("--corrupt", corrupt, "negative control: corrupt Gamma_0 before checking");

  try {
    app.parse(argc, argv);
    if (emit->parsed())
      return run_emit(scheme, n, what, format, output, tree_file, matrix_file);
    if (stats->parsed())
      return run_stats(schemes_csv, n_min, n_max, csv, convention, stats_output);
    return run_verify(v_scheme, v_n, level, dense_limit, corrupt, v_format);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return app.exit(err);  // --help
    app.exit(err);
    return kExitUsage;
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const f2q::Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  }
}
