#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chaoslab/atomic_file.hpp"
#include "chaoslab/attack_lab.hpp"
#include "chaoslab/chaotic_maps.hpp"
#include "chaoslab/cipher_core.hpp"
#include "chaoslab/container.hpp"
#include "chaoslab/dynamics_metrics.hpp"
#include "chaoslab/entropy_source.hpp"
#include "chaoslab/errors.hpp"
#include "chaoslab/keying.hpp"
#include "chaoslab/period_analysis.hpp"
#include "chaoslab/pgm.hpp"
#include "chaoslab/stat_suite.hpp"

namespace fs = std::filesystem;
using namespace chaoslab;

namespace {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kEntropy = 2,
  kIntegrity = 3,
  kFormat = 4,
  kBudget = 5,
  kAttackMiss = 6,
};

constexpr const char* kKeyEnv = "CHAOSLAB_KEY";

keying::SecretKey resolve_key(const std::string& flag) {
  if (!flag.empty()) return keying::SecretKey::parse(flag);
  if (const char* env = std::getenv(kKeyEnv); env != nullptr && *env != '\0') {
    return keying::SecretKey::parse(env);
  }
  throw FormatError(std::string("no key given: pass --key or set ") + kKeyEnv);
}

std::unique_ptr<ByteSource> make_source(const std::optional<std::uint64_t>& seed) {
  if (seed) return std::make_unique<SeededByteSource>(*seed);
  return std::make_unique<SystemEntropy>();
}

void print_params(std::ostream& out, const keying::CipherParams& p) {
  out.precision(12);
  out << "r=" << p.r() << '\n'
      << "x0=" << p.x0() << '\n'
      << "base=" << p.base() << '\n'
      << "iterations=" << p.iterations() << '\n';
}

// --- keygen ----------------------------------------------------------------

struct KeygenArgs {
  bool show_params = false;
  bool screened = false;
  std::optional<std::uint64_t> seed;
};

int run_keygen(const KeygenArgs& args) {
  auto source = make_source(args.seed);
  std::optional<keying::SecretKey> key;
  std::size_t attempts = 1;
  if (args.screened) {
    auto result = keying::generate_screened_key(*source);
    key = result.key;
    attempts = result.attempts;
  } else {
    key = keying::generate_key(*source);
  }
  std::cout << key->str() << '\n';
  if (args.screened) std::cout << "attempts=" << attempts << '\n';
  if (args.show_params) print_params(std::cout, keying::extract_params(*key));
  return kOk;
}

// --- encrypt / decrypt -----------------------------------------------------

struct CryptArgs {
  std::string in;
  std::string out;
  std::string key;
  std::string mode = "auto";
  std::optional<std::uint64_t> seed;
};

int run_encrypt(const CryptArgs& args) {
  const auto params = keying::extract_params(resolve_key(args.key));
  const auto bytes = io::read_file(args.in);
  const bool image = args.mode == "image" || (args.mode == "auto" && pgm::looks_like_pgm(bytes));
  if (image) {
    const auto plain = pgm::decode(bytes);
    pgm::write(args.out, cipher::encrypt_image(plain, params));
    return kOk;
  }
  const cipher::PlainText text(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
  auto source = make_source(args.seed);
  io::write_file_atomic(args.out, container::serialize(cipher::encrypt(text, params, *source)));
  return kOk;
}

int run_decrypt(const CryptArgs& args) {
  const auto params = keying::extract_params(resolve_key(args.key));
  const auto bytes = io::read_file(args.in);
  bool image = args.mode == "image";
  if (args.mode == "auto") {
    if (pgm::looks_like_pgm(bytes)) {
      image = true;
    } else if (!container::has_magic(bytes)) {
      throw FormatError(args.in + " is neither a ciphertext container nor a PGM image");
    }
  }
  if (image) {
    pgm::write(args.out, cipher::decrypt_image(pgm::decode(bytes), params));
    return kOk;
  }
  const auto text = cipher::decrypt(container::deserialize(bytes), params);
  io::write_file_atomic(args.out, std::string_view(text.bytes()));
  return kOk;
}

// --- analyze ---------------------------------------------------------------

struct AnalyzeArgs {
  std::vector<std::string> files;
  std::uint64_t seed = 0;
  std::size_t samples = stats::kDefaultCorrelationSamples;
  std::string histogram;
};

int run_analyze(const AnalyzeArgs& args) {
  const auto first = pgm::read(args.files.at(0));
  std::mt19937_64 rng(args.seed);
  stats::AnalysisReport report;
  if (args.files.size() == 2) {
    report = stats::analyze_pair(first, pgm::read(args.files[1]), rng, args.samples);
  } else {
    report = stats::analyze_image(first, rng, args.samples);
  }
  if (!args.histogram.empty()) {
    std::ostringstream hist;
    stats::write_histogram(hist, first);
    io::write_file_atomic(args.histogram, hist.str());
  }
  stats::write_report(std::cout, report);
  return kOk;
}

// --- period ----------------------------------------------------------------

struct PeriodArgs {
  std::optional<std::uint64_t> classical;
  std::vector<std::uint64_t> general;
  std::optional<std::uint64_t> table;
  std::uint64_t cap = period::kDefaultIterationCap;
  std::string out;
};

int run_period(const PeriodArgs& args) {
  if (args.classical) {
    std::cout << period::period_matrix_power(maps::TorusMap::classical(*args.classical), args.cap).period << '\n';
    return kOk;
  }
  if (!args.general.empty()) {
    const maps::TorusMap map(args.general[0], args.general[1], args.general[2]);
    std::cout << period::period_matrix_power(map, args.cap).period << '\n';
    return kOk;
  }
  const auto report = period::check_dyson_bounds(*args.table);
  if (args.out.empty()) {
    period::write_bound_report(std::cout, report);
  } else {
    std::ostringstream text;
    period::write_bound_report(text, report);
    io::write_file_atomic(args.out, text.str());
    std::cout << "checked=" << report.records.size() << " violations=" << report.violations.size() << '\n';
  }
  return kOk;
}

// --- lyapunov --------------------------------------------------------------

struct LyapunovArgs {
  std::vector<double> sweep;
  std::vector<double> point;
  double x0 = 0.2;
  std::optional<std::size_t> samples;
  std::string out;
};

int run_lyapunov(const LyapunovArgs& args) {
  if (!args.point.empty()) {
    const auto est = dynamics::lyapunov_logistic(args.point[0], args.point[1], dynamics::kDefaultBurnIn,
                                                 args.samples.value_or(dynamics::kDefaultPointSamples));
    std::cout.precision(10);
    std::cout << "lambda=" << est.lambda << '\n';
    if (est.singular) std::cout << "singular_terms=" << est.singular_terms << '\n';
    return kOk;
  }
  const auto report = dynamics::lyapunov_sweep(args.sweep[0], args.sweep[1], args.sweep[2], args.x0,
                                               dynamics::kDefaultBurnIn,
                                               args.samples.value_or(dynamics::kDefaultSweepSamples));
  if (args.out.empty()) {
    dynamics::write_sweep_csv(std::cout, report);
  } else {
    std::ostringstream text;
    dynamics::write_sweep_csv(text, report);
    io::write_file_atomic(args.out, text.str());
  }
  std::cerr << "points=" << report.entries.size() << " negative=" << report.negative_count() << '\n';
  return kOk;
}

// --- scramble / attack -----------------------------------------------------

struct ScrambleArgs {
  std::string in;
  std::string out;
  std::uint64_t iterations = 1;
};

int run_scramble(const ScrambleArgs& args) {
  const auto img = pgm::read(args.in);
  if (!img.is_square()) throw DomainError("scramble needs a square image");
  pgm::write(args.out, maps::scramble_lattice(maps::TorusMap::classical(img.rows()), img, args.iterations));
  return kOk;
}

struct AttackArgs {
  std::string in;
  std::string truth;
  std::optional<std::uint64_t> budget;
  std::string out;
  std::string trace;
};

int run_attack(const AttackArgs& args) {
  const auto scrambled = pgm::read(args.in);
  std::optional<GrayImage> truth;
  if (!args.truth.empty()) truth = pgm::read(args.truth);
  const auto result = attack::brute_force_unscramble(scrambled, args.budget, truth ? &*truth : nullptr);

  if (!args.out.empty()) pgm::write(args.out, result.candidate);
  if (!args.trace.empty()) {
    std::ostringstream csv;
    attack::write_trace_csv(csv, result);
    io::write_file_atomic(args.trace, csv.str());
  }
  std::cout.precision(8);
  std::cout << "iteration=" << result.recovered_iteration << '\n'
            << "score=" << result.score_trace[result.recovered_iteration].score << '\n'
            << "budget=" << result.budget << '\n';
  if (result.verified) {
    std::cout << "match=" << (result.succeeded ? "yes" : "no") << '\n';
    return result.succeeded ? kOk : kAttackMiss;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chaoslab: chaotic-map cipher laboratory"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "chaoslab 0.1.0");

  KeygenArgs keygen;
  auto* keygen_cmd = app.add_subcommand("keygen", "Generate a 40-hex-digit secret key");
  keygen_cmd->add_flag("--show-params", keygen.show_params, "Also print the derived cipher parameters");
  keygen_cmd->add_flag("--screened", keygen.screened, "Regenerate until the Lyapunov screen accepts (r, x0)");
  keygen_cmd->add_option("--seed", keygen.seed, "Deterministic, NOT secret: for reproducible experiments only");

  CryptArgs enc;
  auto* enc_cmd = app.add_subcommand("encrypt", "Encrypt printable text or a PGM image");
  enc_cmd->add_option("--in", enc.in, "Input file")->required()->check(CLI::ExistingFile);
  enc_cmd->add_option("--out", enc.out, "Output file")->required();
  enc_cmd->add_option("--key", enc.key, std::string("Secret key (falls back to $") + kKeyEnv + ")");
  enc_cmd->add_option("--mode", enc.mode, "auto, text or image")
      ->check(CLI::IsMember({"auto", "text", "image"}))
      ->capture_default_str();
  enc_cmd->add_option("--seed", enc.seed, "Seed for the decoy cells in text mode (reproducible, not secret)");

  CryptArgs dec;
  auto* dec_cmd = app.add_subcommand("decrypt", "Decrypt a ciphertext container or an encrypted PGM image");
  dec_cmd->add_option("--in", dec.in, "Input file")->required()->check(CLI::ExistingFile);
  dec_cmd->add_option("--out", dec.out, "Output file")->required();
  dec_cmd->add_option("--key", dec.key, std::string("Secret key (falls back to $") + kKeyEnv + ")");
  dec_cmd->add_option("--mode", dec.mode, "auto, text or image")
      ->check(CLI::IsMember({"auto", "text", "image"}))
      ->capture_default_str();

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Entropy and correlations of one image; pair metrics of two");
  analyze_cmd->add_option("files", analyze.files, "One or two PGM images")->required()->expected(1, 2);
  analyze_cmd->add_option("--seed", analyze.seed, "Seed for correlation sampling")->capture_default_str();
  analyze_cmd->add_option("--samples", analyze.samples, "Adjacent pairs sampled per direction")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100'000'000}))
      ->capture_default_str();
  analyze_cmd->add_option("--histogram", analyze.histogram, "Write the first image's 256-bin histogram here");

  PeriodArgs period_args;
  auto* period_cmd = app.add_subcommand("period", "Cat map periods and the bound table");
  auto* classical_opt = period_cmd->add_option("--classical", period_args.classical, "Period of the Arnold map mod N");
  auto* general_opt = period_cmd->add_option("--general", period_args.general, "Period of [[1,a],[b,1+ab]] mod N")
                          ->expected(3)
                          ->type_name("a b N");
  auto* table_opt = period_cmd->add_option("--table", period_args.table, "Bound table for N in [2, N_max] (JSON lines)");
  period_cmd->add_option("--cap", period_args.cap, "Iteration cap for generalized maps")->capture_default_str();
  period_cmd->add_option("--out", period_args.out, "Write the table here instead of stdout");
  classical_opt->excludes(general_opt, table_opt);
  general_opt->excludes(table_opt);

  LyapunovArgs lyap;
  auto* lyap_cmd = app.add_subcommand("lyapunov", "Lyapunov exponent of the logistic map");
  auto* sweep_opt =
      lyap_cmd->add_option("--sweep", lyap.sweep, "Sweep r over [r_min, r_max]")->expected(3)->type_name("r_min r_max step");
  auto* point_opt = lyap_cmd->add_option("--point", lyap.point, "Single estimate")->expected(2)->type_name("r x0");
  lyap_cmd->add_option("--x0", lyap.x0, "Initial condition for sweeps")->capture_default_str();
  lyap_cmd->add_option("--samples", lyap.samples, "Iterates averaged per estimate");
  lyap_cmd->add_option("--out", lyap.out, "Write the sweep CSV here instead of stdout");
  sweep_opt->excludes(point_opt);

  ScrambleArgs scramble;
  auto* scramble_cmd = app.add_subcommand("scramble", "Apply the classical cat map k times to a square PGM");
  scramble_cmd->add_option("--in", scramble.in, "Input PGM")->required()->check(CLI::ExistingFile);
  scramble_cmd->add_option("--out", scramble.out, "Output PGM")->required();
  scramble_cmd->add_option("--iterations,-k", scramble.iterations, "Iterations")->capture_default_str();

  AttackArgs attack_args;
  auto* attack_cmd = app.add_subcommand("attack", "Brute-force a cat-map scrambled image");
  attack_cmd->add_option("scrambled", attack_args.in, "Scrambled PGM")->required()->check(CLI::ExistingFile);
  attack_cmd->add_option("--truth", attack_args.truth, "Original image; exit 6 unless recovered exactly")
      ->check(CLI::ExistingFile);
  attack_cmd->add_option("--budget", attack_args.budget, "Iterations to try (default 3N)");
  attack_cmd->add_option("--out", attack_args.out, "Write the best candidate here");
  attack_cmd->add_option("--trace", attack_args.trace, "Write the score trace CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kFormat;
  }

  if (lyap_cmd->parsed() && sweep_opt->empty() && point_opt->empty()) {
    std::cerr << "lyapunov: one of --sweep or --point is required\n";
    return kFormat;
  }
  if (period_cmd->parsed() && classical_opt->empty() && general_opt->empty() && table_opt->empty()) {
    std::cerr << "period: one of --classical, --general or --table is required\n";
    return kFormat;
  }

  try {
    if (keygen_cmd->parsed()) return run_keygen(keygen);
    if (enc_cmd->parsed()) return run_encrypt(enc);
    if (dec_cmd->parsed()) return run_decrypt(dec);
    if (analyze_cmd->parsed()) return run_analyze(analyze);
    if (period_cmd->parsed()) return run_period(period_args);
    if (lyap_cmd->parsed()) return run_lyapunov(lyap);
    if (scramble_cmd->parsed()) return run_scramble(scramble);
    if (attack_cmd->parsed()) return run_attack(attack_args);
  } catch (const EntropyError& e) {
    std::cerr << "entropy failure: " << e.what() << '\n';
    return kEntropy;
  } catch (const IntegrityError& e) {
    std::cerr << "decryption integrity failure: " << e.what() << '\n';
    return kIntegrity;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return kFormat;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kFormat;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
