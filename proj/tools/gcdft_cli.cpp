// gcdft: command-line front end for the gcd Fourier transform library.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure,
// 3 internal inconsistency.

#include "gcdft/gcdft.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using gcdft::BigInt;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitInconsistent = 3;

BigInt positive(const std::string& text, const char* what) {
  BigInt v = gcdft::parse_bigint(text);
  if (v < 1) throw gcdft::DomainError(std::string(what) + " must be a positive integer, got " + text);
  return v;
}

std::string join_paths(const std::set<gcdft::EvaluationPath>& paths, const char* sep) {
  std::string out;
  for (auto p : paths) {
    if (!out.empty()) out += sep;
    out += gcdft::to_string(p);
  }
  return out;
}

int cmd_dft(const std::string& f_name, const std::string& n_text, const std::string& m_text, bool verify,
            gcdft::TableFormat format) {
  const auto f = gcdft::catalog::lookup(f_name);
  const BigInt n = positive(n_text, "--n");
  const BigInt m = gcdft::parse_bigint(m_text);
  const auto mode = verify ? gcdft::DispatchMode::Verify : gcdft::DispatchMode::Fast;
  const gcdft::DftReport r = gcdft::dft_dispatch(f, n, m, mode);
  const std::string value = gcdft::to_string(r.value);

  switch (format) {
    case gcdft::TableFormat::Text:
      if (!verify) {
        std::cout << value << "\n";
        break;
      }
      std::cout << "f = " << r.f_name << ", n = " << n << " = " << gcdft::to_string(r.n) << ", m = " << r.m_reduced
                << "\n";
      std::cout << "value        " << value << "\n";
      if (r.closed_form) std::cout << "closed-form  " << gcdft::to_string(*r.closed_form) << "\n";
      if (r.convolution) std::cout << "convolution  " << gcdft::to_string(*r.convolution) << "\n";
      if (r.brute) std::cout << "brute-float  " << r.brute->real() << " " << r.brute->imag() << "i\n";
      std::cout << "agreeing     " << join_paths(r.paths_agreeing, ", ") << "\n";
      break;
    case gcdft::TableFormat::Csv:
      std::cout << "f,n,m,value,paths_agreeing\n"
                << r.f_name << "," << n << "," << r.m_reduced << "," << value << "," << join_paths(r.paths_agreeing, ";")
                << "\n";
      break;
    case gcdft::TableFormat::Json: {
      nlohmann::json j{{"f", r.f_name},
                       {"n", n.str()},
                       {"m", r.m_reduced.str()},
                       {"value", value},
                       {"source", std::string(gcdft::to_string(r.source))}};
      j["paths_agreeing"] = nlohmann::json::array();
      for (auto p : r.paths_agreeing) j["paths_agreeing"].push_back(std::string(gcdft::to_string(p)));
      if (r.closed_form) j["closed_form"] = gcdft::to_string(*r.closed_form);
      if (r.convolution) j["convolution"] = gcdft::to_string(*r.convolution);
      if (r.brute) j["brute_float"] = {r.brute->real(), r.brute->imag()};
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
  if (verify && r.brute && !r.paths_agreeing.contains(gcdft::EvaluationPath::BruteFloat)) return kExitVerifyFailed;
  return kExitOk;
}

int cmd_table(const std::string& f_name, const std::string& n_text, bool compress, gcdft::TableFormat format) {
  const auto f = gcdft::catalog::lookup(f_name);
  const auto n = gcdft::factorize(positive(n_text, "--n"));
  const auto rows = gcdft::build_table(f, n, compress);
  std::cout << gcdft::render_table(f, n, rows, format);
  return kExitOk;
}

int cmd_verify(const gcdft::SweepConfig& config, gcdft::TableFormat format) {
  const gcdft::SweepReport report = gcdft::run_sweep(config);
  switch (format) {
    case gcdft::TableFormat::Text: {
      std::cout << "checks: " << report.checks << ", failures: " << report.failures.size() << "\n";
      for (const auto& [identity, count] : report.checks_by_identity) {
        std::cout << "  " << identity << ": " << count << "\n";
      }
      if (!report.failures.empty()) {
        const auto& first = report.failures.front();
        std::cout << "first counterexample: " << first.identity << " f=" << first.f << " n=" << first.n
                  << " m=" << first.m << " expected " << first.expected << " got " << first.got << "\n";
      }
      break;
    }
    case gcdft::TableFormat::Csv:
      std::cout << "identity,f,n,m,expected,got\n";
      for (const auto& x : report.failures) {
        std::cout << x.identity << "," << x.f << "," << x.n << "," << x.m << "," << x.expected << "," << x.got << "\n";
      }
      break;
    case gcdft::TableFormat::Json: {
      nlohmann::json j{{"checks", report.checks}, {"failure_count", report.failures.size()}};
      j["checks_by_identity"] = report.checks_by_identity;
      j["failures"] = nlohmann::json::array();
      for (const auto& x : report.failures) {
        j["failures"].push_back({{"identity", x.identity},
                                 {"f", x.f},
                                 {"n", x.n.str()},
                                 {"m", x.m.str()},
                                 {"expected", x.expected},
                                 {"got", x.got}});
      }
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_bench(const std::vector<std::string>& n_list, const std::string& f_name, unsigned repetitions,
              gcdft::TableFormat format) {
  const auto f = gcdft::catalog::lookup(f_name);
  std::vector<gcdft::BenchRow> rows;
  for (const auto& text : n_list) rows.push_back(gcdft::bench_one(f, positive(text, "--n"), repetitions));
  if (format == gcdft::TableFormat::Json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json row{{"n", r.n.str()}, {"f", r.f}, {"repetitions", r.repetitions},
                         {"closed_median_ns", r.closed_median_ns}};
      if (r.brute_median_ns) row["brute_median_ns"] = *r.brute_median_ns;
      if (r.speedup) row["speedup"] = *r.speedup;
      if (r.spot_check) row["spot_check"] = *r.spot_check;
      j.push_back(row);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    // CSV is the bench's native text form.
    std::cout << gcdft::bench_csv_header() << "\n";
    for (const auto& r : rows) std::cout << gcdft::to_csv(r) << "\n";
  }
  for (const auto& r : rows) {
    if (r.spot_check && !*r.spot_check) return kExitInconsistent;
  }
  return kExitOk;
}

int cmd_ramanujan(const std::string& n_text, const std::string& m_text, gcdft::TableFormat format) {
  const BigInt n = positive(n_text, "--n");
  const BigInt m = gcdft::parse_bigint(m_text);
  const auto nf = gcdft::factorize(n);
  const BigInt sterneck = gcdft::ramanujan_von_sterneck(nf, m);
  const BigInt kluyver = gcdft::ramanujan_kluyver(nf, m);
  std::optional<std::complex<double>> definition;
  if (n <= gcdft::kOracleMaxN) definition = gcdft::ramanujan_definition({n, m});

  switch (format) {
    case gcdft::TableFormat::Text:
      std::cout << "c_" << n << "(" << m << ")\n";
      std::cout << "von-sterneck  " << sterneck << "\n";
      std::cout << "divisor-sum   " << kluyver << "\n";
      if (definition) std::cout << "definition    " << definition->real() << " " << definition->imag() << "i\n";
      break;
    case gcdft::TableFormat::Csv:
      std::cout << "n,m,von_sterneck,divisor_sum,definition_real,definition_imag\n"
                << n << "," << m << "," << sterneck << "," << kluyver << ","
                << (definition ? std::to_string(definition->real()) : "NA") << ","
                << (definition ? std::to_string(definition->imag()) : "NA") << "\n";
      break;
    case gcdft::TableFormat::Json: {
      nlohmann::json j{{"n", n.str()}, {"m", m.str()}, {"von_sterneck", sterneck.str()}, {"divisor_sum", kluyver.str()}};
      if (definition) j["definition"] = {definition->real(), definition->imag()};
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
  if (sterneck != kluyver) return kExitInconsistent;
  return kExitOk;
}

int cmd_factor(const std::string& n_text, gcdft::TableFormat format) {
  const auto nf = gcdft::factorize(positive(n_text, "--n"));
  switch (format) {
    case gcdft::TableFormat::Text:
      std::cout << nf.value() << " = " << gcdft::to_string(nf) << "\n";
      break;
    case gcdft::TableFormat::Csv:
      std::cout << "prime,exponent\n";
      for (const auto& [p, e] : nf.factors()) std::cout << p << "," << e << "\n";
      break;
    case gcdft::TableFormat::Json: {
      nlohmann::json j{{"n", nf.value().str()}, {"factors", nlohmann::json::array()}};
      for (const auto& [p, e] : nf.factors()) j["factors"].push_back({{"prime", p.str()}, {"exponent", e}});
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Fourier transform of functions of the gcd, by prime-factor closed forms"};
  app.require_subcommand(1);

  std::string format_name = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  };

  std::string f_name = "id";
  std::string n_text;
  std::string m_text = "1";
  bool verify_paths = false;
  bool compress = false;

  auto* dft = app.add_subcommand("dft", "Evaluate the transform at one (n, m)");
  dft->add_option("--f", f_name, "Catalog function (id, id_<k>, phi, mu, tau, sigma, J_<k>, lambda, one, eps, S[...])");
  dft->add_option("--n", n_text, "Transform length n >= 1")->required();
  dft->add_option("--m", m_text, "Order m (any integer; reduced mod n)");
  dft->add_flag("--verify", verify_paths, "Run every evaluation path and report agreement");
  add_format(dft);

  auto* table = app.add_subcommand("table", "Tabulate the transform over m");
  table->add_option("--f", f_name, "Catalog function");
  table->add_option("--n", n_text, "Transform length n >= 1")->required();
  table->add_flag("--compress", compress, "One row per gcd(m, n) class");
  add_format(table);

  gcdft::SweepConfig sweep;
  sweep.threads = std::max(1U, std::thread::hardware_concurrency());
  std::string policy = "all";
  std::vector<std::string> functions{"id"};
  auto* verify = app.add_subcommand("verify", "Sweep identities between evaluation paths");
  verify->add_option("--n-max", sweep.n_max, "Largest n swept")->check(CLI::PositiveNumber);
  verify->add_option("--m-policy", policy, "Which m per n")->check(CLI::IsMember({"all", "divisors", "sample"}));
  verify->add_option("--samples", sweep.sample_count, "m values per n for --m-policy sample")->check(CLI::PositiveNumber);
  verify->add_option("--seed", sweep.seed, "Seed for sampled m");
  verify->add_option("--functions", functions, "Catalog functions")->delimiter(',');
  verify->add_option("--tolerance", sweep.tolerance_float, "Float oracle tolerance")->check(CLI::NonNegativeNumber);
  verify->add_option("--threads", sweep.threads, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--inject-fault", sweep.inject_fault, "Corrupt the closed-form path (harness self-test)");
  add_format(verify);

  std::vector<std::string> n_list;
  unsigned repetitions = 5;
  auto* bench = app.add_subcommand("bench", "Time brute force against factorization + closed form");
  bench->add_option("--n", n_list, "Values of n")->required()->delimiter(',');
  bench->add_option("--f", f_name, "Catalog function");
  bench->add_option("--repetitions", repetitions, "Timed runs per path")->check(CLI::PositiveNumber);
  add_format(bench);

  auto* ramanujan = app.add_subcommand("ramanujan", "Ramanujan sum c_n(m) by all three evaluators");
  ramanujan->add_option("--n", n_text, "n >= 1")->required();
  ramanujan->add_option("--m", m_text, "m (any integer)");
  add_format(ramanujan);

  auto* factor = app.add_subcommand("factor", "Prime factorization");
  factor->add_option("--n", n_text, "n >= 1")->required();
  add_format(factor);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const auto format = gcdft::parse_table_format(format_name);
    if (*dft) return cmd_dft(f_name, n_text, m_text, verify_paths, format);
    if (*table) return cmd_table(f_name, n_text, compress, format);
    if (*verify) {
      sweep.functions = functions;
      sweep.m_policy = policy == "all"        ? gcdft::OrderPolicy::All
                       : policy == "divisors" ? gcdft::OrderPolicy::Divisors
                                              : gcdft::OrderPolicy::Sample;
      return cmd_verify(sweep, format);
    }
    if (*bench) return cmd_bench(n_list, f_name, repetitions, format);
    if (*ramanujan) return cmd_ramanujan(n_text, m_text, format);
    if (*factor) return cmd_factor(n_text, format);
  } catch (const gcdft::InconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const gcdft::UndefinedValueError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gcdft::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gcdft::OracleScaleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
