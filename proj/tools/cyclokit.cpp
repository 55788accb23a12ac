#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cli_io.hpp"
#include "cyclokit/bench.hpp"
#include "cyclokit/cyclotomic.hpp"
#include "cyclokit/divisibility.hpp"
#include "cyclokit/ramanujan.hpp"
#include "cyclokit/verify.hpp"

using namespace cyclokit;
using cli::json;

namespace {

enum Exit { kOk = 0, kInternal = 1, kPrecondition = 2, kVerification = 3 };

struct Outcome {
  Exit code = kOk;
  json result = json::object();
};

std::string status_name(Exit code) {
  switch (code) {
    case kOk: return "ok";
    case kPrecondition: return "precondition_error";
    case kVerification: return "verification_failure";
    default: return "internal_error";
  }
}

int emit(const std::string& command, const json& args, const Outcome& out) {
  json env{{"command", command}, {"args", args}, {"status", status_name(out.code)}, {"result", out.result}};
  std::cout << env.dump() << std::endl;
  return out.code;
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) out.push_back(cli::parse_integer(tok).convert_to<std::int64_t>());
  return out;
}

Outcome cmd_phi(std::int64_t n, const std::string& algorithm) {
  if (n < 1) throw PreconditionError("phi: n must be at least 1, got " + std::to_string(n));
  Outcome out;
  if (algorithm != "all") {
    const auto a = parse_algorithm(algorithm);
    if (!a) throw PreconditionError("phi: unknown algorithm '" + algorithm + "'");
    if (!applicable(*a, n))
      throw PreconditionError("phi: algorithm '" + algorithm + "' needs square-free n, got " + std::to_string(n));
    const auto r = phi(n, *a);
    out.result = {{"n", n}, {"algorithm", algorithm}, {"degree", r.poly.degree()}, {"coefficients", cli::poly_json(r.poly)}};
    std::cerr << "Phi_" << n << " (" << algorithm << "): degree " << r.poly.degree() << "\n";
    return out;
  }
  const auto ref = phi_mobius(n);
  json runs = json::array();
  bool agree = true;
  for (auto a : {Algorithm::MobiusProduct, Algorithm::SquarefreeReduce, Algorithm::PrimeExtension,
                 Algorithm::ArnoldMonagan}) {
    if (!applicable(a, n)) continue;
    const bool same = phi(n, a).poly == ref.poly;
    agree = agree && same;
    runs.push_back({{"algorithm", std::string(to_string(a))}, {"agrees", same}});
  }
  out.result = {{"n", n},
                {"algorithm", "all"},
                {"degree", ref.poly.degree()},
                {"coefficients", cli::poly_json(ref.poly)},
                {"runs", runs},
                {"agree", agree}};
  if (!agree) out.code = kVerification;
  std::cerr << "Phi_" << n << ": " << runs.size() << " algorithms " << (agree ? "agree" : "DISAGREE") << "\n";
  return out;
}

Outcome cmd_psi(std::int64_t n) {
  const auto r = psi(n);
  std::cerr << "Psi_" << n << ": degree " << r.poly.degree() << "\n";
  return {kOk, {{"n", n}, {"degree", r.poly.degree()}, {"coefficients", cli::poly_json(r.poly)}}};
}

Outcome cmd_hstar(std::int64_t m, std::int64_t K) {
  if (K < 0) throw PreconditionError("hstar: K must be non-negative, got " + std::to_string(K));
  const auto t = hstar_table(m, static_cast<std::size_t>(K));
  std::cerr << "H_k over primitive " << m << "-th roots, k = 0.." << K << "\n";
  return {kOk, {{"m", m}, {"K", K}, {"values", cli::values_json(t.values)}}};
}

Outcome cmd_ramanujan(std::int64_t n, std::int64_t r) {
  const auto c = ramanujan_sum(n, r);
  std::cerr << "c_" << n << "(" << r << ") = " << c << "\n";
  return {kOk, {{"n", n}, {"r", r}, {"value", c}}};
}

Outcome cmd_toth(std::int64_t n) {
  if (n < 2) throw PreconditionError("toth: n must be at least 2, got " + std::to_string(n));
  const auto t = toth(n);
  const bool ok = t.divisible_by_criterion && t.divisible_by_division;
  std::cerr << "T_" << n << ": degree " << t.tau << ", divisible by Phi_" << n << ": " << (ok ? "yes" : "NO") << "\n";
  return {ok ? kOk : kVerification,
          {{"n", n},
           {"tau", t.tau},
           {"coefficients", cli::poly_json(t.poly)},
           {"divisible", ok},
           {"divisible_by_criterion", t.divisible_by_criterion},
           {"divisible_by_division", t.divisible_by_division}}};
}

struct DividesArgs {
  std::string poly;
  bool descending = false;
  std::int64_t cyclotomic = 0;
  std::int64_t zn = 0;
  std::int64_t phi_p = 0;
  std::int64_t s = 0;
  std::vector<std::string> zn_eta;
  bool full_h_range = false;
  bool no_fast_path = false;
};

Outcome cmd_divides(const DividesArgs& a) {
  const auto P = cli::parse_poly(a.poly, a.descending);
  const int chosen = (a.cyclotomic != 0) + (a.zn != 0) + (a.phi_p != 0) + !a.zn_eta.empty();
  if (chosen != 1) throw PreconditionError("divides: give exactly one of --cyclotomic, --zn, --phi-p, --zn-eta");
  Outcome out;
  bool verdict = false;
  if (a.cyclotomic != 0) {
    const auto r = divides_cyclotomic(P, a.cyclotomic, {!a.no_fast_path, a.full_h_range});
    verdict = r.verdict;
    out.result = cli::divisibility_json(r);
  } else if (a.zn != 0) {
    const auto r = divides_zn_minus_1(P, a.zn);
    verdict = r.verdict;
    out.result = cli::divisibility_json(r);
  } else if (a.phi_p != 0) {
    if (a.s == 0) throw PreconditionError("divides: --phi-p needs --s");
    const auto r = divides_phi_p_zs(P, a.phi_p, a.s);
    verdict = r.verdict;
    out.result = cli::divisibility_json(r);
  } else {
    const auto n = cli::parse_integer(a.zn_eta.at(0)).convert_to<std::int64_t>();
    const auto eta = cli::parse_eta(a.zn_eta.at(1));
    const auto r = std::holds_alternative<RootOfUnity>(eta) ? divides_zn_minus_eta(P, n, std::get<RootOfUnity>(eta))
                                                            : divides_zn_minus_eta(P, n, std::get<Complex>(eta));
    verdict = r.verdict;
    out.result = cli::divisibility_json(r);
  }
  std::cerr << "divisible: " << (verdict ? "yes" : "no") << "\n";
  return out;
}

Outcome cmd_verify(const std::string& suite_name, std::int64_t max_n, unsigned jobs, bool failures_only) {
  const auto suite = parse_suite(suite_name);
  if (!suite) throw PreconditionError("verify: unknown suite '" + suite_name + "'");
  json failures = json::array();
  const auto summary = run_suite(*suite, max_n, jobs, [&](const IdentityReport& r) {
    if (!r.pass) failures.push_back(cli::report_json(r));
    if (!failures_only || !r.pass) std::cout << cli::report_json(r).dump() << "\n";
  });
  std::cout.flush();
  std::cerr << "verify " << suite_name << " up to " << max_n << ": " << summary.reports << " reports, "
            << summary.failures << " failures\n";
  return {summary.failures == 0 ? kOk : kVerification,
          {{"suite", suite_name}, {"max_n", max_n}, {"reports", summary.reports}, {"failures", failures}}};
}

struct BenchArgs {
  std::int64_t max_degree = 512;
  std::int64_t points = 16;
  std::string degrees;
  std::string moduli = "6,12,30,105";
  std::int64_t trials = 10;
  std::uint64_t seed = 1;
  bool seed_given = false;
  std::string csv;
};

Outcome cmd_bench(BenchArgs a) {
  BenchConfig cfg;
  cfg.degrees = a.degrees.empty() ? degree_grid(a.max_degree, a.points) : parse_int_list(a.degrees);
  cfg.moduli = parse_int_list(a.moduli);
  cfg.trials = a.trials;
  cfg.seed = a.seed;
  if (!a.seed_given) {
    if (const char* env = std::getenv("CYCLOKIT_SEED")) cfg.seed = std::stoull(env);
  }
  if (cfg.trials < 1) throw PreconditionError("bench: trials must be positive");
  const auto records = run_bench(cfg);
  const double agreement = verdict_agreement(records);
  json fits = json::array();
  for (auto N : cfg.moduli) {
    std::size_t points = 0;
    for (auto d : cfg.degrees) points += totient(N) <= d;
    if (points < 2) continue;
    const auto f = op_count_fit(records, N);
    fits.push_back({{"N", N}, {"slope", f.slope}, {"intercept", f.intercept}, {"r_squared", f.r_squared}});
  }
  json result{{"seed", cfg.seed}, {"records", records.size()}, {"verdict_agreement", agreement}, {"op_count_fits", fits}};
  if (!a.csv.empty()) {
    std::ofstream os(a.csv);
    if (!os) throw PreconditionError("bench: cannot write " + a.csv);
    write_csv(os, records);
    result["csv"] = a.csv;
  } else {
    json rows = json::array();
    for (const auto& r : records) rows.push_back(cli::bench_record_json(r));
    result["rows"] = rows;
  }
  std::cerr << "bench: " << records.size() << " records, verdict agreement " << agreement * 100.0 << "%\n";
  return {agreement == 1.0 ? kOk : kVerification, result};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclotomic polynomials, divisibility tests and identity checks"};
  app.require_subcommand(1);

  std::string command;
  json args = json::object();
  std::function<Outcome()> run;

  std::int64_t n = 0, r = 0, m = 0, K = 0;
  std::string algorithm = "mobius";
  auto* phi_cmd = app.add_subcommand("phi", "cyclotomic polynomial Phi_n, ascending coefficients");
  phi_cmd->add_option("n", n)->required();
  phi_cmd->add_option("--algorithm", algorithm, "mobius, extension, am, reduce or all")->capture_default_str();
  phi_cmd->callback([&] {
    command = "phi";
    args = {{"n", n}, {"algorithm", algorithm}};
    run = [&] { return cmd_phi(n, algorithm); };
  });

  auto* psi_cmd = app.add_subcommand("psi", "inverse cyclotomic polynomial (z^n - 1) / Phi_n");
  psi_cmd->add_option("n", n)->required();
  psi_cmd->callback([&] {
    command = "psi";
    args = {{"n", n}};
    run = [&] { return cmd_psi(n); };
  });

  auto* hstar_cmd = app.add_subcommand("hstar", "H_0..H_K over the primitive m-th roots of unity");
  hstar_cmd->add_option("m", m)->required();
  hstar_cmd->add_option("K", K)->required();
  hstar_cmd->callback([&] {
    command = "hstar";
    args = {{"m", m}, {"K", K}};
    run = [&] { return cmd_hstar(m, K); };
  });

  auto* ram_cmd = app.add_subcommand("ramanujan", "Ramanujan sum c_n(r)");
  ram_cmd->add_option("n", n)->required();
  ram_cmd->add_option("r", r)->required();
  ram_cmd->callback([&] {
    command = "ramanujan";
    args = {{"n", n}, {"r", r}};
    run = [&] { return cmd_ramanujan(n, r); };
  });

  auto* toth_cmd = app.add_subcommand("toth", "Toth polynomial T_n and its divisibility by Phi_n");
  toth_cmd->add_option("n", n)->required();
  toth_cmd->callback([&] {
    command = "toth";
    args = {{"n", n}};
    run = [&] { return cmd_toth(n); };
  });

  DividesArgs da;
  auto* div_cmd = app.add_subcommand("divides", "divisibility test from coefficient sums");
  div_cmd->add_option("--poly", da.poly, "comma list, JSON array, or a file holding either")->required();
  div_cmd->add_flag("--descending", da.descending, "coefficients given from the leading one down");
  div_cmd->add_option("--cyclotomic", da.cyclotomic, "test Phi_N");
  div_cmd->add_option("--zn", da.zn, "test z^n - 1");
  div_cmd->add_option("--phi-p", da.phi_p, "test Phi_p(z^s), with --s");
  div_cmd->add_option("--s", da.s);
  div_cmd->add_option("--zn-eta", da.zn_eta, "test z^n - eta: n and eta as 're', 're,im' or 'zeta:k:j'")
      ->expected(2);
  div_cmd->add_flag("--full-h-range", da.full_h_range, "check every h in [0, N) for even N too");
  div_cmd->add_flag("--no-fast-path", da.no_fast_path, "always accumulate residue classes");
  div_cmd->callback([&] {
    command = "divides";
    args = {{"poly", da.poly}, {"descending", da.descending}};
    if (da.cyclotomic) args["cyclotomic"] = da.cyclotomic;
    if (da.zn) args["zn"] = da.zn;
    if (da.phi_p) {
      args["phi_p"] = da.phi_p;
      args["s"] = da.s;
    }
    if (!da.zn_eta.empty()) args["zn_eta"] = da.zn_eta;
    run = [&] { return cmd_divides(da); };
  });

  std::string suite = "all";
  std::int64_t max_n = 60;
  unsigned jobs = 1;
  bool failures_only = false;
  auto* verify_cmd = app.add_subcommand("verify", "sweep identities over 1..max-n; one JSON report per line");
  verify_cmd->add_option("--suite", suite, "ramanujan, symmetric, coefficients or all")->capture_default_str();
  verify_cmd->add_option("--max-n", max_n)->capture_default_str();
  verify_cmd->add_option("--jobs", jobs)->capture_default_str();
  verify_cmd->add_flag("--failures-only", failures_only, "print failing reports only");
  verify_cmd->callback([&] {
    command = "verify";
    args = {{"suite", suite}, {"max_n", max_n}, {"jobs", jobs}};
    run = [&] { return cmd_verify(suite, max_n, jobs, failures_only); };
  });

  BenchArgs ba;
  auto* bench_cmd = app.add_subcommand("bench", "coefficient sums against exact division");
  bench_cmd->add_option("--max-degree", ba.max_degree)->capture_default_str();
  bench_cmd->add_option("--points", ba.points)->capture_default_str();
  bench_cmd->add_option("--degrees", ba.degrees, "explicit comma list; overrides --max-degree/--points");
  bench_cmd->add_option("--moduli", ba.moduli)->capture_default_str();
  bench_cmd->add_option("--trials", ba.trials)->capture_default_str();
  auto* seed_opt = bench_cmd->add_option("--seed", ba.seed, "default 1, or CYCLOKIT_SEED");
  bench_cmd->add_option("--csv", ba.csv, "write records here instead of into the JSON result");
  bench_cmd->callback([&] {
    command = "bench";
    ba.seed_given = seed_opt->count() > 0;
    args = {{"max_degree", ba.max_degree}, {"points", ba.points}, {"moduli", ba.moduli}, {"trials", ba.trials}};
    run = [&] { return cmd_bench(ba); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kPrecondition;
  }

  try {
    return emit(command, args, run());
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return emit(command, args, {kPrecondition, {{"error", e.what()}}});
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return emit(command, args, {kInternal, {{"error", e.what()}}});
  }
}
