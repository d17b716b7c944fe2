#include "unitri/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace unitri::cli {

namespace {

constexpr int kMaxN = 40;

Field build_field(const JobSpec& job) { return job.field.build(); }

int require_n(const JobSpec& job) {
  if (!job.n) throw std::invalid_argument(job.command + ": --n is required");
  if (*job.n < 1 || *job.n > kMaxN)
    throw std::invalid_argument("n must lie in [1, " + std::to_string(kMaxN) + "], got " + std::to_string(*job.n));
  return *job.n;
}

int require_r(const JobSpec& job) {
  const int r = job.r.value_or(2);
  if (r < 1 || 6 * r + 1 > kMaxN) throw std::invalid_argument("r must lie in [1, 6], got " + std::to_string(r));
  return r;
}

Algebra build_algebra(const JobSpec& job, const Field& field) {
  const int n = require_n(job);
  if (!job.pattern) return Algebra::full(n, field);
  std::vector<Position> positions;
  for (const auto& [i, j] : *job.pattern) {
    if (i < 1 || j <= i || j > n)
      throw std::invalid_argument("pattern: (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") is not above the diagonal");
    positions.push_back({i, j});
  }
  Pattern pattern(n, positions);
  if (!pattern_is_closed(pattern)) throw std::invalid_argument("pattern is not closed under (i,j),(j,k) -> (i,k)");
  return Algebra::pattern(pattern, field);
}

Functional build_lambda_functional(const JobSpec& job, const Algebra& algebra) {
  return Functional::from_entries(algebra, lambda_entries(job.lambda, algebra));
}

Json header(const JobSpec& job, const char* status) {
  return Json{{"command", job.command}, {"status", status}, {"job", to_json(job)}};
}

CommandResult cmd_chain(const JobSpec& job) {
  const Field field = build_field(job);
  const Algebra algebra = build_algebra(job, field);
  const Functional lambda = build_lambda_functional(job, algebra);
  const ChainResult chain = chain_compute(lambda);
  Json out = header(job, "ok");
  out["result"] = chain_json(chain, algebra.n());
  return {out, kPass};
}

CommandResult cmd_exotic(const JobSpec& job) {
  const Field field = build_field(job);
  const int r = require_r(job);
  const int n = job.n.value_or(6 * r + 1);
  if (n < 6 * r + 1 || n > kMaxN)
    throw std::invalid_argument("exotic: n must lie in [6r+1, " + std::to_string(kMaxN) + "]");
  const ExoticReport rep = exotic_report(r, field, n, job.cap.value_or(kDefaultCap));
  const bool ok = rep.prerequisites_passed();
  Json out = header(job, ok ? "pass" : "fail");
  out["result"] = to_json(rep);
  return {out, ok ? kPass : kMismatch};
}

CommandResult cmd_verify(const JobSpec& job) {
  const Field field = build_field(job);
  const int r = require_r(job);
  const TechnicalReport rep = verify_technical(r, field);
  const bool ok = rep.passed();
  Json out = header(job, ok ? "pass" : "fail");
  out["result"] = to_json(rep);
  Json diff = Json::array();
  for (const auto& c : rep.comparisons)
    if (!c.equal) diff.push_back(c.name);
  out["mismatches"] = diff;
  return {out, ok ? kPass : kMismatch};
}

CommandResult cmd_kappa(const JobSpec& job) {
  const Field field = build_field(job);
  const int n = require_n(job);
  if (n < 2) throw std::invalid_argument("kappa: n must be at least 2");
  const KappaReport rep = kappa_analysis(n, field, job.cap.value_or(kDefaultCap));
  const bool ok = rep.consistent();
  Json out = header(job, ok ? "pass" : "fail");
  out["result"] = to_json(rep);
  return {out, ok ? kPass : kMismatch};
}

CommandResult cmd_orbit(const JobSpec& job) {
  const Field field = build_field(job);
  const Algebra algebra = build_algebra(job, field);
  const Functional lambda = build_lambda_functional(job, algebra);
  const OrbitKind kind = parse_orbit_kind(job.which.value_or("two-sided"));
  const auto orb = orbit(lambda, kind, job.cap.value_or(kDefaultCap));
  Json members = Json::array();
  for (const auto& f : orb) members.push_back(to_json(f));
  Json result{{"kind", to_string(kind)}, {"size", orb.size()}, {"members", members}};
  if (algebra.is_pattern() && is_quasi_monomial(lambda)) result["shape"] = to_json(shape(lambda));
  else result["shape"] = nullptr;
  Json out = header(job, "ok");
  out["result"] = result;
  return {out, kPass};
}

CommandResult cmd_table(const JobSpec& job) {
  const Field field = build_field(job);
  const Algebra algebra = build_algebra(job, field);
  const Functional lambda = build_lambda_functional(job, algebra);
  const std::uint64_t cap = job.cap.value_or(kDefaultCap);
  const std::string which = job.which.value_or("superchar");
  algebra.order(cap);
  std::optional<ClassFunction> table;
  if (which == "kirillov") {
    table = kirillov(lambda, cap);
  } else if (which == "superchar") {
    table = supercharacter(lambda, cap);
  } else if (which == "theta") {
    table = theta_lambda(lambda, cap);
  } else if (which == "xi") {
    XiResult res = xi(lambda, true, cap);
    if (!res.table) throw CapExceeded("xi table: group order exceeds the cap");
    table = std::move(res.table);
  } else {
    throw std::invalid_argument("table: --which must be kirillov, superchar, xi or theta");
  }
  Json result{{"which", which},
              {"degree", to_json(table->degree())},
              {"norm", to_json(inner_product(*table, *table))},
              {"field_of_values", to_json(field_of_values(*table))},
              {"table", to_json(*table)}};
  Json out = header(job, "ok");
  out["result"] = result;
  return {out, kPass};
}

Json error_object(int code, const std::string& kind, const std::string& message) {
  return Json{{"error", {{"code", code}, {"kind", kind}, {"message", message}}}};
}

template <class T>
std::optional<T> parse_json_flag(const std::string& flag, const std::string& text) {
  if (text.empty()) return std::nullopt;
  try {
    return Json::parse(text).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(flag + ": " + e.what());
  }
}

void write_output(const Json& doc, const std::optional<std::string>& path, std::ostream& out) {
  const std::string text = dump(doc);
  if (!path) {
    out << text;
    return;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file " + *path);
  f << text;
}

Json read_job_file(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read job file " + path);
    buf << f.rdbuf();
  }
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("job file: ") + e.what());
  }
}

}  // namespace

FieldSpec field_spec_for_order(long long q, std::optional<std::vector<int>> modulus) {
  if (q < 2) throw std::invalid_argument("q must be a prime power, got " + std::to_string(q));
  long long p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  long long rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw std::invalid_argument("q must be a prime power, got " + std::to_string(q));
  return FieldSpec{static_cast<int>(p), e, std::move(modulus)};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

CommandResult execute(const JobSpec& job) {
  if (job.command == "chain") return cmd_chain(job);
  if (job.command == "exotic") return cmd_exotic(job);
  if (job.command == "verify") return cmd_verify(job);
  if (job.command == "kappa") return cmd_kappa(job);
  if (job.command == "orbit") return cmd_orbit(job);
  if (job.command == "table") return cmd_table(job);
  throw std::invalid_argument("unknown command '" + job.command + "'");
}

CommandResult execute_checked(const JobSpec& job, std::ostream& err) {
  try {
    return execute(job);
  } catch (const CapExceeded& e) {
    err << dump(error_object(kCapExceeded, "cap_exceeded", e.what()));
    return {nullptr, kCapExceeded};
  } catch (const std::invalid_argument& e) {
    err << dump(error_object(kBadInput, "invalid_input", e.what()));
    return {nullptr, kBadInput};
  } catch (const std::domain_error& e) {
    err << dump(error_object(kBadInput, "invalid_input", e.what()));
    return {nullptr, kBadInput};
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact supercharacter, Kirillov and xi computations for algebra groups over F_q", "unitri"};
  app.require_subcommand(1);

  struct Flags {
    int n = 0;
    long long q = 2;
    int r = 2;
    std::string modulus, pattern, lambda, which, out, job;
    std::uint64_t cap = 0;
  } flags;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--q", flags.q, "field order, a prime power")->capture_default_str();
    sub->add_option("--modulus", flags.modulus, "modulus coefficients, low degree first, as JSON");
    sub->add_option("--cap", flags.cap, "enumeration cap");
    sub->add_option("--out", flags.out, "write JSON to this file");
  };
  auto add_matrix = [&](CLI::App* sub) {
    sub->add_option("--n", flags.n, "matrix size")->required();
    sub->add_option("--pattern", flags.pattern, "closed pattern as JSON [[i,j],...]");
    sub->add_option("--lambda", flags.lambda, "functional as JSON [[i,j,c],...]");
  };

  CLI::App* chain = app.add_subcommand("chain", "l/s chain of a functional");
  add_common(chain);
  add_matrix(chain);
  CLI::App* orbit_cmd = app.add_subcommand("orbit", "orbit of a functional");
  add_common(orbit_cmd);
  add_matrix(orbit_cmd);
  orbit_cmd->add_option("--which", flags.which, "left, right, two-sided or coadjoint");
  CLI::App* table = app.add_subcommand("table", "value table of a class function");
  add_common(table);
  add_matrix(table);
  table->add_option("--which", flags.which, "kirillov, superchar, xi or theta");
  CLI::App* exotic = app.add_subcommand("exotic", "report on the exotic functional");
  add_common(exotic);
  exotic->add_option("--r", flags.r, "block size r")->capture_default_str();
  exotic->add_option("--n", flags.n, "matrix size, at least 6r+1");
  CLI::App* verify = app.add_subcommand("verify", "closed-form chain against the computed chain");
  add_common(verify);
  verify->add_option("--r", flags.r, "block size r")->capture_default_str();
  CLI::App* kappa = app.add_subcommand("kappa", "analysis of the Toeplitz functional kappa");
  add_common(kappa);
  kappa->add_option("--n", flags.n, "matrix size")->required();
  CLI::App* run_cmd = app.add_subcommand("run", "run a JSON job file, or an array of jobs");
  run_cmd->add_option("--job", flags.job, "job file, or - for stdin")->required();
  run_cmd->add_option("--out", flags.out, "write JSON to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kBadInput;
  }

  const std::optional<std::string> out_path = flags.out.empty() ? std::nullopt : std::optional(flags.out);
  try {
    if (run_cmd->parsed()) {
      const Json doc = read_job_file(flags.job);
      if (doc.is_array()) {
        Json results = Json::array();
        int worst = kPass;
        for (const auto& item : doc) {
          const CommandResult res = execute_checked(job_from_json(item), err);
          worst = std::max(worst, res.exit_code);
          results.push_back(res.output.is_null() ? error_object(res.exit_code, "failed", "see diagnostics")
                                                 : res.output);
        }
        write_output(results, out_path, out);
        return worst;
      }
      const CommandResult res = execute_checked(job_from_json(doc), err);
      if (!res.output.is_null()) write_output(res.output, out_path, out);
      return res.exit_code;
    }

    CLI::App* sub = app.get_subcommands().front();
    auto given = [sub](const std::string& name) {
      const CLI::Option* opt = sub->get_option_no_throw(name);
      return opt != nullptr && opt->count() > 0;
    };
    JobSpec job;
    job.command = sub->get_name();
    job.field = field_spec_for_order(flags.q, parse_json_flag<std::vector<int>>("--modulus", flags.modulus));
    if (given("--n")) job.n = flags.n;
    if (given("--r")) job.r = flags.r;
    else if (job.command == "exotic" || job.command == "verify") job.r = flags.r;
    job.pattern = parse_json_flag<std::vector<std::array<int, 2>>>("--pattern", flags.pattern);
    job.lambda = parse_json_flag<std::vector<std::array<long long, 3>>>("--lambda", flags.lambda)
                     .value_or(std::vector<std::array<long long, 3>>{});
    if (!flags.which.empty()) job.which = flags.which;
    if (given("--cap")) job.cap = flags.cap;
    if (out_path) job.out = out_path;
    const CommandResult res = execute_checked(job, err);
    if (!res.output.is_null()) write_output(res.output, out_path, out);
    return res.exit_code;
  } catch (const std::invalid_argument& e) {
    err << dump(error_object(kBadInput, "invalid_input", e.what()));
    return kBadInput;
  }
}

}  // namespace unitri::cli
