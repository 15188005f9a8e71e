#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "bbs/crystal.hpp"
#include "bbs/error.hpp"
#include "bbs/kkr.hpp"
#include "bbs/lattice.hpp"
#include "bbs/state_text.hpp"
#include "bbs/verify.hpp"

namespace bbs::cli {

namespace {

std::int64_t parse_int(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::ParseError, fmt::format("bad {} '{}'", what, text));
}

IntVector parse_list(const std::string& text, const char* what) {
  IntVector out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) out.push_back(parse_int(token, what));
  return out;
}

std::string format_matrix(const IntMatrix& a) {
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<std::int64_t> row;
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(fmt::format("{}", fmt::join(row, ",")));
  }
  return fmt::format("{}", fmt::join(rows, ";"));
}

}  // namespace

ActionAngle parse_angle(const std::string& text) {
  ActionAngle a;
  bool has_mu = false, has_length = false, has_angle = false;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ';')) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, fmt::format("expected key=value in '{}'", field));
    const std::string key = field.substr(0, eq), value = field.substr(eq + 1);
    if (key == "mu") {
      a.parts = parse_list(value, "part");
      has_mu = true;
    } else if (key == "L") {
      a.length = parse_int(value, "system size");
      has_length = true;
    } else if (key == "I") {
      a.angle = parse_list(value, "angle");
      has_angle = true;
    } else {
      throw Error(ErrorCode::ParseError, fmt::format("unknown field '{}' in angle", key));
    }
  }
  if (!has_mu || !has_length || !has_angle) throw Error(ErrorCode::ParseError, "angle needs mu=, L= and I=");
  if (a.parts.size() != a.angle.size()) throw Error(ErrorCode::ParseError, "mu and I differ in length");
  return a;
}

std::int64_t parse_capacity(const std::string& text) {
  if (text == "inf") return kInfinity;
  const std::int64_t l = parse_int(text, "carrier capacity");
  if (l <= 0) throw Error(ErrorCode::ParseError, "carrier capacity must be positive");
  return l;
}

Schedule parse_schedule(const std::string& text) {
  Schedule schedule;
  if (text.empty()) return schedule;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, fmt::format("expected l:t, got '{}'", item));
    schedule.emplace_back(parse_capacity(item.substr(0, colon)), parse_int(item.substr(colon + 1), "time"));
  }
  return schedule;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periodic box-ball system: evolution, inverse scattering and theta-function solutions", "bbs"};
  app.require_subcommand(1);

  std::string state_text, capacity_text = "1", schedule_text, angle_text, out_path = "-", suite = "all";
  std::int64_t steps = 1, t_max = 70, max_length = 10;
  std::uint64_t seed = 0;
  double eps = 7.0;

  auto* evolve = app.add_subcommand("evolve", "Iterate the carrier evolution T_l");
  evolve->add_option("--state", state_text, "State, e.g. 1122.1^10")->required();
  evolve->add_option("--l", capacity_text, "Carrier capacity (integer or inf)");
  evolve->add_option("--t", steps, "Number of steps")->check(CLI::NonNegativeNumber);

  auto* scatter = app.add_subcommand("scatter", "Print rigged configuration and action-angle data");
  scatter->add_option("--state", state_text, "State")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Solve the initial value problem with the theta formula");
  auto* solve_state = solve_cmd->add_option("--state", state_text, "Initial state");
  solve_cmd->add_option("--schedule", schedule_text, "Comma separated l:t pairs")->needs(solve_state);
  auto* solve_angle = solve_cmd->add_option("--angle", angle_text, "Action-angle data mu=..;L=..;I=..");
  solve_state->excludes(solve_angle);
  solve_angle->excludes(solve_state);

  auto* soften = app.add_subcommand("soften", "Write the softened field u(k,t) as CSV");
  soften->add_option("--angle", angle_text, "Action-angle data mu=..;L=..;I=..")->required();
  soften->add_option("--eps", eps, "Temperature")->check(CLI::PositiveNumber);
  soften->add_option("--tmax", t_max, "Largest time")->check(CLI::NonNegativeNumber);
  soften->add_option("--out", out_path, "Output file, - for stdout");

  auto* verify = app.add_subcommand("verify", "Run self-check suites");
  verify->add_option("--suite", suite, "crystal|kkr|theta|scattering|tau|bethe|all");
  verify->add_option("--max-L", max_length, "Largest system size for exhaustive sweeps")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Seed for randomized checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (evolve->parsed()) {
      out << format_state(time_evolution(parse_capacity(capacity_text), parse_state(state_text), steps)) << "\n";
      return 0;
    }
    if (scatter->parsed()) {
      const State p = parse_state(state_text);
      require_admissible(p);
      const auto [d, highest] = decompose_to_highest(p);
      const RiggedConfiguration rc = kkr_forward(highest);
      out << format_rigged_configuration(rc);
      out << "[scattering]\n";
      out << "state=" << format_state(p) << "\n";
      out << "d=" << d << "\n";
      const ActionAngle a = direct_scattering(p);
      const BetheMatrix m = build_A(a.parts, a.length);
      out << fmt::format("I={}\n", fmt::join(a.angle, ","));
      out << fmt::format("vacancy={}\n", fmt::join(m.vacancies, ","));
      out << "A=" << format_matrix(m.a) << "\n";
      out << "detA=" << determinant(m.a) << "\n";
      return 0;
    }
    if (solve_cmd->parsed()) {
      if (!state_text.empty()) {
        out << format_state(solve_ivp(parse_state(state_text), parse_schedule(schedule_text))) << "\n";
      } else if (!angle_text.empty()) {
        out << format_state(state_from_angle(parse_angle(angle_text))) << "\n";
      } else {
        err << "solve needs --state or --angle\n";
        return 2;
      }
      return 0;
    }
    if (soften->parsed()) {
      const SoftGrid grid = soften_grid(parse_angle(angle_text), t_max, eps);
      if (out_path == "-") {
        write_soft_grid_csv(out, grid);
      } else {
        std::ofstream file(out_path);
        if (!file) {
          err << "cannot open " << out_path << "\n";
          return 2;
        }
        write_soft_grid_csv(file, grid);
      }
      return 0;
    }
    if (verify->parsed()) {
      bool ok = true;
      for (const SuiteReport& report : run_suites(suite, VerifyOptions{max_length, seed})) {
        out << fmt::format("{}: {} ({} checks)\n", report.name, report.ok() ? "PASS" : "FAIL", report.checks);
        for (const auto& failure : report.failures) out << "  " << failure << "\n";
        ok = ok && report.ok();
      }
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace bbs::cli
