#include "bbs/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "bbs/bethe.hpp"
#include "bbs/error.hpp"
#include "bbs/scattering.hpp"
#include "bbs/tau.hpp"
#include "bbs/theta.hpp"

namespace bbs {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { report_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++report_.checks;
    if (!ok && report_.failures.size() < 20) report_.failures.push_back(what);
  }
  SuiteReport done() { return std::move(report_); }

 private:
  SuiteReport report_;
};

std::int64_t largest_part(const State& p) {
  const auto parts = kkr_forward(decompose_to_highest(p).highest).parts;
  return parts.empty() ? 0 : parts.back();
}

void distinct_partitions(std::int64_t budget, std::int64_t min_part, IntVector& current, std::vector<IntVector>& out) {
  out.push_back(current);
  for (std::int64_t part = min_part; part <= budget; ++part) {
    current.push_back(part);
    distinct_partitions(budget - part, part + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<State> admissible_states(std::int64_t length) {
  std::vector<State> out;
  if (length <= 0 || length > 30) throw Error(ErrorCode::CapExceeded, "admissible_states supports 1 <= L <= 30");
  const auto n = static_cast<std::size_t>(length);
  for (std::size_t word = 0; word < (std::size_t{1} << n); ++word) {
    if (2 * static_cast<std::size_t>(__builtin_popcountll(word)) > n) continue;
    out.push_back(basis_state(word, n));
  }
  return out;
}

std::vector<IntVector> distinct_part_contents(std::int64_t length) {
  std::vector<IntVector> out;
  IntVector current;
  distinct_partitions(length / 2, 1, current, out);
  return out;
}

RiggedConfiguration random_rigged_configuration(std::mt19937_64& rng, std::int64_t length) {
  const std::int64_t balls = std::uniform_int_distribution<std::int64_t>(0, length / 2)(rng);
  IntVector parts;
  for (std::int64_t remaining = balls; remaining > 0;) {
    const std::int64_t part = std::uniform_int_distribution<std::int64_t>(1, remaining)(rng);
    parts.push_back(part);
    remaining -= part;
  }
  std::sort(parts.begin(), parts.end());
  const IntVector p = vacancy_vector(parts, length);
  IntVector riggings;
  for (auto vac : p) riggings.push_back(std::uniform_int_distribution<std::int64_t>(0, vac)(rng));
  return RiggedConfiguration::make(length, parts, riggings);
}

SuiteReport verify_crystal(const VerifyOptions& opts) {
  Recorder rec("crystal");
  for (std::int64_t l = 1; l <= 6; ++l) {
    std::set<std::pair<Letter, std::int64_t>> images;
    for (std::int64_t x2 = 0; x2 <= l; ++x2) {
      for (Letter b : {Letter::Empty, Letter::Ball}) {
        auto [out, c] = apply_r(Carrier{l, l - x2, x2}, b);
        images.insert({out, c.balls});
      }
    }
    rec.check(images.size() == static_cast<std::size_t>(2 * (l + 1)), fmt::format("R not injective for l = {}", l));
  }
  for (std::int64_t length = 1; length <= std::min<std::int64_t>(opts.max_length, 8); ++length) {
    for (const State& p : admissible_states(length)) {
      rec.check(time_evolution(1, p, length) == p, "T_1^L != id on " + p.to_string());
      for (std::int64_t l = 1; l <= 4; ++l) {
        const State tl = time_evolution(l, p);
        rec.check(ball_count(tl) == ball_count(p), fmt::format("T_{} changes M on {}", l, p.to_string()));
        for (std::int64_t k = 1; k < l; ++k) {
          rec.check(time_evolution(l, time_evolution(k, p)) == time_evolution(k, tl),
                    fmt::format("T_{} T_{} != T_{} T_{} on {}", l, k, k, l, p.to_string()));
        }
      }
      const std::int64_t top = std::max<std::int64_t>(largest_part(p), 1);
      const State reference = time_evolution(top, p);
      for (std::int64_t l = top + 1; l <= top + 3; ++l) {
        rec.check(time_evolution(l, p) == reference, fmt::format("T_{} != T_(i_g) on {}", l, p.to_string()));
      }
    }
  }
  return rec.done();
}

SuiteReport verify_kkr(const VerifyOptions& opts) {
  Recorder rec("kkr");
  std::mt19937_64 rng(opts.seed);
  for (std::int64_t length = 1; length <= opts.max_length; ++length) {
    for (const State& p : admissible_states(length)) {
      if (is_highest(p)) {
        const RiggedConfiguration rc = kkr_forward(p);
        rec.check(kkr_inverse(rc) == p, "phi^-1 phi != id on " + p.to_string());
        rec.check(rc.ball_count() == static_cast<std::int64_t>(ball_count(p)), "|mu| != M on " + p.to_string());
        rec.check(kkr_forward(p, TieBreak::Bottommost) == rc, "tie-break changes phi on " + p.to_string());
      }
      const IntVector mu = kkr_forward(decompose_to_highest(p).highest).parts;
      for (std::int64_t l = 1; l <= 4; ++l) {
        rec.check(kkr_forward(decompose_to_highest(time_evolution(l, p)).highest).parts == mu,
                  fmt::format("T_{} changes mu on {}", l, p.to_string()));
      }
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    const auto length = std::uniform_int_distribution<std::int64_t>(1, std::max<std::int64_t>(opts.max_length, 1))(rng);
    const RiggedConfiguration rc = random_rigged_configuration(rng, length);
    rec.check(kkr_forward(kkr_inverse(rc)) == rc, "phi phi^-1 != id on\n" + format_rigged_configuration(rc));
  }
  for (int trial = 0; trial < 200; ++trial) {
    const auto k = std::uniform_int_distribution<std::int64_t>(1, 10)(rng);
    const auto l = std::uniform_int_distribution<std::int64_t>(1, 10)(rng);
    const RiggedConfiguration a = random_rigged_configuration(rng, k);
    const RiggedConfiguration b = random_rigged_configuration(rng, l);
    std::vector<Letter> joined = kkr_inverse(a).letters();
    const auto tail = kkr_inverse(b).letters();
    joined.insert(joined.end(), tail.begin(), tail.end());
    rec.check(concat_rc(a, b) == kkr_forward(State(joined)), "concatenation rule mismatch");
  }
  return rec.done();
}

SuiteReport verify_theta(const VerifyOptions& opts) {
  Recorder rec("theta");
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::int64_t> coord(-80, 80), coeff(-2, 2);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto length = std::uniform_int_distribution<std::int64_t>(2, 20)(rng);
    auto contents = distinct_part_contents(length);
    std::erase_if(contents, [](const IntVector& mu) { return mu.empty() || mu.size() > 3; });
    const IntVector& mu = contents[std::uniform_int_distribution<std::size_t>(0, contents.size() - 1)(rng)];
    const BetheMatrix m = build_A(mu, length);
    HalfIntVector z;
    IntVector c;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      z.doubled.push_back(coord(rng));
      c.push_back(coeff(rng));
    }
    const IntVector v = m.a * c;
    HalfIntVector shifted = z;
    for (std::size_t i = 0; i < v.size(); ++i) shifted.doubled[i] += 2 * v[i];
    // v^T A^{-1} (z + v/2) = c^T z + c^T A c / 2
    std::int64_t expected = 0;
    for (std::size_t i = 0; i < c.size(); ++i) expected += c[i] * z.doubled[i] + c[i] * v[i];
    const HalfInt lhs = ud_theta(m, shifted) - ud_theta(m, z);
    rec.check(lhs.doubled == expected, "quasi-periodicity fails");
    HalfIntVector negated = z;
    for (auto& x : negated.doubled) x = -x;
    rec.check(ud_theta(m, negated) == ud_theta(m, z), "Theta not even");
  }
  return rec.done();
}

SuiteReport verify_scattering(const VerifyOptions& opts) {
  Recorder rec("scattering");
  for (std::int64_t length = 1; length <= opts.max_length; ++length) {
    std::map<IntVector, std::set<IntVector>> classes;
    std::map<IntVector, std::size_t> sizes;
    for (const State& p : admissible_states(length)) {
      const IntVector mu = kkr_forward(decompose_to_highest(p).highest).parts;
      if (std::adjacent_find(mu.begin(), mu.end()) != mu.end()) continue;
      const ActionAngle a = direct_scattering(p);
      const IntMatrix h = hermite_lower(build_A(mu, length).a);
      classes[mu].insert(reduce_mod_lattice(h, a.angle));
      ++sizes[mu];
      for (std::int64_t l = 1; l <= 4; ++l) {
        rec.check(angle_equal_mod_gamma(direct_scattering(time_evolution(l, p)), evolve_angle(a, l, 1)),
                  fmt::format("Phi T_{} != T_{} Phi on {}", l, l, p.to_string()));
      }
      rec.check(inverse_scattering(a) == p, "Phi^-1 Phi != id on " + p.to_string());
    }
    for (const auto& [mu, angles] : classes) {
      const std::int64_t det = determinant(build_A(mu, length).a);
      rec.check(angles.size() == sizes[mu] && static_cast<std::int64_t>(sizes[mu]) == det,
                fmt::format("Phi not bijective for mu = {{{}}}, L = {}", fmt::join(mu, ","), length));
    }
  }
  return rec.done();
}

SuiteReport verify_tau(const VerifyOptions& opts) {
  Recorder rec("tau");
  std::mt19937_64 rng(opts.seed);
  for (std::int64_t length = 1; length <= opts.max_length; ++length) {
    for (const State& p : admissible_states(length)) {
      const IntVector mu = kkr_forward(decompose_to_highest(p).highest).parts;
      if (std::adjacent_find(mu.begin(), mu.end()) != mu.end()) continue;
      for (std::int64_t l = 1; l <= 4; ++l) {
        State direct = p;
        for (std::int64_t t = 0; t <= 3; ++t) {
          rec.check(solve_ivp(p, {{l, t}}) == direct,
                    fmt::format("theta formula != T_{}^{} on {}", l, t, p.to_string()));
          direct = time_evolution(l, direct);
        }
      }
    }
  }
  for (int trial = 0; trial < 500; ++trial) {
    const auto length = std::uniform_int_distribution<std::int64_t>(1, std::max<std::int64_t>(opts.max_length, 1))(rng);
    const RiggedConfiguration rc = random_rigged_configuration(rng, length);
    rec.check(kkr_via_tau(TauContext::from(rc)) == kkr_inverse(rc),
              "tau formula != phi^-1 on\n" + format_rigged_configuration(rc));
  }
  return rec.done();
}

SuiteReport verify_bethe(const VerifyOptions& opts) {
  Recorder rec("bethe");
  const std::int64_t cap = std::min<std::int64_t>(opts.max_length, 10);
  for (std::int64_t length = 2; length <= cap; ++length) {
    for (const IntVector& mu : distinct_part_contents(length)) {
      const AngleGroup group(mu, length);
      const std::int64_t top = mu.empty() ? 1 : mu.back();
      for (const auto& rigging : group.representatives()) {
        for (std::int64_t l = 1; l <= top + 1; ++l) {
          const double residual = verify_eigenrelation(group, rigging, l);
          rec.check(residual < 1e-9, fmt::format("eigen residual {:.3g} for mu = {{{}}}, L = {}, J = ({}), l = {}",
                                                 residual, fmt::join(mu, ","), length, fmt::join(rigging, ","), l));
        }
      }
      try {
        state_count_check(mu, length);
        rec.check(true, "");
      } catch (const Error& e) {
        rec.check(false, e.what());
      }
    }
  }
  return rec.done();
}

std::vector<SuiteReport> run_suites(std::string_view suite, const VerifyOptions& opts) {
  std::vector<SuiteReport> out;
  auto want = [&](std::string_view name) { return suite == "all" || suite == name; };
  if (want("crystal")) out.push_back(verify_crystal(opts));
  if (want("kkr")) out.push_back(verify_kkr(opts));
  if (want("theta")) out.push_back(verify_theta(opts));
  if (want("scattering")) out.push_back(verify_scattering(opts));
  if (want("tau")) out.push_back(verify_tau(opts));
  if (want("bethe")) out.push_back(verify_bethe(opts));
  if (out.empty()) throw Error(ErrorCode::ParseError, fmt::format("unknown suite '{}'", suite));
  return out;
}

}  // namespace bbs
