#include "arcsupport/fuzz.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace arcsupport {

double draw_delta(const DeltaPolicy& policy, const SupportProfile& profile, ScanMode mode, std::uint64_t seed,
                  std::uint64_t trial_index) {
  std::mt19937_64 rng(trial_seed(seed, trial_index, mode == ScanMode::mountain ? 1 : 2));
  switch (policy.kind) {
    case DeltaPolicy::Kind::fixed:
      return policy.value;
    case DeltaPolicy::Kind::full_range: {
      std::uniform_real_distribution<double> d(0.0, kTwoPi);
      double v = 0.0;
      while (!(v > 0.0)) v = d(rng);
      return v;
    }
    case DeltaPolicy::Kind::safe_range:
      break;
  }
  const double lo = (mode == ScanMode::mountain ? profile.delta_n() : profile.delta_1()) + kSafeMargin;
  const double hi = kTwoPi - (mode == ScanMode::mountain ? profile.delta_1() : profile.delta_n()) - kSafeMargin;
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

namespace {

void run_trial(const FuzzConfig& config, std::size_t trial, FuzzRow* rows) {
  const PolygonalArc arc = random_simple_arc(config, trial);
  const SupportProfile profile = build_profile(arc);

  bool identical = false;
  try {
    identical = corollary_check(profile, arc, kPi).identical;
  } catch (const Error&) {
    identical = false;
  }

  for (const ScanMode mode : {ScanMode::mountain, ScanMode::valley}) {
    FuzzRow& row = rows[mode == ScanMode::mountain ? 0 : 1];
    row.trial = trial;
    row.n = arc.size();
    row.mode = mode;
    row.delta = draw_delta(config.delta_policy, profile, mode, config.seed, trial);
    row.corollary_identical = identical;
    row.unique_count = count_shaped(enumerate_triples(profile, arc, row.delta), mode);
    row.near_tie = distance_to_jump_gap(profile, row.delta) <= profile.tolerances().eps_angle;
    try {
      const TriplePair pair = find_pair(profile, arc, row.delta, mode);
      row.found = true;
      row.strict = pair.strict;
      row.guaranteed = pair.guaranteed;
      row.near_tie = pair.near_tie;
      row.verified = verify_triple(arc, pair, config.tol).passed();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotFound) throw;
      row.found = false;
      row.guaranteed = false;
    }
  }
}

}  // namespace

FuzzReport run_campaign(const FuzzConfig& config, std::size_t jobs) {
  config.validate();
  FuzzReport report;
  report.rows.resize(2 * config.trials);
  jobs = std::clamp<std::size_t>(jobs, 1, config.trials);

  if (jobs == 1) {
    for (std::size_t t = 0; t < config.trials; ++t) run_trial(config, t, &report.rows[2 * t]);
    return report;
  }

  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t t = w; t < config.trials; t += jobs) run_trial(config, t, &report.rows[2 * t]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : workers) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return report;
}

void write_csv(std::ostream& out, const FuzzReport& report) {
  out << "trial,n,delta,mode,strict,unique_count,verified,near_tie\n";
  char delta[32];
  for (const FuzzRow& r : report.rows) {
    std::snprintf(delta, sizeof delta, "%.17g", r.delta);
    out << r.trial << ',' << r.n << ',' << delta << ',' << to_string(r.mode) << ',' << (r.strict ? "true" : "false") << ','
        << r.unique_count << ',' << (r.verified ? "true" : "false") << ',' << (r.near_tie ? "true" : "false") << '\n';
  }
}

std::string summarize(const FuzzReport& report) {
  std::size_t strict = 0, verified = 0, unique = 0, eligible = 0, identical = 0, trials = 0;
  std::vector<std::string> anomalies;
  for (const FuzzRow& r : report.rows) {
    strict += r.strict ? 1 : 0;
    verified += r.verified ? 1 : 0;
    if (!r.near_tie) {
      ++eligible;
      unique += r.unique_count == 1 ? 1 : 0;
    }
    if (r.mode == ScanMode::mountain) {
      ++trials;
      identical += r.corollary_identical ? 1 : 0;
    }
    if (r.anomaly()) anomalies.push_back(std::to_string(r.trial) + ":" + std::string(to_string(r.mode)));
  }
  std::ostringstream os;
  const std::size_t rows = report.rows.size();
  os << "trials: " << trials << " (" << rows << " scans)\n";
  os << "strict existence: " << strict << "/" << rows << "\n";
  os << "verified: " << verified << "/" << rows << "\n";
  os << "uniqueness: " << unique << "/" << eligible << " (near ties excluded: " << rows - eligible << ")\n";
  os << "corollary at pi: " << identical << "/" << trials << "\n";
  os << "anomalies: " << anomalies.size();
  if (!anomalies.empty()) {
    os << " [";
    for (std::size_t i = 0; i < anomalies.size(); ++i) os << (i ? ", " : "") << anomalies[i];
    os << "]";
  }
  os << "\n";
  return os.str();
}

}  // namespace arcsupport
