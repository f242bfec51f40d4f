#pragma once

// Seeded property campaign over random arcs: both scans per trial, checked
// against verify_triple and the exhaustive enumerator, plus the δ = π
// corollary. Trials are independent; a parallel run produces exactly the
// rows of a sequential one.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "arcsupport/oracle.hpp"
#include "arcsupport/pair_finder.hpp"

namespace arcsupport {

struct FuzzRow {
  std::size_t trial = 0;
  std::size_t n = 0;  // arc vertices
  double delta = 0.0;
  ScanMode mode = ScanMode::mountain;
  bool found = false;
  bool strict = false;
  std::size_t unique_count = 0;  // enumerated configurations fitting this scan's window
  bool verified = false;
  bool near_tie = false;
  bool guaranteed = false;
  bool corollary_identical = false;  // per trial, repeated on both rows

  bool anomaly() const noexcept { return !found || !strict || !verified || (unique_count != 1 && !near_tie); }
};

struct FuzzReport {
  std::vector<FuzzRow> rows;  // two per trial: mountain, then valley
};

/// Runs config.trials trials on `jobs` threads (0 or 1 = sequential).
/// Throws GenerationExhausted when an arc cannot be drawn.
FuzzReport run_campaign(const FuzzConfig& config, std::size_t jobs = 1);

/// Draws the delta for one trial and mode according to the policy.
double draw_delta(const DeltaPolicy& policy, const SupportProfile& profile, ScanMode mode, std::uint64_t seed,
                  std::uint64_t trial_index);

/// CSV with header trial,n,delta,mode,strict,unique_count,verified,near_tie.
void write_csv(std::ostream& out, const FuzzReport& report);

/// Human-readable summary: strict-existence rate, uniqueness rate, corollary
/// rate at δ = π, anomaly count with trial indices.
std::string summarize(const FuzzReport& report);

}  // namespace arcsupport
