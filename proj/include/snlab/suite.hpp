#pragma once

#include <cstdint>

#include "snlab/hop.hpp"
#include "snlab/report.hpp"

namespace snlab {

/// Sizes of the battery. Defaults are the full acceptance sizes.
struct SuiteOptions {
  std::uint64_t seed = 42;
  int markus_count = 1000;
  int hermitian_count = 100;
  std::size_t decay_horizon = 1000000;
  int kfunc_count = 100;
  std::size_t lorentz_count = 1000;
  std::size_t embed_count = 1000;
  int inclusion_count = 1000;
  int rep_count = 100;
  int rep_trials = 16;
  /// Coarse grid for the Markus batch: the chain uses the eigenvector bound,
  /// the grid only feeds the reported estimate.
  GridSpec markus_grid{16, 8, 1e-6, 1.0, true, 10};
};

ExperimentReport run_suite(const SuiteOptions& opts);

// Individual batteries, each appending its records.
void suite_fixtures(ExperimentReport& rep);
void suite_markus(ExperimentReport& rep, const SuiteOptions& opts);
void suite_hermitian(ExperimentReport& rep, const SuiteOptions& opts);
void suite_decay(ExperimentReport& rep, const SuiteOptions& opts);
void suite_kfunctional(ExperimentReport& rep, const SuiteOptions& opts);
void suite_lorentz(ExperimentReport& rep, const SuiteOptions& opts);
void suite_jackson(ExperimentReport& rep, const SuiteOptions& opts);
void suite_embedding(ExperimentReport& rep, const SuiteOptions& opts);
void suite_inclusion(ExperimentReport& rep, const SuiteOptions& opts);
void suite_representation(ExperimentReport& rep, const SuiteOptions& opts);
void suite_lethargy(ExperimentReport& rep);

/// |a - b| / a, the relative change used for every doubling test.
double drift(double a, double b);

}  // namespace snlab
