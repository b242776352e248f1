#pragma once

#include <cstddef>

#include "blaschke_lab/blaschke.hpp"
#include "blaschke_lab/target_vector.hpp"
#include "blaschke_lab_cli/config.hpp"
#include "blaschke_lab_cli/report.hpp"

namespace blaschke_lab::cli {

/// The zero sequence a input describes, truncated to n points when n > 0.
/// Generators take n as their N; files and inline points are cut to a prefix.
ZeroSequence resolve_sequence(const SequenceInput& input, std::size_t n = 0);

TargetVector resolve_targets(const TargetRule& input, std::size_t n, RngSeed seed);

/// Runs the experiment. Library errors propagate unchanged; a missing or
/// inconsistent input is reported as ConfigInvalid.
ReportBundle run(const ExperimentConfig& config);

/// Worker count for Monte Carlo trials: BLASCHKE_LAB_THREADS when set to a
/// positive integer, otherwise the hardware concurrency.
std::size_t worker_count();

}  // namespace blaschke_lab::cli
