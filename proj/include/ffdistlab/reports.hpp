#pragma once

#include <string>

#include "ffdistlab/experiments.hpp"

namespace ffd {

// Shortest round-trip decimal for a double ('.' decimal point, no locale).
std::string format_double(double v);

std::uint64_t fnv1a64(const std::string& s);

// JSON report bodies (UTF-8, stable key order, 2-space indent, trailing LF).
std::string variety_report_json(const ExperimentConfig& config, const Scene& scene,
                                const RegularAudit& audit, std::uint64_t size,
                                double declared_ratio, const AffineSubspaceReport& subspace);
std::string energy_report_json(const ExperimentConfig& config, const EnergyValue& exact,
                               const BigInt& spectral, std::uint64_t set_size);
std::string distset_report_json(const ExperimentConfig& config, std::uint64_t set_size,
                                const DistanceSet& delta, const DistanceSet& dot);
std::string lemma_report_json(const ExperimentConfig& config, const LemmaAuditReport& report);
std::string verify_report_json(const VerifySummary& summary);
std::string scan_report_json(const ScanReport& report);

// CSV: frozen header
// config_hash,theorem,size,size_exp,samples,exhaustive,delta_min,delta_mean,
// delta_max,frac_large,pair_min,pair_thr_half,pair_thr_full,predicted_exp
// with ',' separator, '.' decimal point, LF line endings.
std::string scan_report_csv(const ScanReport& report);

} // namespace ffd
