#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ffdistlab/combinatorics.hpp"
#include "ffdistlab/sampling.hpp"
#include "ffdistlab/spectral.hpp"
#include "ffdistlab/thresholds.hpp"
#include "ffdistlab/variety.hpp"

namespace ffd {

struct ExperimentConfig {
    std::uint64_t q = 3;
    std::vector<std::uint32_t> ext_modulus; // empty: prime field / default modulus
    std::uint32_t d = 2;
    std::string variety = "sphere:1"; // sphere:<j> | hyperplane | poly:<file>
    std::uint32_t k = 3;
    std::vector<std::uint64_t> sizes;
    std::uint32_t sample_count = 100;
    std::uint64_t seed = 1;
    std::uint64_t ggq_num = 1, ggq_den = 4; // |Delta_k| >= (num/den)*q counts as "large"

    std::string canonical_string() const;
    std::string hash() const; // FNV-1a 64 over the canonical string, hex
};

// Materialized experiment scene: field, ambient, variety.
struct Scene {
    Field field;
    Ambient ambient;
    Variety variety;
};

Scene build_scene(const ExperimentConfig& config);

// Which inequality an audit exercises. Names are by content; each is an
// exact-LHS vs envelope-RHS ratio except sumset-lower, which is a theorem
// checked exactly (every instance must have ratio >= 1).
//   sphere-energy-even:     E(A) vs |A|^3/q + q^{(d-2)/2}|A|^2          (even d >= 4, j != 0)
//   sphere-energy-odd:      same envelope                                (odd d, j primitive)
//   energy-induction:       E_k(A) vs q^{d-1}E_{k-1}(A) + |A|^{2k-1}/q   (sphere, k >= 2)
//   sphere-energy-iterated: E_l(A) vs q^{((d-1)(2l-3)-1)/2}|A|^2
//                                  + q^{(d-1)(l-2)-1}|A|^3 + |A|^{2l-1}/q (sphere, |A| > q^{(d-1)/2})
//   subspace-energy:        E(A) vs |A|^3 (t_V/|A|)^{1/(2^{n+1}-n-5)}    (n >= 2; n = 1: |A|^2 t_V)
//   sumset-lower:           |A_l| * E_l(A) / |A|^{2l} >= 1, exact
std::vector<std::string> audit_lemma_ids();

struct LemmaAuditReport {
    std::string lemma;
    std::uint64_t instances = 0;
    double empirical_constant = 0.0; // max over instances of the ratio
    std::uint64_t witness_size = 0;
    std::uint64_t witness_replicate = 0;
    bool witness_exhaustive = false;
    double witness_ratio = 0.0;
    std::vector<Rank> witness_set; // the extremal A, serialized as ranks
};

LemmaAuditReport audit_lemma(const std::string& lemma_id, const ExperimentConfig& config);

struct ScanRow {
    std::uint64_t size = 0;
    double size_exp = 0.0; // log_q size
    std::uint64_t samples = 0;
    bool exhaustive = false;
    std::uint64_t delta_min = 0;
    double delta_mean = 0.0;
    std::uint64_t delta_max = 0;
    double frac_large = 0.0; // fraction with |Delta_k| >= ggq * q
    std::uint64_t pair_min = 0; // min over samples of |A_l||A_{k-l}|, l = floor(k/2)
};

struct ScanReport {
    ExperimentConfig config;
    std::string theorem; // threshold family used for the prediction
    double predicted_exp = 0.0;
    double pair_threshold_half = 0.0; // q^{(d+1)/2}
    double pair_threshold_full = 0.0; // q^{d+1}
    std::vector<ScanRow> rows;

    // Log-linear interpolation of the size where frac_large crosses 1/2;
    // empty when the scan never crosses.
    std::optional<double> crossover_size() const;
};

ScanReport scan_thresholds(const ExperimentConfig& config, TheoremId theorem);

// Picks the sharpest applicable family for the config's variety/d/k, falling
// back to regular_baseline.
TheoremId select_theorem(const Scene& scene, const ExperimentConfig& config);
TheoremParams params_for(TheoremId id, const Scene& scene, const ExperimentConfig& config);

struct IdentityCheck {
    std::string name;
    std::uint64_t instances = 0;
    bool pass = false;
};

struct VerifySummary {
    std::vector<IdentityCheck> checks;
    bool all_pass = false;
};

// Exact-identity suites: Parseval, spectral-vs-convolution energies, the
// sumset lower bound, distance-vs-dot-product equality on sphere subsets,
// and the k-distance splitting identity. Throws IdentityViolation with a
// witness on any failure.
VerifySummary verify_identities(const std::vector<std::pair<std::uint64_t, std::uint32_t>>& qd_pairs,
                                std::uint64_t seed, std::uint32_t samples);

} // namespace ffd
