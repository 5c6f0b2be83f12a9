#include "ffdistlab/reports.hpp"

#include <charconv>
#include <sstream>

#include "json.hpp"

namespace ffd {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json config_block(const ExperimentConfig& config) {
    ordered_json j;
    j["hash"] = config.hash();
    j["q"] = config.q;
    j["d"] = config.d;
    j["variety"] = config.variety;
    j["k"] = config.k;
    j["seed"] = config.seed;
    return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::vector<std::uint64_t> set_values(const PointSet& s) {
    return s.to_ranks();
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string variety_report_json(const ExperimentConfig& config, const Scene& scene,
                                const RegularAudit& audit, std::uint64_t size,
                                double declared_ratio, const AffineSubspaceReport& subspace) {
    ordered_json j;
    j["report"] = "variety-audit";
    j["config"] = config_block(config);
    j["label"] = scene.variety.def.label;
    j["size"] = size;
    j["declared_dim"] = scene.variety.def.declared_dim;
    j["declared_deg"] = scene.variety.def.declared_deg;
    j["size_ratio"] = audit.size_ratio;
    j["declared_ratio"] = declared_ratio;
    j["decay_constant"] = audit.decay_constant;
    ordered_json sub;
    sub["t_v"] = subspace.t_v;
    sub["dim"] = subspace.directions.size();
    if (subspace.base) sub["base"] = *subspace.base;
    sub["directions"] = subspace.directions;
    sub["searched_dim_cap"] = subspace.searched_dim_cap;
    j["max_affine_subspace"] = std::move(sub);
    return dump(j);
}

std::string energy_report_json(const ExperimentConfig& config, const EnergyValue& exact,
                               const BigInt& spectral, std::uint64_t set_size) {
    ordered_json j;
    j["report"] = "energy";
    j["config"] = config_block(config);
    j["set_size"] = set_size;
    j["k"] = exact.k;
    j["energy"] = exact.value.str();
    j["energy_spectral"] = spectral.str();
    j["agree"] = exact.value == spectral;
    return dump(j);
}

std::string distset_report_json(const ExperimentConfig& config, std::uint64_t set_size,
                                const DistanceSet& delta, const DistanceSet& dot) {
    ordered_json j;
    j["report"] = "distance-sets";
    j["config"] = config_block(config);
    j["set_size"] = set_size;
    j["k"] = config.k;
    j["distance_set"] = set_values(delta);
    j["distance_count"] = delta.size();
    j["dot_product_set"] = set_values(dot);
    j["dot_product_count"] = dot.size();
    return dump(j);
}

std::string lemma_report_json(const ExperimentConfig& config, const LemmaAuditReport& report) {
    ordered_json j;
    j["report"] = "lemma-audit";
    j["config"] = config_block(config);
    j["lemma"] = report.lemma;
    j["sizes"] = config.sizes;
    j["sample_count"] = config.sample_count;
    j["instances"] = report.instances;
    j["empirical_constant"] = report.empirical_constant;
    ordered_json w;
    w["size"] = report.witness_size;
    w["replicate"] = report.witness_replicate;
    w["exhaustive"] = report.witness_exhaustive;
    w["ratio"] = report.witness_ratio;
    w["ranks"] = report.witness_set;
    j["witness"] = std::move(w);
    return dump(j);
}

std::string verify_report_json(const VerifySummary& summary) {
    ordered_json j;
    j["report"] = "identity-verification";
    ordered_json checks = ordered_json::array();
    for (const IdentityCheck& c : summary.checks) {
        ordered_json row;
        row["name"] = c.name;
        row["instances"] = c.instances;
        row["pass"] = c.pass;
        checks.push_back(std::move(row));
    }
    j["checks"] = std::move(checks);
    j["all_pass"] = summary.all_pass;
    return dump(j);
}

std::string scan_report_json(const ScanReport& report) {
    ordered_json j;
    j["report"] = "threshold-scan";
    j["config"] = config_block(report.config);
    j["theorem"] = report.theorem;
    j["predicted_exp"] = report.predicted_exp;
    j["pair_thr_half"] = report.pair_threshold_half;
    j["pair_thr_full"] = report.pair_threshold_full;
    ordered_json rows = ordered_json::array();
    for (const ScanRow& r : report.rows) {
        ordered_json row;
        row["size"] = r.size;
        row["size_exp"] = r.size_exp;
        row["samples"] = r.samples;
        row["exhaustive"] = r.exhaustive;
        row["delta_min"] = r.delta_min;
        row["delta_mean"] = r.delta_mean;
        row["delta_max"] = r.delta_max;
        row["frac_large"] = r.frac_large;
        row["pair_min"] = r.pair_min;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    if (auto c = report.crossover_size())
        j["crossover_size"] = *c;
    else
        j["crossover_size"] = nullptr;
    return dump(j);
}

std::string scan_report_csv(const ScanReport& report) {
    std::ostringstream out;
    out << "config_hash,theorem,size,size_exp,samples,exhaustive,delta_min,delta_mean,"
           "delta_max,frac_large,pair_min,pair_thr_half,pair_thr_full,predicted_exp\n";
    const std::string hash = report.config.hash();
    for (const ScanRow& r : report.rows) {
        out << hash << ',' << report.theorem << ',' << r.size << ','
            << format_double(r.size_exp) << ',' << r.samples << ','
            << (r.exhaustive ? "true" : "false") << ',' << r.delta_min << ','
            << format_double(r.delta_mean) << ',' << r.delta_max << ','
            << format_double(r.frac_large) << ',' << r.pair_min << ','
            << format_double(report.pair_threshold_half) << ','
            << format_double(report.pair_threshold_full) << ','
            << format_double(report.predicted_exp) << '\n';
    }
    return out.str();
}

} // namespace ffd
