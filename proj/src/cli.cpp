#include "ffdistlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "ffdistlab/reports.hpp"

namespace ffd {

namespace {

std::uint64_t parse_uint(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        throw HypothesisError("bad " + what + ": '" + text + "'");
    }
    if (used != text.size()) throw HypothesisError("bad " + what + ": '" + text + "'");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<std::uint32_t> parse_modulus(const std::string& text) {
    std::vector<std::uint32_t> coeffs;
    if (text.empty()) return coeffs;
    for (const std::string& part : split(text, ','))
        coeffs.push_back(static_cast<std::uint32_t>(parse_uint(part, "modulus coefficient")));
    return coeffs;
}

// "a,b,c" or "geom:<from>:<to>" (doubling grid from <from> up to and
// including <to>).
std::vector<std::uint64_t> parse_sizes(const std::string& text) {
    std::vector<std::uint64_t> sizes;
    if (text.rfind("geom:", 0) == 0) {
        const auto parts = split(text.substr(5), ':');
        if (parts.size() != 2) throw HypothesisError("bad size grid: '" + text + "'");
        const std::uint64_t from = parse_uint(parts[0], "size");
        const std::uint64_t to = parse_uint(parts[1], "size");
        if (from == 0 || to < from) throw HypothesisError("bad size grid: '" + text + "'");
        for (std::uint64_t s = from; s < to; s *= 2) sizes.push_back(s);
        sizes.push_back(to);
        return sizes;
    }
    for (const std::string& part : split(text, ','))
        sizes.push_back(parse_uint(part, "size"));
    return sizes;
}

std::pair<std::uint64_t, std::uint64_t> parse_fraction(const std::string& text) {
    const auto parts = split(text, '/');
    if (parts.size() == 1) return {parse_uint(parts[0], "fraction"), 1};
    if (parts.size() != 2) throw HypothesisError("bad fraction: '" + text + "'");
    return {parse_uint(parts[0], "fraction"), parse_uint(parts[1], "fraction")};
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> parse_pairs(const std::string& text) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> pairs;
    for (const std::string& part : split(text, ',')) {
        const auto qd = split(part, ':');
        if (qd.size() != 2) throw HypothesisError("bad q:d pair: '" + part + "'");
        pairs.emplace_back(parse_uint(qd[0], "q"),
                           static_cast<std::uint32_t>(parse_uint(qd[1], "d")));
    }
    return pairs;
}

// "c1,...,cd;c1,...,cd" with coordinates given as field-element indices.
PointSet parse_points(const std::string& text, const Ambient& ambient) {
    PointSet set(ambient.size());
    if (text.empty()) throw HypothesisError("point list is empty");
    for (const std::string& point_text : split(text, ';')) {
        const auto coords = split(point_text, ',');
        if (coords.size() != ambient.dim())
            throw HypothesisError("point '" + point_text + "' needs exactly " +
                                  std::to_string(ambient.dim()) + " coordinates");
        Point p;
        for (const std::string& c : coords) {
            const std::uint64_t v = parse_uint(c, "coordinate");
            if (v >= ambient.field().q())
                throw HypothesisError("coordinate " + c + " is not a field-element index");
            p.push_back(static_cast<Field::Elt>(v));
        }
        set.insert(ambient.rank(p));
    }
    return set;
}

void require_json(const std::string& format) {
    if (format != "json")
        throw HypothesisError("csv output is only available for scan reports");
}

struct Flags {
    std::uint64_t q = 3;
    std::string modulus;
    std::uint32_t d = 2;
    std::string variety = "sphere:1";
    std::uint32_t k = 3;
    std::string sizes;
    std::uint32_t samples = 100;
    std::uint64_t seed = 1;
    std::string ggq = "1/4";
    std::string format; // per-subcommand default
    std::string points;
    std::string lemma;
    std::string theorem;
    std::uint32_t dim_cap = 2;
    std::string pairs = "3:2,3:3,5:2,5:3";
    std::string out_path;
};

ExperimentConfig make_config(const Flags& f) {
    ExperimentConfig config;
    config.q = f.q;
    config.ext_modulus = parse_modulus(f.modulus);
    config.d = f.d;
    config.variety = f.variety;
    config.k = f.k;
    if (!f.sizes.empty()) config.sizes = parse_sizes(f.sizes);
    config.sample_count = f.samples;
    config.seed = f.seed;
    const auto frac = parse_fraction(f.ggq);
    config.ggq_num = frac.first;
    config.ggq_den = frac.second;
    return config;
}

void add_field_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--q", f.q, "field order, an odd prime power");
    cmd->add_option("--ext-modulus", f.modulus,
                    "comma-separated monic modulus coefficients, lowest degree first");
    cmd->add_option("--d", f.d, "ambient dimension");
}

void add_out_flag(CLI::App* cmd, Flags& f) {
    cmd->add_option("--out", f.out_path, "write the report to a file instead of stdout");
}

} // namespace

int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite-field distance-set laboratory"};
    app.require_subcommand(1);
    Flags f;

    CLI::App* audit_variety =
        app.add_subcommand("audit-variety", "size, spectral decay, and largest affine "
                                            "subspace of a variety");
    add_field_flags(audit_variety, f);
    audit_variety->add_option("--variety", f.variety, "sphere:<j> | hyperplane | poly:<file>");
    audit_variety->add_option("--dim-cap", f.dim_cap, "affine-subspace search cap (0..2)");
    audit_variety->add_option("--format", f.format, "json");
    add_out_flag(audit_variety, f);

    CLI::App* energy = app.add_subcommand(
        "energy", "additive energy of an explicit point set, exact and spectral");
    add_field_flags(energy, f);
    energy->add_option("--points", f.points, "points as 'c1,..,cd;c1,..,cd' (element indices)")
        ->required();
    energy->add_option("--k", f.k, "energy order k >= 1");
    energy->add_option("--format", f.format, "json");
    add_out_flag(energy, f);

    CLI::App* distset = app.add_subcommand(
        "distset", "k-fold distance set and dot-product set of an explicit point set");
    add_field_flags(distset, f);
    distset->add_option("--points", f.points, "points as 'c1,..,cd;c1,..,cd' (element indices)")
        ->required();
    distset->add_option("--k", f.k, "distance-set order k >= 2");
    distset->add_option("--format", f.format, "json");
    add_out_flag(distset, f);

    CLI::App* scan = app.add_subcommand(
        "scan", "sampled |Delta_k| statistics across a size grid, with the predicted "
                "threshold exponent");
    add_field_flags(scan, f);
    scan->add_option("--variety", f.variety, "sphere:<j> | hyperplane | poly:<file>");
    scan->add_option("--k", f.k, "distance-set order k >= 3");
    scan->add_option("--sizes", f.sizes, "comma list or geom:<from>:<to>")->required();
    scan->add_option("--samples", f.samples, "replicates per size");
    scan->add_option("--seed", f.seed, "master seed");
    scan->add_option("--ggq-fraction", f.ggq, "|Delta_k| >= frac*q counts as large");
    scan->add_option("--theorem", f.theorem,
                     "baseline | dim-generic | subspace | sphere-even | sphere-odd "
                     "(default: auto)");
    scan->add_option("--format", f.format, "csv | json");
    add_out_flag(scan, f);

    CLI::App* audit = app.add_subcommand(
        "audit-lemma", "empirical constant of an energy/sumset inequality over sampled sets");
    add_field_flags(audit, f);
    audit->add_option("--variety", f.variety, "sphere:<j> | hyperplane | poly:<file>");
    audit->add_option("--lemma", f.lemma, "one of the audit ids (see README)")->required();
    audit->add_option("--k", f.k, "energy order / sumset level");
    audit->add_option("--sizes", f.sizes, "comma list or geom:<from>:<to>")->required();
    audit->add_option("--samples", f.samples, "replicates per size");
    audit->add_option("--seed", f.seed, "master seed");
    audit->add_option("--format", f.format, "json");
    add_out_flag(audit, f);

    CLI::App* verify = app.add_subcommand(
        "verify", "exact identity suites over random subsets of small spaces");
    verify->add_option("--pairs", f.pairs, "comma list of q:d spaces");
    verify->add_option("--samples", f.samples, "replicates per space");
    verify->add_option("--seed", f.seed, "master seed");
    verify->add_option("--format", f.format, "json");
    add_out_flag(verify, f);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        std::string report;
        int code = 0;
        if (app.got_subcommand(audit_variety)) {
            require_json(f.format.empty() ? "json" : f.format);
            const ExperimentConfig config = make_config(f);
            const Scene scene = build_scene(config);
            const RegularAudit ra = regular_audit(scene.variety, scene.ambient);
            const auto profile = size_profile(scene.variety, scene.ambient);
            const AffineSubspaceReport sub =
                max_affine_subspace(scene.variety, scene.ambient, f.dim_cap);
            report = variety_report_json(config, scene, ra, profile.first, profile.second, sub);
        } else if (app.got_subcommand(energy)) {
            require_json(f.format.empty() ? "json" : f.format);
            Flags g = f;
            g.variety = "points:" + f.points;
            const ExperimentConfig config = make_config(g);
            const Field field = Field::make(config.q, config.ext_modulus);
            const Ambient amb(field, config.d);
            const PointSet a = parse_points(f.points, amb);
            const EnergyValue exact = energy_k(amb, a, config.k);
            const BigInt spectral = energy_via_spectrum(amb, a, config.k);
            report = energy_report_json(config, exact, spectral, a.size());
        } else if (app.got_subcommand(distset)) {
            require_json(f.format.empty() ? "json" : f.format);
            Flags g = f;
            g.variety = "points:" + f.points;
            const ExperimentConfig config = make_config(g);
            const Field field = Field::make(config.q, config.ext_modulus);
            const Ambient amb(field, config.d);
            const PointSet a = parse_points(f.points, amb);
            const DistanceSet delta = k_distance_set(amb, a, config.k);
            const DistanceSet dots = dot_product_set(amb, a);
            report = distset_report_json(config, a.size(), delta, dots);
        } else if (app.got_subcommand(scan)) {
            const std::string format = f.format.empty() ? "csv" : f.format;
            if (format != "csv" && format != "json")
                throw HypothesisError("scan formats: csv | json");
            const ExperimentConfig config = make_config(f);
            TheoremId id;
            if (f.theorem.empty()) {
                const Scene scene = build_scene(config);
                id = select_theorem(scene, config);
            } else {
                id = theorem_from_name(f.theorem);
            }
            const ScanReport scan_rep = scan_thresholds(config, id);
            report = format == "csv" ? scan_report_csv(scan_rep) : scan_report_json(scan_rep);
        } else if (app.got_subcommand(audit)) {
            require_json(f.format.empty() ? "json" : f.format);
            const auto ids = audit_lemma_ids();
            if (std::find(ids.begin(), ids.end(), f.lemma) == ids.end()) {
                std::string known;
                for (const std::string& id : ids) known += (known.empty() ? "" : ", ") + id;
                throw HypothesisError("unknown lemma '" + f.lemma + "' (known: " + known + ")");
            }
            const ExperimentConfig config = make_config(f);
            report = lemma_report_json(config, audit_lemma(f.lemma, config));
        } else if (app.got_subcommand(verify)) {
            require_json(f.format.empty() ? "json" : f.format);
            if (verify->count("--samples") == 0) f.samples = 25;
            const VerifySummary summary =
                verify_identities(parse_pairs(f.pairs), f.seed, f.samples);
            report = verify_report_json(summary);
            code = summary.all_pass ? 0 : 1;
        }
        if (f.out_path.empty()) {
            out << report;
        } else {
            std::ofstream file(f.out_path, std::ios::binary);
            if (!file) throw HypothesisError("cannot open output file: '" + f.out_path + "'");
            file << report;
        }
        return code;
    } catch (const IdentityViolation& e) {
        err << "identity violation: " << e.what() << '\n' << e.witness() << '\n';
        return 1;
    } catch (const NumericError& e) {
        err << "numeric contract failure: " << e.what() << '\n';
        return 1;
    } catch (const HypothesisError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const BudgetError& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace ffd
