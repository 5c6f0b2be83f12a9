#include "ffdistlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ffdistlab/reports.hpp"

namespace ffd {

namespace {

constexpr std::uint64_t kExhaustiveCap = 100'000;

double rat_to_double(const BigRat& r) { return r.convert_to<double>(); }
double big_to_double(const BigInt& v) { return v.convert_to<double>(); }

// q^exp as an exact rational, exp may be negative.
BigRat q_power(std::uint64_t q, long long exp) {
    if (exp >= 0) return BigRat(pow_big(BigInt(q), static_cast<std::uint32_t>(exp)));
    return BigRat(1, pow_big(BigInt(q), static_cast<std::uint32_t>(-exp)));
}

std::string ranks_json(const std::vector<Rank>& ranks) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (i) out << ',';
        out << ranks[i];
    }
    out << ']';
    return out.str();
}

BigInt sum_sq(const RepCount& mu) {
    BigInt acc = 0;
    for (Rank r : mu.support) acc += BigInt(mu.counts[r]) * mu.counts[r];
    return acc;
}

} // namespace

std::string ExperimentConfig::canonical_string() const {
    std::ostringstream out;
    out << "q=" << q << ";mod=";
    for (std::size_t i = 0; i < ext_modulus.size(); ++i) {
        if (i) out << ',';
        out << ext_modulus[i];
    }
    out << ";d=" << d << ";variety=" << variety << ";k=" << k << ";sizes=";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i) out << ',';
        out << sizes[i];
    }
    out << ";samples=" << sample_count << ";seed=" << seed << ";ggq=" << ggq_num << '/'
        << ggq_den;
    return out.str();
}

std::string ExperimentConfig::hash() const {
    std::uint64_t h = fnv1a64(canonical_string());
    std::ostringstream out;
    out << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) out << ((h >> shift) & 0xf);
    return out.str();
}

Scene build_scene(const ExperimentConfig& config) {
    std::vector<std::uint32_t> modulus(config.ext_modulus.begin(), config.ext_modulus.end());
    Field field = Field::make(config.q, std::move(modulus));
    Ambient ambient(field, config.d);

    const std::string& spec = config.variety;
    Variety v;
    if (spec.rfind("sphere:", 0) == 0) {
        const std::string radius_text = spec.substr(7);
        std::size_t used = 0;
        unsigned long long j = 0;
        try {
            j = std::stoull(radius_text, &used);
        } catch (const std::exception&) {
            throw HypothesisError("bad sphere radius: '" + radius_text + "'");
        }
        if (used != radius_text.size() || j >= field.q())
            throw HypothesisError("sphere radius must be a field element index");
        v = sphere(ambient, static_cast<Field::Elt>(j));
    } else if (spec == "hyperplane") {
        v = hyperplane(ambient);
    } else if (spec.rfind("poly:", 0) == 0) {
        const std::string path = spec.substr(5);
        std::ifstream in(path);
        if (!in) throw HypothesisError("cannot open polynomial file: '" + path + "'");
        std::ostringstream text;
        text << in.rdbuf();
        VarietyDef def;
        def.polynomials = parse_polynomials(text.str(), ambient);
        def.declared_dim = ambient.dim() - 1;
        std::uint32_t deg = 0;
        for (const Polynomial& poly : def.polynomials)
            for (const PolyTerm& term : poly) {
                std::uint32_t total = 0;
                for (std::uint32_t a : term.exps) total += a;
                deg = std::max(deg, total);
            }
        def.declared_deg = deg;
        def.label = spec;
        v = enumerate_variety(std::move(def), ambient);
    } else {
        throw HypothesisError("unknown variety spec: '" + spec + "' (sphere:<j>|hyperplane|poly:<file>)");
    }
    return Scene{std::move(field), std::move(ambient), std::move(v)};
}

std::vector<std::string> audit_lemma_ids() {
    return {"sphere-energy-even", "sphere-energy-odd",      "energy-induction",
            "sphere-energy-iterated", "subspace-energy",    "sumset-lower"};
}

namespace {

struct AuditContext {
    const Scene& scene;
    const ExperimentConfig& config;
    std::uint64_t t_v = 0; // filled for subspace-energy
};

void check_audit_hypotheses(const std::string& id, const AuditContext& ctx) {
    const Scene& sc = ctx.scene;
    const std::uint32_t d = sc.ambient.dim();
    const std::uint64_t q = sc.field.q();
    const auto radius = sc.variety.def.sphere_radius;
    auto fail = [](const std::string& what) { throw HypothesisError("hypothesis failed: " + what); };

    const bool needs_sphere = id == "sphere-energy-even" || id == "sphere-energy-odd" ||
                              id == "energy-induction" || id == "sphere-energy-iterated";
    if (needs_sphere && !radius) fail("audit '" + id + "' requires a sphere variety");

    if (id == "sphere-energy-even") {
        if (*radius == 0) fail("sphere radius j != 0");
        if (d < 4 || d % 2 != 0) fail("d >= 4 even");
    } else if (id == "sphere-energy-odd") {
        if (d < 3 || d % 2 != 1) fail("d >= 3 odd");
        if (d % 4 == 3 && q % 4 != 1) fail("d = 3 mod 4 requires q = 1 mod 4");
        if (!sc.field.is_primitive(*radius)) fail("sphere radius must be a primitive element");
    } else if (id == "energy-induction") {
        if (ctx.config.k < 2) fail("k >= 2");
    } else if (id == "sphere-energy-iterated") {
        if (*radius == 0) fail("sphere radius j != 0");
        if (d < 3) fail("d >= 3");
        if (ctx.config.k < 2) fail("level l >= 2");
        if (d % 2 == 1) {
            if (d % 4 == 3 && q % 4 != 1) fail("d = 3 mod 4 requires q = 1 mod 4");
            if (!sc.field.is_primitive(*radius))
                fail("odd d requires a primitive sphere radius");
        }
        const BigInt qd1 = pow_big(BigInt(q), d - 1);
        for (std::uint64_t s : ctx.config.sizes)
            if (BigInt(s) * s <= qd1) fail("|A| > q^{(d-1)/2} for every configured size");
    } else if (id == "subspace-energy") {
        if (sc.variety.def.declared_dim < 1) fail("variety dimension n >= 1");
    } else if (id == "sumset-lower") {
        if (ctx.config.k < 1) fail("level l >= 1");
    } else {
        fail("unknown lemma id '" + id + "'");
    }
}

// Ratio of exact LHS energy to the inequality's envelope for one sampled A.
double audit_ratio(const std::string& id, const AuditContext& ctx, const PointSet& a) {
    const Ambient& amb = ctx.scene.ambient;
    const std::uint64_t q = ctx.scene.field.q();
    const std::uint32_t d = amb.dim();
    const std::uint64_t n = a.size();

    if (id == "sphere-energy-even" || id == "sphere-energy-odd") {
        const BigInt e2 = sum_sq(sumset_iterate(amb, a, 2));
        const BigInt n3 = pow_big(BigInt(n), 3), n2 = pow_big(BigInt(n), 2);
        if (d % 2 == 0) {
            const BigRat rhs = BigRat(n3, q) + BigRat(pow_big(BigInt(q), (d - 2) / 2) * n2);
            return rat_to_double(BigRat(e2) / rhs);
        }
        const double rhs = big_to_double(n3) / static_cast<double>(q) +
                           std::pow(static_cast<double>(q), (d - 2) / 2.0) * big_to_double(n2);
        return big_to_double(e2) / rhs;
    }

    if (id == "energy-induction") {
        const std::uint32_t k = ctx.config.k;
        const auto levels = sumset_levels(amb, a, k);
        const BigInt ek = sum_sq(levels[k - 1]);
        const BigInt ek1 = sum_sq(levels[k - 2]);
        const BigRat rhs = BigRat(pow_big(BigInt(q), d - 1) * ek1) +
                           BigRat(pow_big(BigInt(n), 2 * k - 1), q);
        return rat_to_double(BigRat(ek) / rhs);
    }

    if (id == "sphere-energy-iterated") {
        const std::uint32_t l = ctx.config.k;
        const BigInt el = sum_sq(sumset_iterate(amb, a, l));
        const long long e1_num = static_cast<long long>(d - 1) * (2 * l - 3) - 1;
        const long long e2_exp = static_cast<long long>(d - 1) * (l - 2) - 1;
        const BigInt n2 = pow_big(BigInt(n), 2), n3 = pow_big(BigInt(n), 3);
        const BigInt n2l1 = pow_big(BigInt(n), 2 * l - 1);
        if (e1_num % 2 == 0) {
            const BigRat rhs = q_power(q, e1_num / 2) * BigRat(n2) +
                               q_power(q, e2_exp) * BigRat(n3) + BigRat(n2l1, q);
            return rat_to_double(BigRat(el) / rhs);
        }
        const double rhs =
            std::pow(static_cast<double>(q), static_cast<double>(e1_num) / 2.0) *
                big_to_double(n2) +
            std::pow(static_cast<double>(q), static_cast<double>(e2_exp)) * big_to_double(n3) +
            big_to_double(n2l1) / static_cast<double>(q);
        return big_to_double(el) / rhs;
    }

    if (id == "subspace-energy") {
        const BigInt e2 = sum_sq(sumset_iterate(amb, a, 2));
        const std::uint32_t nv = ctx.scene.variety.def.declared_dim;
        if (nv == 1) {
            const BigRat rhs = BigRat(pow_big(BigInt(n), 2) * ctx.t_v);
            return rat_to_double(BigRat(e2) / rhs);
        }
        const double m = std::ldexp(1.0, static_cast<int>(nv) + 1) - nv - 5; // 2^{n+1}-n-5
        if (m <= 0) throw HypothesisError("hypothesis failed: 2^(n+1) - n - 5 > 0");
        const double rhs = std::pow(static_cast<double>(n), 3.0) *
                           std::pow(static_cast<double>(ctx.t_v) / static_cast<double>(n),
                                    1.0 / m);
        return big_to_double(e2) / rhs;
    }

    if (id == "sumset-lower") {
        const std::uint32_t l = ctx.config.k;
        const RepCount mu = sumset_iterate(amb, a, l);
        const BigInt el = sum_sq(mu);
        const BigInt lhs = BigInt(mu.support.size()) * el;
        const BigInt rhs = pow_big(BigInt(n), 2 * l);
        if (lhs < rhs) {
            std::ostringstream witness;
            witness << "{\"check\":\"sumset-lower\",\"l\":" << l << ",\"sumset_size\":"
                    << mu.support.size() << ",\"energy\":\"" << el.str()
                    << "\",\"ranks\":" << ranks_json(a.to_ranks()) << "}";
            throw IdentityViolation("sumset lower bound violated", witness.str());
        }
        return rat_to_double(BigRat(lhs, rhs));
    }

    throw HypothesisError("unknown lemma id '" + id + "'");
}

} // namespace

LemmaAuditReport audit_lemma(const std::string& lemma_id, const ExperimentConfig& config) {
    const Scene scene = build_scene(config);
    if (config.sizes.empty()) throw HypothesisError("audit needs a non-empty size grid");
    if (config.sample_count == 0) throw HypothesisError("sample count must be positive");
    const std::uint64_t vsize = scene.variety.points.size();
    for (std::uint64_t s : config.sizes)
        if (s > vsize) throw HypothesisError("configured size exceeds the variety size");

    AuditContext ctx{scene, config, 0};
    if (lemma_id == "subspace-energy")
        ctx.t_v = max_affine_subspace(scene.variety, scene.ambient, 2).t_v;
    check_audit_hypotheses(lemma_id, ctx);

    const std::vector<Rank> universe = scene.variety.points.to_ranks();
    LemmaAuditReport report;
    report.lemma = lemma_id;

    auto consider = [&](const PointSet& a, std::uint64_t s, std::uint64_t rep, bool exhaustive) {
        const double ratio = audit_ratio(lemma_id, ctx, a);
        ++report.instances;
        if (ratio > report.empirical_constant || report.instances == 1) {
            report.empirical_constant = ratio;
            report.witness_size = s;
            report.witness_replicate = rep;
            report.witness_exhaustive = exhaustive;
            report.witness_ratio = ratio;
            report.witness_set = a.to_ranks();
        }
    };

    for (std::uint64_t s : config.sizes) {
        if (s == 0) throw HypothesisError("sizes must be positive");
        if (binomial_capped(universe.size(), s, kExhaustiveCap) <= kExhaustiveCap) {
            std::uint64_t rep = 0;
            for_each_subset(universe, scene.ambient.size(), s,
                            [&](const PointSet& a) { consider(a, s, rep++, true); });
        } else {
            for (std::uint64_t rep = 0; rep < config.sample_count; ++rep)
                consider(sample_subset(universe, scene.ambient.size(), s, config.seed, rep), s,
                         rep, false);
        }
    }
    return report;
}

TheoremId select_theorem(const Scene& scene, const ExperimentConfig& config) {
    const auto radius = scene.variety.def.sphere_radius;
    const std::uint32_t d = scene.ambient.dim();
    const std::uint64_t q = scene.field.q();
    if (radius && *radius != 0 && config.k >= 3) {
        if (d >= 4 && d % 2 == 0) return TheoremId::sphere_even;
        if (d >= 3 && d % 2 == 1 && (d % 4 == 1 || q % 4 == 1) &&
            scene.field.is_primitive(*radius))
            return TheoremId::sphere_odd;
    }
    return TheoremId::regular_baseline;
}

TheoremParams params_for(TheoremId id, const Scene& scene, const ExperimentConfig& config) {
    TheoremParams p;
    p.d = scene.ambient.dim();
    p.n = scene.variety.def.declared_dim;
    p.k = config.k;
    p.q_mod_4 = scene.field.q() % 4;
    if (id == TheoremId::subspace) {
        const auto sub = max_affine_subspace(scene.variety, scene.ambient, 2);
        p.alpha = Rational(sub.directions.size());
    }
    return p;
}

ScanReport scan_thresholds(const ExperimentConfig& config, TheoremId theorem) {
    const Scene scene = build_scene(config);
    if (config.k < 3) throw HypothesisError("scans need k >= 3");
    if (config.sizes.empty()) throw HypothesisError("scan needs a non-empty size grid");
    if (config.sample_count == 0) throw HypothesisError("sample count must be positive");
    const std::uint64_t vsize = scene.variety.points.size();
    for (std::uint64_t s : config.sizes)
        if (s == 0 || s > vsize)
            throw HypothesisError("scan sizes must lie in [1, |V|]");
    if (config.ggq_den == 0 || config.ggq_num == 0 || config.ggq_num > config.ggq_den)
        throw HypothesisError("ggq fraction must lie in (0, 1]");

    const std::uint64_t q = scene.field.q();
    const std::uint32_t d = scene.ambient.dim();
    const std::uint32_t k = config.k;
    const std::uint32_t l_lo = k / 2, l_hi = k - l_lo;

    ScanReport report;
    report.config = config;
    report.theorem = theorem_name(theorem);
    report.predicted_exp =
        rat_to_double(threshold_exponent(theorem, params_for(theorem, scene, config)));
    report.pair_threshold_half = std::pow(static_cast<double>(q), (d + 1) / 2.0);
    report.pair_threshold_full = std::pow(static_cast<double>(q), d + 1.0);

    const std::vector<Rank> universe = scene.variety.points.to_ranks();
    for (std::uint64_t s : config.sizes) {
        ScanRow row;
        row.size = s;
        row.size_exp = std::log(static_cast<double>(s)) / std::log(static_cast<double>(q));
        row.delta_min = UINT64_MAX;
        row.pair_min = UINT64_MAX;
        std::uint64_t delta_sum = 0, large = 0;

        auto consider = [&](const PointSet& a) {
            const auto levels = sumset_levels(scene.ambient, a, k);
            DistanceSet delta(q);
            for (Rank y : levels[k - 1].support) delta.insert(scene.ambient.norm(y));
            const std::uint64_t ds = delta.size();
            row.delta_min = std::min(row.delta_min, ds);
            row.delta_max = std::max(row.delta_max, ds);
            delta_sum += ds;
            if (ds * config.ggq_den >= config.ggq_num * q) ++large;
            const std::uint64_t pair =
                levels[l_lo - 1].support.size() * levels[l_hi - 1].support.size();
            row.pair_min = std::min(row.pair_min, pair);
            ++row.samples;
        };

        if (binomial_capped(universe.size(), s, kExhaustiveCap) <= kExhaustiveCap) {
            row.exhaustive = true;
            for_each_subset(universe, scene.ambient.size(), s, consider);
        } else {
            for (std::uint64_t rep = 0; rep < config.sample_count; ++rep)
                consider(sample_subset(universe, scene.ambient.size(), s, config.seed, rep));
        }
        row.delta_mean = static_cast<double>(delta_sum) / static_cast<double>(row.samples);
        row.frac_large = static_cast<double>(large) / static_cast<double>(row.samples);
        report.rows.push_back(row);
    }
    return report;
}

std::optional<double> ScanReport::crossover_size() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].frac_large >= 0.5) {
            if (i == 0) return static_cast<double>(rows[0].size);
            const double f0 = rows[i - 1].frac_large, f1 = rows[i].frac_large;
            const double s0 = std::log(static_cast<double>(rows[i - 1].size));
            const double s1 = std::log(static_cast<double>(rows[i].size));
            return std::exp(s0 + (0.5 - f0) * (s1 - s0) / (f1 - f0));
        }
    }
    return std::nullopt;
}

namespace {

struct SuiteCounter {
    std::string name;
    std::uint64_t instances = 0;
};

[[noreturn]] void identity_fail(const std::string& check, std::uint64_t q, std::uint32_t d,
                                std::uint64_t seed, std::uint64_t rep, const PointSet& a,
                                const std::string& detail) {
    std::ostringstream witness;
    witness << "{\"check\":\"" << check << "\",\"q\":" << q << ",\"d\":" << d
            << ",\"seed\":" << seed << ",\"replicate\":" << rep
            << ",\"ranks\":" << ranks_json(a.to_ranks());
    if (!detail.empty()) witness << ',' << detail;
    witness << '}';
    throw IdentityViolation("identity violated: " + check, witness.str());
}

} // namespace

VerifySummary verify_identities(
    const std::vector<std::pair<std::uint64_t, std::uint32_t>>& qd_pairs, std::uint64_t seed,
    std::uint32_t samples) {
    SuiteCounter parseval{"parseval"};
    SuiteCounter energy3{"energy-spectral-vs-exact"};
    SuiteCounter lower{"sumset-lower"};
    SuiteCounter distdot{"distance-dot-sphere"};
    SuiteCounter split{"distance-splitting"};

    for (const auto& [q, d] : qd_pairs) {
        const Field field = Field::make(q);
        const Ambient amb(field, d);
        const std::uint64_t n = amb.size();
        std::vector<Rank> all(n);
        for (Rank r = 0; r < n; ++r) all[r] = r;
        const Variety s1 = sphere(amb, 1);
        const std::vector<Rank> sphere_ranks = s1.points.to_ranks();

        for (std::uint64_t rep = 0; rep < samples; ++rep) {
            // 1. Parseval on subsets of the full space.
            {
                const std::uint64_t s = 1 + rep % std::min<std::uint64_t>(n, 50);
                const PointSet a = sample_subset(all, n, s, seed, rep);
                const double residue = parseval_check(amb, a);
                const double target = static_cast<double>(a.size()) / static_cast<double>(n);
                if (residue > 1e-9 * std::max(1.0, target))
                    identity_fail("parseval", q, d, seed, rep, a, "");
                ++parseval.instances;
            }

            const std::uint64_t ssize =
                1 + rep % std::min<std::uint64_t>(sphere_ranks.size(), 32);
            const PointSet a = sample_subset(sphere_ranks, n, ssize, seed, samples + rep);

            // 2. Spectral energy equals exact convolution energy (which in
            //    turn self-checks against brute force on small inputs).
            {
                const std::uint32_t k = static_cast<std::uint32_t>(rep % 3) + 1;
                const BigInt exact = energy_k(amb, a, k).value;
                const BigInt spectral = energy_via_spectrum(amb, a, k);
                if (exact != spectral)
                    identity_fail("energy-spectral-vs-exact", q, d, seed, rep, a,
                                  "\"exact\":\"" + exact.str() + "\",\"spectral\":\"" +
                                      spectral.str() + "\"");
                ++energy3.instances;
            }

            // 3. Sumset lower bound plus representation-count consistency.
            {
                const std::uint32_t l = static_cast<std::uint32_t>(rep % 3) + 1;
                const auto levels = sumset_levels(amb, a, l);
                for (const RepCount& mu : levels)
                    if (auto bad = repcount_inconsistency(a.size(), mu))
                        identity_fail("repcount-consistency", q, d, seed, rep, a, *bad);
                const BigInt el = sum_sq(levels[l - 1]);
                if (BigInt(levels[l - 1].support.size()) * el <
                    pow_big(BigInt(a.size()), 2 * l))
                    identity_fail("sumset-lower", q, d, seed, rep, a, "");
                ++lower.instances;
            }

            // 4. On the unit sphere, pairwise distances and dot products
            //    determine each other: ||x-y|| = 2 - 2 x.y.
            {
                const DistanceSet delta = distance_set_diff(amb, a, true);
                const DistanceSet dots = dot_product_set(amb, a);
                DistanceSet mapped(field.q());
                const Field::Elt two = field.from_int(2);
                for (Rank t : dots)
                    mapped.insert(
                        field.sub(two, field.mul(two, static_cast<Field::Elt>(t))));
                if (!(mapped == delta))
                    identity_fail("distance-dot-sphere", q, d, seed, rep, a, "");
                ++distdot.instances;
            }

            // 5. Delta_k(A) = Delta_2(A_l, A_{k-l}) for all splits, k <= 4.
            {
                const auto levels = sumset_levels(amb, a, 4);
                for (std::uint32_t k = 3; k <= 4; ++k) {
                    const DistanceSet delta = k_distance_set(amb, a, k);
                    for (std::uint32_t l = 1; l < k; ++l) {
                        PointSet al(n), akl(n);
                        for (Rank r : levels[l - 1].support) al.insert(r);
                        for (Rank r : levels[k - l - 1].support) akl.insert(r);
                        const DistanceSet viasum = distance_set_sum(amb, al, akl);
                        if (!(viasum == delta))
                            identity_fail("distance-splitting", q, d, seed, rep, a,
                                          "\"k\":" + std::to_string(k) +
                                              ",\"l\":" + std::to_string(l));
                        ++split.instances;
                    }
                }
            }
        }
    }

    VerifySummary summary;
    for (const SuiteCounter& c : {parseval, energy3, lower, distdot, split})
        summary.checks.push_back({c.name, c.instances, true});
    summary.all_pass = true;
    return summary;
}

} // namespace ffd
