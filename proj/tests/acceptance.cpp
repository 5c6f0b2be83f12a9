// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit when
// any criterion fails. `--print-goldens` emits the pinned tables (sphere audit
// constants and lemma audit constants) in paste-ready form; regenerate them
// only when the audited quantities change intentionally.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ffdistlab/combinatorics.hpp"
#include "ffdistlab/experiments.hpp"
#include "ffdistlab/reports.hpp"
#include "ffdistlab/sampling.hpp"
#include "ffdistlab/spectral.hpp"
#include "ffdistlab/variety.hpp"

using namespace ffd;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

BigInt sum_sq(const RepCount& mu) {
    BigInt acc = 0;
    for (Rank r : mu.support) acc += BigInt(mu.counts[r]) * mu.counts[r];
    return acc;
}

PointSet mask_subset(const Ambient& amb, const std::vector<Rank>& ranks, std::uint64_t mask) {
    PointSet a(amb.size());
    for (std::size_t i = 0; i < ranks.size(); ++i)
        if (mask >> i & 1) a.insert(ranks[i]);
    return a;
}

// Criterion 1: brute tuple count, exact convolution, and rounded spectral
// energy agree on every subset of the 6-point unit sphere over F_3^3, k <= 3.
bool criterion1(std::string& note) {
    const auto t0 = Clock::now();
    const Field field = Field::make(3);
    const Ambient amb(field, 3);
    const std::vector<Rank> ranks = sphere(amb, 1).points.to_ranks();
    if (ranks.size() != 6) return false;
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        const PointSet a = mask_subset(amb, ranks, mask);
        for (std::uint32_t k = 1; k <= 3; ++k) {
            const BigInt brute = energy_k_brute(amb, a, k);
            const BigInt conv = energy_k(amb, a, k).value;
            const BigInt spectral = energy_via_spectrum(amb, a, k);
            if (brute != conv || conv != spectral) return false;
        }
    }
    const double elapsed = seconds_since(t0);
    note = " (192 agreements in " + format_double(elapsed) + " s)";
    return elapsed < 10.0;
}

// Criterion 2: |A_l| * E_l(A) >= |A|^{2l} in exact integer arithmetic, on the
// criterion-1 exhaustive suite plus 1000 seeded draws from the 120-point unit
// sphere over F_5^4 with l <= 3.
bool criterion2(std::string& note) {
    const auto t0 = Clock::now();
    std::uint64_t instances = 0;
    {
        const Field field = Field::make(3);
        const Ambient amb(field, 3);
        const std::vector<Rank> ranks = sphere(amb, 1).points.to_ranks();
        for (std::uint64_t mask = 0; mask < 64; ++mask) {
            const PointSet a = mask_subset(amb, ranks, mask);
            for (std::uint32_t l = 1; l <= 3; ++l) {
                const RepCount mu = sumset_iterate(amb, a, l);
                if (BigInt(mu.support.size()) * sum_sq(mu) <
                    pow_big(BigInt(a.size()), 2 * l))
                    return false;
                ++instances;
            }
        }
    }
    {
        const Field field = Field::make(5);
        const Ambient amb(field, 4);
        const std::vector<Rank> universe = sphere(amb, 1).points.to_ranks();
        if (universe.size() != 120) return false;
        for (std::uint64_t i = 0; i < 1000; ++i) {
            const std::uint64_t s = 1 + i % 100;
            const std::uint32_t l = 1 + static_cast<std::uint32_t>(i % 3);
            const PointSet a = sample_subset(universe, amb.size(), s, 2, i);
            const RepCount mu = sumset_iterate(amb, a, l);
            if (BigInt(mu.support.size()) * sum_sq(mu) < pow_big(BigInt(a.size()), 2 * l))
                return false;
            ++instances;
        }
    }
    const double elapsed = seconds_since(t0);
    note = " (" + std::to_string(instances) + " instances in " + format_double(elapsed) + " s)";
    return elapsed < 60.0;
}

// Criterion 3: Parseval residues below 1e-9 on 200 random sets (q <= 7,
// d <= 3); |distance set| = |dot-product set| on unit-sphere subsets, both
// exhaustively (F_3^2 circle) and on 200 random draws (F_5^3); and the k-fold
// distance set equals the two-set distance set of every sumset split, k <= 4.
bool criterion3() {
    {
        std::vector<Ambient> spaces;
        for (const auto& [q, d] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
                 {3, 2}, {3, 3}, {5, 2}, {5, 3}, {7, 2}, {7, 3}}) {
            spaces.emplace_back(Field::make(q), d);
        }
        for (std::uint64_t i = 0; i < 200; ++i) {
            const Ambient& amb = spaces[i % spaces.size()];
            const std::uint64_t n = amb.size();
            std::vector<Rank> all(n);
            for (Rank r = 0; r < n; ++r) all[r] = r;
            const std::uint64_t s = 1 + (i * 7 + 3) % std::min<std::uint64_t>(n, 50);
            const PointSet a = sample_subset(all, n, s, 11, i);
            if (!(parseval_check(amb, a) < 1e-9)) return false;
        }
    }
    {
        const Field field = Field::make(3);
        const Ambient amb(field, 2);
        const std::vector<Rank> ranks = sphere(amb, 1).points.to_ranks();
        for (std::uint64_t mask = 0; mask < 16; ++mask) {
            const PointSet a = mask_subset(amb, ranks, mask);
            if (distance_set_diff(amb, a, true).size() != dot_product_set(amb, a).size())
                return false;
        }
    }
    {
        const Field field = Field::make(5);
        const Ambient amb(field, 3);
        const std::vector<Rank> universe = sphere(amb, 1).points.to_ranks();
        for (std::uint64_t i = 0; i < 200; ++i) {
            const std::uint64_t s = 1 + i % universe.size();
            const PointSet a = sample_subset(universe, amb.size(), s, 12, i);
            if (distance_set_diff(amb, a, true).size() != dot_product_set(amb, a).size())
                return false;
        }
    }
    {
        const Field field = Field::make(5);
        const Ambient amb(field, 3);
        const std::vector<Rank> universe = sphere(amb, 1).points.to_ranks();
        for (std::uint64_t i = 0; i < 100; ++i) {
            const std::uint64_t s = 1 + i % 8;
            const PointSet a = sample_subset(universe, amb.size(), s, 13, i);
            const auto levels = sumset_levels(amb, a, 4);
            for (std::uint32_t k = 2; k <= 4; ++k) {
                const DistanceSet delta = k_distance_set(amb, a, k);
                for (std::uint32_t l = 1; l < k; ++l) {
                    PointSet al(amb.size()), akl(amb.size());
                    for (Rank r : levels[l - 1].support) al.insert(r);
                    for (Rank r : levels[k - l - 1].support) akl.insert(r);
                    if (!(distance_set_sum(amb, al, akl) == delta)) return false;
                }
            }
        }
    }
    return true;
}

// Criterion 4 goldens: direct-path sphere audits, pinned on first run.
struct SphereGolden {
    std::uint64_t q;
    std::uint32_t d;
    std::uint32_t j;
    const char* size_ratio;
    const char* decay;
};

const SphereGolden kSphereGoldens[] = {
    {3, 2, 1, "1.3333333333333333", "1.1547005383792517"},
    {3, 2, 2, "1.3333333333333333", "1.1547005383792517"},
    {3, 3, 1, "0.6666666666666666", "1.0000000000000002"},
    {3, 3, 2, "1.3333333333333333", "1.0000000000000004"},
    {3, 4, 1, "0.8888888888888888", "1.1547005383792512"},
    {3, 4, 2, "0.8888888888888888", "1.1547005383792512"},
    {5, 2, 1, "0.8", "1.4472135954999579"},
    {5, 2, 2, "0.8", "1.4472135954999579"},
    {5, 2, 3, "0.8", "1.4472135954999579"},
    {5, 2, 4, "0.8", "1.4472135954999579"},
    {5, 3, 1, "1.2", "1.6180339887498951"},
    {5, 3, 2, "0.8", "1.6180339887498945"},
    {5, 3, 3, "0.8", "1.6180339887498945"},
    {5, 3, 4, "1.2", "1.6180339887498951"},
    {5, 4, 1, "0.96", "1.4472135954999583"},
    {5, 4, 2, "0.96", "1.4472135954999583"},
    {5, 4, 3, "0.96", "1.4472135954999583"},
    {5, 4, 4, "0.96", "1.4472135954999583"},
    {7, 2, 1, "1.1428571428571428", "1.6985569235631093"},
    {7, 2, 2, "1.1428571428571428", "1.6985569235631093"},
    {7, 2, 3, "1.1428571428571428", "1.6985569235631093"},
    {7, 2, 4, "1.1428571428571428", "1.6985569235631093"},
    {7, 2, 5, "1.1428571428571428", "1.6985569235631093"},
    {7, 2, 6, "1.1428571428571428", "1.6985569235631093"},
    {7, 3, 1, "0.8571428571428571", "1.801937735804838"},
    {7, 3, 2, "0.8571428571428571", "1.801937735804838"},
    {7, 3, 3, "1.1428571428571428", "1.801937735804838"},
    {7, 3, 4, "0.8571428571428571", "1.801937735804838"},
    {7, 3, 5, "1.1428571428571428", "1.801937735804838"},
    {7, 3, 6, "1.1428571428571428", "1.801937735804838"},
    {7, 4, 1, "0.9795918367346939", "1.6985569235631086"},
    {7, 4, 2, "0.9795918367346939", "1.6985569235631086"},
    {7, 4, 3, "0.9795918367346939", "1.6985569235631086"},
    {7, 4, 4, "0.9795918367346939", "1.6985569235631086"},
    {7, 4, 5, "0.9795918367346939", "1.6985569235631086"},
    {7, 4, 6, "0.9795918367346939", "1.6985569235631086"},
};

// Criterion 4: every sphere of nonzero radius with q in {3,5,7}, d in {2,3,4}
// passes the regularity window (decay <= 2, size ratio in [0.5, 1.5]) and
// reproduces its pinned audit constants exactly.
bool criterion4(bool print) {
    bool ok = true;
    std::size_t idx = 0;
    for (std::uint64_t q : {3ull, 5ull, 7ull}) {
        const Field field = Field::make(q);
        for (std::uint32_t d : {2u, 3u, 4u}) {
            const Ambient amb(field, d);
            for (Field::Elt j = 1; j < q; ++j) {
                const RegularAudit audit = regular_audit(sphere(amb, j), amb);
                const std::string ratio = format_double(audit.size_ratio);
                const std::string decay = format_double(audit.decay_constant);
                if (print) {
                    std::cout << "    {" << q << ", " << d << ", " << j << ", \"" << ratio
                              << "\", \"" << decay << "\"},\n";
                    continue;
                }
                if (!(audit.decay_constant <= 2.0)) ok = false;
                if (!(audit.size_ratio >= 0.5 && audit.size_ratio <= 1.5)) ok = false;
                if (idx >= std::size(kSphereGoldens)) {
                    ok = false;
                    continue;
                }
                const SphereGolden& g = kSphereGoldens[idx++];
                if (g.q != q || g.d != d || g.j != j) ok = false;
                if (ratio != g.size_ratio || decay != g.decay) ok = false;
            }
        }
    }
    if (!print && idx != std::size(kSphereGoldens)) ok = false;
    return ok;
}

// Criterion 5 goldens: lemma audit constants on the unit sphere over F_5^4,
// seed 1, 200 samples per size, pinned on first run.
struct AuditGolden {
    const char* lemma;
    std::uint32_t k;
    std::vector<std::uint64_t> sizes;
    const char* constant;
};

const AuditGolden kAuditGoldens[] = {
    {"sphere-energy-even", 2, {8, 16, 32, 64, 120}, "0.8405172413793104"},
    {"energy-induction", 3, {8, 16, 32, 64, 120}, "0.9524919256291436"},
    {"sphere-energy-iterated", 3, {12, 24, 48, 96, 120}, "0.9509151215787338"},
};

// Criterion 5: the three energy-inequality audits reproduce their pinned
// empirical constants byte-exactly.
bool criterion5(bool print) {
    bool ok = true;
    for (const AuditGolden& g : kAuditGoldens) {
        ExperimentConfig c;
        c.q = 5;
        c.d = 4;
        c.variety = "sphere:1";
        c.k = g.k;
        c.sizes = g.sizes;
        c.sample_count = 200;
        c.seed = 1;
        const LemmaAuditReport rep = audit_lemma(g.lemma, c);
        const std::string constant = format_double(rep.empirical_constant);
        if (print) {
            std::cout << "    " << g.lemma << ": \"" << constant << "\"\n";
            continue;
        }
        if (constant != g.constant) ok = false;
    }
    return ok;
}

// Criterion 6: scanning the unit sphere over F_7^4 at k = 3 across a doubling
// size grid, the fraction of samples with |Delta_3| >= q/4 is 0 at size 1 and
// 1 at the full sphere, and the interpolated crossover lies below the
// predicted threshold exponent (7^{7/4}).
bool criterion6(std::string& note) {
    ExperimentConfig c;
    c.q = 7;
    c.d = 4;
    c.variety = "sphere:1";
    c.k = 3;
    c.sizes = {1, 2, 4, 8, 16, 32, 64, 128, 256, 336};
    c.sample_count = 20;
    c.seed = 1;
    const Scene scene = build_scene(c);
    if (scene.variety.points.size() != 336) return false;
    const ScanReport rep = scan_thresholds(c, select_theorem(scene, c));
    bool ok = rep.rows.size() == c.sizes.size();
    ok = ok && rep.rows.front().frac_large == 0.0;
    ok = ok && rep.rows.back().frac_large == 1.0;
    ok = ok && rep.predicted_exp == 1.75;
    const auto crossover = rep.crossover_size();
    ok = ok && crossover.has_value();
    if (crossover) {
        const double predicted_size = std::pow(7.0, rep.predicted_exp);
        ok = ok && *crossover < predicted_size;
        note = " (crossover " + format_double(*crossover) + " < " +
               format_double(predicted_size) + ")";
    }
    return ok;
}

// Criterion 7: on a 200-point subset of the unit sphere over F_7^4, the
// spectral energy path returns the same exact E_2 as brute quadruple
// enumeration at least 10x faster.
bool criterion7(std::string& note) {
    const Field field = Field::make(7);
    const Ambient amb(field, 4);
    const std::vector<Rank> universe = sphere(amb, 1).points.to_ranks();
    const PointSet a = sample_subset(universe, amb.size(), 200, 5, 0);

    const auto tb = Clock::now();
    const BigInt brute = energy_k_brute(amb, a, 2);
    const double brute_s = seconds_since(tb);

    BigInt spectral = 0;
    double spectral_s = 1e300;
    for (int i = 0; i < 3; ++i) {
        const auto ts = Clock::now();
        spectral = energy_via_spectrum(amb, a, 2);
        spectral_s = std::min(spectral_s, seconds_since(ts));
    }

    const double speedup = spectral_s > 0 ? brute_s / spectral_s : 1e300;
    note = " (values agree, speedup " + format_double(speedup) + "x)";
    return brute == spectral && speedup >= 10.0;
}

// Criterion 8: the isotropic-direction line search and the generic affine-line
// enumeration return identical witnesses on every sphere with q <= 5, d <= 3,
// and each witness line lies inside its sphere.
bool criterion8() {
    for (std::uint64_t q : {3ull, 5ull}) {
        const Field field = Field::make(q);
        for (std::uint32_t d = 1; d <= 3; ++d) {
            const Ambient amb(field, d);
            for (Field::Elt j = 0; j < q; ++j) {
                const Variety v = sphere(amb, j);
                const auto generic = find_line_generic(v.points, amb);
                const auto pruned = find_line_sphere_pruned(v.points, amb);
                if (!(generic == pruned)) return false;
                if (generic) {
                    for (Field::Elt t = 0; t < q; ++t)
                        if (!v.points.contains(
                                amb.add(generic->first, amb.scale(t, generic->second))))
                            return false;
                }
            }
        }
    }
    return true;
}

struct Tally {
    int failures = 0;
    void report(int n, const std::string& what, bool ok) {
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << what << '\n';
        if (!ok) ++failures;
    }
};

} // namespace

int main(int argc, char** argv) {
    if (argc > 1 && std::string(argv[1]) == "--print-goldens") {
        std::cout << "// sphere audit goldens {q, d, j, size_ratio, decay_constant}:\n";
        criterion4(true);
        std::cout << "// lemma audit golden constants:\n";
        criterion5(true);
        return 0;
    }

    Tally tally;
    std::string note;

    note.clear();
    {
        const bool ok = criterion1(note);
        tally.report(1, "three-way energy agreement on all subsets of the 6-point sphere, "
                        "k <= 3" + note, ok);
    }
    note.clear();
    {
        const bool ok = criterion2(note);
        tally.report(2, "exact sumset lower bound |A_l|*E_l >= |A|^{2l} on exhaustive + "
                        "1000 seeded instances" + note, ok);
    }
    tally.report(3, "Parseval < 1e-9, distance/dot-product count equality, and sumset "
                    "splitting of k-fold distance sets", criterion3());
    tally.report(4, "sphere audits regular (decay <= 2, ratio in [0.5,1.5]) with golden "
                    "constants reproduced on 36 spheres", criterion4(false));
    tally.report(5, "lemma audit empirical constants byte-exact against pinned goldens",
                 criterion5(false));
    note.clear();
    {
        const bool ok = criterion6(note);
        tally.report(6, "scan boundary fractions 0 at size 1 and 1 at full sphere, "
                        "crossover below prediction" + note, ok);
    }
    note.clear();
    {
        const bool ok = criterion7(note);
        tally.report(7, "spectral energy matches brute enumeration at >= 10x speed" + note,
                     ok);
    }
    tally.report(8, "pruned and generic line searches agree on all spheres q <= 5, d <= 3",
                 criterion8());

    return tally.failures == 0 ? 0 : 1;
}
