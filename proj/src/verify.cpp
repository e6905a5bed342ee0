#include "cyhull/verify.hpp"

#include <random>
#include <sstream>

#include "cyhull/oracle.hpp"
#include "cyhull/trace.hpp"

namespace cyhull {

namespace {

// Oracle rank computations are skipped above this length; the suites then
// check formula-internal consistency only and say so in the note.
constexpr uint64_t kOracleLengthCap = 512;
// Exhaustive subset enumeration below, sampling above.
constexpr size_t kExhaustiveLog2Cap = 16;
constexpr uint64_t kSubsetSamples = 2048;

std::string describe_subset(const std::set<uint64_t>& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (uint64_t x : s) {
        if (!first) os << ',';
        os << x;
        first = false;
    }
    os << '}';
    return os.str();
}

std::set<uint64_t> subset_from_mask(const std::vector<uint64_t>& leaders, uint64_t mask) {
    std::set<uint64_t> out;
    for (size_t i = 0; i < leaders.size(); ++i)
        if (mask & (1ull << i)) out.insert(leaders[i]);
    return out;
}

std::vector<std::set<uint64_t>> subset_pool(const std::vector<uint64_t>& leaders,
                                            std::mt19937_64& rng, bool& exhaustive) {
    std::vector<std::set<uint64_t>> out;
    if (leaders.size() <= kExhaustiveLog2Cap) {
        exhaustive = true;
        const uint64_t total = 1ull << leaders.size();
        out.reserve(total);
        for (uint64_t mask = 0; mask < total; ++mask)
            out.push_back(subset_from_mask(leaders, mask));
    } else {
        exhaustive = false;
        out.reserve(kSubsetSamples);
        for (uint64_t i = 0; i < kSubsetSamples; ++i) {
            std::set<uint64_t> s;
            for (uint64_t l : leaders)
                if (rng() & 1) s.insert(l);
            out.push_back(std::move(s));
        }
    }
    return out;
}

}  // namespace

bool all_pass(const std::vector<SuiteResult>& results) {
    for (const auto& r : results)
        if (r.fail > 0) return false;
    return true;
}

std::vector<SuiteResult> run_code_suites(const CyclicSystem& sys, uint64_t pair_samples,
                                         uint64_t seed) {
    std::vector<SuiteResult> out;
    const auto& table = sys.cosets();
    const auto& leaders = table.leaders();
    const uint64_t n = sys.n();
    const bool use_oracle = n <= kOracleLengthCap;
    std::mt19937_64 rng(seed);

    {
        SuiteResult s("factorization");
        Polynomial prod(sys.fq(), {1});
        for (uint64_t leader : leaders) {
            const Polynomial& f = sys.minpoly(leader);
            if (f.is_monic() && static_cast<uint64_t>(f.degree()) == table.coset_size(leader) &&
                (sys.xn_minus_1() % f).is_zero())
                s.ok();
            else
                s.bad("leader " + std::to_string(leader));
            prod = prod * f;
        }
        if (prod == sys.xn_minus_1())
            s.ok();
        else
            s.bad("product of factors differs from x^n - 1");
        out.push_back(std::move(s));
    }

    {
        SuiteResult s("reciprocal_pair_regrouping");
        const auto split = table.split_t1_t2();
        Polynomial prod(sys.fq(), {1});
        for (uint64_t j : split.self_paired) {
            if (is_self_reciprocal(sys.minpoly(j)))
                s.ok();
            else
                s.bad("self-paired leader " + std::to_string(j) + " factor not self-reciprocal");
            prod = prod * sys.minpoly(j);
        }
        for (const auto& [j, partner] : split.pairs) {
            if (sys.minpoly(partner) == reciprocal(sys.minpoly(j)))
                s.ok();
            else
                s.bad("pair {" + std::to_string(j) + "," + std::to_string(partner) +
                      "}: reciprocal mismatch");
            prod = prod * sys.minpoly(j) * sys.minpoly(partner);
        }
        if (prod == sys.xn_minus_1())
            s.ok();
        else
            s.bad("regrouped product differs from x^n - 1");
        out.push_back(std::move(s));
    }

    {
        SuiteResult s("self_reciprocal_iff_self_paired");
        for (uint64_t j : leaders) {
            if (is_self_reciprocal(sys.minpoly(j)) == (table.neg_pair(j) == j))
                s.ok();
            else
                s.bad("leader " + std::to_string(j));
        }
        out.push_back(std::move(s));
    }

    bool exhaustive = false;
    const auto subsets = subset_pool(leaders, rng, exhaustive);

    {
        SuiteResult hull("hull_formula_vs_oracle");
        SuiteResult lcd("lcd_triple_agreement");
        SuiteResult witness("one_dim_hull_witness");
        uint64_t lcd_count = 0;
        for (const auto& gens : subsets) {
            const CyclicCode c = sys.code_from_generator_leaders(gens);
            const uint64_t formula = sys.hull_dimension(c);
            const uint64_t by_gen = n - static_cast<uint64_t>(sys.hull_generator(c).degree());
            const uint64_t oracle_dim =
                use_oracle ? oracle::hull_dim(c.generator(), n) : formula;
            if (formula == oracle_dim && formula == by_gen)
                hull.ok();
            else
                hull.bad("generators " + describe_subset(gens) + ": formula " +
                         std::to_string(formula) + ", oracle " + std::to_string(oracle_dim) +
                         ", via hull generator " + std::to_string(by_gen));
            const bool lcd_bz = sys.is_lcd(c);
            const bool lcd_rec = is_self_reciprocal(c.generator());
            const bool lcd_dim = formula == 0 && oracle_dim == 0;
            if (lcd_bz) ++lcd_count;
            if (lcd_bz == lcd_rec && lcd_rec == lcd_dim)
                lcd.ok();
            else
                lcd.bad("generators " + describe_subset(gens));
            const auto w = sys.one_dim_hull_witness(c);
            if (w.has_value() == (formula == 1 && oracle_dim == 1))
                witness.ok();
            else
                witness.bad("generators " + describe_subset(gens));
        }
        std::string scope = exhaustive ? "exhaustive" : "sampled";
        if (!use_oracle) scope += ",oracle skipped for n > " + std::to_string(kOracleLengthCap);
        hull.note = scope;
        lcd.note = "lcd_count=" + std::to_string(lcd_count) + "/" +
                   std::to_string(subsets.size()) + " (" + scope + ")";
        out.push_back(std::move(hull));
        out.push_back(std::move(lcd));
        out.push_back(std::move(witness));
    }

    {
        SuiteResult s("lcp_vs_oracle");
        const bool pairs_exhaustive = exhaustive && subsets.size() * subsets.size() <= 4096;
        const uint64_t total =
            pairs_exhaustive ? subsets.size() * subsets.size() : pair_samples;
        for (uint64_t it = 0; it < total; ++it) {
            const auto& gens_c =
                pairs_exhaustive ? subsets[it / subsets.size()] : subsets[rng() % subsets.size()];
            const auto& gens_d =
                pairs_exhaustive ? subsets[it % subsets.size()] : subsets[rng() % subsets.size()];
            const CyclicCode c = sys.code_from_generator_leaders(gens_c);
            const CyclicCode d = sys.code_from_generator_leaders(gens_d);
            const bool formula = sys.is_lcp(c, d);
            bool agree = true;
            if (use_oracle) {
                const auto gc = oracle::generator_matrix(c.generator(), n);
                const auto gd = oracle::generator_matrix(d.generator(), n);
                const bool by_oracle =
                    c.dimension() + d.dimension() == n && oracle::intersect_dim(gc, gd) == 0;
                agree = formula == by_oracle;
            }
            if (formula && c.generator() * d.generator() != sys.xn_minus_1()) agree = false;
            if (agree)
                s.ok();
            else
                s.bad("C=" + describe_subset(gens_c) + " D=" + describe_subset(gens_d));
        }
        s.note = pairs_exhaustive ? "exhaustive pairs" : "sampled pairs";
        out.push_back(std::move(s));
    }

    {
        SuiteResult dim("intersection_vs_oracle");
        SuiteResult bz_ident("bz_intersection_identity");
        for (uint64_t it = 0; it < pair_samples; ++it) {
            const auto& gens_c = subsets[rng() % subsets.size()];
            const auto& gens_d = subsets[rng() % subsets.size()];
            const CyclicCode c = sys.code_from_generator_leaders(gens_c);
            const CyclicCode d = sys.code_from_generator_leaders(gens_d);
            const uint64_t formula = sys.intersection_dimension(c, d);
            const CyclicCode inter = sys.intersection_code(c, d);
            uint64_t by_oracle = formula;
            if (use_oracle) {
                const auto gc = oracle::generator_matrix(c.generator(), n);
                const auto gd = oracle::generator_matrix(d.generator(), n);
                by_oracle = oracle::intersect_dim(gc, gd);
            }
            if (formula == by_oracle && inter.dimension() == formula)
                dim.ok();
            else
                dim.bad("C=" + describe_subset(gens_c) + " D=" + describe_subset(gens_d) +
                        ": formula " + std::to_string(formula) + ", oracle " +
                        std::to_string(by_oracle));
            BasicDualZero expected;
            const auto bz_c = sys.basic_dual_zero(c).leaders;
            for (uint64_t j : sys.basic_dual_zero(d).leaders)
                if (bz_c.count(j)) expected.leaders.insert(j);
            if (sys.basic_dual_zero(inter) == expected)
                bz_ident.ok();
            else
                bz_ident.bad("C=" + describe_subset(gens_c) + " D=" + describe_subset(gens_d));
        }
        out.push_back(std::move(dim));
        out.push_back(std::move(bz_ident));
    }

    return out;
}

std::vector<SuiteResult> run_trace_suites(const CyclicSystem& sys, uint64_t random_specs,
                                          uint64_t seed) {
    std::vector<SuiteResult> out;
    const auto& tower = sys.tower();
    const auto& table = sys.cosets();
    const auto& big = tower.big_field();
    const auto& leaders = table.leaders();
    std::mt19937_64 rng(seed);
    bool exhaustive = false;
    const auto subsets = subset_pool(leaders, rng, exhaustive);
    const bool use_oracle = sys.n() <= kOracleLengthCap;

    {
        SuiteResult s("trace_row_space");
        if (use_oracle) {
            for (const auto& bz : subsets) {
                const GfMatrix by_trace = trace_code(tower, table, bz);
                const CyclicCode c = sys.code_from_bz_dual({bz});
                const GfMatrix by_poly = oracle::generator_matrix(c.generator(), sys.n());
                if (oracle::codes_equal(by_trace, by_poly))
                    s.ok();
                else
                    s.bad("bz " + describe_subset(bz));
            }
            s.note = exhaustive ? "exhaustive" : "sampled";
        } else {
            s.note = "skipped for n > " + std::to_string(kOracleLengthCap);
        }
        out.push_back(std::move(s));
    }

    {
        SuiteResult s("vanishing_criterion_vs_direct");
        std::vector<uint64_t> nonzero_leaders;
        for (uint64_t j : leaders)
            if (j != 0) nonzero_leaders.push_back(j);
        // all single-term specs; for big fields the lambda sweep is sampled
        const bool all_singles = big->size() <= 4096;
        for (uint64_t j : nonzero_leaders) {
            const uint64_t sweep = all_singles ? big->size() : 256;
            for (uint64_t i = 0; i < sweep; ++i) {
                const uint64_t code = all_singles ? i : rng() % big->size();
                const TraceSpec spec{{j}, {big->element(code)}};
                if (vanishing_criterion(tower, table, spec) ==
                    vanishes_directly(tower, table, spec))
                    s.ok();
                else
                    s.bad("single term i=" + std::to_string(j) + " lambda=" +
                          std::to_string(code));
            }
        }
        s.note = all_singles ? "all single-term specs" : "sampled single-term specs";
        for (uint64_t it = 0; it < random_specs; ++it) {
            TraceSpec spec;
            const size_t want = 1 + rng() % std::max<size_t>(nonzero_leaders.size(), 1);
            std::vector<uint64_t> pool = nonzero_leaders;
            for (size_t k = 0; k < want && !pool.empty(); ++k) {
                const size_t pick = rng() % pool.size();
                spec.exponents.push_back(pool[pick]);
                pool.erase(pool.begin() + static_cast<ptrdiff_t>(pick));
                spec.coeffs.push_back(big->element(rng() % big->size()));
            }
            if (vanishing_criterion(tower, table, spec) == vanishes_directly(tower, table, spec))
                s.ok();
            else
                s.bad("random spec #" + std::to_string(it));
        }
        out.push_back(std::move(s));
    }

    {
        SuiteResult s("normal_trace_independence");
        const FieldElement beta = tower.find_normal_element();
        std::vector<uint64_t> nonzero_leaders;
        for (uint64_t j : leaders)
            if (j != 0) nonzero_leaders.push_back(j);
        const bool all_pairs = nonzero_leaders.size() <= 64;
        s.note = "beta=" + std::to_string(beta.code()) +
                 (all_pairs ? " all pairs" : " sampled pairs");
        auto check_pair = [&](uint64_t k, uint64_t l) {
            if (independence_check(tower, table, beta, k, l))
                s.ok();
            else
                s.bad("leaders " + std::to_string(k) + "," + std::to_string(l));
        };
        if (all_pairs) {
            for (size_t a = 0; a < nonzero_leaders.size(); ++a)
                for (size_t b = a + 1; b < nonzero_leaders.size(); ++b)
                    check_pair(nonzero_leaders[a], nonzero_leaders[b]);
        } else {
            for (uint64_t it = 0; it < 1000; ++it) {
                const uint64_t k = nonzero_leaders[rng() % nonzero_leaders.size()];
                const uint64_t l = nonzero_leaders[rng() % nonzero_leaders.size()];
                if (k != l) check_pair(k, l);
            }
        }
        out.push_back(std::move(s));
    }

    {
        SuiteResult s("one_dim_hull_scan");
        uint64_t found = 0;
        for (const auto& gens : subsets) {
            const CyclicCode c = sys.code_from_generator_leaders(gens);
            const uint64_t formula = sys.hull_dimension(c);
            const uint64_t by_oracle =
                use_oracle ? oracle::hull_dim(c.generator(), sys.n()) : formula;
            if (formula != by_oracle) {
                s.bad("generators " + describe_subset(gens) + ": formula/oracle disagree");
                continue;
            }
            if (formula == 1) ++found;
            s.ok();
        }
        // no binary or ternary cyclic code has a one-dimensional hull
        if ((sys.q() == 2 || sys.q() == 3) && found > 0)
            s.bad(std::to_string(found) + " one-dimensional hull codes over F_" +
                  std::to_string(sys.q()));
        s.note = "one_dim_hull_count=" + std::to_string(found) +
                 (exhaustive ? " (exhaustive)" : " (sampled)");
        out.push_back(std::move(s));
    }

    return out;
}

}  // namespace cyhull
