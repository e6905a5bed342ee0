#include "cyhull/trace.hpp"

#include <string>

namespace cyhull {

namespace {

void require_trace_length(const FieldTower& tower) {
    if (tower.n() != tower.big_size() - 1)
        throw LengthNotQmMinus1("trace representation requires n = q^m - 1, got n = " +
                                std::to_string(tower.n()));
}

void require_spec_shape(const CosetTable& table, const TraceSpec& spec) {
    if (spec.exponents.size() != spec.coeffs.size())
        throw Error("trace spec exponents and coefficients differ in length");
    std::set<uint64_t> seen;
    for (uint64_t i : spec.exponents) {
        if (!table.is_leader(i))
            throw Error("trace spec exponent " + std::to_string(i) + " is not a coset leader");
        if (!seen.insert(i).second)
            throw DuplicateCoset("repeated coset leader " + std::to_string(i));
    }
}

// sum_j lambda_j * x^(i_j) evaluated in the big field
FieldElement trace_argument(const FieldTower& tower, const TraceSpec& spec,
                            const FieldElement& x) {
    FieldElement acc = tower.big_field()->zero();
    for (size_t j = 0; j < spec.exponents.size(); ++j)
        acc = acc + spec.coeffs[j] * x.pow(static_cast<int64_t>(spec.exponents[j]));
    return acc;
}

}  // namespace

std::vector<FieldElement> trace_codeword(const FieldTower& tower, const CosetTable& table,
                                         const TraceSpec& spec) {
    require_trace_length(tower);
    require_spec_shape(table, spec);
    for (const auto& c : spec.coeffs)
        if (&c.field() != tower.big_field().get())
            throw FieldMismatch("trace coefficient is not a big-field element");
    std::vector<FieldElement> word;
    word.reserve(tower.n());
    for (uint64_t k = 0; k < tower.n(); ++k)
        word.push_back(tower.trace_to_base(trace_argument(tower, spec, tower.alpha_pow(k))));
    return word;
}

GfMatrix trace_code(const FieldTower& tower, const CosetTable& table,
                    const std::set<uint64_t>& bz_leaders) {
    require_trace_length(tower);
    const auto& big = tower.big_field();
    std::vector<std::vector<uint64_t>> rows;
    for (uint64_t leader : bz_leaders) {
        if (!table.is_leader(leader))
            throw Error("basic dual zero member " + std::to_string(leader) +
                        " is not a coset leader");
        // lambda runs over {z^b : b < m}, an F_q-basis of the big field
        // (z generates it over F_p, so over F_q as well); z^b has code p^b
        uint64_t basis_code = 1;
        for (uint32_t b = 0; b < tower.m(); ++b) {
            const TraceSpec spec{{leader}, {big->element(basis_code)}};
            const auto word = trace_codeword(tower, table, spec);
            std::vector<uint64_t> row;
            row.reserve(word.size());
            for (const auto& e : word) row.push_back(e.code());
            rows.push_back(std::move(row));
            basis_code *= big->characteristic();
        }
    }
    return GfMatrix::from_code_rows(tower.base_field(), tower.n(), std::move(rows));
}

bool vanishing_criterion(const FieldTower& tower, const CosetTable& table,
                         const TraceSpec& spec) {
    require_trace_length(tower);
    require_spec_shape(table, spec);
    for (size_t j = 0; j < spec.exponents.size(); ++j) {
        if (spec.exponents[j] == 0)
            throw ExponentZero("vanishing criterion requires exponents >= 1");
        const auto delta = static_cast<uint32_t>(table.coset_size(spec.exponents[j]));
        if (!tower.relative_trace(spec.coeffs[j], delta).is_zero()) return false;
    }
    return true;
}

bool vanishes_directly(const FieldTower& tower, const CosetTable& table, const TraceSpec& spec) {
    require_trace_length(tower);
    require_spec_shape(table, spec);
    for (size_t j = 0; j < spec.exponents.size(); ++j)
        if (spec.exponents[j] == 0)
            throw ExponentZero("direct vanishing check requires exponents >= 1");
    const auto& big = tower.big_field();
    for (uint64_t code = 0; code < big->size(); ++code) {
        const FieldElement value =
            tower.relative_trace(trace_argument(tower, spec, big->element(code)), 1);
        if (!value.is_zero()) return false;
    }
    return true;
}

bool independence_check(const FieldTower& tower, const CosetTable& table,
                        const FieldElement& beta, uint64_t k, uint64_t l) {
    require_trace_length(tower);
    if (&beta.field() != tower.big_field().get())
        throw FieldMismatch("beta is not a big-field element");
    if (!tower.is_normal(beta)) throw NotNormal("beta is not normal over F_q");
    if (table.leader_of(k) == table.leader_of(l))
        throw SameCoset("exponents " + std::to_string(k) + " and " + std::to_string(l) +
                        " lie in the same coset");
    std::vector<std::vector<uint64_t>> rows(2);
    for (uint64_t s = 0; s < tower.n(); ++s) {
        const FieldElement x = tower.alpha_pow(s);
        rows[0].push_back(tower.trace_to_base(beta * x.pow(static_cast<int64_t>(k))).code());
        rows[1].push_back(tower.trace_to_base(beta * x.pow(static_cast<int64_t>(l))).code());
    }
    const auto m = GfMatrix::from_code_rows(tower.base_field(), tower.n(), std::move(rows));
    return rank(m) == 2;
}

}  // namespace cyhull
