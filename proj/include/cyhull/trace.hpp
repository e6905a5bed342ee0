#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "cyhull/cosets.hpp"
#include "cyhull/oracle.hpp"
#include "cyhull/tower.hpp"

namespace cyhull {

/// One trace expression sum_j Tr(lambda_j x^(i_j)) over a tower with
/// n = q^m - 1: exponents are pairwise distinct coset leaders, coeffs are
/// big-field elements aligned with them.
struct TraceSpec {
    std::vector<uint64_t> exponents;
    std::vector<FieldElement> coeffs;
};

/// (Tr_{q^m->q}(sum_j lambda_j x^(i_j)))_x at x = alpha^0, ..., alpha^(n-1),
/// entries coerced into F_q.
std::vector<FieldElement> trace_codeword(const FieldTower& tower, const CosetTable& table,
                                         const TraceSpec& spec);

/// Generator matrix over F_q spanning the trace code of the given basic
/// dual zero: rows are trace codewords with each lambda_j running over the
/// power basis of F_{q^m}.
GfMatrix trace_code(const FieldTower& tower, const CosetTable& table,
                    const std::set<uint64_t>& bz_leaders);

/// Predicts whether the trace expression vanishes at every point: true iff
/// Tr_{q^m->q^(delta_j)}(lambda_j) = 0 for every term (for delta_j = m the
/// relative trace is the identity, so the coefficient itself must be zero).
/// Exponents must be nonzero and in pairwise distinct cosets.
bool vanishing_criterion(const FieldTower& tower, const CosetTable& table, const TraceSpec& spec);

/// Evaluates the trace expression at all q^m points (including x = 0).
bool vanishes_directly(const FieldTower& tower, const CosetTable& table, const TraceSpec& spec);

/// True iff (Tr(beta x^k))_x and (Tr(beta x^l))_x are F_q-independent;
/// beta must be normal and k, l must lie in distinct cosets.
bool independence_check(const FieldTower& tower, const CosetTable& table,
                        const FieldElement& beta, uint64_t k, uint64_t l);

}  // namespace cyhull
