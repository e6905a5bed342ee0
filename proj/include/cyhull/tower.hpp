#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cyhull/field.hpp"
#include "cyhull/poly.hpp"

namespace cyhull {

/// The tower F_p < F_q < F_{q^m} with q = p^e, m = ord_n(q), together with
/// a primitive n-th root of unity alpha in F_{q^m} and the canonical copy
/// of F_q inside the big field (generated by subfield_gen).
///
/// The big field is realized as F_p[z]/(modulus) with the modulus chosen by
/// a deterministic scan (lexicographic over integer-encoded coefficient
/// sequences, first irreducible wins), so a tower is reproducible from
/// (p, e, n) alone. Towers are immutable and safe to share across threads.
class FieldTower {
  public:
    FieldTower(uint32_t p, uint32_t e, uint64_t n);

    uint32_t p() const { return p_; }
    uint32_t e() const { return e_; }
    uint32_t m() const { return m_; }
    uint64_t q() const { return q_; }
    uint64_t n() const { return n_; }
    uint64_t big_size() const { return big_->size(); }

    const std::shared_ptr<const Field>& base_field() const { return base_; }  // F_q
    const std::shared_ptr<const Field>& big_field() const { return big_; }    // F_{q^m}

    FieldElement alpha() const { return big_->element(alpha_code_); }
    FieldElement alpha_pow(uint64_t i) const;
    FieldElement subfield_gen() const { return big_->element(gamma_code_); }

    /// a^(q^k) for a in the big field.
    FieldElement frobenius(const FieldElement& a, uint64_t k) const;
    /// Tr_{q^m -> q^k}(a) = sum of a^(q^(k*i)), i = 0 .. m/k - 1; requires k | m.
    FieldElement relative_trace(const FieldElement& a, uint32_t k) const;
    /// Tr_{q^m -> q}(a) coerced into the base field.
    FieldElement trace_to_base(const FieldElement& a) const;

    /// True iff a^(q^k) = a, i.e. a lies in the F_{q^k} layer; requires k | m.
    bool is_in_subfield(const FieldElement& a, uint32_t k) const;
    /// Rewrites a big-field element of the F_q copy as a base-field element.
    FieldElement coerce_to_subfield(const FieldElement& a) const;
    /// Embeds a base-field element into the big field (inverse of coercion).
    FieldElement embed(const FieldElement& a) const;
    Polynomial embed_poly(const Polynomial& f) const;
    /// Evaluates a base- or big-field polynomial at a big-field point.
    FieldElement eval_at(const Polynomial& f, const FieldElement& point) const;

    /// True iff the Frobenius orbit {a, a^q, ..., a^(q^(m-1))} is an
    /// F_q-basis of the big field.
    bool is_normal(const FieldElement& a) const;
    /// First normal element in code scan order; its trace to F_q is nonzero.
    FieldElement find_normal_element() const;

  private:
    uint32_t p_, e_, m_;
    uint64_t q_, n_;
    std::shared_ptr<const Field> base_;
    std::shared_ptr<const Field> big_;
    uint64_t alpha_code_ = 0;
    uint64_t gamma_code_ = 0;
    std::vector<std::vector<uint32_t>> gamma_pow_coords_;  // e rows over F_p, length e*m
    std::vector<uint64_t> alpha_pow_cache_;                // filled when n is small

    void check_element(const FieldElement& a) const;
};

/// Convenience wrapper matching the tower construction contract.
FieldTower build_tower(uint32_t p, uint32_t e, uint64_t n);

}  // namespace cyhull
