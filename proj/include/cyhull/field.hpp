#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <vector>

#include "cyhull/errors.hpp"

namespace cyhull {

class FieldElement;

/// Arithmetic engine for a finite field F_{p^e}. Prime fields carry no
/// modulus; extension fields are F_p[z]/(modulus) with a monic irreducible
/// modulus of degree e, coefficients low-to-high.
///
/// Elements are addressed by their integer code sum(c_i * p^i) over the
/// power-basis coordinates c_i in [0, p). Fields are created through the
/// factories and compared by object identity; a Field is immutable and
/// safe to share across threads.
class Field : public std::enable_shared_from_this<Field> {
  public:
    static std::shared_ptr<const Field> prime_field(uint32_t p);
    static std::shared_ptr<const Field> extension_field(uint32_t p,
                                                        std::vector<uint32_t> modulus);

    uint32_t characteristic() const { return p_; }
    uint32_t degree() const { return deg_; }  // over F_p; 1 for prime fields
    uint64_t size() const { return size_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }  // empty when prime

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement element(uint64_t code) const;
    FieldElement from_coeffs(const std::vector<uint32_t>& coeffs) const;

    std::vector<uint32_t> decode(uint64_t code) const;
    uint64_t encode(const std::vector<uint32_t>& coeffs) const;

    // Code-level arithmetic.
    uint64_t add(uint64_t a, uint64_t b) const;
    uint64_t sub(uint64_t a, uint64_t b) const;
    uint64_t neg(uint64_t a) const;
    uint64_t mul(uint64_t a, uint64_t b) const;
    uint64_t inv(uint64_t a) const;
    uint64_t div(uint64_t a, uint64_t b) const;
    uint64_t pow(uint64_t base, int64_t exp) const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

  private:
    Field(uint32_t p, uint32_t deg, std::vector<uint32_t> modulus);

    uint32_t p_;
    uint32_t deg_;
    uint64_t size_;
    std::vector<uint32_t> modulus_;
    // x^(deg + k) mod modulus for k = 0 .. deg-2, used during reduction
    std::vector<std::vector<uint32_t>> reduction_rows_;
};

/// Value handle for one element of a Field. Keeps its field alive.
class FieldElement {
  public:
    FieldElement(std::shared_ptr<const Field> field, uint64_t code)
        : field_(std::move(field)), code_(code) {}

    const Field& field() const { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const { return field_; }
    uint64_t code() const { return code_; }
    std::vector<uint32_t> coeffs() const { return field_->decode(code_); }
    bool is_zero() const { return code_ == 0; }

    FieldElement operator-() const { return {field_, field_->neg(code_)}; }
    FieldElement inv() const { return {field_, field_->inv(code_)}; }
    FieldElement pow(int64_t e) const { return {field_, field_->pow(code_, e)}; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_.get() == b.field_.get() && a.code_ == b.code_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  private:
    std::shared_ptr<const Field> field_;
    uint64_t code_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

namespace detail {
inline void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (&a.field() != &b.field())
        throw FieldMismatch("operands belong to different fields");
}
}  // namespace detail

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    detail::require_same_field(a, b);
    return {a.field_, a.field().add(a.code_, b.code_)};
}
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    detail::require_same_field(a, b);
    return {a.field_, a.field().sub(a.code_, b.code_)};
}
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    detail::require_same_field(a, b);
    return {a.field_, a.field().mul(a.code_, b.code_)};
}
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    detail::require_same_field(a, b);
    return {a.field_, a.field().div(a.code_, b.code_)};
}

}  // namespace cyhull
