#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "cyhull/cosets.hpp"
#include "cyhull/poly.hpp"
#include "cyhull/tower.hpp"

namespace cyhull {

/// A cyclic code of length n over F_q, keyed by its unique monic generator
/// polynomial (a divisor of x^n - 1). dim = n - deg(gen).
class CyclicCode {
  public:
    CyclicCode(Polynomial gen, uint64_t n) : gen_(std::move(gen)), n_(n) {}

    const Polynomial& generator() const { return gen_; }
    uint64_t length() const { return n_; }
    uint64_t dimension() const { return n_ - static_cast<uint64_t>(gen_.degree()); }
    bool is_zero_code() const { return dimension() == 0; }
    bool is_full_space() const { return gen_.is_one(); }

    friend bool operator==(const CyclicCode& a, const CyclicCode& b) {
        return a.n_ == b.n_ && a.gen_ == b.gen_;
    }

  private:
    Polynomial gen_;
    uint64_t n_;
};

/// Leader set standing for the basic dual zero {alpha^j : j in leaders}.
struct BasicDualZero {
    std::set<uint64_t> leaders;

    friend bool operator==(const BasicDualZero& a, const BasicDualZero& b) {
        return a.leaders == b.leaders;
    }
};

/// Bundles the tower, coset table and the factorization of x^n - 1 for one
/// (q, n); all operations on cyclic codes of that length live here.
/// Immutable after construction and safe to share across threads.
class CyclicSystem {
  public:
    CyclicSystem(uint32_t p, uint32_t e, uint64_t n);
    /// Decomposes a prime power q = p^e; throws NotPrimePower otherwise.
    static CyclicSystem from_q(uint64_t q, uint64_t n);

    const FieldTower& tower() const { return tower_; }
    const CosetTable& cosets() const { return table_; }
    const std::shared_ptr<const Field>& fq() const { return tower_.base_field(); }
    uint64_t q() const { return tower_.q(); }
    uint64_t n() const { return tower_.n(); }

    /// Monic irreducible minimal polynomial of alpha^leader over F_q,
    /// degree = |B_leader|.
    const Polynomial& minpoly(uint64_t leader) const;
    /// leader -> minimal polynomial; the product over all leaders is x^n - 1.
    const std::map<uint64_t, Polynomial>& factor_xn_minus_1() const { return factors_; }
    const Polynomial& xn_minus_1() const { return xn1_; }

    CyclicCode code_from_generator(Polynomial gen) const;
    /// Code whose dual's basic zero is the given leader set: h* = prod of
    /// minpolys, h = reciprocal(h*), gen = (x^n - 1) / h.
    CyclicCode code_from_bz_dual(const BasicDualZero& bz) const;
    /// Generator = product of the minimal polynomials of the given leaders.
    CyclicCode code_from_generator_leaders(const std::set<uint64_t>& leaders) const;

    CyclicCode dual_code(const CyclicCode& c) const;
    BasicDualZero basic_dual_zero(const CyclicCode& c) const;

    /// lcm(gen(C), gen(C-perp)); Hull(C) is the code it generates.
    Polynomial hull_generator(const CyclicCode& c) const;
    /// Hull dimension via the basic-dual-zero partition: sum of |B_j| over
    /// the leaders of BZ(C-perp) whose negation partner is absent.
    uint64_t hull_dimension(const CyclicCode& c) const;
    bool is_lcd(const CyclicCode& c) const;
    /// Witness leader when the hull is one-dimensional, empty otherwise.
    std::optional<uint64_t> one_dim_hull_witness(const CyclicCode& c) const;
    bool is_one_dim_hull(const CyclicCode& c) const { return one_dim_hull_witness(c).has_value(); }

    bool is_lcp(const CyclicCode& c, const CyclicCode& d) const;
    uint64_t intersection_dimension(const CyclicCode& c, const CyclicCode& d) const;
    CyclicCode intersection_code(const CyclicCode& c, const CyclicCode& d) const;

  private:
    FieldTower tower_;
    CosetTable table_;
    std::map<uint64_t, Polynomial> factors_;
    Polynomial xn1_;

    void check_code(const CyclicCode& c) const;
    void check_pair(const CyclicCode& c, const CyclicCode& d) const;
};

}  // namespace cyhull
