#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cyhull/errors.hpp"

namespace cyhull {

/// One q-cyclotomic coset modulo n: the orbit {a, aq, aq^2, ...} of its
/// leader (the minimal member) under multiplication by q, in orbit order.
struct CyclotomicCoset {
    uint64_t leader = 0;
    std::vector<uint64_t> elements;
    size_t size() const { return elements.size(); }
};

/// Standalone orbit computation; elements start at a (reduced mod n) and
/// follow the q-multiplication orbit, leader = min of the orbit.
CyclotomicCoset coset_of(uint64_t q, uint64_t n, uint64_t a);

/// The full partition of Z_n into q-cyclotomic cosets, with the negation
/// pairing leader(B_j) -> leader(B_{-j}). Immutable after construction.
class CosetTable {
  public:
    CosetTable(uint64_t q, uint64_t n);

    uint64_t q() const { return q_; }
    uint64_t n() const { return n_; }
    const std::vector<uint64_t>& leaders() const { return leaders_; }
    const CyclotomicCoset& coset(uint64_t leader) const;
    bool is_leader(uint64_t x) const;
    uint64_t leader_of(uint64_t a) const;  // a taken mod n
    uint64_t coset_size(uint64_t leader) const { return coset(leader).size(); }
    uint64_t neg_pair(uint64_t leader) const;
    bool is_self_paired(uint64_t leader) const { return neg_pair(leader) == leader; }

    struct Split {
        std::vector<uint64_t> self_paired;                     // T1 leaders
        std::vector<std::pair<uint64_t, uint64_t>> pairs;      // {j, -j} orbits, j < partner
    };
    Split split_t1_t2() const;

  private:
    uint64_t q_, n_;
    std::vector<uint64_t> leaders_;             // ascending
    std::map<uint64_t, CyclotomicCoset> cosets_;
    std::vector<uint32_t> leader_index_;        // element -> index into leaders_
};

}  // namespace cyhull
