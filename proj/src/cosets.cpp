#include "cyhull/cosets.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cyhull {

namespace {
void require_coprime(uint64_t q, uint64_t n) {
    if (n == 0) throw Error("n must be positive");
    if (std::gcd(q, n) != 1)
        throw NotCoprime("gcd(n, q) != 1 for n = " + std::to_string(n) +
                         ", q = " + std::to_string(q));
}
}  // namespace

CyclotomicCoset coset_of(uint64_t q, uint64_t n, uint64_t a) {
    require_coprime(q, n);
    const uint64_t qr = q % n;
    a %= n;
    CyclotomicCoset c;
    uint64_t x = a;
    do {
        c.elements.push_back(x);
        x = (x * qr) % n;
    } while (x != a);
    c.leader = *std::min_element(c.elements.begin(), c.elements.end());
    return c;
}

CosetTable::CosetTable(uint64_t q, uint64_t n) : q_(q), n_(n) {
    require_coprime(q, n);
    std::vector<bool> seen(n, false);
    leader_index_.assign(n, 0);
    for (uint64_t a = 0; a < n; ++a) {
        if (seen[a]) continue;
        CyclotomicCoset c = coset_of(q, n, a);  // a is minimal among unseen, so it leads
        for (uint64_t x : c.elements) seen[x] = true;
        const auto idx = static_cast<uint32_t>(leaders_.size());
        for (uint64_t x : c.elements) leader_index_[x] = idx;
        leaders_.push_back(c.leader);
        cosets_.emplace(c.leader, std::move(c));
    }
}

const CyclotomicCoset& CosetTable::coset(uint64_t leader) const {
    const auto it = cosets_.find(leader);
    if (it == cosets_.end())
        throw Error(std::to_string(leader) + " is not a coset leader mod " + std::to_string(n_));
    return it->second;
}

bool CosetTable::is_leader(uint64_t x) const { return cosets_.count(x) != 0; }

uint64_t CosetTable::leader_of(uint64_t a) const {
    return leaders_[leader_index_[a % n_]];
}

uint64_t CosetTable::neg_pair(uint64_t leader) const {
    const CyclotomicCoset& c = coset(leader);
    return leader_of((n_ - c.leader % n_) % n_);
}

CosetTable::Split CosetTable::split_t1_t2() const {
    Split out;
    for (uint64_t j : leaders_) {
        const uint64_t partner = neg_pair(j);
        if (partner == j) {
            out.self_paired.push_back(j);
        } else if (j < partner) {
            out.pairs.emplace_back(j, partner);
        }
    }
    return out;
}

}  // namespace cyhull
