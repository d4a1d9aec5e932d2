#ifndef EBOUND_COMBINATORICS_HPP
#define EBOUND_COMBINATORICS_HPP

#include <cstddef>
#include <shared_mutex>
#include <vector>

#include "ebound/rational.hpp"

namespace ebound {

Integer factorial(unsigned long n);

// C(n, k); zero when k < 0 or k > n.
Integer binomial(unsigned long n, long k);

// Signed Stirling numbers of the first kind, memoized in a triangular table
// that grows on demand.
//
//   S1(p+1, q) = -p * S1(p, q) + S1(p, q-1),   S1(p, p) = 1,
//   S1(p, 0) = 0 for p >= 1,  S1(0, 0) = 1,  S1(p, q) = 0 outside 0 <= q <= p.
//
// Lookups take a shared lock; growth takes the exclusive lock, so one table
// may be shared between threads.
class StirlingTable {
public:
    explicit StirlingTable(std::size_t initial_capacity = 0);

    Integer operator()(long p, long q) const;

    // Largest row index currently stored.
    std::size_t capacity() const;

private:
    void grow_to(std::size_t p_max) const;

    mutable std::shared_mutex mutex_;
    // rows_[p][q] for 0 <= q <= p.
    mutable std::vector<std::vector<Integer>> rows_;
};

// Process-wide table used by the free functions below and by the
// coefficient routines.
StirlingTable &shared_stirling_table();

Integer stirling1(long p, long q);

} // namespace ebound

#endif
