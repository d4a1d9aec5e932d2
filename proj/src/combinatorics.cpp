#include "ebound/combinatorics.hpp"

#include <mutex>

namespace ebound {

Integer factorial(unsigned long n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(unsigned long n, long k)
{
    if (k < 0 || static_cast<unsigned long>(k) > n) {
        return 0;
    }
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
    return out;
}

StirlingTable::StirlingTable(std::size_t initial_capacity)
{
    rows_.push_back({Integer(1)});
    grow_to(initial_capacity);
}

std::size_t StirlingTable::capacity() const
{
    std::shared_lock lock(mutex_);
    return rows_.size() - 1;
}

void StirlingTable::grow_to(std::size_t p_max) const
{
    std::unique_lock lock(mutex_);
    while (rows_.size() <= p_max) {
        const std::size_t p = rows_.size() - 1;
        const auto &prev = rows_.back();
        std::vector<Integer> next(p + 2);
        next[0] = 0;
        for (std::size_t q = 1; q <= p + 1; ++q) {
            Integer term = (q <= p) ? Integer(prev[q] * -static_cast<long>(p)) : Integer(0);
            term += prev[q - 1];
            next[q] = std::move(term);
        }
        rows_.push_back(std::move(next));
    }
}

Integer StirlingTable::operator()(long p, long q) const
{
    if (p < 0 || q < 0 || q > p) {
        return 0;
    }
    {
        std::shared_lock lock(mutex_);
        if (static_cast<std::size_t>(p) < rows_.size()) {
            return rows_[p][q];
        }
    }
    grow_to(static_cast<std::size_t>(p));
    std::shared_lock lock(mutex_);
    return rows_[p][q];
}

StirlingTable &shared_stirling_table()
{
    static StirlingTable table;
    return table;
}

Integer stirling1(long p, long q)
{
    return shared_stirling_table()(p, q);
}

} // namespace ebound
