#ifndef EBOUND_VERIFY_HPP
#define EBOUND_VERIFY_HPP

#include <string>
#include <vector>

#include "ebound/interval.hpp"

namespace ebound {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

// Self-checks over coefficient orders 0..n_max: closed form vs series
// oracle, positivity and strict decrease of f_n, the numeric series and gap
// identities, Stirling laws, the partial-sum orderings and the Keller limit.
std::vector<CheckResult> run_verification(unsigned n_max, mpfr_prec_t precision_bits);

std::string verification_to_json(const std::vector<CheckResult> &checks, mpfr_prec_t precision_bits);

} // namespace ebound

#endif
