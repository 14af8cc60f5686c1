#include "unitforge/abelian.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace unitforge {

AbelianGroupType::AbelianGroupType(long rank, std::vector<Int> factors)
    : free_rank(rank), invariant_factors(std::move(factors)) {
    if (free_rank < 0) throw std::invalid_argument("AbelianGroupType: negative rank");
    for (size_t i = 0; i < invariant_factors.size(); ++i) {
        if (invariant_factors[i] < 2)
            throw std::invalid_argument("AbelianGroupType: factor < 2");
        if (i > 0 && invariant_factors[i] % invariant_factors[i - 1] != 0)
            throw std::invalid_argument("AbelianGroupType: divisibility chain violated");
    }
}

Int AbelianGroupType::torsion_exponent() const {
    return invariant_factors.empty() ? Int(1) : invariant_factors.back();
}

Int AbelianGroupType::torsion_order() const {
    Int n = 1;
    for (const Int& d : invariant_factors) n *= d;
    return n;
}

std::vector<Int> AbelianGroupType::torsion_primes() const {
    // Every prime of the torsion part divides the last invariant factor.
    std::vector<Int> primes;
    Int m = torsion_exponent();
    for (Int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) primes.push_back(m);
    return primes;
}

std::string AbelianGroupType::to_string() const {
    if (is_trivial()) return "1";
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first) os << " x ";
        first = false;
    };
    if (free_rank == 1) {
        sep();
        os << "Z";
    } else if (free_rank > 1) {
        sep();
        os << "Z^" << free_rank;
    }
    // Render repeated factors with powers, largest factor first.
    std::map<Int, int, std::greater<Int>> mult;
    for (const Int& d : invariant_factors) mult[d]++;
    for (const auto& [d, k] : mult) {
        sep();
        os << "C" << d.get_str();
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

}  // namespace unitforge
