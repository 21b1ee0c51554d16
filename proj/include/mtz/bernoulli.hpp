#ifndef MTZ_BERNOULLI_HPP
#define MTZ_BERNOULLI_HPP

#include "mtz/rational.hpp"

#include <mutex>
#include <vector>

namespace mtz {

// Bernoulli numbers in the convention t e^t/(e^t - 1) = sum_k B_k t^k/k!,
// i.e. B_1 = +1/2 and B_k = 0 for odd k >= 3. Append-only cache, safe to
// share across threads.
class BernoulliTable {
public:
    static BernoulliTable& shared();

    Rational get(unsigned k) const;
    double get_d(unsigned k) const;

private:
    mutable std::mutex mu_;
    mutable std::vector<Rational> b_;
    mutable std::vector<double> bd_;
    void grow_locked(unsigned k) const;
};

inline Rational bernoulli(unsigned k) { return BernoulliTable::shared().get(k); }
inline double bernoulli_d(unsigned k) { return BernoulliTable::shared().get_d(k); }

} // namespace mtz

#endif
