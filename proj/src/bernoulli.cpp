#include "mtz/bernoulli.hpp"

namespace mtz {

BernoulliTable& BernoulliTable::shared() {
    static BernoulliTable t;
    return t;
}

// From t e^t = (e^t - 1) sum B_k t^k/k!, comparing t^{n+1} coefficients:
//   sum_{k=0}^{n} C(n+1, k) B_k = n + 1.
void BernoulliTable::grow_locked(unsigned k) const {
    if (b_.empty()) {
        b_.push_back(rat(1));
        bd_.push_back(1.0);
    }
    while (b_.size() <= k) {
        unsigned n = static_cast<unsigned>(b_.size());
        Rational acc = rat(0);
        for (unsigned j = 0; j < n; ++j)
            acc += rat(binomial_uu(n + 1, j), Int(1)) * b_[j];
        Rational bn = (rat(n + 1) - acc) / rat(n + 1);
        b_.push_back(bn);
        bd_.push_back(to_double(bn));
    }
}

Rational BernoulliTable::get(unsigned k) const {
    std::lock_guard<std::mutex> lock(mu_);
    grow_locked(k);
    return b_[k];
}

double BernoulliTable::get_d(unsigned k) const {
    std::lock_guard<std::mutex> lock(mu_);
    grow_locked(k);
    return bd_[k];
}

} // namespace mtz
