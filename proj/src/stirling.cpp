#include "norlund/stirling.hpp"

#include <stdexcept>

namespace norlund {

StirlingTable::StirlingTable(Natural max_n) : max_n_(max_n) {
    rows_.resize(max_n + 1);
    rows_[0] = {Rational(1)};  // S(0,0) = 1
    for (Natural n = 1; n <= max_n; ++n) {
        rows_[n].assign(n + 1, Rational(0));
        for (Natural k = 1; k <= n; ++k) {
            // S(n,k) = k S(n-1,k) + S(n-1,k-1)
            Rational carry = rows_[n - 1][k - 1];
            if (k < n)
                carry += Rational(static_cast<long>(k)) * rows_[n - 1][k];
            rows_[n][k] = carry;
        }
    }
}

const Rational& StirlingTable::at(Natural n, Natural k) const {
    static const Rational zero;
    if (n > max_n_)
        throw std::out_of_range("StirlingTable: index exceeds max_n");
    if (k > n)
        return zero;
    return rows_[n][k];
}

Rational stirling2(Natural n, Natural k) {
    if (k > n)
        return Rational(0);
    std::vector<Rational> row = {Rational(1)};
    for (Natural m = 1; m <= n; ++m) {
        std::vector<Rational> next(m + 1, Rational(0));
        for (Natural j = 1; j <= m; ++j) {
            next[j] = (j < m ? Rational(static_cast<long>(j)) * row[j] : Rational(0)) +
                      row[j - 1];
        }
        row = std::move(next);
    }
    return row[k];
}

}  // namespace norlund
