#pragma once

#include <vector>

#include "norlund/rational.hpp"

namespace norlund {

/// Triangle of Stirling numbers of the second kind S(n, k), built eagerly
/// up to a fixed max_n and immutable afterwards. Safe to share across
/// threads once constructed.
class StirlingTable {
public:
    explicit StirlingTable(Natural max_n);

    Natural max_n() const { return max_n_; }

    /// S(n, k); zero when k > n. Throws std::out_of_range when n > max_n.
    const Rational& at(Natural n, Natural k) const;

private:
    Natural max_n_;
    std::vector<std::vector<Rational>> rows_;
};

/// S(n, k) by the triangle recurrence, without a prebuilt table.
Rational stirling2(Natural n, Natural k);

}  // namespace norlund
