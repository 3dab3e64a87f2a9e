#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gibbslab::discrete {

/// Default ceiling on the number of multinomial type classes one enumeration
/// may produce.
inline constexpr std::size_t kDefaultTypeCeiling = 10'000'000;

/// A multinomial count vector over instance labels together with the log of
/// its probability under mu^n (counts weighted by the multinomial
/// coefficient). The sufficient statistic of the empirical risk.
struct TypeClass {
    std::vector<int> counts;
    double log_weight = 0.0;
};

/// Number of count vectors of total n over num_labels labels,
/// C(n + num_labels - 1, num_labels - 1), as a double (may overflow size_t).
double count_type_classes(int n, std::size_t num_labels);

/// Every count vector of total n over mu's support, in lexicographic order,
/// with exact log multinomial weights computed via log-gamma. Labels with
/// mu == 0 still appear; their types carry -inf log weight.
/// Raises ResourceError when the type count exceeds `ceiling`.
std::vector<TypeClass> enumerate_types(int n, std::span<const double> mu,
                                       std::size_t ceiling = kDefaultTypeCeiling);

}  // namespace gibbslab::discrete
