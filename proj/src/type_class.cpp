#include "gibbslab/discrete/type_class.hpp"

#include <cmath>
#include <string>

#include "gibbslab/errors.hpp"
#include "gibbslab/logspace.hpp"

namespace gibbslab::discrete {

namespace {

double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

double count_type_classes(int n, std::size_t num_labels) {
    if (n < 0 || num_labels == 0) return 0.0;
    return std::round(std::exp(log_binomial(n + static_cast<int>(num_labels) - 1,
                                            static_cast<int>(num_labels) - 1)));
}

std::vector<TypeClass> enumerate_types(int n, std::span<const double> mu, std::size_t ceiling) {
    if (n < 0) {
        throw ArgumentError("enumerate_types: n must be nonnegative");
    }
    if (mu.empty()) {
        throw ArgumentError("enumerate_types: empty label set");
    }
    const double total = count_type_classes(n, mu.size());
    if (total > static_cast<double>(ceiling)) {
        throw ResourceError("enumerate_types: " + std::to_string(total) +
                            " type classes exceed the ceiling of " + std::to_string(ceiling));
    }

    const std::size_t m = mu.size();
    std::vector<double> log_mu(m);
    for (std::size_t z = 0; z < m; ++z) {
        log_mu[z] = mu[z] > 0.0 ? std::log(mu[z]) : kNegInf;
    }
    const double log_n_fact = std::lgamma(n + 1.0);

    std::vector<TypeClass> types;
    types.reserve(static_cast<std::size_t>(total));

    std::vector<int> counts(m, 0);
    // Walk all compositions of n into m parts, lexicographically.
    auto emit = [&]() {
        double lw = log_n_fact;
        bool impossible = false;
        for (std::size_t z = 0; z < m; ++z) {
            lw -= std::lgamma(counts[z] + 1.0);
            if (counts[z] > 0) {
                if (log_mu[z] == kNegInf) {
                    impossible = true;
                    break;
                }
                lw += counts[z] * log_mu[z];
            }
        }
        types.push_back(TypeClass{counts, impossible ? kNegInf : lw});
    };
    // Recursive descent over label positions, iteratively via an index stack.
    // Position z takes every value in [0, remaining]; the last label absorbs
    // the remainder.
    struct Frame {
        std::size_t z;
        int value;
        int remaining;
    };
    std::vector<Frame> stack;
    stack.push_back({0, -1, n});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.z == m - 1) {
            counts[f.z] = f.remaining;
            emit();
            stack.pop_back();
            continue;
        }
        ++f.value;
        if (f.value > f.remaining) {
            counts[f.z] = 0;
            stack.pop_back();
            continue;
        }
        counts[f.z] = f.value;
        stack.push_back({f.z + 1, -1, f.remaining - f.value});
    }
    return types;
}

}  // namespace gibbslab::discrete
