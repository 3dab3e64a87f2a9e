#include "gibbslab/rates/sweep.hpp"

#include <string>

#include "gibbslab/errors.hpp"

namespace gibbslab::rates {

SweepTable sweep(const DiscreteProblem& problem, double gamma, const std::vector<int>& n_list,
                 std::size_t ceiling) {
    if (n_list.empty()) {
        throw ArgumentError("sweep: n_list must be nonempty");
    }
    for (std::size_t i = 1; i < n_list.size(); ++i) {
        if (n_list[i] <= n_list[i - 1]) {
            throw ArgumentError("sweep: n_list must be strictly increasing");
        }
    }
    SweepTable table;
    table.problem_fingerprint = problem.fingerprint();
    table.gamma = gamma;
    table.rows.reserve(n_list.size());
    for (int n : n_list) {
        const GibbsParams params{gamma, n};
        SweepRow row;
        row.n = n;
        try {
            row.joint = discrete::joint_measures(problem, params, ceiling);
            row.individual = discrete::individual_measures(problem, params, ceiling);
        } catch (const ResourceError& e) {
            throw ResourceError("sweep: at n = " + std::to_string(n) + ": " + e.what());
        }
        row.gap = static_cast<double>(n) * row.individual.skl - row.joint.skl;
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace gibbslab::rates
