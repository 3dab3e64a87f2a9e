#pragma once

#include <cstdint>
#include <vector>

#include "gibbslab/discrete/engine.hpp"
#include "gibbslab/info_report.hpp"
#include "gibbslab/problem.hpp"

namespace gibbslab::rates {

struct SweepRow {
    int n = 0;
    InfoReport joint;
    InfoReport individual;
    double gap = 0.0;  // n * skl_individual - skl_joint
};

/// Exact measures across a list of sample counts for one (problem, gamma).
struct SweepTable {
    std::uint64_t problem_fingerprint = 0;
    double gamma = 0.0;
    std::vector<SweepRow> rows;
};

/// One row per n: joint_measures, individual_measures, and the gap between
/// the summed individual and the joint symmetrized KL information.
/// Resource-ceiling errors are rethrown naming the offending n.
SweepTable sweep(const DiscreteProblem& problem, double gamma, const std::vector<int>& n_list,
                 std::size_t ceiling = discrete::kDefaultTypeCeiling);

}  // namespace gibbslab::rates
