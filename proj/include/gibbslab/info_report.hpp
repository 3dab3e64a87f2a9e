#pragma once

namespace gibbslab {

/// Which pair of random variables a report describes.
enum class PairKind {
    joint,       // (W; S), the hypothesis against the whole dataset
    individual,  // (W; Z_i), the hypothesis against one sample
};

/// Measured information quantities at one (gamma, n). All divergences are in
/// nats; gen is in loss units.
///
/// Contracts (enforced by producers, asserted in tests):
///   skl == mutual + lautum,
///   for the joint pair with gamma > 0: gen == skl / gamma,
///   for the individual pair: gen is the generalization error reconstructed
///   from per-sample decoupled-minus-coupled loss contributions, which equals
///   the joint gen identically.
struct InfoReport {
    int n = 0;
    double gamma = 0.0;
    double mutual = 0.0;
    double lautum = 0.0;
    double skl = 0.0;
    double chi2 = 0.0;
    double gen = 0.0;
    PairKind kind = PairKind::joint;
};

}  // namespace gibbslab
