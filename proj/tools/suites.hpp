#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hkt/check.hpp"
#include "hkt/forms.hpp"
#include "hkt/report.hpp"

namespace hkt::cli {

/// Frames, twist convention, strong HKT for both sides, (4,4), common metric, descent,
/// Gauduchon and the axis family on the Hopf surface with multiplier q.
CheckList hopf_checks(const Rational& q);

/// Euclidean metric with both frames: all torsions vanish; flat lattice connections have
/// zero curvature.
CheckList flat_checks();

struct ModuliOptions {
    int N = 4;
    int n = 2;
    double tol = 1e-10;
    /// Perturbation size for the ASD-flow run; no flow when empty.
    std::optional<double> flow_eps;
    std::uint64_t seed = 1;
    int form_pairs = 100;
    int random_forms = 8;
    /// Where to store the final connection of the flow, if any.
    std::string snapshot;
};

CheckList moduli_checks(const ModuliOptions& opts);

struct DegreeResult {
    CheckList checks;
    Rational degree;
    Rational slope;
    std::string verdict;
};

/// Degree of a curvature given as F / 2 pi against omega, cross-checked on the lattice.
DegreeResult degree_checks(const RationalForm& F_hat, const RationalForm& omega, int rank,
                           const std::vector<Rational>& sub_slopes);

/// Degree, slope and stability examples with known answers.
CheckList degree_examples();

/// d^2 = 0, graded Leibniz, (p,q) completeness and idempotence, (3,0) vanishing, Lambda omega = 2
/// and ** = Id on 2-forms, each on `count` seeded random exact forms.
CheckList calculus_checks(std::uint64_t seed, int count = 100);

/// Everything above with default parameters.
VerificationReport full_report(std::uint64_t seed);

}  // namespace hkt::cli
