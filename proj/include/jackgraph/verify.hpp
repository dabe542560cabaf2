#pragma once

#include <string>
#include <vector>

#include "jackgraph/rational.hpp"

namespace jackgraph::verify {

struct Result {
    std::string suite;
    bool pass = true;
    long checks = 0;
    std::string detail;  // first counterexample, or a summary line

    void fail(const std::string& counterexample) {
        if (pass) detail = counterexample;
        pass = false;
    }
};

/// p_1 P_lambda expanded in the Jack basis equals the kappa_theta edge map.
Result pieri(int max_lambda, const std::vector<Rat>& thetas);

/// dim_hook == dim_recursive up to max_nu; brute-force path-weight sums up
/// to brute_max; coherence identity at every level.
Result hook(int max_nu, const std::vector<Rat>& thetas, int brute_max);

/// Corner form of kappa_J equals the hook-ratio form on every edge.
Result corners(int max_level, const std::vector<Rat>& thetas);

/// dim(mu,nu)/dim(nu) == P*_mu(nu)/(n falling m); at theta = 1 the
/// interpolation polynomial also matches the determinant form.
Result dimension_formula(int max_mu, int max_nu, const std::vector<Rat>& thetas);

/// kappa_theta at theta = 0 equals the Kingman multiplicity; kappa_1 == 1.
Result kingman_limit(int max_level);

/// Boundary kernel non-negative over a deterministic rational grid of the
/// simplex; moment recovery round-trips on small-support points.
Result positivity(int max_mu, const std::vector<Rat>& thetas);

/// Harmonicity defect of measure-induced functions is exactly zero.
Result harmonicity(int max_level, const std::vector<Rat>& thetas);

/// Level distributions sum to 1; the theta = 1 delta at the gamma vertex
/// gives the (dim)^2 / n! masses.
Result normalization(int max_n, const std::vector<Rat>& thetas);

/// Content sum S_m equals ptilde_m(nu).
Result content_sum(int max_nu, int max_m, const std::vector<Rat>& thetas);

/// Shifted Schur determinant equals the theta = 1 interpolation polynomial.
Result schur_det(int max_mu, int max_lambda);

/// Runs the suite by CLI name with default bounds scaled by max_level.
Result run_by_name(const std::string& name, int max_level,
                   const std::vector<Rat>& thetas);

std::vector<std::string> suite_names();

}  // namespace jackgraph::verify
