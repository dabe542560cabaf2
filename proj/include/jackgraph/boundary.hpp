#pragma once

#include <string>
#include <vector>

#include "jackgraph/partition.hpp"
#include "jackgraph/rational.hpp"
#include "jackgraph/shifted.hpp"
#include "jackgraph/symfunc.hpp"

namespace jackgraph {

/// Point of the Thoma simplex: finite alpha and beta sequences, weakly
/// decreasing, entries in (0,1], with gamma = 1 - sum alpha - sum beta >= 0
/// stored implicitly.
class ThomaPoint {
public:
    ThomaPoint() = default;
    ThomaPoint(std::vector<Rat> alpha, std::vector<Rat> beta);

    const std::vector<Rat>& alpha() const { return alpha_; }
    const std::vector<Rat>& beta() const { return beta_; }
    Rat gamma() const;

    bool operator==(const ThomaPoint&) const = default;
    std::string to_string() const;

private:
    std::vector<Rat> alpha_;
    std::vector<Rat> beta_;
};

/// Frobenius embedding (a_j/n; b_j/n) of a nonempty diagram.
ThomaPoint embed_omega(const Partition& nu);

/// Content-split embedding: rows of nu+ and columns of nu- over n; the
/// coordinates always fill the simplex (gamma = 0).  Requires theta > 0.
ThomaPoint embed_omega_theta(const Partition& nu, const Rat& theta);

/// theta-extension homomorphism: rewrite f in power sums, send p_1 to 1 and
/// p_m to sum alpha^m + (-theta)^{m-1} sum beta^m.
Rat theta_extend_eval(const SymFunc& f, const ThomaPoint& omega, const Rat& theta);

/// Value of p_m under the extension (p_1 = 1).
Rat theta_extend_power(int m, const ThomaPoint& omega, const Rat& theta);

struct BoundaryKernelValue {
    Partition mu;
    ThomaPoint omega;
    Rat theta;
    Rat value;
};

/// Boundary Martin kernel K(mu; omega) = theta-extension of P_mu(.;theta).
BoundaryKernelValue martin_kernel_boundary(const Partition& mu,
                                           const ThomaPoint& omega,
                                           const Rat& theta);

/// Finite Martin kernel through the shifted-Jack dimension identity,
/// K(mu,nu) = P*_mu(nu;theta) / (n falling m); exact, and usable at diagram
/// sizes far beyond what the dimension recursion can enumerate.
Rat martin_kernel_via_interpolation(const Partition& mu, const Partition& nu,
                                    const Rat& theta);

/// Recovers a finite-support Thoma point from the extended power-sum moments
/// (phi(p_2), ..., phi(p_M)).  The moments must come from a point with at
/// most k distinct alpha and k distinct beta values and M >= 2(2k+1).
/// Throws std::runtime_error when no such point reproduces the data.
ThomaPoint recover_thoma_from_moments(const std::vector<Rat>& moments,
                                      const Rat& theta, int k);

struct AsymptoticsRow {
    int n = 0;
    Rat scaled_value;       // F(nu) / n^m
    Rat boundary_value;     // f(omega_nu(theta) | theta)
    Rat error;              // difference of the two
    Rat sq_error_times_n;   // error^2 * n, the exact form of (error sqrt n)^2
};

/// Per-diagram comparison of F(nu)/n^m against the theta-extension of the
/// leading term at the content-split embedding.
std::vector<AsymptoticsRow> asymptotics_experiment(
    const ShiftedSymFunc& F, const std::vector<Partition>& diagrams,
    const Rat& theta);

}  // namespace jackgraph
