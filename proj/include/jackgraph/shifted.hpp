#pragma once

#include <map>
#include <utility>
#include <vector>

#include "jackgraph/partition.hpp"
#include "jackgraph/rational.hpp"
#include "jackgraph/symfunc.hpp"

namespace jackgraph {

/// Shifted power sum
///   ptilde_m(x) = sum_i ((x_i - theta(i-1) falling m) - (-theta(i-1) falling m)),
/// evaluated at a partition (the tail past l(nu) vanishes).
Rat ptilde_eval(int m, const Partition& nu, const Rat& theta);

/// S_m = m sum_{b in nu} (c_theta(b) falling m-1); equals ptilde_eval exactly.
Rat content_sum(const Partition& nu, const Rat& theta, int m);

/// Shifted analog p*_m with offset theta*i instead of theta*(i-1); kept as a
/// derived evaluator only.
Rat pstar_eval(int m, const Partition& nu, const Rat& theta);

/// Element of the shifted symmetric algebra: a polynomial in the generators
/// ptilde_1, ptilde_2, ... with rational coefficients.  A monomial is indexed
/// by the partition of its generator degrees; the filtered degree is the
/// largest index size with a nonzero coefficient.
class ShiftedSymFunc {
public:
    ShiftedSymFunc() = default;
    explicit ShiftedSymFunc(Rat theta) : theta_(std::move(theta)) {}

    static ShiftedSymFunc ptilde(int m, const Rat& theta);

    const Rat& theta() const { return theta_; }
    const std::map<Partition, Rat>& coeffs() const { return coeffs_; }
    void add_term(const Partition& idx, const Rat& c);
    int degree() const;  // filtered degree; -1 for zero

    Rat eval(const Partition& nu) const;

    /// Leading symmetric term [F]: top-filtration monomials with ptilde_m
    /// replaced by p_m (power-sum basis).
    SymFunc leading_term() const;

private:
    Rat theta_ = 0;
    std::map<Partition, Rat> coeffs_;
};

/// Shifted Jack polynomial P*_mu by exact interpolation: leading term fixed
/// to P_mu(.;theta), lower-filtration part determined by vanishing at every
/// partition of size < |mu|.  Memoized by (mu, theta); requires theta > 0.
const ShiftedSymFunc& shifted_jack(const Partition& mu, const Rat& theta);

/// Both sides of the dimension identity
///   dim_theta(mu,nu) / dim_theta(nu) = P*_mu(nu;theta) / (n falling m).
/// Returns (0, 0) when |nu| < |mu|.
std::pair<Rat, Rat> dimension_formula_check(const Partition& mu,
                                            const Partition& nu,
                                            const Rat& theta);

/// Shifted Schur polynomial s*_mu at x_1..x_n as a ratio of falling-factorial
/// determinants; the shifted arguments x_i + n - i must be pairwise distinct.
Rat shifted_schur_det(const Partition& mu, const std::vector<Rat>& x);

}  // namespace jackgraph
