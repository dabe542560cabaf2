#pragma once

#include <map>

#include "jackgraph/partition.hpp"
#include "jackgraph/rational.hpp"
#include "jackgraph/symfunc.hpp"

namespace jackgraph {

/// Jack polynomial P_mu(.;theta) as a unitriangular monomial expansion.
struct JackBasisElement {
    Partition index;
    Rat theta;
    SymFunc expansion;           // monomial basis: m_mu + lower dominance terms
    SymFunc powersum_expansion;  // the same element in the p basis
    Rat norm;                    // (P_mu, P_mu)_theta
};

/// Hook products over the boxes of mu:
///   H  = prod (a + theta l + 1)   (normalizes shifted Jack polynomials)
///   H' = prod (a + theta l + theta)  (integral form J_mu = H' P_mu)
struct HookData {
    Rat H = 1;
    Rat Hprime = 1;
};
HookData hook_products(const Partition& mu, const Rat& theta);

/// Gram-Schmidt construction from the characterization: unitriangular over
/// dominance in the monomial basis, orthogonal under (.,.)_theta.  Results
/// are memoized by (mu, theta); theta = 0 returns the monomial degeneration.
const JackBasisElement& jack_P(const Partition& mu, const Rat& theta);

/// Pieri multiplicity kappa_theta(lambda, nu) for a cover pair lambda -> nu:
/// a product over the boxes of lambda in the column of the added box.
/// Evaluated with the theta-factor of arm-zero boxes cancelled, so theta = 0
/// (the Kingman limit) is an ordinary exact evaluation.
Rat pieri_kappa(const Partition& lambda, const Partition& nu, const Rat& theta);

/// True if the uncancelled product has a 0/0 factor at theta = 0, i.e. the
/// column contains a box of arm length zero.
bool pieri_kappa_singular_at_zero(const Partition& lambda, const Partition& nu);

enum class KappaJMethod { Ratio, Corners };

/// Pieri multiplicity for the integral form J:
///   Ratio:   H'(lambda)/H'(nu) * kappa_theta(lambda,nu)
///   Corners: (1/theta) * prod_{convex corners} r / prod_{concave != star} r
/// with r the theta-axial distance to the addable corner of the new box.
Rat pieri_kappa_J(const Partition& lambda, const Partition& nu, const Rat& theta,
                  KappaJMethod method);

/// Coefficients of a homogeneous degree-d symmetric function in the Jack
/// basis, by back-substitution through the unitriangular expansions.
std::map<Partition, Rat> expand_in_jack(const SymFunc& f, const Rat& theta,
                                        int degree);

}  // namespace jackgraph
