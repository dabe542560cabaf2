#pragma once

#include <functional>

#include "jackgraph/jack.hpp"
#include "jackgraph/partition.hpp"
#include "jackgraph/rational.hpp"

namespace jackgraph {

/// Edge-multiplicity rule for the weighted Young graph.
struct WeightedGraphView {
    enum class Rule { Jack, Kingman };
    Rule rule = Rule::Jack;
    Rat theta = 1;

    static WeightedGraphView jack(const Rat& theta);
    static WeightedGraphView kingman();

    /// Multiplicity of the edge lambda -> nu under this view.
    Rat kappa(const Partition& lambda, const Partition& nu) const;

    bool operator<(const WeightedGraphView& o) const {
        if (rule != o.rule) return rule < o.rule;
        return theta < o.theta;
    }
};

/// kappa(lambda, nu) = m_k(nu), k the length of the row of nu holding the
/// added box.
int kingman_kappa(const Partition& lambda, const Partition& nu);

/// Weighted count of saturated chains mu -> nu; memoized over the interval.
Rat dim_recursive(const Partition& mu, const Partition& nu,
                  const WeightedGraphView& view);

/// dim_theta(nu) = |nu|! / H_theta(nu); requires theta > 0.
Rat dim_hook(const Partition& nu, const Rat& theta);

/// K(mu, nu) = dim(mu, nu) / dim(nu).
Rat martin_kernel_finite(const Partition& mu, const Partition& nu,
                         const WeightedGraphView& view);

/// sum_{nu covers lambda} kappa(lambda,nu) phi(nu) - phi(lambda); zero iff
/// phi is harmonic at lambda.
Rat harmonicity_defect(const std::function<Rat(const Partition&)>& phi,
                       const Partition& lambda, const WeightedGraphView& view);

}  // namespace jackgraph
