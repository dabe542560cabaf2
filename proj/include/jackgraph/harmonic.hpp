#pragma once

#include <functional>
#include <map>
#include <vector>

#include "jackgraph/boundary.hpp"
#include "jackgraph/branching.hpp"
#include "jackgraph/partition.hpp"
#include "jackgraph/rational.hpp"

namespace jackgraph {

/// Finite atomic probability measure on the Thoma simplex.
struct AtomicMeasure {
    struct Atom {
        ThomaPoint point;
        Rat weight;
    };
    std::vector<Atom> atoms;

    void validate() const;  // weights > 0, sum exactly 1
};

/// phi(mu) = sum over atoms of weight * K(mu, omega); harmonic, phi(empty)=1.
std::function<Rat(const Partition&)> harmonic_from_measure(const AtomicMeasure& M,
                                                           const Rat& theta);

/// Probability distribution M_n(lambda) = dim_theta(lambda) phi(lambda) on
/// the partitions of n.
struct LevelDistribution {
    int n = 0;
    std::map<Partition, Rat> masses;
    Rat total() const;
};
LevelDistribution level_distribution(const std::function<Rat(const Partition&)>& phi,
                                     int n, const Rat& theta,
                                     bool cross_check_dims = false);

/// For each requested level: the integrals of p_m(.|theta), m = 2..4, under
/// the pushforward of M_n along the Frobenius embedding, next to the same
/// integrals under the measure itself.
struct PushforwardRow {
    int n = 0;
    std::vector<Rat> transported;  // integrals under the embedded M_n
    std::vector<Rat> target;       // integrals under M
    std::vector<Rat> gap;          // absolute differences
};
std::vector<PushforwardRow> pushforward_convergence(const AtomicMeasure& M,
                                                    const Rat& theta,
                                                    const std::vector<int>& n_list);

/// Scan of K(mu, omega) over all |mu| <= n_max; records the minimum.
struct PositivityReport {
    bool all_nonnegative = true;
    Rat minimum;
    Partition argmin;
};
PositivityReport positivity_scan(const ThomaPoint& omega, const Rat& theta,
                                 int n_max);

}  // namespace jackgraph
