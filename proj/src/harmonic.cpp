#include "jackgraph/harmonic.hpp"

#include <stdexcept>

namespace jackgraph {

void AtomicMeasure::validate() const {
    Rat total = 0;
    for (const Atom& a : atoms) {
        if (a.weight <= 0)
            throw std::invalid_argument("atom weights must be positive");
        total += a.weight;
    }
    if (total != 1) throw std::invalid_argument("atom weights must sum to 1");
}

std::function<Rat(const Partition&)> harmonic_from_measure(const AtomicMeasure& M,
                                                           const Rat& theta) {
    M.validate();
    if (theta <= 0) throw std::domain_error("requires theta > 0");
    return [M, theta](const Partition& mu) {
        Rat out = 0;
        for (const auto& a : M.atoms)
            out += a.weight * martin_kernel_boundary(mu, a.point, theta).value;
        return out;
    };
}

Rat LevelDistribution::total() const {
    Rat t = 0;
    for (const auto& [p, m] : masses) t += m;
    return t;
}

LevelDistribution level_distribution(const std::function<Rat(const Partition&)>& phi,
                                     int n, const Rat& theta,
                                     bool cross_check_dims) {
    LevelDistribution out;
    out.n = n;
    WeightedGraphView view = WeightedGraphView::jack(theta);
    for (const Partition& lambda : enumerate_partitions(n)) {
        Rat d = dim_hook(lambda, theta);
        if (cross_check_dims && d != dim_recursive(Partition(), lambda, view))
            throw std::logic_error("hook/recursive dimension mismatch at " +
                                   lambda.to_string());
        Rat mass = d * phi(lambda);
        if (mass < 0)
            throw std::domain_error("negative mass at " + lambda.to_string() +
                                    ": phi is not non-negative harmonic");
        out.masses.emplace(lambda, std::move(mass));
    }
    return out;
}

std::vector<PushforwardRow> pushforward_convergence(const AtomicMeasure& M,
                                                    const Rat& theta,
                                                    const std::vector<int>& n_list) {
    auto phi = harmonic_from_measure(M, theta);
    std::vector<Rat> target;
    for (int m = 2; m <= 4; ++m) {
        Rat t = 0;
        for (const auto& a : M.atoms)
            t += a.weight * theta_extend_power(m, a.point, theta);
        target.push_back(std::move(t));
    }
    std::vector<PushforwardRow> out;
    for (int n : n_list) {
        if (n < 1) throw std::domain_error("levels must be >= 1");
        LevelDistribution Mn = level_distribution(phi, n, theta);
        PushforwardRow row;
        row.n = n;
        row.target = target;
        for (int m = 2; m <= 4; ++m) {
            Rat t = 0;
            for (const auto& [lambda, mass] : Mn.masses) {
                if (mass == 0) continue;
                t += mass * theta_extend_power(m, embed_omega(lambda), theta);
            }
            row.transported.push_back(std::move(t));
        }
        for (size_t i = 0; i < row.target.size(); ++i)
            row.gap.push_back(abs(row.transported[i] - row.target[i]));
        out.push_back(std::move(row));
    }
    return out;
}

PositivityReport positivity_scan(const ThomaPoint& omega, const Rat& theta,
                                 int n_max) {
    if (theta <= 0) throw std::domain_error("requires theta > 0");
    PositivityReport rep;
    bool first = true;
    for (int n = 0; n <= n_max; ++n)
        for (const Partition& mu : enumerate_partitions(n)) {
            Rat v = martin_kernel_boundary(mu, omega, theta).value;
            if (v < 0) rep.all_nonnegative = false;
            if (first || v < rep.minimum) {
                rep.minimum = v;
                rep.argmin = mu;
                first = false;
            }
        }
    return rep;
}

}  // namespace jackgraph
