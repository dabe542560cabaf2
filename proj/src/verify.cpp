#include "jackgraph/verify.hpp"

#include <algorithm>
#include <sstream>

#include "jackgraph/boundary.hpp"
#include "jackgraph/branching.hpp"
#include "jackgraph/harmonic.hpp"
#include "jackgraph/jack.hpp"
#include "jackgraph/partition.hpp"
#include "jackgraph/shifted.hpp"
#include "jackgraph/symfunc.hpp"

namespace jackgraph::verify {

namespace {

std::string edge_str(const Partition& a, const Partition& b, const Rat& theta) {
    return a.to_string() + " -> " + b.to_string() + " theta=" + to_string(theta);
}

// Independent path-weight oracle: explicit sum over saturated chains.
Rat path_weight_sum(const Partition& mu, const Partition& nu,
                    const WeightedGraphView& view) {
    if (mu == nu) return 1;
    if (!nu.contains(mu)) return 0;
    Rat total = 0;
    for (const Partition& lambda : covers(mu)) {
        if (!nu.contains(lambda)) continue;
        total += view.kappa(mu, lambda) * path_weight_sum(lambda, nu, view);
    }
    return total;
}

}  // namespace

Result pieri(int max_lambda, const std::vector<Rat>& thetas) {
    Result res;
    res.suite = "pieri";
    SymFunc p1 = SymFunc::powersum(Partition({1}));
    for (const Rat& theta : thetas)
        for (int n = 0; n <= max_lambda && res.pass; ++n)
            for (const Partition& lambda : enumerate_partitions(n)) {
                SymFunc prod = multiply(p1, jack_P(lambda, theta).powersum_expansion);
                auto expansion = expand_in_jack(prod, theta, n + 1);
                std::map<Partition, Rat> expected;
                for (const Partition& nu : covers(lambda))
                    expected[nu] = pieri_kappa(lambda, nu, theta);
                ++res.checks;
                if (expansion != expected) {
                    res.fail("p_1 P_" + lambda.to_string() + " at theta=" +
                             to_string(theta));
                    break;
                }
            }
    return res;
}

Result hook(int max_nu, const std::vector<Rat>& thetas, int brute_max) {
    Result res;
    res.suite = "hook";
    for (const Rat& theta : thetas) {
        WeightedGraphView view = WeightedGraphView::jack(theta);
        for (int n = 0; n <= max_nu && res.pass; ++n)
            for (const Partition& nu : enumerate_partitions(n)) {
                ++res.checks;
                Rat rec = dim_recursive(Partition(), nu, view);
                if (dim_hook(nu, theta) != rec) {
                    res.fail("dim_hook != dim_recursive at " + nu.to_string() +
                             " theta=" + to_string(theta));
                    break;
                }
                if (n <= brute_max &&
                    path_weight_sum(Partition(), nu, view) != rec) {
                    res.fail("path oracle mismatch at " + nu.to_string() +
                             " theta=" + to_string(theta));
                    break;
                }
                // coherence: sum over cocovers of dim(lambda) kappa / dim(nu)
                if (n >= 1) {
                    Rat coh = 0;
                    for (const Partition& lambda : cocovers(nu))
                        coh += dim_recursive(Partition(), lambda, view) *
                               view.kappa(lambda, nu) / rec;
                    if (coh != 1) {
                        res.fail("coherence identity fails at " + nu.to_string() +
                                 " theta=" + to_string(theta));
                        break;
                    }
                }
            }
    }
    return res;
}

Result corners(int max_level, const std::vector<Rat>& thetas) {
    Result res;
    res.suite = "corners";
    for (const Rat& theta : thetas)
        for (int n = 0; n < max_level && res.pass; ++n)
            for (const Partition& lambda : enumerate_partitions(n)) {
                for (const Partition& nu : covers(lambda)) {
                    ++res.checks;
                    Rat a = pieri_kappa_J(lambda, nu, theta, KappaJMethod::Ratio);
                    Rat b = pieri_kappa_J(lambda, nu, theta, KappaJMethod::Corners);
                    if (a != b) {
                        res.fail("kappa_J ratio " + to_string(a) + " != corners " +
                                 to_string(b) + " on " + edge_str(lambda, nu, theta));
                        break;
                    }
                }
                if (!res.pass) break;
            }
    return res;
}

Result dimension_formula(int max_mu, int max_nu, const std::vector<Rat>& thetas) {
    Result res;
    res.suite = "dimension-formula";
    for (const Rat& theta : thetas)
        for (int m = 0; m <= max_mu && res.pass; ++m)
            for (const Partition& mu : enumerate_partitions(m)) {
                for (int n = 0; n <= max_nu && res.pass; ++n)
                    for (const Partition& nu : enumerate_partitions(n)) {
                        auto [lhs, rhs] = dimension_formula_check(mu, nu, theta);
                        ++res.checks;
                        if (lhs != rhs) {
                            res.fail("mu=" + mu.to_string() + " nu=" + nu.to_string() +
                                     " theta=" + to_string(theta) + ": " +
                                     to_string(lhs) + " != " + to_string(rhs));
                            break;
                        }
                    }
                if (!res.pass) break;
            }
    // theta = 1: interpolation polynomial against the determinant form
    for (int m = 0; m <= max_mu && res.pass; ++m)
        for (const Partition& mu : enumerate_partitions(m)) {
            for (int n = 0; n <= max_nu; ++n)
                for (const Partition& lambda : enumerate_partitions(n)) {
                    int vars = std::max(lambda.length(), mu.length());
                    if (vars == 0) vars = 1;
                    std::vector<Rat> x;
                    for (int i = 1; i <= vars; ++i) x.emplace_back(lambda.part(i));
                    ++res.checks;
                    Rat det_val = shifted_schur_det(mu, x);
                    Rat interp = shifted_jack(mu, 1).eval(lambda);
                    if (det_val != interp) {
                        res.fail("s*_" + mu.to_string() + "(" + lambda.to_string() +
                                 ") determinant " + to_string(det_val) +
                                 " != interpolation " + to_string(interp));
                        break;
                    }
                }
            if (!res.pass) break;
        }
    return res;
}

Result kingman_limit(int max_level) {
    Result res;
    res.suite = "kingman-limit";
    for (int n = 0; n < max_level && res.pass; ++n)
        for (const Partition& lambda : enumerate_partitions(n)) {
            for (const Partition& nu : covers(lambda)) {
                ++res.checks;
                if (pieri_kappa(lambda, nu, Rat(0)) != kingman_kappa(lambda, nu)) {
                    res.fail("kappa_0 != Kingman on " + edge_str(lambda, nu, 0));
                    break;
                }
                if (n < 7 && pieri_kappa(lambda, nu, Rat(1)) != 1) {
                    res.fail("kappa_1 != 1 on " + edge_str(lambda, nu, 1));
                    break;
                }
            }
            if (!res.pass) break;
        }
    return res;
}

namespace {

// Deterministic rational grid over the simplex: vertices, edges, and mixed
// interior points, at least 50 entries.
std::vector<ThomaPoint> simplex_grid() {
    std::vector<ThomaPoint> grid;
    grid.emplace_back();                                        // gamma = 1
    grid.emplace_back(std::vector<Rat>{1}, std::vector<Rat>{}); // alpha vertex
    grid.emplace_back(std::vector<Rat>{}, std::vector<Rat>{1}); // beta vertex
    for (int d = 2; d <= 6; ++d) {
        grid.emplace_back(std::vector<Rat>{Rat(1, d)}, std::vector<Rat>{});
        grid.emplace_back(std::vector<Rat>{}, std::vector<Rat>{Rat(1, d)});
        grid.emplace_back(std::vector<Rat>{Rat(1, d)}, std::vector<Rat>{Rat(1, d)});
    }
    for (int d = 3; d <= 6; ++d) {
        grid.emplace_back(std::vector<Rat>{Rat(1, d), Rat(1, d)},
                          std::vector<Rat>{});
        grid.emplace_back(std::vector<Rat>{},
                          std::vector<Rat>{Rat(1, d), Rat(1, d)});
        grid.emplace_back(std::vector<Rat>{Rat(1, d), Rat(1, 2 * d)},
                          std::vector<Rat>{Rat(1, 2 * d)});
    }
    grid.emplace_back(std::vector<Rat>{Rat(1, 2)}, std::vector<Rat>{Rat(1, 2)});
    grid.emplace_back(std::vector<Rat>{Rat(2, 3)}, std::vector<Rat>{Rat(1, 3)});
    grid.emplace_back(std::vector<Rat>{Rat(1, 3)}, std::vector<Rat>{Rat(2, 3)});
    grid.emplace_back(std::vector<Rat>{Rat(3, 4)}, std::vector<Rat>{Rat(1, 8)});
    grid.emplace_back(std::vector<Rat>{Rat(1, 2), Rat(1, 4), Rat(1, 8)},
                      std::vector<Rat>{});
    grid.emplace_back(std::vector<Rat>{},
                      std::vector<Rat>{Rat(1, 2), Rat(1, 4), Rat(1, 8)});
    grid.emplace_back(std::vector<Rat>{Rat(1, 3), Rat(1, 5)},
                      std::vector<Rat>{Rat(1, 7), Rat(1, 11)});
    grid.emplace_back(std::vector<Rat>{Rat(2, 5), Rat(1, 5)},
                      std::vector<Rat>{Rat(1, 5), Rat(1, 5)});
    grid.emplace_back(std::vector<Rat>{Rat(1, 7), Rat(1, 7), Rat(1, 7)},
                      std::vector<Rat>{Rat(1, 7), Rat(1, 7)});
    grid.emplace_back(std::vector<Rat>{Rat(5, 6)}, std::vector<Rat>{Rat(1, 12)});
    grid.emplace_back(std::vector<Rat>{Rat(1, 12)}, std::vector<Rat>{Rat(5, 6)});
    grid.emplace_back(std::vector<Rat>{Rat(1, 4), Rat(1, 4)},
                      std::vector<Rat>{Rat(1, 4), Rat(1, 4)});
    grid.emplace_back(std::vector<Rat>{Rat(9, 10)}, std::vector<Rat>{});
    grid.emplace_back(std::vector<Rat>{}, std::vector<Rat>{Rat(9, 10)});
    grid.emplace_back(std::vector<Rat>{Rat(1, 2), Rat(1, 3)},
                      std::vector<Rat>{Rat(1, 6)});
    grid.emplace_back(std::vector<Rat>{Rat(1, 6)},
                      std::vector<Rat>{Rat(1, 2), Rat(1, 3)});
    return grid;
}

}  // namespace

Result positivity(int max_mu, const std::vector<Rat>& thetas) {
    Result res;
    res.suite = "positivity";
    std::vector<ThomaPoint> grid = simplex_grid();
    Rat global_min;
    Partition global_argmin;
    bool first = true;
    for (const Rat& theta : thetas) {
        for (const ThomaPoint& omega : grid) {
            PositivityReport rep = positivity_scan(omega, theta, max_mu);
            res.checks += 1;
            if (!rep.all_nonnegative) {
                res.fail("negative kernel value " + to_string(rep.minimum) +
                         " at mu=" + rep.argmin.to_string() + " omega=" +
                         omega.to_string() + " theta=" + to_string(theta));
                return res;
            }
            if (first || rep.minimum < global_min) {
                global_min = rep.minimum;
                global_argmin = rep.argmin;
                first = false;
            }
        }
        // moment recovery round trip on support <= 3 points
        for (const ThomaPoint& omega : grid) {
            if (omega.alpha().size() > 3 || omega.beta().size() > 3) continue;
            const int M = 14;
            std::vector<Rat> moments;
            for (int m = 2; m <= M; ++m)
                moments.push_back(theta_extend_power(m, omega, theta));
            ++res.checks;
            ThomaPoint back = recover_thoma_from_moments(moments, theta, 3);
            if (!(back == omega)) {
                res.fail("moment recovery changed " + omega.to_string() + " into " +
                         back.to_string() + " at theta=" + to_string(theta));
                return res;
            }
        }
    }
    if (res.pass)
        res.detail = "minimum kernel value " + to_string(global_min) + " at mu=" +
                     global_argmin.to_string();
    return res;
}

namespace {

std::vector<AtomicMeasure> test_measures() {
    std::vector<AtomicMeasure> out;
    out.push_back({{{ThomaPoint{}, Rat(1)}}});
    out.push_back({{{ThomaPoint({Rat(1, 2)}, {}), Rat(1)}}});
    out.push_back({{{ThomaPoint({}, {Rat(1)}), Rat(1)}}});
    out.push_back({{{ThomaPoint({Rat(1, 2)}, {Rat(1, 4)}), Rat(1, 2)},
                    {ThomaPoint{}, Rat(1, 2)}}});
    out.push_back({{{ThomaPoint({Rat(1)}, {}), Rat(1, 3)},
                    {ThomaPoint({}, {Rat(1, 2), Rat(1, 3)}), Rat(1, 3)},
                    {ThomaPoint({Rat(1, 3), Rat(1, 6)}, {Rat(1, 6)}), Rat(1, 3)}}});
    return out;
}

}  // namespace

Result harmonicity(int max_level, const std::vector<Rat>& thetas) {
    Result res;
    res.suite = "harmonicity";
    for (const Rat& theta : thetas) {
        WeightedGraphView view = WeightedGraphView::jack(theta);
        for (const AtomicMeasure& M : test_measures()) {
            auto phi = harmonic_from_measure(M, theta);
            for (int n = 0; n <= max_level; ++n)
                for (const Partition& lambda : enumerate_partitions(n)) {
                    ++res.checks;
                    Rat defect = harmonicity_defect(phi, lambda, view);
                    if (defect != 0) {
                        res.fail("defect " + to_string(defect) + " at " +
                                 lambda.to_string() + " theta=" + to_string(theta));
                        return res;
                    }
                }
        }
    }
    return res;
}

Result normalization(int max_n, const std::vector<Rat>& thetas) {
    Result res;
    res.suite = "normalization";
    for (const Rat& theta : thetas)
        for (const AtomicMeasure& M : test_measures()) {
            auto phi = harmonic_from_measure(M, theta);
            for (int n = 0; n <= max_n; ++n) {
                ++res.checks;
                LevelDistribution d = level_distribution(phi, n, theta);
                if (d.total() != 1) {
                    res.fail("masses sum to " + to_string(d.total()) + " at n=" +
                             std::to_string(n) + " theta=" + to_string(theta));
                    return res;
                }
            }
        }
    // Plancherel: theta = 1, delta at the gamma vertex
    AtomicMeasure plancherel{{{ThomaPoint{}, Rat(1)}}};
    auto phi = harmonic_from_measure(plancherel, Rat(1));
    for (int n = 0; n <= max_n; ++n) {
        LevelDistribution d = level_distribution(phi, n, Rat(1));
        for (const auto& [lambda, mass] : d.masses) {
            ++res.checks;
            Rat dim = dim_hook(lambda, Rat(1));
            if (mass != dim * dim / factorial(n)) {
                res.fail("Plancherel mass mismatch at " + lambda.to_string());
                return res;
            }
        }
    }
    return res;
}

Result content_sum(int max_nu, int max_m, const std::vector<Rat>& thetas) {
    Result res;
    res.suite = "content-sum";
    for (const Rat& theta : thetas)
        for (int n = 0; n <= max_nu && res.pass; ++n)
            for (const Partition& nu : enumerate_partitions(n)) {
                for (int m = 1; m <= max_m; ++m) {
                    ++res.checks;
                    if (jackgraph::content_sum(nu, theta, m) !=
                        ptilde_eval(m, nu, theta)) {
                        res.fail("S_" + std::to_string(m) + " != ptilde at " +
                                 nu.to_string() + " theta=" + to_string(theta));
                        break;
                    }
                }
                if (!res.pass) break;
            }
    return res;
}

Result schur_det(int max_mu, int max_lambda) {
    Result res;
    res.suite = "schur-det";
    for (int m = 0; m <= max_mu && res.pass; ++m)
        for (const Partition& mu : enumerate_partitions(m)) {
            for (int n = 0; n <= max_lambda; ++n)
                for (const Partition& lambda : enumerate_partitions(n)) {
                    int vars = std::max({lambda.length(), mu.length(), 1});
                    std::vector<Rat> x;
                    for (int i = 1; i <= vars; ++i) x.emplace_back(lambda.part(i));
                    ++res.checks;
                    if (shifted_schur_det(mu, x) != shifted_jack(mu, 1).eval(lambda)) {
                        res.fail("mu=" + mu.to_string() + " lambda=" +
                                 lambda.to_string());
                        break;
                    }
                }
            if (!res.pass) break;
        }
    return res;
}

std::vector<std::string> suite_names() {
    return {"pieri",         "hook",       "corners",     "dimension-formula",
            "kingman-limit", "positivity", "harmonicity", "normalization",
            "content-sum",   "schur-det"};
}

Result run_by_name(const std::string& name, int max_level,
                   const std::vector<Rat>& thetas) {
    if (name == "pieri") return pieri(max_level, thetas);
    if (name == "hook") return hook(max_level, thetas, std::min(max_level, 6));
    if (name == "corners") return corners(max_level, thetas);
    if (name == "dimension-formula")
        return dimension_formula(std::min(max_level, 4), max_level, thetas);
    if (name == "kingman-limit") return kingman_limit(max_level);
    if (name == "positivity") return positivity(max_level, thetas);
    if (name == "harmonicity") return harmonicity(max_level, thetas);
    if (name == "normalization") return normalization(max_level, thetas);
    if (name == "content-sum") return content_sum(max_level, 5, thetas);
    if (name == "schur-det")
        return schur_det(std::min(max_level, 4), std::min(max_level, 6));
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace jackgraph::verify
