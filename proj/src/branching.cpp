#include "jackgraph/branching.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace jackgraph {

WeightedGraphView WeightedGraphView::jack(const Rat& theta) {
    if (theta <= 0)
        throw std::domain_error("jack view requires theta > 0; use kingman() "
                                "for the theta = 0 multiplicities");
    return {Rule::Jack, theta};
}

WeightedGraphView WeightedGraphView::kingman() { return {Rule::Kingman, 0}; }

Rat WeightedGraphView::kappa(const Partition& lambda, const Partition& nu) const {
    return rule == Rule::Jack ? pieri_kappa(lambda, nu, theta)
                              : Rat(kingman_kappa(lambda, nu));
}

int kingman_kappa(const Partition& lambda, const Partition& nu) {
    if (nu.size() != lambda.size() + 1 || !nu.contains(lambda))
        throw std::domain_error(nu.to_string() + " does not cover " +
                                lambda.to_string());
    for (int i = 1; i <= nu.length(); ++i)
        if (nu.part(i) != lambda.part(i)) return nu.multiplicity(nu.part(i));
    throw std::logic_error("unreachable");
}

namespace {
using DimKey = std::tuple<WeightedGraphView, Partition, Partition>;
struct DimKeyLess {
    bool operator()(const DimKey& a, const DimKey& b) const {
        const auto& [va, ma, na] = a;
        const auto& [vb, mb, nb] = b;
        if (va < vb) return true;
        if (vb < va) return false;
        if (ma != mb) return ma < mb;
        return na < nb;
    }
};
std::mutex dim_mutex;
std::map<DimKey, Rat, DimKeyLess> dim_cache;

Rat dim_rec_impl(const Partition& mu, const Partition& nu,
                 const WeightedGraphView& view) {
    if (mu == nu) return 1;
    if (!nu.contains(mu)) return 0;
    DimKey key{view, mu, nu};
    {
        std::lock_guard<std::mutex> lock(dim_mutex);
        auto it = dim_cache.find(key);
        if (it != dim_cache.end()) return it->second;
    }
    Rat total = 0;
    for (const Partition& lambda : cocovers(nu)) {
        if (!lambda.contains(mu)) continue;
        total += dim_rec_impl(mu, lambda, view) * view.kappa(lambda, nu);
    }
    std::lock_guard<std::mutex> lock(dim_mutex);
    dim_cache.emplace(key, total);
    return total;
}
}  // namespace

Rat dim_recursive(const Partition& mu, const Partition& nu,
                  const WeightedGraphView& view) {
    return dim_rec_impl(mu, nu, view);
}

Rat dim_hook(const Partition& nu, const Rat& theta) {
    if (theta <= 0) throw std::domain_error("dim_hook requires theta > 0");
    return factorial(nu.size()) / hook_products(nu, theta).H;
}

Rat martin_kernel_finite(const Partition& mu, const Partition& nu,
                         const WeightedGraphView& view) {
    Rat d = dim_recursive(Partition(), nu, view);
    if (d == 0) throw std::domain_error("dim(nu) = 0");
    return dim_recursive(mu, nu, view) / d;
}

Rat harmonicity_defect(const std::function<Rat(const Partition&)>& phi,
                       const Partition& lambda, const WeightedGraphView& view) {
    Rat sum = 0;
    for (const Partition& nu : covers(lambda))
        sum += view.kappa(lambda, nu) * phi(nu);
    return sum - phi(lambda);
}

}  // namespace jackgraph
