#include "jackgraph/jack.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jackgraph {

HookData hook_products(const Partition& mu, const Rat& theta) {
    HookData h;
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = 1; j <= mu.part(i); ++j) {
            ArmLeg al = arm_leg(mu, {i, j});
            h.H *= Rat(al.arm) + theta * al.leg + 1;
            h.Hprime *= Rat(al.arm) + theta * al.leg + theta;
        }
    return h;
}

namespace {

// Column of the added box if nu covers lambda, -1 otherwise.
int added_box_column(const Partition& lambda, const Partition& nu) {
    if (nu.size() != lambda.size() + 1 || !nu.contains(lambda)) return -1;
    for (int i = 1; i <= nu.length(); ++i)
        if (nu.part(i) != lambda.part(i)) return nu.part(i);
    return -1;
}

int added_box_row(const Partition& lambda, const Partition& nu) {
    for (int i = 1; i <= nu.length(); ++i)
        if (nu.part(i) != lambda.part(i)) return i;
    return -1;
}

void require_cover(const Partition& lambda, const Partition& nu) {
    if (added_box_column(lambda, nu) < 0)
        throw std::domain_error(nu.to_string() + " does not cover " +
                                lambda.to_string());
}

}  // namespace

Rat pieri_kappa(const Partition& lambda, const Partition& nu, const Rat& theta) {
    require_cover(lambda, nu);
    if (theta < 0) throw std::domain_error("kappa_theta requires theta >= 0");
    int j = added_box_column(lambda, nu);
    Partition conj = lambda.conjugate();
    int col_len = j <= lambda.part(1) ? conj.part(j) : 0;
    Rat out = 1;
    for (int i = 1; i <= col_len; ++i) {
        int a = lambda.part(i) - j;
        int l = col_len - i;
        if (a == 0) {
            // The raw factor is 0/0 at theta = 0; cancel the common theta.
            out *= Rat(l + 2) * (1 + theta * l) /
                   ((Rat(l + 1)) * (1 + theta * (l + 1)));
        } else {
            out *= (Rat(a) + theta * (l + 2)) * (Rat(a) + 1 + theta * l) /
                   ((Rat(a) + 1 + theta * (l + 1)) * (Rat(a) + theta * (l + 1)));
        }
    }
    return out;
}

bool pieri_kappa_singular_at_zero(const Partition& lambda, const Partition& nu) {
    require_cover(lambda, nu);
    int j = added_box_column(lambda, nu);
    Partition conj = lambda.conjugate();
    int col_len = j <= lambda.part(1) ? conj.part(j) : 0;
    for (int i = 1; i <= col_len; ++i)
        if (lambda.part(i) == j) return true;
    return false;
}

namespace {

struct Corner {
    int x;  // row coordinate
    int y;  // column coordinate
};

Rat axial_distance(const Corner& c1, const Corner& c2, const Rat& theta) {
    return Rat(c1.y - c2.y) - theta * (c1.x - c2.x);
}

// Concave corners of mu: one per addable box (i, mu_i + 1), located at the
// lattice point (i-1, mu_i); the last one sits on the row axis.  Convex
// corners: one per block of equal rows ending at row i, at (i, mu_i).
void boundary_corners(const Partition& mu, std::vector<Corner>& concave,
                      std::vector<Corner>& convex) {
    for (int i = 1; i <= mu.length() + 1; ++i) {
        if (i > 1 && mu.part(i) == mu.part(i - 1)) continue;
        concave.push_back({i - 1, mu.part(i)});
    }
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > mu.part(i + 1)) convex.push_back({i, mu.part(i)});
}

}  // namespace

Rat pieri_kappa_J(const Partition& lambda, const Partition& nu, const Rat& theta,
                  KappaJMethod method) {
    require_cover(lambda, nu);
    if (theta <= 0) throw std::domain_error("kappa_J requires theta > 0");
    if (method == KappaJMethod::Ratio) {
        return hook_products(lambda, theta).Hprime /
               hook_products(nu, theta).Hprime * pieri_kappa(lambda, nu, theta);
    }
    int i0 = added_box_row(lambda, nu);
    int j0 = nu.part(i0);
    Corner star{i0 - 1, j0 - 1};
    std::vector<Corner> concave, convex;
    boundary_corners(lambda, concave, convex);
    Rat num = 1, den = theta;
    for (const Corner& v : convex) num *= axial_distance(v, star, theta);
    for (const Corner& c : concave) {
        if (c.x == star.x && c.y == star.y) continue;
        den *= axial_distance(c, star, theta);
    }
    return num / den;
}

namespace {

struct JackKey {
    Rat theta;
    Partition mu;
    bool operator<(const JackKey& o) const {
        if (theta != o.theta) return theta < o.theta;
        return mu < o.mu;
    }
};

std::mutex jack_mutex;
std::map<JackKey, JackBasisElement> jack_cache;

// Builds the entire degree at once: Gram-Schmidt over the reverse-lex linear
// extension of dominance, from the dominance-smallest index (1^n) upward.
void build_degree(int n, const Rat& theta) {
    std::vector<Partition> order = enumerate_partitions(n);
    std::reverse(order.begin(), order.end());
    std::vector<JackBasisElement*> done;
    for (const Partition& lambda : order) {
        JackKey key{theta, lambda};
        if (jack_cache.count(key)) {
            done.push_back(&jack_cache[key]);
            continue;
        }
        JackBasisElement el;
        el.index = lambda;
        el.theta = theta;
        if (theta == 0) {
            el.expansion = SymFunc::monomial(lambda);
            el.powersum_expansion = monomial_to_powersum(el.expansion);
            el.norm = 0;  // the theta-form is undefined at theta = 0
        } else {
            SymFunc p = monomial_to_powersum(SymFunc::monomial(lambda));
            for (JackBasisElement* prev : done) {
                Rat proj = scalar_product_theta(p, prev->powersum_expansion, theta) /
                           prev->norm;
                if (proj != 0) p -= prev->powersum_expansion * proj;
            }
            el.powersum_expansion = p;
            el.expansion = powersum_to_monomial(p);
            el.norm = scalar_product_theta(p, p, theta);
            if (el.norm == 0)
                throw std::logic_error("degenerate Jack norm at theta = " +
                                       to_string(theta));
        }
        auto [it, ok] = jack_cache.emplace(key, std::move(el));
        done.push_back(&it->second);
    }
}

}  // namespace

const JackBasisElement& jack_P(const Partition& mu, const Rat& theta) {
    if (theta < 0) throw std::domain_error("jack_P requires theta >= 0");
    std::lock_guard<std::mutex> lock(jack_mutex);
    JackKey key{theta, mu};
    auto it = jack_cache.find(key);
    if (it == jack_cache.end()) {
        build_degree(mu.size(), theta);
        it = jack_cache.find(key);
    }
    return it->second;
}

std::map<Partition, Rat> expand_in_jack(const SymFunc& f, const Rat& theta,
                                        int degree) {
    if (!f.is_homogeneous() || (!f.is_zero() && f.degree() != degree))
        throw std::domain_error("expand_in_jack needs a homogeneous input of the "
                                "stated degree");
    std::map<Partition, Rat> out;
    SymFunc rem = convert(f, Basis::Monomial);
    for (const Partition& lambda : enumerate_partitions(degree)) {
        Rat c = rem.coeff(lambda);
        if (c == 0) continue;
        out[lambda] = c;
        rem -= jack_P(lambda, theta).expansion * c;
    }
    if (!rem.is_zero())
        throw std::logic_error("Jack expansion left a nonzero remainder");
    return out;
}

}  // namespace jackgraph
