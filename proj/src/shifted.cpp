#include "jackgraph/shifted.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "jackgraph/branching.hpp"
#include "jackgraph/jack.hpp"

namespace jackgraph {

Rat ptilde_eval(int m, const Partition& nu, const Rat& theta) {
    if (m < 1) throw std::domain_error("ptilde needs m >= 1");
    Rat out = 0;
    for (int i = 1; i <= nu.length(); ++i) {
        Rat off = -theta * (i - 1);
        out += falling(Rat(nu.part(i)) + off, m) - falling(off, m);
    }
    return out;
}

Rat content_sum(const Partition& nu, const Rat& theta, int m) {
    if (m < 1) throw std::domain_error("content_sum needs m >= 1");
    Rat out = 0;
    for (int i = 1; i <= nu.length(); ++i)
        for (int j = 1; j <= nu.part(i); ++j)
            out += falling(theta_content({i, j}, theta), m - 1);
    return out * m;
}

Rat pstar_eval(int m, const Partition& nu, const Rat& theta) {
    if (m < 1) throw std::domain_error("pstar needs m >= 1");
    Rat out = 0;
    for (int i = 1; i <= nu.length(); ++i) {
        Rat off = -theta * i;
        out += pow_rat(Rat(nu.part(i)) + off, m) - pow_rat(off, m);
    }
    return out;
}

ShiftedSymFunc ShiftedSymFunc::ptilde(int m, const Rat& theta) {
    ShiftedSymFunc f(theta);
    f.add_term(Partition({m}), 1);
    return f;
}

void ShiftedSymFunc::add_term(const Partition& idx, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

int ShiftedSymFunc::degree() const {
    int d = -1;
    for (const auto& [idx, c] : coeffs_) d = std::max(d, idx.size());
    return d;
}

Rat ShiftedSymFunc::eval(const Partition& nu) const {
    Rat out = 0;
    std::map<int, Rat> pt;  // ptilde_m(nu) cache for this call
    for (const auto& [idx, c] : coeffs_) {
        Rat term = c;
        for (int m : idx.parts()) {
            auto it = pt.find(m);
            if (it == pt.end()) it = pt.emplace(m, ptilde_eval(m, nu, theta_)).first;
            term *= it->second;
        }
        out += term;
    }
    return out;
}

SymFunc ShiftedSymFunc::leading_term() const {
    int d = degree();
    SymFunc out(Basis::PowerSum);
    for (const auto& [idx, c] : coeffs_)
        if (idx.size() == d) out.add_term(idx, c);
    return out;
}

namespace {

struct ShiftedKey {
    Rat theta;
    Partition mu;
    bool operator<(const ShiftedKey& o) const {
        if (theta != o.theta) return theta < o.theta;
        return mu < o.mu;
    }
};
std::mutex shifted_mutex;
std::map<ShiftedKey, ShiftedSymFunc> shifted_cache;

ShiftedSymFunc build_shifted_jack(const Partition& mu, const Rat& theta) {
    const int n = mu.size();
    ShiftedSymFunc F(theta);
    // Top filtration layer: the power-sum expansion of P_mu with p_k read as
    // ptilde_k.
    for (const auto& [idx, c] : jack_P(mu, theta).powersum_expansion.terms())
        F.add_term(idx, c);
    if (n == 0) return F;

    // Lower layers from vanishing at every partition of size < n.  The
    // system is square: one unknown monomial and one vanishing condition per
    // partition of size 0..n-1.
    std::vector<Partition> lower = enumerate_up_to(n - 1);
    const int N = static_cast<int>(lower.size());
    std::vector<std::vector<Rat>> A(N, std::vector<Rat>(N + 1, 0));
    for (int r = 0; r < N; ++r) {
        const Partition& lambda = lower[r];
        for (int c = 0; c < N; ++c) {
            Rat v = 1;
            for (int m : lower[c].parts()) v *= ptilde_eval(m, lambda, theta);
            A[r][c] = v;
        }
        A[r][N] = -F.eval(lambda);
    }
    for (int col = 0; col < N; ++col) {
        int piv = -1;
        for (int r = col; r < N; ++r)
            if (A[r][col] != 0) { piv = r; break; }
        if (piv < 0)
            throw std::logic_error("singular interpolation system for P*_" +
                                   mu.to_string());
        std::swap(A[col], A[piv]);
        Rat inv = 1 / A[col][col];
        for (int j = col; j <= N; ++j) A[col][j] *= inv;
        for (int r = 0; r < N; ++r) {
            if (r == col || A[r][col] == 0) continue;
            Rat f = A[r][col];
            for (int j = col; j <= N; ++j) A[r][j] -= f * A[col][j];
        }
    }
    for (int c = 0; c < N; ++c) F.add_term(lower[c], A[c][N]);
    return F;
}

}  // namespace

const ShiftedSymFunc& shifted_jack(const Partition& mu, const Rat& theta) {
    if (theta <= 0) throw std::domain_error("shifted_jack requires theta > 0");
    std::lock_guard<std::mutex> lock(shifted_mutex);
    ShiftedKey key{theta, mu};
    auto it = shifted_cache.find(key);
    if (it == shifted_cache.end())
        it = shifted_cache.emplace(key, build_shifted_jack(mu, theta)).first;
    return it->second;
}

std::pair<Rat, Rat> dimension_formula_check(const Partition& mu,
                                            const Partition& nu,
                                            const Rat& theta) {
    const int m = mu.size(), n = nu.size();
    if (n < m) return {0, 0};
    WeightedGraphView view = WeightedGraphView::jack(theta);
    Rat lhs = dim_recursive(mu, nu, view) / dim_recursive(Partition(), nu, view);
    Rat rhs = shifted_jack(mu, theta).eval(nu) / falling(Rat(n), m);
    return {lhs, rhs};
}

Rat shifted_schur_det(const Partition& mu, const std::vector<Rat>& x) {
    const int n = static_cast<int>(x.size());
    if (mu.length() > n)
        throw std::domain_error("need at least l(mu) variables");

    auto det = [](std::vector<std::vector<Rat>> a) {
        const int N = static_cast<int>(a.size());
        Rat out = 1;
        for (int col = 0; col < N; ++col) {
            int piv = -1;
            for (int r = col; r < N; ++r)
                if (a[r][col] != 0) { piv = r; break; }
            if (piv < 0) return Rat(0);
            if (piv != col) {
                std::swap(a[col], a[piv]);
                out = -out;
            }
            out *= a[col][col];
            Rat inv = 1 / a[col][col];
            for (int r = col + 1; r < N; ++r) {
                if (a[r][col] == 0) continue;
                Rat f = a[r][col] * inv;
                for (int j = col; j < N; ++j) a[r][j] -= f * a[col][j];
            }
        }
        return out;
    };

    std::vector<std::vector<Rat>> num(n, std::vector<Rat>(n));
    std::vector<std::vector<Rat>> den(n, std::vector<Rat>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Rat y = x[i - 1] + (n - i);
            num[i - 1][j - 1] = falling(y, mu.part(j) + n - j);
            den[i - 1][j - 1] = falling(y, n - j);
        }
    Rat d = det(std::move(den));
    if (d == 0)
        throw std::domain_error("coincident shifted arguments x_i + n - i");
    return det(std::move(num)) / d;
}

}  // namespace jackgraph
