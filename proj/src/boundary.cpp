#include "jackgraph/boundary.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "jackgraph/jack.hpp"

namespace jackgraph {

ThomaPoint::ThomaPoint(std::vector<Rat> alpha, std::vector<Rat> beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    auto clean = [](std::vector<Rat>& v, const char* name) {
        v.erase(std::remove(v.begin(), v.end(), Rat(0)), v.end());
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] <= 0 || v[i] > 1)
                throw std::invalid_argument(std::string(name) +
                                            " entries must lie in (0,1]");
            if (i + 1 < v.size() && v[i] < v[i + 1])
                throw std::invalid_argument(std::string(name) +
                                            " must be weakly decreasing");
        }
    };
    clean(alpha_, "alpha");
    clean(beta_, "beta");
    if (gamma() < 0)
        throw std::invalid_argument("sum alpha + sum beta exceeds 1");
}

Rat ThomaPoint::gamma() const {
    Rat g = 1;
    for (const Rat& a : alpha_) g -= a;
    for (const Rat& b : beta_) g -= b;
    return g;
}

std::string ThomaPoint::to_string() const {
    std::ostringstream os;
    auto seq = [&](const std::vector<Rat>& v) {
        os << '(';
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) os << ',';
            os << jackgraph::to_string(v[i]);
        }
        os << ')';
    };
    os << "alpha=";
    seq(alpha_);
    os << " beta=";
    seq(beta_);
    os << " gamma=" << jackgraph::to_string(gamma());
    return os.str();
}

ThomaPoint embed_omega(const Partition& nu) {
    if (nu.empty()) throw std::domain_error("cannot embed the empty diagram");
    Frobenius f = frobenius(nu);
    const int n = nu.size();
    std::vector<Rat> alpha, beta;
    for (int a : f.a) alpha.push_back(rat(a, n));
    for (int b : f.b) beta.push_back(rat(b, n));
    return ThomaPoint(std::move(alpha), std::move(beta));
}

ThomaPoint embed_omega_theta(const Partition& nu, const Rat& theta) {
    if (nu.empty()) throw std::domain_error("cannot embed the empty diagram");
    PosNegSplit s = split_positive_negative(nu, theta);
    const int n = nu.size();
    std::vector<Rat> alpha, beta;
    for (int a : s.pos_rows) alpha.push_back(rat(a, n));
    for (int b : s.neg_cols) beta.push_back(rat(b, n));
    return ThomaPoint(std::move(alpha), std::move(beta));
}

Rat theta_extend_power(int m, const ThomaPoint& omega, const Rat& theta) {
    if (m < 1) throw std::domain_error("power index must be >= 1");
    if (m == 1) return 1;
    Rat out = 0;
    for (const Rat& a : omega.alpha()) out += pow_rat(a, m);
    Rat sb = 0;
    for (const Rat& b : omega.beta()) sb += pow_rat(b, m);
    out += pow_rat(-theta, m - 1) * sb;
    return out;
}

Rat theta_extend_eval(const SymFunc& f, const ThomaPoint& omega, const Rat& theta) {
    SymFunc fp = convert(f, Basis::PowerSum);
    Rat out = 0;
    for (const auto& [lambda, c] : fp.terms()) {
        Rat term = c;
        for (int m : lambda.parts()) term *= theta_extend_power(m, omega, theta);
        out += term;
    }
    return out;
}

BoundaryKernelValue martin_kernel_boundary(const Partition& mu,
                                           const ThomaPoint& omega,
                                           const Rat& theta) {
    if (theta <= 0) throw std::domain_error("boundary kernel requires theta > 0");
    Rat v = theta_extend_eval(jack_P(mu, theta).powersum_expansion, omega, theta);
    return {mu, omega, theta, v};
}

Rat martin_kernel_via_interpolation(const Partition& mu, const Partition& nu,
                                    const Rat& theta) {
    const int m = mu.size(), n = nu.size();
    if (n < m) return 0;
    return shifted_jack(mu, theta).eval(nu) / falling(Rat(n), m);
}

namespace {

// Divisors of |z| by trial division; throws when the factorization would be
// too expensive for the desk-scale inputs this solver targets.
std::vector<mpz_class> divisors(const mpz_class& z) {
    mpz_class n = abs(z);
    if (n == 0) throw std::runtime_error("zero has no finite divisor list");
    std::vector<std::pair<mpz_class, int>> fac;
    mpz_class d = 2;
    mpz_class rem = n;
    long steps = 0;
    while (rem > 1) {
        if (++steps > 2000000)
            throw std::runtime_error("moment recovery: coefficient too large to factor");
        if (d * d > rem) {
            fac.emplace_back(rem, 1);
            break;
        }
        if (rem % d == 0) {
            int e = 0;
            while (rem % d == 0) {
                rem /= d;
                ++e;
            }
            fac.emplace_back(d, e);
        }
        d += (d == 2 ? 1 : 2);
    }
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : fac) {
        size_t sz = out.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

// Solves the square system A x = b by Gaussian elimination; returns false on
// a singular matrix.
bool solve_square(std::vector<std::vector<Rat>> A, std::vector<Rat> b,
                  std::vector<Rat>& x) {
    const int N = static_cast<int>(A.size());
    for (int col = 0; col < N; ++col) {
        int piv = -1;
        for (int r = col; r < N; ++r)
            if (A[r][col] != 0) { piv = r; break; }
        if (piv < 0) return false;
        std::swap(A[col], A[piv]);
        std::swap(b[col], b[piv]);
        Rat inv = 1 / A[col][col];
        for (int j = col; j < N; ++j) A[col][j] *= inv;
        b[col] *= inv;
        for (int r = 0; r < N; ++r) {
            if (r == col || A[r][col] == 0) continue;
            Rat f = A[r][col];
            for (int j = col; j < N; ++j) A[r][j] -= f * A[col][j];
            b[r] -= f * b[col];
        }
    }
    x = std::move(b);
    return true;
}

}  // namespace

ThomaPoint recover_thoma_from_moments(const std::vector<Rat>& moments,
                                      const Rat& theta, int k) {
    if (theta <= 0) throw std::domain_error("recovery requires theta > 0");
    const int M = static_cast<int>(moments.size()) + 1;  // moments cover p_2..p_M
    if (M < 2 * (2 * k + 1))
        throw std::domain_error("need at least 2(2k+1) - 1 moment values");
    // s[m] = phi(p_m) for m >= 2; a pure exponential sum
    //   s_m = sum_u w_u u^m  with bases u = alpha values and -theta * beta
    // values, weights w = multiplicity (alpha) resp. -multiplicity/theta.
    auto s = [&](int m) { return moments[m - 2]; };

    bool all_zero = std::all_of(moments.begin(), moments.end(),
                                [](const Rat& r) { return r == 0; });
    if (all_zero) return ThomaPoint({}, {});

    // Minimal linear recurrence of order r <= 2k.
    int order = -1;
    std::vector<Rat> rec;
    for (int r = 1; r <= 2 * k; ++r) {
        if (2 + 2 * r - 1 > M) break;
        std::vector<std::vector<Rat>> A(r, std::vector<Rat>(r));
        std::vector<Rat> b(r);
        for (int row = 0; row < r; ++row) {
            for (int j = 0; j < r; ++j) A[row][j] = s(2 + row + j);
            b[row] = s(2 + row + r);
        }
        std::vector<Rat> c;
        if (!solve_square(A, b, c)) continue;
        bool ok = true;
        for (int m = 2; m + r <= M && ok; ++m) {
            Rat pred = 0;
            for (int j = 0; j < r; ++j) pred += c[j] * s(m + j);
            ok = (pred == s(m + r));
        }
        if (ok) {
            order = r;
            rec = std::move(c);
            break;
        }
    }
    if (order < 0)
        throw std::runtime_error("moment recovery: no short recurrence fits the data");

    // Characteristic polynomial z^r - c_{r-1} z^{r-1} - ... - c_0, cleared to
    // integer coefficients; its roots are the pole locations.
    std::vector<Rat> chi(order + 1);
    chi[order] = 1;
    for (int j = 0; j < order; ++j) chi[j] = -rec[j];
    mpz_class den_lcm = 1;
    for (const Rat& c : chi) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        den_lcm = den_lcm / g * c.get_den();
    }
    std::vector<mpz_class> ic(order + 1);
    for (int j = 0; j <= order; ++j) {
        Rat scaled = chi[j] * Rat(den_lcm);
        ic[j] = scaled.get_num();  // denominator is 1 after scaling
    }
    if (ic[0] == 0)
        throw std::runtime_error("moment recovery: zero pole in minimal recurrence");

    auto eval_chi = [&](const Rat& z) {
        Rat v = 0;
        for (int j = order; j >= 0; --j) v = v * z + Rat(ic[j]);
        return v;
    };
    std::vector<Rat> roots;
    for (const mpz_class& p : divisors(ic[0])) {
        for (const mpz_class& q : divisors(ic[order])) {
            for (int sgn : {1, -1}) {
                Rat cand(sgn * p, q);
                cand.canonicalize();
                if (std::find(roots.begin(), roots.end(), cand) != roots.end())
                    continue;
                if (eval_chi(cand) == 0) roots.push_back(cand);
            }
        }
    }
    if (static_cast<int>(roots.size()) != order)
        throw std::runtime_error("moment recovery: pole polynomial has "
                                 "non-rational or repeated roots");

    // Weights from the Vandermonde system over m = 2..order+1.
    std::vector<std::vector<Rat>> V(order, std::vector<Rat>(order));
    std::vector<Rat> rhs(order);
    for (int row = 0; row < order; ++row) {
        for (int t = 0; t < order; ++t) V[row][t] = pow_rat(roots[t], 2 + row);
        rhs[row] = s(2 + row);
    }
    std::vector<Rat> w;
    if (!solve_square(V, rhs, w))
        throw std::runtime_error("moment recovery: degenerate pole system");

    std::vector<Rat> alpha, beta;
    for (int t = 0; t < order; ++t) {
        if (roots[t] > 0) {
            Rat mult = w[t];
            if (mult <= 0 || mult.get_den() != 1)
                throw std::runtime_error("moment recovery: alpha multiplicity "
                                         "is not a positive integer");
            for (mpz_class i = 0; i < mult.get_num(); ++i)
                alpha.push_back(roots[t]);
        } else {
            Rat bval = -roots[t] / theta;
            Rat mult = -theta * w[t];
            if (mult <= 0 || mult.get_den() != 1)
                throw std::runtime_error("moment recovery: beta multiplicity "
                                         "is not a positive integer");
            for (mpz_class i = 0; i < mult.get_num(); ++i) beta.push_back(bval);
        }
    }
    std::sort(alpha.begin(), alpha.end(), std::greater<Rat>());
    std::sort(beta.begin(), beta.end(), std::greater<Rat>());
    ThomaPoint omega(alpha, beta);

    for (int m = 2; m <= M; ++m)
        if (theta_extend_power(m, omega, theta) != s(m))
            throw std::runtime_error("moment recovery: reconstructed point does "
                                     "not reproduce the moments");
    return omega;
}

std::vector<AsymptoticsRow> asymptotics_experiment(
    const ShiftedSymFunc& F, const std::vector<Partition>& diagrams,
    const Rat& theta) {
    if (diagrams.empty())
        throw std::domain_error("asymptotics experiment needs diagrams");
    for (size_t i = 1; i < diagrams.size(); ++i)
        if (diagrams[i].size() <= diagrams[i - 1].size())
            throw std::domain_error("diagram sizes must increase");
    const int m = F.degree();
    SymFunc f = F.leading_term();
    std::vector<AsymptoticsRow> out;
    for (const Partition& nu : diagrams) {
        AsymptoticsRow row;
        row.n = nu.size();
        row.scaled_value = F.eval(nu) / pow_rat(Rat(row.n), m);
        row.boundary_value =
            theta_extend_eval(f, embed_omega_theta(nu, theta), theta);
        row.error = row.scaled_value - row.boundary_value;
        row.sq_error_times_n = row.error * row.error * row.n;
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace jackgraph
