#include "jackgraph/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace jackgraph {

SymFunc SymFunc::monomial(const Partition& idx, Rat coeff) {
    SymFunc f(Basis::Monomial);
    f.add_term(idx, coeff);
    return f;
}

SymFunc SymFunc::powersum(const Partition& idx, Rat coeff) {
    SymFunc f(Basis::PowerSum);
    f.add_term(idx, coeff);
    return f;
}

SymFunc SymFunc::one(Basis b) {
    SymFunc f(b);
    f.add_term(Partition(), 1);
    return f;
}

Rat SymFunc::coeff(const Partition& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Rat(0) : it->second;
}

void SymFunc::add_term(const Partition& idx, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
    if (other.is_zero()) return *this;
    if (is_zero()) basis_ = other.basis_;
    if (basis_ != other.basis_)
        throw std::domain_error("basis mismatch in addition; convert first");
    for (const auto& [idx, c] : other.terms_) add_term(idx, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
    if (other.is_zero()) return *this;
    if (is_zero()) basis_ = other.basis_;
    if (basis_ != other.basis_)
        throw std::domain_error("basis mismatch in subtraction; convert first");
    for (const auto& [idx, c] : other.terms_) add_term(idx, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [idx, v] : terms_) v *= c;
    return *this;
}

bool SymFunc::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.size();
    for (const auto& [idx, c] : terms_)
        if (idx.size() != d) return false;
    return true;
}

int SymFunc::degree() const {
    int d = -1;
    for (const auto& [idx, c] : terms_) d = std::max(d, idx.size());
    return d;
}

std::string SymFunc::to_string() const {
    if (terms_.empty()) return "0";
    const char* tag = basis_ == Basis::Monomial ? "m" : "p";
    std::ostringstream os;
    // Display in reverse-lex order within degree, low degree last.
    std::vector<std::pair<Partition, Rat>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
        return a.first.parts() > b.first.parts();
    });
    bool first = true;
    for (const auto& [idx, c] : v) {
        if (!first) os << " + ";
        first = false;
        if (c != 1 || idx.empty()) {
            if (c.get_den() == 1) os << jackgraph::to_string(c);
            else os << '(' << jackgraph::to_string(c) << ')';
            if (!idx.empty()) os << "\xc2\xb7";  // middle dot
        }
        if (!idx.empty()) os << tag << idx.to_string();
    }
    return os.str();
}

std::string SymFunc::json() const {
    nlohmann::json j;
    j["basis"] = basis_ == Basis::Monomial ? "monomial" : "powersum";
    j["terms"] = nlohmann::json::array();
    for (const auto& [idx, c] : terms_) {
        nlohmann::json t;
        t["index"] = idx.parts();
        t["coeff"] = jackgraph::to_string(c);
        j["terms"].push_back(t);
    }
    return j.dump();
}

SymFunc SymFunc::from_json(const std::string& s) {
    nlohmann::json j = nlohmann::json::parse(s);
    std::string b = j.at("basis").get<std::string>();
    SymFunc f(b == "monomial" ? Basis::Monomial : Basis::PowerSum);
    if (b != "monomial" && b != "powersum")
        throw std::invalid_argument("unknown basis tag: " + b);
    for (const auto& t : j.at("terms")) {
        Partition idx(t.at("index").get<std::vector<int>>());
        f.add_term(idx, parse_rat(t.at("coeff").get<std::string>()));
    }
    return f;
}

namespace {

// p_r . m_lambda = sum_mu c m_mu where mu runs over partitions obtained by
// adding r to one part of lambda (or appending a part r), and the
// coefficient of m_mu is the number of parts of mu whose removal of r
// recovers lambda, counted over distinct part values.
SymFunc multiply_p_into_monomial(int r, const SymFunc& f) {
    SymFunc out(Basis::Monomial);
    for (const auto& [lambda, c] : f.terms()) {
        // candidate mu: add r to a part of each distinct value, or append r
        std::vector<int> base = lambda.parts();
        std::vector<std::vector<int>> mus;
        for (size_t i = 0; i < base.size(); ++i) {
            if (i > 0 && base[i] == base[i - 1]) continue;
            std::vector<int> q = base;
            q[i] += r;
            std::sort(q.begin(), q.end(), std::greater<int>());
            mus.push_back(std::move(q));
        }
        {
            std::vector<int> q = base;
            q.push_back(r);
            std::sort(q.begin(), q.end(), std::greater<int>());
            mus.push_back(std::move(q));
        }
        std::sort(mus.begin(), mus.end());
        mus.erase(std::unique(mus.begin(), mus.end()), mus.end());
        for (auto& m : mus) {
            Partition mu(m);
            // coefficient: over distinct values v of mu with v >= r,
            // removing r from one v-part must give back lambda
            int coef = 0;
            std::vector<int> vals = mu.parts();
            vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
            for (int v : vals) {
                if (v < r) continue;
                std::vector<int> q = mu.parts();
                auto it = std::find(q.begin(), q.end(), v);
                *it = v - r;
                std::sort(q.begin(), q.end(), std::greater<int>());
                while (!q.empty() && q.back() == 0) q.pop_back();
                if (Partition(q) == lambda) coef += mu.multiplicity(v);
            }
            if (coef) out.add_term(mu, c * coef);
        }
    }
    return out;
}

// Per-degree change-of-basis cache.
struct DegreeTables {
    std::vector<Partition> index;                 // partitions of n, reverse-lex
    std::vector<SymFunc> p_in_m;                  // p_lambda in monomial basis
    std::vector<SymFunc> m_in_p;                  // m_lambda in power-sum basis
};

const DegreeTables& degree_tables(int n) {
    static std::mutex mu;
    static std::map<int, DegreeTables> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    DegreeTables t;
    t.index = enumerate_partitions(n);
    const int N = static_cast<int>(t.index.size());
    std::map<Partition, int> pos;
    for (int i = 0; i < N; ++i) pos[t.index[i]] = i;

    // p_lambda in the monomial basis, by iterated multiplication by p_r.
    for (const Partition& lambda : t.index) {
        SymFunc f = SymFunc::monomial(Partition(), 1);
        for (int r : lambda.parts()) f = multiply_p_into_monomial(r, f);
        t.p_in_m.push_back(std::move(f));
    }

    // Invert: solve A x = e_j columnwise where A[i][k] = coeff of m_{index[i]}
    // in p_{index[k]}.  Gaussian elimination over the rationals.
    std::vector<std::vector<Rat>> aug(N, std::vector<Rat>(2 * N, 0));
    for (int k = 0; k < N; ++k)
        for (const auto& [idx, c] : t.p_in_m[k].terms()) aug[pos[idx]][k] = c;
    for (int i = 0; i < N; ++i) aug[i][N + i] = 1;
    for (int col = 0; col < N; ++col) {
        int piv = -1;
        for (int r = col; r < N; ++r)
            if (aug[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw std::logic_error("p-to-m transition matrix singular");
        std::swap(aug[col], aug[piv]);
        Rat inv = 1 / aug[col][col];
        for (int j = 0; j < 2 * N; ++j) aug[col][j] *= inv;
        for (int r = 0; r < N; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            Rat f = aug[r][col];
            for (int j = col; j < 2 * N; ++j) aug[r][j] -= f * aug[col][j];
        }
    }
    // Column j of the inverse expresses m_{index[j]} in the p basis.
    for (int j = 0; j < N; ++j) {
        SymFunc f(Basis::PowerSum);
        for (int i = 0; i < N; ++i) f.add_term(t.index[i], aug[i][N + j]);
        t.m_in_p.push_back(std::move(f));
    }

    return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

SymFunc powersum_to_monomial(const SymFunc& f) {
    if (f.basis() == Basis::Monomial) return f;
    SymFunc out(Basis::Monomial);
    for (const auto& [lambda, c] : f.terms()) {
        const DegreeTables& t = degree_tables(lambda.size());
        size_t k = std::find(t.index.begin(), t.index.end(), lambda) - t.index.begin();
        out += t.p_in_m[k] * c;
    }
    return out;
}

SymFunc monomial_to_powersum(const SymFunc& f) {
    if (f.basis() == Basis::PowerSum) return f;
    SymFunc out(Basis::PowerSum);
    for (const auto& [lambda, c] : f.terms()) {
        const DegreeTables& t = degree_tables(lambda.size());
        size_t k = std::find(t.index.begin(), t.index.end(), lambda) - t.index.begin();
        out += t.m_in_p[k] * c;
    }
    return out;
}

SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis() == target || f.is_zero()) {
        SymFunc g = f;
        return g;
    }
    return target == Basis::Monomial ? powersum_to_monomial(f)
                                     : monomial_to_powersum(f);
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    if (f.basis() != g.basis() && !f.is_zero() && !g.is_zero())
        throw std::domain_error("basis mismatch in multiply; convert first");
    if (f.is_zero() || g.is_zero()) return SymFunc::zero(f.basis());
    if (f.basis() == Basis::PowerSum) {
        SymFunc out(Basis::PowerSum);
        for (const auto& [a, ca] : f.terms())
            for (const auto& [b, cb] : g.terms()) {
                std::vector<int> parts = a.parts();
                parts.insert(parts.end(), b.parts().begin(), b.parts().end());
                std::sort(parts.begin(), parts.end(), std::greater<int>());
                out.add_term(Partition(std::move(parts)), ca * cb);
            }
        return out;
    }
    // Monomial products route through the power-sum basis.
    SymFunc prod = multiply(monomial_to_powersum(f), monomial_to_powersum(g));
    return powersum_to_monomial(prod);
}

Rat scalar_product_theta(const SymFunc& f, const SymFunc& g, const Rat& theta) {
    if (theta == 0) throw std::domain_error("(.,.)_theta undefined at theta = 0");
    SymFunc fp = convert(f, Basis::PowerSum);
    SymFunc gp = convert(g, Basis::PowerSum);
    Rat out = 0;
    for (const auto& [lambda, c] : fp.terms()) {
        Rat d = gp.coeff(lambda);
        if (d == 0) continue;
        out += c * d * lambda.z() / pow_rat(theta, lambda.length());
    }
    return out;
}

namespace {

// m_lambda(x_1..x_N): sum over assignments of the parts of lambda to
// distinct variable slots, grouped by part value so each distinct monomial
// is produced once.
Rat eval_monomial(const Partition& lambda, const std::vector<Rat>& x) {
    if (lambda.empty()) return 1;
    if (lambda.length() > static_cast<int>(x.size())) return 0;
    // distinct values with multiplicities
    std::vector<std::pair<int, int>> vals;
    for (int p : lambda.parts()) {
        if (!vals.empty() && vals.back().first == p) ++vals.back().second;
        else vals.emplace_back(p, 1);
    }
    const int N = static_cast<int>(x.size());
    std::vector<bool> used(N, false);
    Rat total = 0;
    // choose, per value, an unordered set of slots; recursion over values
    // with combination enumeration inside each
    std::function<void(size_t, Rat)> rec_value = [&](size_t vi, Rat acc) {
        if (vi == vals.size()) {
            total += acc;
            return;
        }
        auto [v, mult] = vals[vi];
        std::vector<int> chosen;
        std::function<void(int, Rat)> rec_slot = [&](int start, Rat part_acc) {
            if (static_cast<int>(chosen.size()) == mult) {
                rec_value(vi + 1, acc * part_acc);
                return;
            }
            for (int s = start; s < N; ++s) {
                if (used[s]) continue;
                used[s] = true;
                chosen.push_back(s);
                rec_slot(s + 1, part_acc * pow_rat(x[s], v));
                chosen.pop_back();
                used[s] = false;
            }
        };
        rec_slot(0, Rat(1));
    };
    rec_value(0, Rat(1));
    return total;
}

}  // namespace

Rat evaluate(const SymFunc& f, const std::vector<Rat>& x) {
    Rat out = 0;
    if (f.basis() == Basis::PowerSum) {
        for (const auto& [lambda, c] : f.terms()) {
            Rat term = c;
            for (int m : lambda.parts()) {
                Rat pm = 0;
                for (const Rat& xi : x) pm += pow_rat(xi, m);
                term *= pm;
            }
            out += term;
        }
    } else {
        for (const auto& [lambda, c] : f.terms())
            out += c * eval_monomial(lambda, x);
    }
    return out;
}

}  // namespace jackgraph
