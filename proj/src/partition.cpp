#include "jackgraph/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jackgraph {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
            throw std::invalid_argument("parts must be weakly decreasing positive");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("row index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

int Partition::multiplicity(int j) const {
    int c = 0;
    for (int p : parts_) c += (p == j);
    return c;
}

Rat Partition::z() const {
    Rat out = 1;
    int i = 0;
    while (i < length()) {
        int j = parts_[i];
        int m = 0;
        while (i < length() && parts_[i] == j) { ++m; ++i; }
        for (int k = 1; k <= m; ++k) out *= Rat(j) * k;
    }
    return out;
}

Partition Partition::conjugate() const {
    if (empty()) return {};
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 0; i < other.length(); ++i)
        if (other.parts_[i] > parts_[i]) return false;
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < length(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

Partition Partition::parse(const std::string& s) {
    size_t a = s.find('[');
    size_t b = s.rfind(']');
    if (a == std::string::npos || b == std::string::npos || b < a)
        throw std::invalid_argument("partition literal must look like [3,3,1]: " + s);
    std::vector<int> parts;
    std::string body = s.substr(a + 1, b - a - 1);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.find_first_not_of(" \t") == std::string::npos) continue;
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

ArmLeg arm_leg(const Partition& lambda, Box b) {
    if (b.row < 1 || b.col < 1 || b.col > lambda.part(b.row))
        throw std::domain_error("box (" + std::to_string(b.row) + "," +
                                std::to_string(b.col) + ") outside " + lambda.to_string());
    Partition conj = lambda.conjugate();
    return {lambda.part(b.row) - b.col, conj.part(b.col) - b.row};
}

Rat theta_content(Box b, const Rat& theta) {
    return Rat(b.col - 1) - theta * (b.row - 1);
}

Frobenius frobenius(const Partition& nu) {
    Frobenius f;
    Partition conj = nu.conjugate();
    for (int j = 1; nu.part(j) >= j; ++j) {
        f.a.push_back(nu.part(j) - j);
        f.b.push_back(conj.part(j) - j + 1);
    }
    return f;
}

Partition from_frobenius(const Frobenius& f) {
    if (f.a.size() != f.b.size())
        throw std::invalid_argument("Frobenius coordinate lengths differ");
    int d = static_cast<int>(f.a.size());
    if (d == 0) return {};
    // Row j has length a_j + j for j <= d; rows below the diagonal are
    // recovered from the b-parameters of the conjugate.
    int depth = f.b[0] + 0;  // nu'_1 = b_1 - 1 + 1
    std::vector<int> rows(std::max(d, depth), 0);
    for (int j = 0; j < d; ++j) rows[j] = f.a[j] + j + 1;
    // Column lengths below: nu'_j = b_j + j - 1 for j <= d.
    for (int j = 0; j < d; ++j) {
        int col_len = f.b[j] + j;  // b_j + j - 1 + 1 rows reach column j+1... see below
        // nu'_{j+1} = f.b[j] + (j+1) - 1 = f.b[j] + j
        for (int i = d; i < col_len; ++i) {
            if (i >= static_cast<int>(rows.size())) rows.resize(i + 1, 0);
            rows[i] = std::max(rows[i], j + 1);
        }
    }
    return Partition(std::move(rows));
}

std::vector<Partition> covers(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> p = lambda.parts();
    for (int i = 0; i <= lambda.length(); ++i) {
        if (i < lambda.length()) {
            if (i > 0 && p[i] == p[i - 1]) continue;  // not addable here
            std::vector<int> q = p;
            ++q[i];
            out.emplace_back(std::move(q));
        } else {
            std::vector<int> q = p;
            q.push_back(1);
            out.emplace_back(std::move(q));
        }
    }
    return out;
}

std::vector<Partition> cocovers(const Partition& nu) {
    std::vector<Partition> out;
    std::vector<int> p = nu.parts();
    for (int i = 0; i < nu.length(); ++i) {
        if (i + 1 < nu.length() && p[i] == p[i + 1]) continue;  // not removable
        std::vector<int> q = p;
        --q[i];
        out.emplace_back(std::move(q));
    }
    return out;
}

namespace {
void enumerate_rec(int n, int max_part, std::vector<int>& acc,
                   std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        enumerate_rec(n - p, p, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::domain_error("n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate_rec(n, n, acc, out);
    return out;
}

std::vector<Partition> enumerate_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k)
        for (auto& p : enumerate_partitions(k)) out.push_back(std::move(p));
    return out;
}

Dominance dominance_leq(const Partition& lambda, const Partition& nu) {
    if (lambda.size() != nu.size())
        throw std::domain_error("dominance order needs equal sizes");
    if (lambda == nu) return Dominance::Equal;
    int len = std::max(lambda.length(), nu.length());
    int sl = 0, sn = 0;
    bool le = true, ge = true;
    for (int i = 1; i <= len; ++i) {
        sl += lambda.part(i);
        sn += nu.part(i);
        if (sl > sn) le = false;
        if (sl < sn) ge = false;
    }
    if (le) return Dominance::LessOrEqual;
    if (ge) return Dominance::Greater;
    return Dominance::Incomparable;
}

PosNegSplit split_positive_negative(const Partition& nu, const Rat& theta) {
    if (theta <= 0) throw std::domain_error("split requires theta > 0");
    PosNegSplit out;
    // Row i of nu+: boxes (i,j) with (j-1) > theta (i-1).
    for (int i = 1; i <= nu.length(); ++i) {
        int cnt = 0;
        for (int j = nu.part(i); j >= 1; --j) {
            if (Rat(j - 1) > theta * (i - 1)) ++cnt;
            else break;
        }
        if (cnt > 0) out.pos_rows.push_back(cnt);
    }
    // Column j of nu-: boxes (i,j) with (j-1) <= theta (i-1).
    Partition conj = nu.conjugate();
    for (int j = 1; j <= nu.part(1); ++j) {
        int cnt = 0;
        for (int i = conj.part(j); i >= 1; --i) {
            if (Rat(j - 1) <= theta * (i - 1)) ++cnt;
            else break;
        }
        if (cnt > 0) out.neg_cols.push_back(cnt);
    }
    return out;
}

}  // namespace jackgraph
