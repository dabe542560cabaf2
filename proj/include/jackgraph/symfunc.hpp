#pragma once

#include <map>
#include <string>
#include <vector>

#include "jackgraph/partition.hpp"
#include "jackgraph/rational.hpp"

namespace jackgraph {

enum class Basis { Monomial, PowerSum };

/// A symmetric function with exact rational coefficients: a finitely
/// supported map from index partitions to coefficients, tagged with the
/// basis (monomial m_lambda or power-sum p_lambda) the indices refer to.
/// Zero coefficients are never stored.
class SymFunc {
public:
    SymFunc() : basis_(Basis::Monomial) {}
    explicit SymFunc(Basis b) : basis_(b) {}

    static SymFunc monomial(const Partition& idx, Rat coeff = 1);
    static SymFunc powersum(const Partition& idx, Rat coeff = 1);
    static SymFunc one(Basis b = Basis::PowerSum);
    static SymFunc zero(Basis b = Basis::PowerSum) { return SymFunc(b); }

    Basis basis() const { return basis_; }
    const std::map<Partition, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coeff(const Partition& idx) const;
    void add_term(const Partition& idx, const Rat& c);

    SymFunc& operator+=(const SymFunc& other);
    SymFunc& operator-=(const SymFunc& other);
    SymFunc& operator*=(const Rat& c);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const Rat& c) { return a *= c; }
    bool operator==(const SymFunc&) const = default;

    /// True if every index has the same size (the zero function counts as
    /// homogeneous of any degree).
    bool is_homogeneous() const;
    int degree() const;  // max |idx|, -1 for zero

    std::string to_string() const;
    std::string json() const;
    static SymFunc from_json(const std::string&);

private:
    Basis basis_;
    std::map<Partition, Rat> terms_;
};

/// Exact product.  Both factors must share the same basis.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

SymFunc powersum_to_monomial(const SymFunc& f);
SymFunc monomial_to_powersum(const SymFunc& f);

/// Converts to the requested basis (no-op when already there).
SymFunc convert(const SymFunc& f, Basis target);

/// (p_mu, p_lambda)_theta = delta z_lambda theta^{-l}; theta must be nonzero.
Rat scalar_product_theta(const SymFunc& f, const SymFunc& g, const Rat& theta);

/// Specialization at finitely many variables (zero beyond len(x)).
Rat evaluate(const SymFunc& f, const std::vector<Rat>& x);

}  // namespace jackgraph
