#include <doctest.h>

#include "jackgraph/symfunc.hpp"

using namespace jackgraph;

namespace {

// Evaluation points for brute-force identities in finitely many variables.
const std::vector<std::vector<Rat>> kPoints = {
    {Rat(1), Rat(2), Rat(3), Rat(4)},
    {Rat(1, 2), Rat(1, 3), Rat(-2), Rat(5)},
    {Rat(-1), Rat(-1), Rat(3, 7), Rat(0)},
};

}  // namespace

TEST_CASE("term bookkeeping") {
    SymFunc f(Basis::Monomial);
    f.add_term(Partition({2}), Rat(1, 2));
    f.add_term(Partition({2}), Rat(-1, 2));
    CHECK(f.is_zero());
    f.add_term(Partition({1, 1}), 3);
    CHECK(f.coeff(Partition({1, 1})) == 3);
    CHECK(f.coeff(Partition({2})) == 0);
    CHECK(f.degree() == 2);
    CHECK(f.is_homogeneous());
    f.add_term(Partition({1}), 1);
    CHECK_FALSE(f.is_homogeneous());
    CHECK(SymFunc::zero().degree() == -1);
}

TEST_CASE("display form") {
    SymFunc f(Basis::Monomial);
    f.add_term(Partition({2}), 1);
    f.add_term(Partition({1, 1}), Rat(2, 3));
    CHECK(f.to_string() == "m[2] + (2/3)\xc2\xb7m[1,1]");
    CHECK(SymFunc::one().to_string() == "1");
    CHECK(SymFunc::zero().to_string() == "0");
}

TEST_CASE("basic basis conversions") {
    // p_2 = m_2; p_11 = m_2 + 2 m_11
    SymFunc p2 = powersum_to_monomial(SymFunc::powersum(Partition({2})));
    CHECK(p2 == SymFunc::monomial(Partition({2})));
    SymFunc p11 = powersum_to_monomial(SymFunc::powersum(Partition({1, 1})));
    CHECK(p11.coeff(Partition({2})) == 1);
    CHECK(p11.coeff(Partition({1, 1})) == 2);
    // m_11 = (p_11 - p_2)/2
    SymFunc m11 = monomial_to_powersum(SymFunc::monomial(Partition({1, 1})));
    CHECK(m11.coeff(Partition({1, 1})) == Rat(1, 2));
    CHECK(m11.coeff(Partition({2})) == Rat(-1, 2));
}

TEST_CASE("conversions are mutually inverse") {
    for (int n = 0; n <= 6; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            SymFunc m = SymFunc::monomial(lam, Rat(3, 5));
            CHECK(powersum_to_monomial(monomial_to_powersum(m)) == m);
            SymFunc p = SymFunc::powersum(lam, Rat(-7, 2));
            CHECK(monomial_to_powersum(powersum_to_monomial(p)) == p);
        }
}

TEST_CASE("conversion respects evaluation") {
    for (int n = 1; n <= 5; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            SymFunc p = SymFunc::powersum(lam);
            SymFunc m = powersum_to_monomial(p);
            for (const auto& x : kPoints) CHECK(evaluate(p, x) == evaluate(m, x));
        }
}

TEST_CASE("multiplication against brute-force evaluation") {
    std::vector<SymFunc> fs = {
        SymFunc::powersum(Partition({2, 1}), Rat(1, 3)),
        SymFunc::powersum(Partition({3})) + SymFunc::powersum(Partition({1, 1})),
        SymFunc::one(),
    };
    for (const SymFunc& f : fs)
        for (const SymFunc& g : fs) {
            SymFunc prod = multiply(f, g);
            for (const auto& x : kPoints)
                CHECK(evaluate(prod, x) == evaluate(f, x) * evaluate(g, x));
        }
    // same check in the monomial basis
    SymFunc a = SymFunc::monomial(Partition({2, 1})) * Rat(2);
    SymFunc b = SymFunc::monomial(Partition({1, 1})) +
                SymFunc::monomial(Partition({3}), Rat(-1));
    SymFunc prod = multiply(a, b);
    CHECK(prod.basis() == Basis::Monomial);
    for (const auto& x : kPoints)
        CHECK(evaluate(prod, x) == evaluate(a, x) * evaluate(b, x));
}

TEST_CASE("power sums multiply by concatenation") {
    SymFunc f = multiply(SymFunc::powersum(Partition({2})),
                         SymFunc::powersum(Partition({3, 1})));
    CHECK(f == SymFunc::powersum(Partition({3, 2, 1})));
}

TEST_CASE("scalar product") {
    Rat theta(1, 2);
    for (int n = 1; n <= 5; ++n) {
        auto all = enumerate_partitions(n);
        for (const Partition& lam : all)
            for (const Partition& mu : all) {
                Rat v = scalar_product_theta(SymFunc::powersum(lam),
                                             SymFunc::powersum(mu), theta);
                if (lam == mu)
                    CHECK(v == lam.z() / pow_rat(theta, lam.length()));
                else
                    CHECK(v == 0);
            }
    }
    // bilinear over mixed bases too
    SymFunc m2 = SymFunc::monomial(Partition({2}));
    CHECK(scalar_product_theta(m2, m2, Rat(1)) ==
          scalar_product_theta(monomial_to_powersum(m2), m2, Rat(1)));
    CHECK_THROWS_AS(scalar_product_theta(m2, m2, Rat(0)), std::domain_error);
}

TEST_CASE("evaluation of monomials") {
    // m_21(x,y) = x^2 y + x y^2
    SymFunc m21 = SymFunc::monomial(Partition({2, 1}));
    CHECK(evaluate(m21, {Rat(2), Rat(3)}) == 2 * 2 * 3 + 2 * 3 * 3);
    CHECK(evaluate(m21, {Rat(5)}) == 0);  // needs two variables
    CHECK(evaluate(SymFunc::one(), {}) == 1);
}

TEST_CASE("json round trip is exact") {
    SymFunc f(Basis::PowerSum);
    f.add_term(Partition({3, 1}), Rat(-22, 7));
    f.add_term(Partition(), Rat(1, 1000000007));
    SymFunc g = SymFunc::from_json(f.json());
    CHECK(g == f);
    CHECK(g.json() == f.json());
    CHECK_THROWS(SymFunc::from_json("{\"basis\":\"weird\",\"terms\":[]}"));
}
