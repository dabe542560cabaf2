#include <doctest.h>

#include "jackgraph/boundary.hpp"
#include "jackgraph/branching.hpp"
#include "jackgraph/jack.hpp"

using namespace jackgraph;

TEST_CASE("simplex point validation") {
    ThomaPoint ok({Rat(1, 2), Rat(1, 4)}, {Rat(1, 8)});
    CHECK(ok.gamma() == Rat(1, 8));
    CHECK(ThomaPoint().gamma() == 1);
    CHECK_THROWS_AS(ThomaPoint({Rat(3, 4)}, {Rat(1, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(ThomaPoint({Rat(1, 4), Rat(1, 2)}, {}),
                    std::invalid_argument);  // not weakly decreasing
    CHECK(ThomaPoint({Rat(0)}, {}).alpha().empty());  // zeros are stripped
    CHECK_THROWS_AS(ThomaPoint({Rat(-1, 2)}, {}), std::invalid_argument);
}

TEST_CASE("Frobenius embedding") {
    ThomaPoint w = embed_omega(Partition({4, 3, 1}));
    CHECK(w.alpha() == std::vector<Rat>{Rat(3, 8), Rat(1, 8)});
    CHECK(w.beta() == std::vector<Rat>{Rat(3, 8), Rat(1, 8)});
    CHECK(w.gamma() == 0);
    for (int n = 1; n <= 8; ++n)
        for (const Partition& nu : enumerate_partitions(n))
            CHECK(embed_omega(nu).gamma() == 0);
}

TEST_CASE("content-split embedding fills the simplex") {
    for (const Rat& theta : {Rat(1, 2), Rat(1), Rat(2)})
        for (int n = 1; n <= 7; ++n)
            for (const Partition& nu : enumerate_partitions(n))
                CHECK(embed_omega_theta(nu, theta).gamma() == 0);
    // theta = 1 on a self-conjugate-free example
    ThomaPoint w = embed_omega_theta(Partition({3, 1}), Rat(1));
    CHECK(w.alpha() == std::vector<Rat>{Rat(1, 2)});
    CHECK(w.beta() == std::vector<Rat>{Rat(1, 2)});
}

TEST_CASE("extended power sums") {
    Rat theta(1, 2);
    ThomaPoint w({Rat(1, 2)}, {Rat(1, 4)});
    CHECK(theta_extend_power(1, w, theta) == 1);
    // p_m -> sum alpha^m + (-theta)^{m-1} sum beta^m
    CHECK(theta_extend_power(2, w, theta) ==
          Rat(1, 4) - theta * Rat(1, 16));
    CHECK(theta_extend_power(3, w, theta) ==
          Rat(1, 8) + theta * theta * Rat(1, 64));
    // gamma vertex kills every p_m with m >= 2
    for (int m = 2; m <= 6; ++m)
        CHECK(theta_extend_power(m, ThomaPoint(), theta) == 0);
}

TEST_CASE("extension is a ring homomorphism on power sums") {
    Rat theta(2);
    ThomaPoint w({Rat(1, 3)}, {Rat(1, 5), Rat(1, 7)});
    SymFunc f = SymFunc::powersum(Partition({2})) * Rat(3) +
                SymFunc::powersum(Partition({1, 1}));
    SymFunc g = SymFunc::powersum(Partition({3, 2}), Rat(1, 2));
    Rat fe = theta_extend_eval(f, w, theta);
    Rat ge = theta_extend_eval(g, w, theta);
    CHECK(theta_extend_eval(multiply(f, g), w, theta) == fe * ge);
    // monomial-basis input goes through the power-sum rewrite
    CHECK(theta_extend_eval(convert(f, Basis::Monomial), w, theta) == fe);
}

TEST_CASE("boundary kernel values") {
    // K((2), omega) = (ext(p_2) + theta)/(1 + theta)
    for (const Rat& theta : {Rat(1, 2), Rat(1), Rat(3)}) {
        CHECK(martin_kernel_boundary(Partition({2}), ThomaPoint(), theta).value ==
              theta / (1 + theta));
        // the alpha vertex is the one-variable specialization x = 1, so
        // single-row P_mu give 1 and everything else dies
        ThomaPoint alpha1({Rat(1)}, {});
        for (int m = 0; m <= 4; ++m)
            CHECK(martin_kernel_boundary(Partition(std::vector<int>(m ? 1 : 0, m)),
                                         alpha1, theta)
                      .value == 1);
        CHECK(martin_kernel_boundary(Partition({1, 1}), alpha1, theta).value == 0);
        CHECK(martin_kernel_boundary(Partition({2, 1}), alpha1, theta).value == 0);
    }
    CHECK(martin_kernel_boundary(Partition(), ThomaPoint(), Rat(2)).value == 1);
}

TEST_CASE("interpolation kernel agrees with the recursion") {
    for (const Rat& theta : {Rat(1, 2), Rat(2)}) {
        WeightedGraphView view = WeightedGraphView::jack(theta);
        for (const Partition& mu : {Partition({1}), Partition({2}), Partition({2, 1})})
            for (int n = 4; n <= 6; ++n)
                for (const Partition& nu : enumerate_partitions(n))
                    CHECK(martin_kernel_via_interpolation(mu, nu, theta) ==
                          martin_kernel_finite(mu, nu, view));
    }
}

TEST_CASE("moment recovery round trips") {
    std::vector<ThomaPoint> points = {
        ThomaPoint(),
        ThomaPoint({Rat(1, 2)}, {}),
        ThomaPoint({}, {Rat(2, 3)}),
        ThomaPoint({Rat(1, 2), Rat(1, 4)}, {Rat(1, 8)}),
        ThomaPoint({Rat(1, 3), Rat(1, 3)}, {Rat(1, 6), Rat(1, 6)}),
    };
    for (const Rat& theta : {Rat(1, 2), Rat(1), Rat(2)})
        for (const ThomaPoint& w : points) {
            std::vector<Rat> moments;
            for (int m = 2; m <= 14; ++m)
                moments.push_back(theta_extend_power(m, w, theta));
            CHECK(recover_thoma_from_moments(moments, theta, 3) == w);
        }
    // inconsistent data is rejected
    std::vector<Rat> junk(13, Rat(17, 3));
    CHECK_THROWS_AS(recover_thoma_from_moments(junk, Rat(1), 3),
                    std::runtime_error);
}

TEST_CASE("asymptotics rows match the closed form") {
    for (const Rat& theta : {Rat(1, 2), Rat(1), Rat(2)}) {
        std::vector<Partition> rows;
        for (int n = 2; n <= 12; ++n) rows.emplace_back(std::vector<int>{n});
        auto table = asymptotics_experiment(ShiftedSymFunc::ptilde(2, theta),
                                            rows, theta);
        REQUIRE(table.size() == 11);
        for (const auto& r : table) {
            CHECK(r.error == (Rat(r.n - 1) + theta) / (Rat(r.n) * r.n));
            CHECK(r.sq_error_times_n == r.error * r.error * r.n);
        }
    }
}
