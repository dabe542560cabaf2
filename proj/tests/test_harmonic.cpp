#include <doctest.h>

#include "jackgraph/harmonic.hpp"

using namespace jackgraph;

namespace {

AtomicMeasure two_atoms() {
    return {{{ThomaPoint({Rat(1, 2)}, {Rat(1, 4)}), Rat(2, 3)},
             {ThomaPoint({}, {Rat(1, 3), Rat(1, 3)}), Rat(1, 3)}}};
}

}  // namespace

TEST_CASE("measure validation") {
    CHECK_NOTHROW(two_atoms().validate());
    AtomicMeasure bad{{{ThomaPoint(), Rat(1, 2)}}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    AtomicMeasure neg{{{ThomaPoint(), Rat(3, 2)}, {ThomaPoint(), Rat(-1, 2)}}};
    CHECK_THROWS_AS(neg.validate(), std::invalid_argument);
}

TEST_CASE("measure-induced functions are harmonic and normalized") {
    for (const Rat& theta : {Rat(1, 2), Rat(1), Rat(2)}) {
        auto phi = harmonic_from_measure(two_atoms(), theta);
        CHECK(phi(Partition()) == 1);
        WeightedGraphView view = WeightedGraphView::jack(theta);
        for (int n = 0; n <= 4; ++n)
            for (const Partition& lam : enumerate_partitions(n))
                CHECK(harmonicity_defect(phi, lam, view) == 0);
        for (int n = 0; n <= 6; ++n) {
            LevelDistribution d = level_distribution(phi, n, theta, true);
            CHECK(d.total() == 1);
            for (const auto& [lam, mass] : d.masses) CHECK(mass >= 0);
        }
    }
}

TEST_CASE("Plancherel distribution at theta = 1") {
    AtomicMeasure delta{{{ThomaPoint(), Rat(1)}}};
    auto phi = harmonic_from_measure(delta, Rat(1));
    for (int n = 0; n <= 7; ++n) {
        LevelDistribution d = level_distribution(phi, n, Rat(1));
        CHECK(d.total() == 1);
        for (const auto& [lam, mass] : d.masses) {
            Rat dim = dim_hook(lam, Rat(1));
            CHECK(mass == dim * dim / factorial(n));
        }
    }
}

TEST_CASE("level distribution rejects signed functions") {
    auto signed_fn = [](const Partition& p) {
        return p.length() >= 2 ? Rat(-1) : Rat(1);
    };
    CHECK_THROWS_AS(level_distribution(signed_fn, 2, Rat(1)), std::domain_error);
}

TEST_CASE("pushforward moments approach the measure's moments") {
    AtomicMeasure M = two_atoms();
    Rat theta(1);
    auto rows = pushforward_convergence(M, theta, {2, 8});
    REQUIRE(rows.size() == 2);
    for (const auto& r : rows) {
        REQUIRE(r.gap.size() == 3);
        for (const Rat& g : r.gap) CHECK(g >= 0);
    }
    // the m = 2 moment gap shrinks from level 2 to level 8
    CHECK(rows[1].gap[0] < rows[0].gap[0]);
    // targets are the measure's own integrals
    Rat t2 = 0;
    for (const auto& a : M.atoms)
        t2 += a.weight * theta_extend_power(2, a.point, theta);
    CHECK(rows[0].target[0] == t2);
}

TEST_CASE("positivity scan") {
    PositivityReport rep =
        positivity_scan(ThomaPoint({Rat(1, 2)}, {Rat(1, 2)}), Rat(1), 4);
    CHECK(rep.all_nonnegative);
    CHECK(rep.minimum >= 0);
}
