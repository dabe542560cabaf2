#include <doctest.h>

#include "jackgraph/partition.hpp"

using namespace jackgraph;

TEST_CASE("construction and text form") {
    Partition p({3, 3, 1});
    CHECK(p.size() == 7);
    CHECK(p.length() == 3);
    CHECK(p.part(1) == 3);
    CHECK(p.part(4) == 0);
    CHECK(p.to_string() == "[3,3,1]");
    CHECK(Partition::parse("[3,3,1]") == p);
    CHECK(Partition::parse("[]") == Partition());
    CHECK(Partition().to_string() == "[]");
    CHECK(Partition({2, 2, 0, 0}) == Partition({2, 2}));  // trailing zeros drop
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("multiplicity and z") {
    Partition p({2, 1, 1});
    CHECK(p.multiplicity(1) == 2);
    CHECK(p.multiplicity(2) == 1);
    CHECK(p.z() == 4);  // 2^1 1! * 1^2 2!
    CHECK(Partition().z() == 1);
    CHECK(Partition({3, 3}).z() == 18);
}

TEST_CASE("conjugate is an involution") {
    CHECK(Partition({3, 3, 1}).conjugate() == Partition({3, 2, 2}));
    for (int n = 0; n <= 8; ++n)
        for (const Partition& p : enumerate_partitions(n))
            CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("arm, leg, content") {
    Partition lam({4, 3, 1});
    auto al = arm_leg(lam, {1, 2});
    CHECK(al.arm == 2);
    CHECK(al.leg == 1);
    al = arm_leg(lam, {1, 1});
    CHECK(al.arm == 3);
    CHECK(al.leg == 2);
    CHECK(theta_content({2, 3}, Rat(1, 2)) == Rat(3, 2));
    CHECK(theta_content({1, 1}, Rat(7)) == 0);
}

TEST_CASE("Frobenius coordinates") {
    Frobenius f = frobenius(Partition({4, 3, 1}));
    CHECK(f.a == std::vector<int>{3, 1});
    CHECK(f.b == std::vector<int>{3, 1});
    for (int n = 0; n <= 8; ++n)
        for (const Partition& p : enumerate_partitions(n))
            CHECK(from_frobenius(frobenius(p)) == p);
}

TEST_CASE("covers and cocovers") {
    Partition lam({2, 1});
    auto up = covers(lam);
    REQUIRE(up.size() == 3);
    for (const Partition& nu : up) {
        CHECK(nu.size() == lam.size() + 1);
        CHECK(nu.contains(lam));
    }
    auto down = cocovers(lam);
    REQUIRE(down.size() == 2);
    for (const Partition& mu : down) CHECK(lam.contains(mu));
    CHECK(cocovers(Partition()).empty());
    CHECK(covers(Partition()) == std::vector<Partition>{Partition({1})});
}

TEST_CASE("enumeration counts and order") {
    int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) {
        auto all = enumerate_partitions(n);
        CHECK((int)all.size() == expected[n]);
        if (n >= 1) {
            CHECK(all.front() == Partition({n}));
            CHECK(all.back() == Partition(std::vector<int>(n, 1)));
        }
    }
    CHECK(enumerate_up_to(3).size() == 1 + 1 + 2 + 3);
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(Partition({2, 2}), Partition({3, 1})) ==
          Dominance::LessOrEqual);
    CHECK(dominance_leq(Partition({3, 1}), Partition({2, 2})) ==
          Dominance::Greater);
    CHECK(dominance_leq(Partition({3, 1, 1, 1}), Partition({2, 2, 2})) ==
          Dominance::Incomparable);
    CHECK(dominance_leq(Partition({2, 1}), Partition({2, 1})) == Dominance::Equal);
}

TEST_CASE("content split matches Frobenius at theta = 1") {
    for (int n = 0; n <= 8; ++n)
        for (const Partition& nu : enumerate_partitions(n)) {
            PosNegSplit s = split_positive_negative(nu, Rat(1));
            Frobenius f = frobenius(nu);
            // the split drops empty rows, Frobenius keeps a trailing a_d = 0
            std::vector<int> a = f.a;
            while (!a.empty() && a.back() == 0) a.pop_back();
            CHECK(s.pos_rows == a);
            CHECK(s.neg_cols == f.b);
        }
}

TEST_CASE("content split partitions the boxes") {
    for (const Rat& theta : {Rat(1, 2), Rat(2), Rat(5, 3)})
        for (int n = 0; n <= 7; ++n)
            for (const Partition& nu : enumerate_partitions(n)) {
                PosNegSplit s = split_positive_negative(nu, theta);
                int total = 0;
                for (int r : s.pos_rows) total += r;
                for (int c : s.neg_cols) total += c;
                CHECK(total == n);
            }
}
