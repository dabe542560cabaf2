// Acceptance gate: one exact check per criterion, one line per result.
// Exits nonzero if any criterion fails.

#include <cstdio>
#include <string>
#include <vector>

#include "jackgraph/boundary.hpp"
#include "jackgraph/branching.hpp"
#include "jackgraph/jack.hpp"
#include "jackgraph/partition.hpp"
#include "jackgraph/shifted.hpp"
#include "jackgraph/verify.hpp"
#include "oracles.hpp"

using namespace jackgraph;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass,
            const std::string& detail = "") {
    std::printf("criterion %2d %-28s %s%s%s\n", number, name.c_str(),
                pass ? "PASS" : "FAIL", detail.empty() ? "" : "  ",
                detail.c_str());
    if (!pass) ++failures;
}

void from_suite(int number, const std::string& name, const verify::Result& r) {
    std::string detail = std::to_string(r.checks) + " checks";
    if (!r.pass) detail += "; " + r.detail;
    report(number, name, r.pass, detail);
}

const std::vector<Rat> kThetas4 = {Rat(1, 3), Rat(1, 2), Rat(1), Rat(2)};
const std::vector<Rat> kThetas3 = {Rat(1, 2), Rat(1), Rat(2)};

// theta = 1 Jack polynomials against the Jacobi-Trudi determinant.
bool schur_specialization(long& checks) {
    for (int n = 0; n <= 5; ++n)
        for (const Partition& mu : enumerate_partitions(n)) {
            ++checks;
            if (jack_P(mu, Rat(1)).expansion != oracles::schur_jacobi_trudi(mu))
                return false;
        }
    return true;
}

// Scaled-error boundedness along square diagrams, plus the single-row
// closed form.  All comparisons stay in exact arithmetic: the second-half
// bound |e| sqrt(n) <= 2 max_first_half becomes e^2 n <= 4 max(e^2 n).
bool asymptotics(long& checks, std::string& detail) {
    std::vector<Partition> squares;
    for (int k = 2; k <= 30; ++k)
        squares.emplace_back(std::vector<int>(k, k));
    for (const Rat& theta : kThetas3) {
        std::vector<ShiftedSymFunc> fns = {
            ShiftedSymFunc::ptilde(2, theta), ShiftedSymFunc::ptilde(3, theta),
            shifted_jack(Partition({2}), theta)};
        for (const ShiftedSymFunc& F : fns) {
            auto rows = asymptotics_experiment(F, squares, theta);
            size_t half = rows.size() / 2;
            Rat first_max = 0, second_max = 0;
            for (size_t i = 0; i < rows.size(); ++i) {
                Rat& m = i < half ? first_max : second_max;
                if (rows[i].sq_error_times_n > m) m = rows[i].sq_error_times_n;
            }
            ++checks;
            if (second_max > 4 * first_max) {
                detail = "square error grows at theta=" + to_string(theta);
                return false;
            }
        }
        // single-row family: error is (n - 1 + theta)/n^2 on the nose
        std::vector<Partition> rows_family;
        for (int n = 2; n <= 20; ++n)
            rows_family.emplace_back(std::vector<int>{n});
        auto table = asymptotics_experiment(ShiftedSymFunc::ptilde(2, theta),
                                            rows_family, theta);
        for (const auto& r : table) {
            ++checks;
            if (r.error != (Rat(r.n - 1) + theta) / (Rat(r.n) * r.n)) {
                detail = "row closed form fails at n=" + std::to_string(r.n);
                return false;
            }
        }
    }
    return true;
}

// K(mu, nu_k) approaches the boundary kernel at the family's limit point.
bool boundary_limit(long& checks, std::string& detail) {
    struct Family {
        const char* name;
        ThomaPoint limit;
        Partition (*diagram)(int);
    };
    Family families[] = {
        {"square", ThomaPoint(),
         [](int k) { return Partition(std::vector<int>(k, k)); }},
        {"row", ThomaPoint({Rat(1)}, {}),
         [](int k) { return Partition(std::vector<int>{k}); }},
        {"column", ThomaPoint({}, {Rat(1)}),
         [](int k) { return Partition(std::vector<int>(k, 1)); }},
    };
    for (const Rat& theta : kThetas3) {
        // sanity pin for the square limit of mu = (2)
        if (martin_kernel_boundary(Partition({2}), ThomaPoint(), theta).value !=
            theta / (1 + theta)) {
            detail = "square limit of K((2),.) is not theta/(1+theta)";
            return false;
        }
        for (const Family& fam : families)
            for (int m = 0; m <= 3; ++m)
                for (const Partition& mu : enumerate_partitions(m)) {
                    Rat target =
                        martin_kernel_boundary(mu, fam.limit, theta).value;
                    auto gap = [&](int k) {
                        Rat g = martin_kernel_via_interpolation(
                                    mu, fam.diagram(k), theta) -
                                target;
                        return g < 0 ? Rat(-g) : g;
                    };
                    Rat g5 = gap(5), g30 = gap(30);
                    ++checks;
                    if (g30 > g5 || (g5 > 0 && g30 == g5)) {
                        detail = std::string(fam.name) + " family stalls at mu=" +
                                 mu.to_string() + " theta=" + to_string(theta);
                        return false;
                    }
                }
    }
    return true;
}

}  // namespace

int main() {
    from_suite(1, "pieri-expansion", verify::pieri(6, kThetas4));
    from_suite(2, "hook-dimension", verify::hook(8, kThetas4, 6));
    from_suite(3, "corner-formula", verify::corners(7, {Rat(1, 2), Rat(1), Rat(3)}));
    from_suite(4, "dimension-formula", verify::dimension_formula(4, 8, kThetas3));

    {
        long checks = 0;
        bool schur_ok = schur_specialization(checks);
        verify::Result kingman = verify::kingman_limit(8);
        report(5, "specializations", schur_ok && kingman.pass,
               std::to_string(checks + kingman.checks) + " checks" +
                   (schur_ok ? "" : "; Schur mismatch") +
                   (kingman.pass ? "" : "; " + kingman.detail));
    }

    from_suite(6, "content-sum", verify::content_sum(10, 5, kThetas4));

    {
        long checks = 0;
        std::string detail;
        bool ok = asymptotics(checks, detail);
        report(7, "asymptotics-rate", ok,
               ok ? std::to_string(checks) + " checks" : detail);
    }
    {
        long checks = 0;
        std::string detail;
        bool ok = boundary_limit(checks, detail);
        report(8, "boundary-limit", ok,
               ok ? std::to_string(checks) + " checks" : detail);
    }

    {
        verify::Result h = verify::harmonicity(6, kThetas3);
        verify::Result n = verify::normalization(8, kThetas3);
        bool ok = h.pass && n.pass;
        report(9, "harmonicity-normalization", ok,
               ok ? std::to_string(h.checks + n.checks) + " checks"
                  : h.detail + n.detail);
    }

    from_suite(10, "positivity-recovery", verify::positivity(6, kThetas3));

    if (failures) std::printf("%d criteria FAILED\n", failures);
    return failures ? 1 : 0;
}
