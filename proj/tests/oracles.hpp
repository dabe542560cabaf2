// Independent reference implementations used only by the tests.
#pragma once

#include <vector>

#include "jackgraph/partition.hpp"
#include "jackgraph/symfunc.hpp"

namespace oracles {

using namespace jackgraph;

// Complete homogeneous h_n = sum of all monomials of degree n.
inline SymFunc h_monomial(int n) {
    if (n < 0) return SymFunc::zero(Basis::Monomial);
    SymFunc f(Basis::Monomial);
    for (const Partition& lam : enumerate_partitions(n)) f.add_term(lam, 1);
    return f;
}

// Schur polynomial s_mu = det(h_{mu_i - i + j}) by Laplace expansion.
inline SymFunc schur_jacobi_trudi(const Partition& mu) {
    int l = mu.length();
    if (l == 0) return SymFunc::one(Basis::Monomial);
    std::vector<std::vector<SymFunc>> H(l, std::vector<SymFunc>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            H[i][j] = h_monomial(mu.part(i + 1) - (i + 1) + (j + 1));
    std::vector<int> cols(l);
    for (int j = 0; j < l; ++j) cols[j] = j;
    // permutation expansion over column choices
    SymFunc det = SymFunc::zero(Basis::Monomial);
    std::vector<int> perm;
    std::vector<bool> used(l, false);
    auto rec = [&](auto&& self, int row, int sign) -> void {
        if (row == l) {
            SymFunc term = SymFunc::one(Basis::Monomial);
            for (int i = 0; i < l; ++i) term = multiply(term, H[i][perm[i]]);
            det += term * Rat(sign);
            return;
        }
        for (int j = 0; j < l; ++j) {
            if (used[j]) continue;
            int inversions = 0;
            for (int p : perm)
                if (p > j) ++inversions;
            used[j] = true;
            perm.push_back(j);
            self(self, row + 1, inversions % 2 ? -sign : sign);
            perm.pop_back();
            used[j] = false;
        }
    };
    rec(rec, 0, 1);
    return det;
}

}  // namespace oracles
