#pragma once

#include "steengrass/symfunc.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace steengrass {

/// Coefficients of m_{(1^k p^n)} in the elementary basis:
/// m_{(1^k p^n)} = sum over lambda of alpha^{n,k}_lambda e_lambda.
struct AlphaTable {
    long p = 2;
    std::map<std::tuple<Partition, int, int>, Int> entries;

    Int get(const Partition& lambda, int n, int k) const;
};

/// Coefficients of the two-alphabet element
/// om_{(1^k p^n)} = sum over lambda of beta^{n,k}_lambda e_lambda ebar_{pn+k-|lambda|}.
struct BetaTable {
    long p = 2;
    int n_max = 0, k_max = 0;
    std::map<std::tuple<Partition, int, int>, Int> entries;

    Int get(const Partition& lambda, int n, int k) const;
};

/// Direct expansion of m_{(1^k p^n)} in the e basis through the symmetric
/// function engine; the independent oracle for everything else here.
AlphaTable alpha_direct(long p, int n, int k);

/// beta^{n,0}_lambda from the corner relations: the length-(p-1) shift rule
/// plus one linear relation per shorter lambda, solved by decreasing length.
Int beta_base(long p, const Partition& lambda, int n);

/// Populate beta^{n,k} for all n <= n_max, k <= k_max via
/// beta^{n,k} = beta^{n,k-1} + (-1)^{p-1} beta^{n-1,k}.
BetaTable beta_table(long p, int n_max, int k_max);

/// beta^{n,k}_lambda mod p by the closed form
/// sum_{i=n0}^{n1} beta^{i,0}_lambda C(n+k-i-1, n-i), n0 = ceil(|l|/(p-1)),
/// n1 = lambda_1. Requires p prime and l(lambda) <= p-1.
Int beta_mod_p(long p, const Partition& lambda, int n, int k);

/// alpha^{n,k}_lambda = sum over distinct parts i of beta^{n,k}_{lambda minus i}.
Int alpha_from_beta(long p, const Partition& lambda, int n, int k);

/// Checks P^n e_{k+n} = m_{(1^k p^n)} mod p through the operator route.
bool borel_serre_check(long p, int n, int k);

/// Sparse two-alphabet element at bidegree (n, k): lambda -> coefficient of
/// e_lambda ebar_{M - |lambda|} where M = pn + k.
using TwoAlphabet = std::map<Partition, Int>;

/// om_{(1^k p^n)} built from the alpha expansion (k >= n(p-2)) or by
/// H_1-perp iteration below that range.
TwoAlphabet two_alphabet(long p, int n, int k);

/// H_i^perp acting on a two-alphabet element of total degree M.
TwoAlphabet h_perp_two_alphabet(int i, const TwoAlphabet& om, int total_degree);

}  // namespace steengrass
