#include "steengrass/wu.hpp"

#include "steengrass/diffop.hpp"

#include <functional>
#include <mutex>

namespace steengrass {

namespace {

Partition hook_content_partition(long p, int n, int k)
{
    // (1^k p^n): k ones and n parts equal to p
    std::vector<int> parts(n, static_cast<int>(p));
    parts.insert(parts.end(), k, 1);
    return Partition(std::move(parts));
}

// All partitions obtained by decrementing a j-subset of positions of mu
// (dropping zeros), with the number of position choices leading to each.
std::map<Partition, Int> decrement_subsets(const Partition& mu, int j)
{
    std::map<Partition, Int> out;
    if (j < 0)
        return out;
    if (j == 0) {
        out[mu] = 1;
        return out;
    }
    auto vals = mu.part_multiplicities();
    std::vector<int> take(vals.size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t idx, int rem) {
        if (idx == vals.size()) {
            if (rem != 0)
                return;
            std::vector<int> parts;
            Int ways = 1;
            for (size_t i = 0; i < vals.size(); ++i) {
                auto [v, m] = vals[i];
                ways *= binomial(m, take[i]);
                for (int t = 0; t < take[i]; ++t)
                    if (v - 1 > 0)
                        parts.push_back(v - 1);
                for (int t = take[i]; t < m; ++t)
                    parts.push_back(v);
            }
            Partition res(std::move(parts));
            auto it = out.find(res);
            if (it == out.end())
                out.emplace(std::move(res), ways);
            else
                it->second += ways;
            return;
        }
        int cap = std::min(vals[idx].second, rem);
        for (int t = 0; t <= cap; ++t) {
            take[idx] = t;
            rec(idx + 1, rem - t);
        }
        take[idx] = 0;
    };
    rec(0, j);
    return out;
}

Int n_ways(const Partition& mu, int j, const Partition& target)
{
    auto all = decrement_subsets(mu, j);
    auto it = all.find(target);
    return it == all.end() ? Int(0) : it->second;
}

struct BetaBaseCache {
    std::recursive_mutex lock;
    std::map<std::tuple<long, Partition, int>, Int> memo;
    std::map<std::tuple<long, Partition, int, int>, Int> memo_nk;
};

BetaBaseCache& base_cache()
{
    static BetaBaseCache c;
    return c;
}

Int beta_base_rec(long p, const Partition& lambda, int n)
{
    if (lambda.length() > p - 1 || lambda.weight() > n * (p - 1))
        return 0;
    if (n == 0)
        return lambda.empty() ? 1 : 0;
    if (lambda.empty()) {
        // The coefficient of e_{pn} in m_{(p^n)}: +p for odd p, and carrying
        // the leading sign (-1)^{n(p-1)} of the e-expansion when p is even.
        return (p % 2 == 0 && n % 2 == 1) ? Int(-p) : Int(p);
    }

    auto& C = base_cache();
    auto key = std::make_tuple(p, lambda, n);
    auto it = C.memo.find(key);
    if (it != C.memo.end())
        return it->second;

    Int value;
    if (lambda.length() == p - 1) {
        value = beta_base_rec(p, lambda.subtract_one(), n - 1);
    } else {
        // Corner relation from H_{l+1}^perp om^{n,0} = 0, reading off the
        // coefficient of e_{lambda-1} ebar_{pn-|lambda|-1}: the diagonal
        // coefficient of lambda itself is 1.
        int l = lambda.length();
        Partition target = lambda.subtract_one();
        Int acc = 0;
        for (const Partition& mu : partitions_of(lambda.weight(), static_cast<int>(p - 1),
                                                 lambda.weight())) {
            if (mu == lambda)
                continue;
            Int ways = n_ways(mu, l, target);
            if (ways != 0)
                acc += ways * beta_base_rec(p, mu, n);
        }
        for (const Partition& nu : partitions_of(lambda.weight() + 1, static_cast<int>(p - 1),
                                                 lambda.weight() + 1)) {
            Int ways = n_ways(nu, l + 1, target);
            if (ways != 0)
                acc += ways * beta_base_rec(p, nu, n);
        }
        value = -acc;
    }
    C.memo.emplace(std::move(key), value);
    return value;
}

Int beta_nk(long p, const Partition& lambda, int n, int k)
{
    if (lambda.length() > p - 1 || lambda.weight() > n * (p - 1))
        return 0;
    if (k == 0)
        return beta_base_rec(p, lambda, n);
    if (n == 0)
        return lambda.empty() ? 1 : 0;
    auto& C = base_cache();
    auto key = std::make_tuple(p, lambda, n, k);
    auto it = C.memo_nk.find(key);
    if (it != C.memo_nk.end())
        return it->second;
    // bidegree recurrence: beta^{n,k} = beta^{n,k-1} + (-1)^{p-1} beta^{n-1,k}
    Int v = beta_nk(p, lambda, n, k - 1);
    Int w = beta_nk(p, lambda, n - 1, k);
    Int result = (p % 2 == 1) ? Int(v + w) : Int(v - w);
    C.memo_nk.emplace(std::move(key), result);
    return result;
}

}  // namespace

Int AlphaTable::get(const Partition& lambda, int n, int k) const
{
    auto it = entries.find(std::make_tuple(lambda, n, k));
    return it == entries.end() ? Int(0) : it->second;
}

Int BetaTable::get(const Partition& lambda, int n, int k) const
{
    auto it = entries.find(std::make_tuple(lambda, n, k));
    return it == entries.end() ? Int(0) : it->second;
}

AlphaTable alpha_direct(long p, int n, int k)
{
    if (p < 2)
        throw std::invalid_argument("alpha tables need p >= 2");
    if (n < 0 || k < 0)
        throw std::invalid_argument("alpha_direct needs n, k >= 0");
    int degree = static_cast<int>(p) * n + k;
    if (degree > degree_cap())
        throw std::domain_error("pn+k exceeds the degree cap");
    AlphaTable table;
    table.p = p;
    SymElem m = SymElem::generator(Basis::monomial, hook_content_partition(p, n, k));
    SymElem in_e = convert(m, Basis::elementary);
    for (auto& [lam, c] : in_e.terms())
        table.entries[std::make_tuple(lam, n, k)] = to_int(c);
    return table;
}

Int beta_base(long p, const Partition& lambda, int n)
{
    if (p < 2)
        throw std::invalid_argument("beta tables need p >= 2");
    if (lambda.length() > p - 1)
        throw std::invalid_argument("beta_base needs l(lambda) <= p-1");
    std::scoped_lock lk(base_cache().lock);
    return beta_base_rec(p, lambda, n);
}

BetaTable beta_table(long p, int n_max, int k_max)
{
    if (p < 2)
        throw std::invalid_argument("beta tables need p >= 2");
    BetaTable table;
    table.p = p;
    table.n_max = n_max;
    table.k_max = k_max;
    std::scoped_lock lk(base_cache().lock);
    for (int n = 0; n <= n_max; ++n) {
        int wmax = n * static_cast<int>(p - 1);
        for (int w = 0; w <= wmax; ++w)
            for (const Partition& lam : partitions_of(w, static_cast<int>(p - 1), w))
                for (int k = 0; k <= k_max; ++k) {
                    Int v = beta_nk(p, lam, n, k);
                    if (v != 0)
                        table.entries[std::make_tuple(lam, n, k)] = v;
                }
    }
    return table;
}

Int beta_mod_p(long p, const Partition& lambda, int n, int k)
{
    if (!is_prime(p))
        throw std::invalid_argument("beta_mod_p needs a prime p");
    if (lambda.length() > p - 1)
        throw std::invalid_argument("beta_mod_p needs l(lambda) <= p-1");
    int n0 = (lambda.weight() + static_cast<int>(p) - 2) / (static_cast<int>(p) - 1);
    int n1 = lambda.part(1);
    Int acc = 0;
    std::scoped_lock lk(base_cache().lock);
    for (int i = n0; i <= n1; ++i) {
        // Paths from (i,0) to (n,k) in the recurrence lattice; the straight
        // path at i = n is the empty product, so C(a, 0) counts as 1 here.
        Int paths = (n - i == 0) ? Int(k >= 0 ? 1 : 0) : binomial(n + k - i - 1, n - i);
        acc += beta_base_rec(p, lambda, i) * paths;
    }
    return mod_reduce(acc, p);
}

Int alpha_from_beta(long p, const Partition& lambda, int n, int k)
{
    if (p < 2)
        throw std::invalid_argument("alpha tables need p >= 2");
    if (lambda.weight() != static_cast<int>(p) * n + k)
        return 0;
    std::scoped_lock lk(base_cache().lock);
    Int acc = 0;
    for (auto [value, mult] : lambda.part_multiplicities()) {
        (void)mult;
        acc += beta_nk(p, lambda.remove_part(value), n, k);
    }
    return acc;
}

bool borel_serre_check(long p, int n, int k)
{
    if (!is_prime(p))
        throw std::invalid_argument("borel_serre_check needs a prime p");
    std::vector<int> op_parts(n, static_cast<int>(p - 1));
    SymElem chern = SymElem::generator(Basis::elementary, Partition{k + n});
    if (k + n == 0)
        chern = SymElem::one(Basis::elementary);
    SymElem lifted = apply_sym(DiffOp::basis(Partition(op_parts)), chern);
    SymElem diff = convert(lifted, Basis::monomial);
    diff -= SymElem::generator(Basis::monomial, hook_content_partition(p, n, k));
    for (auto& [lam, c] : diff.terms())
        if (to_int(c) % p != 0)
            return false;
    return true;
}

TwoAlphabet two_alphabet(long p, int n, int k)
{
    if (p < 2)
        throw std::invalid_argument("two_alphabet needs p >= 2");
    int base_k = n * static_cast<int>(p - 2);
    if (k >= base_k) {
        AlphaTable alpha = alpha_direct(p, n, k);
        TwoAlphabet om;
        for (auto& [key, c] : alpha.entries) {
            const Partition& mu = std::get<0>(key);
            Partition rest = mu.empty() ? Partition{} : mu.remove_part(mu.parts()[0]);
            om[rest] += c;
            if (om[rest] == 0)
                om.erase(rest);
        }
        return om;
    }
    TwoAlphabet om = two_alphabet(p, n, base_k);
    int total = static_cast<int>(p) * n + base_k;
    for (int kk = base_k; kk > k; --kk) {
        om = h_perp_two_alphabet(1, om, total);
        --total;
    }
    return om;
}

TwoAlphabet h_perp_two_alphabet(int i, const TwoAlphabet& om, int total_degree)
{
    TwoAlphabet out;
    auto add = [&](const Partition& lam, const Int& v) {
        if (v == 0)
            return;
        auto it = out.find(lam);
        if (it == out.end())
            out.emplace(lam, v);
        else {
            it->second += v;
            if (it->second == 0)
                out.erase(it);
        }
    };
    for (auto& [lam, beta] : om) {
        int ebar = total_degree - lam.weight();
        // (h_i^perp e_lam) ebar_m  +  (h_{i-1}^perp e_lam) ebar_{m-1}
        for (auto& [res, ways] : decrement_subsets(lam, i))
            add(res, beta * ways);
        if (ebar >= 1)
            for (auto& [res, ways] : decrement_subsets(lam, i - 1))
                add(res, beta * ways);
    }
    return out;
}

}  // namespace steengrass
