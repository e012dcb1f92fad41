#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "steengrass/symfunc.hpp"

using namespace steengrass;

namespace {

SymElem s(std::initializer_list<int> p)
{
    return SymElem::generator(Basis::schur, Partition(p));
}
SymElem pw(std::initializer_list<int> p)
{
    return SymElem::generator(Basis::power, Partition(p));
}
SymElem hh(std::initializer_list<int> p)
{
    return SymElem::generator(Basis::homogeneous, Partition(p));
}
SymElem ee(std::initializer_list<int> p)
{
    return SymElem::generator(Basis::elementary, Partition(p));
}
SymElem mm(std::initializer_list<int> p)
{
    return SymElem::generator(Basis::monomial, Partition(p));
}

}  // namespace

TEST_CASE("basis conversions")
{
    CHECK(convert(pw({2}), Basis::schur) == s({2}) - s({1, 1}));
    for (int n = 1; n <= 6; ++n) {
        SymElem en = SymElem::generator(Basis::elementary, Partition{n});
        SymElem expected = SymElem::generator(Basis::monomial, Partition(std::vector<int>(n, 1)));
        CHECK(convert(en, Basis::monomial) == expected);
    }
    CHECK(convert(hh({2}), Basis::elementary) == ee({1, 1}) - ee({2}));
}

TEST_CASE("conversion round trips are the identity")
{
    const Basis all[] = {Basis::monomial, Basis::elementary, Basis::homogeneous, Basis::power,
                         Basis::schur};
    for (int n = 0; n <= 7; ++n)
        for (const Partition& lam : partitions_of(n))
            for (Basis from : all) {
                SymElem g = SymElem::generator(from, lam);
                for (Basis to : all)
                    CHECK(convert(convert(g, to), from) == g);
            }
}

TEST_CASE("integral constructions stay integral in m/e/h/s")
{
    const Basis integral_bases[] = {Basis::monomial, Basis::elementary, Basis::homogeneous,
                                    Basis::schur};
    for (int n = 0; n <= 7; ++n)
        for (const Partition& lam : partitions_of(n))
            for (Basis from : integral_bases)
                for (Basis to : integral_bases)
                    CHECK(convert(SymElem::generator(from, lam), to).integral());
}

TEST_CASE("multiply")
{
    CHECK(convert(multiply(s({1}), s({1})), Basis::schur) == s({2}) + s({1, 1}));
    CHECK(convert(multiply(pw({1}), pw({2})), Basis::schur) == s({3}) - s({1, 1, 1}));
    SymElem f = s({2, 1});
    CHECK(convert(multiply(f, SymElem::one(Basis::schur)), Basis::schur) == f);
}

TEST_CASE("hammond")
{
    // h_k^perp on a monomial removes a part equal to k.
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lam : partitions_of(n))
            for (int k = 1; k <= n; ++k) {
                SymElem got = convert(hammond(hh({k}), SymElem::generator(Basis::monomial, lam)),
                                      Basis::monomial);
                SymElem want(Basis::monomial);
                if (lam.multiplicity(k) > 0)
                    want = SymElem::generator(Basis::monomial, lam.remove_part(k));
                CHECK(got == want);
            }

    CHECK(hammond(pw({2}), s({2, 1})).is_zero());
    CHECK(convert(hammond(pw({1}), s({2, 1})), Basis::schur) == s({2}) + s({1, 1}));
}

TEST_CASE("murnaghan-nakayama multiply")
{
    CHECK(mn_multiply(4, SymElem::one(Basis::schur)) ==
          s({4}) - s({3, 1}) + s({2, 1, 1}) - s({1, 1, 1, 1}));
    CHECK(mn_multiply(2, s({1})) == s({3}) - s({1, 1, 1}));
    // p_1 * s_lambda adds every box with sign +1
    for (const Partition& lam : partitions_of(4)) {
        SymElem got = mn_multiply(1, SymElem::generator(Basis::schur, lam));
        for (auto& [mu, c] : got.terms())
            CHECK(c == 1);
    }
    // must agree with the generic product
    for (int n = 0; n <= 5; ++n)
        for (const Partition& lam : partitions_of(n))
            for (int k = 1; k <= 3; ++k) {
                SymElem viaStrips = mn_multiply(k, SymElem::generator(Basis::schur, lam));
                SymElem viaProduct = convert(
                    multiply(pw({k}), SymElem::generator(Basis::schur, lam)), Basis::schur);
                CHECK(viaStrips == viaProduct);
            }
}

TEST_CASE("skew schur")
{
    CHECK(skew_schur(SkewShape(Partition{2, 1}, Partition{1})) == s({2}) + s({1, 1}));
    CHECK(skew_schur(SkewShape(Partition{2, 1}, Partition{2, 1})) == SymElem::one(Basis::schur));
    // disconnected shapes factor into their components
    SymElem whole = skew_schur(SkewShape(Partition{3, 1}, Partition{2}));
    SymElem product = convert(multiply(s({1}), s({1})), Basis::schur);
    CHECK(whole == product);
    // LR coefficients are nonnegative integers
    SymElem lr = skew_schur(SkewShape(Partition{4, 3, 1}, Partition{2, 1}));
    for (auto& [nu, c] : lr.terms()) {
        CHECK(is_integer(c));
        CHECK(c > 0);
    }
}

TEST_CASE("principal specialization")
{
    CHECK(principal_spec(s({2}), 2) == 3);
    for (int k = 1; k <= 6; ++k)
        for (int n = -3; n <= 3; ++n)
            CHECK(principal_spec(pw({k}), n) == n);
    CHECK(principal_spec(s({2, 1}), 0) == 0);

    // negative n via the antipode
    for (int n = 1; n <= 4; ++n)
        for (const Partition& lam : partitions_of(4)) {
            SymElem f = SymElem::generator(Basis::schur, lam);
            CHECK(principal_spec(f, -n) == principal_spec(antipode(f), n));
        }
}

TEST_CASE("hook content formula")
{
    CHECK(hook_content_spec(Partition{1, 1}, 2) == 3);
    CHECK(hook_content_spec(Partition{}, 7) == 1);
    CHECK(hook_content_spec(Partition{2}, 2) == 1);
    for (int d = 0; d <= 8; ++d)
        for (const Partition& lam : partitions_of(d))
            for (long n = -4; n <= 4; ++n)
                CHECK(hook_content_spec(lam, n) ==
                      principal_spec(SymElem::generator(Basis::schur, lam.conjugate()), n));
}

TEST_CASE("skew principal specialization matches hammond route")
{
    for (int d = 2; d <= 6; ++d)
        for (const Partition& outer : partitions_of(d))
            for (int w = 0; w <= d; ++w)
                for (const Partition& inner : partitions_between(Partition{}, outer, w))
                    for (long n = -3; n <= 3; ++n) {
                        SymElem skew = skew_schur(SkewShape(outer, inner));
                        CHECK(principal_spec_skew(outer, inner, n) == principal_spec(skew, n));
                    }
}

TEST_CASE("antipode")
{
    CHECK(antipode(hh({1})) == hh({1}) * Rat(-1));
    CHECK(convert(antipode(hh({2})), Basis::elementary) == ee({2}));
    for (int d = 0; d <= 6; ++d)
        for (const Partition& lam : partitions_of(d)) {
            SymElem f = SymElem::generator(Basis::schur, lam);
            CHECK(antipode(antipode(f)) == f);
            // S(s_lambda) = (-1)^{|lambda|} s_{lambda'}
            SymElem expect = SymElem::generator(Basis::schur, lam.conjugate()) *
                             Rat(d % 2 == 0 ? 1 : -1);
            CHECK(antipode(f) == expect);
        }
}

TEST_CASE("pairing and transition symmetry")
{
    for (int d = 1; d <= 6; ++d) {
        auto ps = partitions_of(d);
        for (const Partition& lam : ps)
            for (const Partition& mu : ps) {
                Rat v = pairing(SymElem::generator(Basis::monomial, lam),
                                SymElem::generator(Basis::homogeneous, mu));
                CHECK(v == (lam == mu ? 1 : 0));
            }
    }
    // coefficient of e_mu in m_lambda is symmetric in (lambda, mu)
    for (int d = 1; d <= 8; ++d) {
        auto ps = partitions_of(d);
        std::map<std::pair<Partition, Partition>, Rat> m2e;
        for (const Partition& lam : ps) {
            SymElem row = convert(SymElem::generator(Basis::monomial, lam), Basis::elementary);
            for (const Partition& mu : ps)
                m2e[{lam, mu}] = row.coeff(mu);
        }
        for (const Partition& lam : ps)
            for (const Partition& mu : ps)
                CHECK(m2e[{lam, mu}] == m2e[{mu, lam}]);
    }
}

TEST_CASE("degree operator (generalized Newton identity)")
{
    for (int d = 1; d <= 8; ++d)
        for (const Partition& lam : partitions_of(d)) {
            SymElem f = SymElem::generator(Basis::schur, lam);
            SymElem total(Basis::schur);
            for (int i = 1; i <= d; ++i)
                total += convert(multiply(pw({i}), hammond(pw({i}), f)), Basis::schur);
            CHECK(total == f * Rat(d));

            SymElem rhs(Basis::schur);
            for (auto& [mu, an] : strip_moves(lam, 1, StripDirection::remove, 1))
                (void)mu;  // silence unused warnings; the identity below re-derives
            SymElem viaStrips(Basis::schur);
            for (int size = 1; size <= d; ++size)
                for (auto& [mu, an] : strip_moves(lam, size, StripDirection::remove, 1)) {
                    SymElem t = convert(
                        multiply(pw({size}), SymElem::generator(Basis::schur, mu)), Basis::schur);
                    t *= Rat(int_pow(-1, an.ht));
                    viaStrips += t;
                }
            CHECK(viaStrips == f * Rat(d));
        }
}

TEST_CASE("hammond commutation (and its skew corollary)")
{
    for (int df = 1; df <= 4; ++df)
        for (const Partition& flam : partitions_of(df))
            for (int dg = 0; dg <= 4; ++dg)
                for (const Partition& glam : partitions_of(dg))
                    for (int k = 1; k <= 3; ++k) {
                        SymElem f = SymElem::generator(Basis::schur, flam);
                        SymElem g = SymElem::generator(Basis::schur, glam);
                        SymElem lhs = hammond(f, multiply(pw({k}), g));
                        SymElem rhs = convert(multiply(pw({k}), hammond(f, g)), Basis::power) +
                                      convert(hammond(hammond(pw({k}), f), g), Basis::power);
                        CHECK(convert(lhs, Basis::power) == rhs);
                    }

    // p_k s_{mu/lambda} = sum over adds on mu - sum over removals from lambda
    for (int dm = 1; dm <= 5; ++dm)
        for (const Partition& mu : partitions_of(dm))
            for (int dl = 0; dl < dm; ++dl)
                for (const Partition& lam : partitions_between(Partition{}, mu, dl))
                    for (int k = 1; k <= 3; ++k) {
                        SymElem lhs = convert(
                            multiply(pw({k}), skew_schur(SkewShape(mu, lam))), Basis::schur);
                        SymElem rhs(Basis::schur);
                        for (auto& [nu, an] : strip_moves(mu, k, StripDirection::add, 1)) {
                            SymElem t = skew_schur(SkewShape(nu, lam));
                            t *= Rat(int_pow(-1, an.ht));
                            rhs += t;
                        }
                        for (auto& [nu, an] : strip_moves(lam, k, StripDirection::remove, 1)) {
                            SymElem t = skew_schur(SkewShape(mu, nu));
                            t *= Rat(-int_pow(-1, an.ht));
                            rhs += t;
                        }
                        CHECK(lhs == rhs);
                    }
}

TEST_CASE("comultiplication of h_n via row skew shapes")
{
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            SymElem got = skew_schur(SkewShape(Partition{n}, k ? Partition{k} : Partition{}));
            SymElem want = convert(hh({n - k}), Basis::schur);
            if (n == k)
                want = SymElem::one(Basis::schur);
            CHECK(got == want);
        }
}

TEST_CASE("polynomial oracle")
{
    PolyOracle e2 = to_oracle(ee({2}), 3);
    PolyOracle expect;
    expect.nvars = 3;
    expect.add_term({1, 1, 0}, 1);
    expect.add_term({1, 0, 1}, 1);
    expect.add_term({0, 1, 1}, 1);
    CHECK(e2 == expect);

    CHECK(to_oracle(s({1, 1}), 1).is_zero());

    SymElem back = convert(from_oracle(to_oracle(s({2, 1}), 4)), Basis::schur);
    CHECK(back == s({2, 1}));

    PolyOracle bad;
    bad.nvars = 2;
    bad.add_term({1, 0}, 1);
    CHECK_THROWS_AS(from_oracle(bad), std::invalid_argument);

    // truncation is multiplicative
    for (int a = 0; a <= 8; ++a)
        for (const Partition& lam : partitions_of(a))
            for (int b = 0; b <= 8 - a; ++b)
                for (const Partition& mu : partitions_of(b)) {
                    SymElem f = SymElem::generator(Basis::schur, lam);
                    SymElem g = SymElem::generator(Basis::schur, mu);
                    CHECK(to_oracle(multiply(f, g), 8) ==
                          oracle_multiply(to_oracle(f, 8), to_oracle(g, 8)));
                }
}

TEST_CASE("kostka numbers")
{
    CHECK(kostka_number(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(kostka_number(Partition{2, 1}, Partition{2, 1}) == 1);
    CHECK(kostka_number(Partition{2, 1}, Partition{3}) == 0);
    // K_{lambda mu} equals the coefficient of m_mu in s_lambda
    for (int d = 1; d <= 7; ++d)
        for (const Partition& lam : partitions_of(d)) {
            SymElem sm = convert(SymElem::generator(Basis::schur, lam), Basis::monomial);
            for (const Partition& mu : partitions_of(d))
                CHECK(sm.coeff(mu) == Rat(kostka_number(lam, mu)));
        }
}

TEST_CASE("degree cap is enforced")
{
    std::vector<int> big(1, 41);
    CHECK_THROWS_AS(convert(SymElem::generator(Basis::power, Partition(big)), Basis::schur),
                    std::domain_error);
}
