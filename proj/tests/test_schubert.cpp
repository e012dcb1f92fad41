#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "steengrass/schubert.hpp"

#include <algorithm>

using namespace steengrass;

namespace {

SymElem s(std::initializer_list<int> p)
{
    return SymElem::generator(Basis::schur, Partition(p));
}

// Diagonal translation: contents of every box are preserved.
std::pair<Partition, Partition> diag_shift(const Partition& lam, const Partition& mu)
{
    std::vector<int> l{mu.part(1) + 1}, m{mu.part(1) + 1};
    for (int i = 1; i <= mu.length(); ++i) {
        m.push_back(mu.part(i) + 1);
        l.push_back(lam.part(i) + 1);
    }
    return {Partition(l), Partition(m)};
}

}  // namespace

TEST_CASE("d coefficients")
{
    CHECK(d_coeff(Partition{1}, Partition{2, 2}) == 0);
    CHECK(d_coeff(Partition{1, 1}, Partition{1, 1, 1, 1}) == 2);
    CHECK(d_coeff(Partition{3, 1}, Partition{4, 2}) == -1);
    CHECK_THROWS_AS(d_coeff(Partition{2}, Partition{1, 1}), std::invalid_argument);
}

TEST_CASE("strip action equals the power-basis action")
{
    CHECK(apply_dk_schur(2, s({1, 1}), DkDirection::raise) ==
          s({3, 1}) - s({2, 2}) - s({2, 1, 1}) + s({1, 1, 1, 1}) * Rat(2));

    // D_1 adds single boxes weighted by content
    for (const Partition& lam : partitions_of(4)) {
        SymElem got = apply_dk_schur(1, SymElem::generator(Basis::schur, lam), DkDirection::raise);
        for (auto& [mu, c] : got.terms()) {
            SkewShape box(mu, lam);
            auto [r, col] = box.boxes().at(0);
            CHECK(c == Rat(col - r));
        }
    }

    // D_k on the empty partition: hooks with alternating signs
    for (int k = 1; k <= 5; ++k) {
        SymElem got = apply_dk_schur(k, SymElem::one(Basis::schur), DkDirection::raise);
        for (auto& [mu, c] : got.terms()) {
            int legs = mu.length() - 1;
            StripAnalysis an = analyze_strip(SkewShape(mu, Partition{}));
            CHECK(c == Rat(int_pow(-1, legs) * an.corner_content_sum()));
        }
    }

    for (int d = 0; d <= 5; ++d)
        for (const Partition& lam : partitions_of(d))
            for (int k = 1; k <= 4; ++k) {
                SymElem f = SymElem::generator(Basis::schur, lam);
                CHECK(apply_dk_schur(k, f, DkDirection::raise) ==
                      convert(apply_sym(DiffOp::d(k), f), Basis::schur));
                CHECK(apply_dk_schur(k, f, DkDirection::lower) ==
                      convert(apply_perp(DiffOp::d(k), f), Basis::schur));
            }
}

TEST_CASE("strip-power recursion in the Schur picture")
{
    for (int k = 1; k <= 3; ++k)
        for (int n = 0; n <= 3; ++n)
            for (int d = 0; d <= 4; ++d)
                for (const Partition& lam : partitions_of(d)) {
                    SymElem f = SymElem::generator(Basis::schur, lam);
                    CHECK(apply_strip_power_schur(k, n, f) == apply_strip_power(k, n, f));
                }
}

TEST_CASE("a coefficients: degree-two closed forms")
{
    // lambda=(2), mu=(4): horizontal domino at content 2
    CHECK(a_coeff(Partition{2}, Partition{4}) == 1);

    for (long c = -3; c <= 4; ++c) {
        auto [l1, m1] = embed_frame(Partition{}, Partition{2}, c);
        CHECK(a_coeff(l1, m1) == exact_div(Int(c) * Int(c - 1), Int(2)));
        auto [l2, m2] = embed_frame(Partition{}, Partition{1, 1}, c);
        CHECK(a_coeff(l2, m2) == exact_div(Int(c) * Int(c + 1), Int(2)));
        auto [l3, m3] = embed_frame(Partition{1}, Partition{2, 1}, c);
        // two disjoint boxes at contents c+1 and c-1
        CHECK(a_coeff(l3, m3) == Int(c + 1) * Int(c - 1) + 1);
    }
}

TEST_CASE("specialization route agrees with the path sum")
{
    CHECK(a_coeff_spec(Partition{1}, Partition{2, 1}) == 0);
    for (int dl = 0; dl <= 3; ++dl)
        for (const Partition& lam : partitions_of(dl))
            for (int dm = dl; dm <= 7; ++dm)
                for (const Partition& mu : partitions_containing(lam, dm))
                    CHECK(a_coeff(lam, mu) == a_coeff_spec(lam, mu));
}

TEST_CASE("frame dependence only")
{
    for (int dl = 0; dl <= 4; ++dl)
        for (const Partition& lam : partitions_of(dl))
            for (int dm = dl + 1; dm <= 8; ++dm)
                for (const Partition& mu : partitions_containing(lam, dm)) {
                    auto [l2, m2] = diag_shift(lam, mu);
                    CHECK(a_coeff(lam, mu) == a_coeff(l2, m2));
                }
}

TEST_CASE("a as a polynomial in the content (binomial basis)")
{
    // horizontal domino: c(c-1)/2 = C(c,2)
    std::vector<Int> h = a_poly(Partition{}, Partition{2});
    CHECK(h == std::vector<Int>{0, 0, 1});
    // vertical domino: c(c+1)/2 = C(c,1) + C(c,2)
    std::vector<Int> v = a_poly(Partition{}, Partition{1, 1});
    CHECK(v == std::vector<Int>{0, 1, 1});
    // evaluation matches a_coeff across embeddings
    std::vector<Int> two = a_poly(Partition{1}, Partition{2, 1});
    for (long c = -3; c <= 4; ++c) {
        Rat val = 0;
        for (size_t j = 0; j < two.size(); ++j) {
            Int paths = 1;
            // C(c, j) for possibly negative c
            Int num = 1;
            for (size_t t = 0; t < j; ++t)
                num *= Int(c) - static_cast<long>(t);
            paths = exact_div(num, factorial(static_cast<long>(j)));
            val += Rat(two[j] * paths);
        }
        auto [l, m] = embed_frame(Partition{1}, Partition{2, 1}, c);
        CHECK(val == Rat(a_coeff(l, m)));
    }
}

TEST_CASE("vanishing window")
{
    // the worked large frame: window exactly [-2, 3]
    auto [lam, mu] = embed_frame(Partition{3, 2, 2, 1}, Partition{9, 7, 6, 5, 4, 4, 2}, 0);
    auto win = vanishing_window(lam, mu);
    REQUIRE(win.has_value());
    CHECK(win->first == -2);
    CHECK(win->second == 3);

    // horizontal domino vanishes exactly at contents {0, 1}
    auto [l1, m1] = embed_frame(Partition{}, Partition{2}, 0);
    auto w1 = vanishing_window(l1, m1);
    REQUIRE(w1.has_value());
    CHECK(*w1 == std::pair{0, 1});

    // sufficiency: a = 0 whenever the content lies in the window
    // (all shapes with |mu| <= 9 and at most five added boxes)
    for (int dl = 0; dl <= 8; ++dl)
        for (const Partition& lam2 : partitions_of(dl))
            for (int dm = dl + 1; dm <= std::min(9, dl + 5); ++dm)
                for (const Partition& mu2 : partitions_containing(lam2, dm)) {
                    auto w = vanishing_window(lam2, mu2);
                    if (!w)
                        continue;
                    MinimalFrame f = minimal_frame(SkewShape(mu2, lam2));
                    if (f.content >= w->first && f.content <= w->second)
                        CHECK(a_coeff(lam2, mu2) == 0);
                }

    // necessity for two-box differences
    for (int dl = 0; dl <= 3; ++dl)
        for (const Partition& lam2 : partitions_of(dl))
            for (const Partition& mu2 : partitions_containing(lam2, dl + 2)) {
                auto w = vanishing_window(lam2, mu2);
                MinimalFrame f = minimal_frame(SkewShape(mu2, lam2));
                bool inside = w && f.content >= w->first && f.content <= w->second;
                CHECK(inside == (a_coeff(lam2, mu2) == 0));
            }
}

TEST_CASE("inverse Kostka rows")
{
    // closed form for lambda = (1^k n), n > 1
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k + n <= 7; ++k) {
            std::vector<int> parts{n};
            parts.insert(parts.end(), k, 1);
            InvKostkaRow row = inverse_kostka(Partition(parts));
            for (const Partition& mu : partitions_of(n + k)) {
                Int got = row.entries.count(mu) ? row.entries.at(mu) : Int(0);
                Int want = 0;
                if (mu == Partition(std::vector<int>(n + k, 1))) {
                    want = int_pow(-1, n + 1) * (k + 1);
                } else {
                    // mu = (1^i 2^j l) with j + l <= n and j <= k (the extra
                    // j <= k constraint is forced by m_n = p_n being supported
                    // on hooks when k = 0)
                    int l = mu.part(1);
                    bool shape_ok = true;
                    for (int t = 2; t <= mu.length(); ++t)
                        if (mu.part(t) > 2)
                            shape_ok = false;
                    int j = mu.multiplicity(2) - (l == 2 ? 1 : 0);
                    if (shape_ok && j + l <= n && j <= k)
                        want = int_pow(-1, n - l);
                }
                CHECK(got == want);
            }
        }

    // rows invert the Kostka matrix (degrees <= 6 here; <= 8 in acceptance)
    for (int d = 0; d <= 6; ++d) {
        auto ps = partitions_of(d);
        for (const Partition& lam : ps) {
            InvKostkaRow row = inverse_kostka(lam);
            for (const Partition& nu : ps) {
                Int acc = 0;
                for (const Partition& mu : ps) {
                    Int k1 = row.entries.count(mu) ? row.entries.at(mu) : Int(0);
                    acc += k1 * kostka_number(mu, nu);
                }
                CHECK(acc == (lam == nu ? 1 : 0));
            }
        }
    }
}

TEST_CASE("two-component conjecture reports")
{
    // two disjoint single boxes at contents c1 = 2, c2 = 0: rhs = c1 c2 + 1
    auto [lam, mu] = embed_frame(Partition{1}, Partition{2, 1}, 1);
    ConjectureReport rep = conjecture_check(lam, mu);
    CHECK(rep.rhs == Rat(1));
    CHECK(rep.agree);
    CHECK(rep.lhs == 1);

    CHECK_THROWS_AS(conjecture_check(Partition{1}, Partition{2}), std::invalid_argument);

    // small sweep: components of <= 2 boxes inside a 4x4 box
    int checked = 0;
    for (const Partition& l2 : partitions_in_box(4, 4))
        for (int extra = 2; extra <= 4; ++extra)
            for (const Partition& m2 : partitions_containing(l2, l2.weight() + extra)) {
                if (!m2.fits_in_box(4, 4))
                    continue;
                MinimalFrame f = minimal_frame(SkewShape(m2, l2));
                if (f.components.size() != 2)
                    continue;
                bool small = true;
                for (auto& comp : f.components)
                    small = small && (comp.rho.weight() - comp.pi.weight() <= 2);
                if (!small)
                    continue;
                ConjectureReport r = conjecture_check(l2, m2);
                CHECK(r.agree);
                ++checked;
            }
    CHECK(checked > 50);
}

TEST_CASE("LR congruence mod 2")
{
    CHECK(lr_mod2_check(Partition{}));
    CHECK(lr_mod2_check(Partition{1}));
    CHECK(lr_mod2_check(Partition{1, 1}));
    for (int d = 0; d <= 3; ++d)
        for (const Partition& lam : partitions_of(d))
            CHECK(lr_mod2_check(lam));
}

TEST_CASE("embedding a frame recovers it")
{
    for (int dp = 0; dp <= 3; ++dp)
        for (const Partition& pi : partitions_of(dp))
            for (const Partition& rho : partitions_containing(pi, dp + 3)) {
                MinimalFrame f0 = minimal_frame(SkewShape(rho, pi));
                if (f0.pi != pi || f0.rho != rho)
                    continue;  // only minimal frames embed faithfully
                for (long c = -3; c <= 3; ++c) {
                    auto [lam, mu] = embed_frame(pi, rho, c);
                    MinimalFrame f = minimal_frame(SkewShape(mu, lam));
                    CHECK(f.pi == pi);
                    CHECK(f.rho == rho);
                    CHECK(f.content == c);
                }
            }
}
