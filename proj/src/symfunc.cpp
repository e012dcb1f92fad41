#include "steengrass/symfunc.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>

namespace steengrass {

char basis_code(Basis b)
{
    switch (b) {
        case Basis::monomial: return 'm';
        case Basis::elementary: return 'e';
        case Basis::homogeneous: return 'h';
        case Basis::power: return 'p';
        case Basis::schur: return 's';
    }
    throw std::logic_error("bad basis");
}

Basis basis_from_code(char c)
{
    switch (c) {
        case 'm': return Basis::monomial;
        case 'e': return Basis::elementary;
        case 'h': return Basis::homogeneous;
        case 'p': return Basis::power;
        case 's': return Basis::schur;
    }
    throw std::invalid_argument(std::string("unknown basis code '") + c + "'");
}

SymElem SymElem::one(Basis b)
{
    return generator(b, Partition{});
}

SymElem SymElem::generator(Basis b, const Partition& p)
{
    SymElem f(b);
    f.terms_[p] = 1;
    return f;
}

Rat SymElem::coeff(const Partition& p) const
{
    auto it = terms_.find(p);
    return it == terms_.end() ? Rat(0) : it->second;
}

int SymElem::degree() const
{
    int d = 0;
    for (auto& [p, c] : terms_)
        d = std::max(d, p.weight());
    return d;
}

bool SymElem::is_homogeneous() const
{
    int d = -1;
    for (auto& [p, c] : terms_) {
        if (d == -1)
            d = p.weight();
        else if (d != p.weight())
            return false;
    }
    return true;
}

SymElem SymElem::homogeneous_component(int d) const
{
    SymElem out(basis_);
    for (auto& [p, c] : terms_)
        if (p.weight() == d)
            out.terms_[p] = c;
    return out;
}

bool SymElem::integral() const
{
    for (auto& [p, c] : terms_)
        if (!is_integer(c))
            return false;
    return true;
}

void SymElem::set_coeff(const Partition& p, const Rat& c)
{
    if (c == 0)
        terms_.erase(p);
    else
        terms_[p] = c;
}

void SymElem::add_term(const Partition& p, const Rat& c)
{
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        if (c != 0)
            terms_[p] = c;
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

SymElem& SymElem::operator+=(const SymElem& other)
{
    if (other.basis_ != basis_ && !other.is_zero() && !is_zero())
        throw std::invalid_argument("adding elements in different bases");
    if (is_zero())
        basis_ = other.basis_;
    for (auto& [p, c] : other.terms_)
        add_term(p, c);
    return *this;
}

SymElem& SymElem::operator-=(const SymElem& other)
{
    if (other.basis_ != basis_ && !other.is_zero() && !is_zero())
        throw std::invalid_argument("subtracting elements in different bases");
    if (is_zero())
        basis_ = other.basis_;
    for (auto& [p, c] : other.terms_)
        add_term(p, -c);
    return *this;
}

SymElem& SymElem::operator*=(const Rat& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, c] : terms_)
        c *= scalar;
    return *this;
}

std::string SymElem::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [p, c] : terms_) {
        if (!first)
            os << " + ";
        os << c.get_str() << "*" << basis_code(basis_) << p.to_string();
        first = false;
    }
    return os.str();
}

int degree_cap()
{
    static int cap = [] {
        if (const char* env = std::getenv("STEENGRASS_DEGREE_CAP")) {
            int v = std::atoi(env);
            if (v > 0)
                return v;
        }
        return 40;
    }();
    return cap;
}

namespace {

void check_cap(int degree)
{
    if (degree > degree_cap())
        throw std::domain_error("degree " + std::to_string(degree) +
                                " exceeds the configured cap of " +
                                std::to_string(degree_cap()));
}

using Expansion = std::map<Partition, Rat>;

struct Caches {
    std::recursive_mutex lock;
    std::map<int, Expansion> h_in_p;
    std::map<int, Expansion> e_in_p;
    std::map<int, Expansion> p_in_e;
    std::map<int, Expansion> p_in_h;
    std::map<Partition, Expansion> e_in_m;
    std::map<Partition, Expansion> m_in_e;
    std::map<std::pair<Partition, Partition>, Int> character;
    std::map<std::pair<Partition, Partition>, Int> kostka;
};

Caches& caches()
{
    static Caches c;
    return c;
}

void expansion_add(Expansion& into, const Partition& p, const Rat& c)
{
    if (c == 0)
        return;
    auto it = into.find(p);
    if (it == into.end())
        into.emplace(p, c);
    else {
        it->second += c;
        if (it->second == 0)
            into.erase(it);
    }
}

// Product in a multiplicative basis (e, h, p): indices concatenate.
Expansion expansion_mul(const Expansion& a, const Expansion& b)
{
    Expansion out;
    for (auto& [pa, ca] : a)
        for (auto& [pb, cb] : b)
            expansion_add(out, pa.union_with(pb), ca * cb);
    return out;
}

const Expansion& h_in_p(int n)
{
    auto& C = caches();
    auto it = C.h_in_p.find(n);
    if (it != C.h_in_p.end())
        return it->second;
    Expansion e;
    for (const Partition& mu : partitions_of(n))
        e.emplace(mu, make_rat(1, mu.z()));
    return C.h_in_p.emplace(n, std::move(e)).first->second;
}

const Expansion& e_in_p(int n)
{
    auto& C = caches();
    auto it = C.e_in_p.find(n);
    if (it != C.e_in_p.end())
        return it->second;
    Expansion e;
    for (const Partition& mu : partitions_of(n)) {
        Rat c = make_rat((n - mu.length()) % 2 == 0 ? 1 : -1, mu.z());
        e.emplace(mu, c);
    }
    return C.e_in_p.emplace(n, std::move(e)).first->second;
}

// Newton: p_n = sum_{i=1}^{n-1} (-1)^{i-1} e_i p_{n-i} + (-1)^{n-1} n e_n.
const Expansion& p_in_e(int n)
{
    auto& C = caches();
    auto it = C.p_in_e.find(n);
    if (it != C.p_in_e.end())
        return it->second;
    Expansion out;
    if (n == 0) {
        out.emplace(Partition{}, 1);
    } else {
        for (int i = 1; i < n; ++i) {
            const Expansion& rest = p_in_e(n - i);
            int sign = (i % 2 == 1) ? 1 : -1;
            for (auto& [mu, c] : rest)
                expansion_add(out, mu.add_part(i), c * sign);
        }
        expansion_add(out, Partition{n}, Rat((n % 2 == 1) ? n : -n));
    }
    return C.p_in_e.emplace(n, std::move(out)).first->second;
}

// Newton with h: p_n = n h_n - sum_{i=1}^{n-1} h_i p_{n-i}.
const Expansion& p_in_h(int n)
{
    auto& C = caches();
    auto it = C.p_in_h.find(n);
    if (it != C.p_in_h.end())
        return it->second;
    Expansion out;
    if (n == 0) {
        out.emplace(Partition{}, 1);
    } else {
        expansion_add(out, Partition{n}, Rat(n));
        for (int i = 1; i < n; ++i) {
            const Expansion& rest = p_in_h(n - i);
            for (auto& [mu, c] : rest)
                expansion_add(out, mu.add_part(i), -c);
        }
    }
    return C.p_in_h.emplace(n, std::move(out)).first->second;
}

Int character_rec(const Partition& lambda, const Partition& mu)
{
    if (lambda.empty())
        return 1;
    auto& C = caches();
    auto key = std::make_pair(lambda, mu);
    auto it = C.character.find(key);
    if (it != C.character.end())
        return it->second;
    int r = mu.parts()[0];
    Partition rest = mu.remove_part(r);
    Int total = 0;
    for (auto& [nu, an] : strip_moves(lambda, r, StripDirection::remove, 1))
        total += int_pow(-1, an.ht) * character_rec(nu, rest);
    C.character.emplace(std::move(key), total);
    return total;
}

// Coefficient vector of m_gamma * e_j in the monomial basis.
// Adding a vertical j-strip to the exponent multiset: for each distinct value
// v (including 0), t_v copies of v become v+1, and the coefficient counts the
// choices of which copies of v+1 in the result were incremented.
void multiply_m_by_e(const Expansion& f, int j, Expansion& out)
{
    for (auto& [gamma, c] : f) {
        std::vector<std::pair<int, int>> vals = gamma.part_multiplicities();
        vals.emplace_back(0, j);  // up to j brand-new parts equal to 1
        std::vector<int> t(vals.size(), 0);
        std::function<void(size_t, int)> rec = [&](size_t idx, int rem) {
            if (idx == vals.size()) {
                if (rem != 0)
                    return;
                std::vector<int> parts = gamma.parts();
                for (size_t i = 0; i < vals.size(); ++i) {
                    int v = vals[i].first;
                    int tv = t[i];
                    if (tv == 0)
                        continue;
                    int replaced = 0;
                    for (int& pv : parts)
                        if (pv == v && replaced < tv) {
                            pv = v + 1;
                            ++replaced;
                        }
                    for (; replaced < tv; ++replaced)
                        parts.push_back(v + 1);  // only for v == 0
                }
                Partition gp(parts);
                Int coeff = 1;
                for (size_t i = 0; i < vals.size(); ++i)
                    if (t[i] > 0)
                        coeff *= binomial(gp.multiplicity(vals[i].first + 1), t[i]);
                expansion_add(out, gp, c * Rat(coeff));
                return;
            }
            int cap = std::min(vals[idx].second, rem);
            for (int tv = 0; tv <= cap; ++tv) {
                t[idx] = tv;
                rec(idx + 1, rem - tv);
            }
            t[idx] = 0;
        };
        rec(0, j);
    }
}

const Expansion& e_in_m(const Partition& nu)
{
    auto& C = caches();
    auto it = C.e_in_m.find(nu);
    if (it != C.e_in_m.end())
        return it->second;
    Expansion out;
    if (nu.empty()) {
        out.emplace(Partition{}, 1);
    } else {
        const Expansion& rest = e_in_m(nu.remove_part(nu.parts()[0]));
        multiply_m_by_e(rest, nu.parts()[0], out);
    }
    return C.e_in_m.emplace(nu, std::move(out)).first->second;
}

// Triangular solve from e_{lambda'} = m_lambda + sum_{mu < lambda} A_mu m_mu.
const Expansion& m_in_e(const Partition& lambda)
{
    auto& C = caches();
    auto it = C.m_in_e.find(lambda);
    if (it != C.m_in_e.end())
        return it->second;
    Expansion out;
    if (lambda.empty()) {
        out.emplace(Partition{}, 1);
    } else {
        Partition conj = lambda.conjugate();
        out.emplace(conj, 1);
        const Expansion A = e_in_m(conj);  // copy: recursion below mutates cache
        for (auto& [mu, a] : A) {
            if (mu == lambda)
                continue;
            const Expansion& sub = m_in_e(mu);
            for (auto& [nu, b] : sub)
                expansion_add(out, nu, -a * b);
        }
    }
    return C.m_in_e.emplace(lambda, std::move(out)).first->second;
}

SymElem to_power(const SymElem& f)
{
    SymElem out(Basis::power);
    switch (f.basis()) {
        case Basis::power:
            return f;
        case Basis::homogeneous:
        case Basis::elementary: {
            bool hom = f.basis() == Basis::homogeneous;
            for (auto& [lam, c] : f.terms()) {
                Expansion prod{{Partition{}, Rat(1)}};
                for (int part : lam.parts())
                    prod = expansion_mul(prod, hom ? h_in_p(part) : e_in_p(part));
                for (auto& [mu, q] : prod)
                    out.add_term(mu, c * q);
            }
            return out;
        }
        case Basis::schur: {
            for (auto& [lam, c] : f.terms())
                for (const Partition& mu : partitions_of(lam.weight()))
                    out.add_term(mu, c * make_rat(sym_character(lam, mu), mu.z()));
            return out;
        }
        case Basis::monomial: {
            SymElem in_e(Basis::elementary);
            {
                std::scoped_lock g(caches().lock);
                for (auto& [lam, c] : f.terms())
                    for (auto& [nu, q] : m_in_e(lam))
                        in_e.add_term(nu, c * q);
            }
            return to_power(in_e);
        }
    }
    throw std::logic_error("bad basis");
}

SymElem from_power(const SymElem& g, Basis target)
{
    SymElem out(target);
    switch (target) {
        case Basis::power:
            return g;
        case Basis::elementary:
        case Basis::homogeneous: {
            bool hom = target == Basis::homogeneous;
            std::scoped_lock lk(caches().lock);
            for (auto& [mu, c] : g.terms()) {
                Expansion prod{{Partition{}, Rat(1)}};
                for (int part : mu.parts())
                    prod = expansion_mul(prod, hom ? p_in_h(part) : p_in_e(part));
                for (auto& [nu, q] : prod)
                    out.add_term(nu, c * q);
            }
            return out;
        }
        case Basis::schur: {
            // <g, s_lambda> = sum_mu g_mu chi^lambda_mu
            std::map<int, std::vector<std::pair<Partition, Rat>>> by_degree;
            for (auto& [mu, c] : g.terms())
                by_degree[mu.weight()].emplace_back(mu, c);
            for (auto& [d, terms_d] : by_degree) {
                for (const Partition& lam : partitions_of(d)) {
                    Rat coeff = 0;
                    for (auto& [mu, c] : terms_d)
                        coeff += c * Rat(sym_character(lam, mu));
                    out.add_term(lam, coeff);
                }
            }
            return out;
        }
        case Basis::monomial: {
            std::scoped_lock lk(caches().lock);
            for (auto& [mu, c] : g.terms()) {
                Expansion prod{{Partition{}, Rat(1)}};
                for (int part : mu.parts())
                    prod = expansion_mul(prod, p_in_e(part));
                for (auto& [nu, q] : prod)
                    for (auto& [lam, r] : e_in_m(nu))
                        out.add_term(lam, c * q * r);
            }
            return out;
        }
    }
    throw std::logic_error("bad basis");
}

}  // namespace

Int sym_character(const Partition& lambda, const Partition& mu)
{
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("character requires |lambda| = |mu|");
    std::scoped_lock lk(caches().lock);
    return character_rec(lambda, mu);
}

SymElem convert(const SymElem& f, Basis target)
{
    check_cap(f.degree());
    if (f.basis() == target)
        return f;
    if (f.basis() == Basis::power)
        return from_power(f, target);
    SymElem p = to_power(f);
    return target == Basis::power ? p : from_power(p, target);
}

SymElem multiply(const SymElem& f, const SymElem& g)
{
    check_cap(f.degree() + g.degree());
    if (f.is_zero() || g.is_zero())
        return SymElem::zero(f.basis());
    Basis result_basis = f.basis();
    if (f.basis() == g.basis() &&
        (f.basis() == Basis::power || f.basis() == Basis::elementary ||
         f.basis() == Basis::homogeneous)) {
        SymElem out(f.basis());
        for (auto& [pa, ca] : f.terms())
            for (auto& [pb, cb] : g.terms())
                out.add_term(pa.union_with(pb), ca * cb);
        return out;
    }
    SymElem fp = convert(f, Basis::power);
    SymElem gp = convert(g, Basis::power);
    SymElem out(Basis::power);
    for (auto& [pa, ca] : fp.terms())
        for (auto& [pb, cb] : gp.terms())
            out.add_term(pa.union_with(pb), ca * cb);
    return convert(out, result_basis);
}

SymElem hammond(const SymElem& f, const SymElem& g)
{
    SymElem fp = convert(f, Basis::power);
    SymElem gp = convert(g, Basis::power);
    SymElem out(Basis::power);
    for (auto& [nu, a] : fp.terms()) {
        std::map<Partition, Rat> cur;
        for (auto& [mu, c] : gp.terms())
            cur[mu] = c;
        for (int part : nu.parts()) {
            std::map<Partition, Rat> next;
            for (auto& [mu, c] : cur) {
                int m = mu.multiplicity(part);
                if (m == 0)
                    continue;
                Rat v = c * Rat(part) * Rat(m);
                auto nxt = mu.remove_part(part);
                auto it = next.find(nxt);
                if (it == next.end())
                    next.emplace(nxt, v);
                else
                    it->second += v;
            }
            cur = std::move(next);
        }
        for (auto& [mu, c] : cur)
            out.add_term(mu, a * c);
    }
    return convert(out, g.basis());
}

SymElem mn_multiply(int k, const SymElem& f)
{
    if (k <= 0)
        throw std::invalid_argument("mn_multiply: k must be positive");
    SymElem fs = convert(f, Basis::schur);
    SymElem out(Basis::schur);
    for (auto& [lam, c] : fs.terms())
        for (auto& [mu, an] : strip_moves(lam, k, StripDirection::add, 1))
            out.add_term(mu, c * Rat(int_pow(-1, an.ht)));
    return out;
}

SymElem skew_schur(const SkewShape& shape)
{
    return convert(hammond(SymElem::generator(Basis::schur, shape.inner),
                           SymElem::generator(Basis::schur, shape.outer)),
                   Basis::schur);
}

Rat principal_spec(const SymElem& f, long n)
{
    SymElem fp = convert(f, Basis::power);
    Rat total = 0;
    for (auto& [mu, c] : fp.terms())
        total += c * Rat(int_pow(n, mu.length()));
    return total;
}

Rat hook_content_spec(const Partition& lambda, long n)
{
    Rat prod = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) {
            auto [c, h] = content_hook(lambda, i, j);
            prod *= make_rat(Int(n) - c, h);
        }
    return prod;
}

namespace {

// ps^1_n(h_m) = C(n+m-1, m) as a polynomial in n, valid for negative n.
Int ps_h(long n, int m)
{
    if (m < 0)
        return 0;
    if (m == 0)
        return 1;
    Int num = 1;
    for (int i = 0; i < m; ++i)
        num *= Int(n) + (m - 1 - i);
    return exact_div(num, factorial(m));
}

Rat int_det(std::vector<std::vector<Rat>> a)
{
    size_t n = a.size();
    Rat det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0)
                continue;
            Rat factor = a[r][col] / a[col][col];
            for (size_t c2 = col; c2 < n; ++c2)
                a[r][c2] -= factor * a[col][c2];
        }
    }
    return det;
}

}  // namespace

Rat principal_spec_skew(const Partition& outer, const Partition& inner, long n)
{
    if (!outer.contains(inner))
        return 0;
    int l = outer.length();
    if (l == 0)
        return 1;
    std::vector<std::vector<Rat>> m(l, std::vector<Rat>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            m[i - 1][j - 1] = Rat(ps_h(n, outer.part(i) - inner.part(j) - i + j));
    return int_det(std::move(m));
}

SymElem antipode(const SymElem& f)
{
    SymElem fp = convert(f, Basis::power);
    SymElem out(Basis::power);
    for (auto& [mu, c] : fp.terms())
        out.add_term(mu, c * Rat(int_pow(-1, mu.length())));
    return convert(out, f.basis());
}

Rat pairing(const SymElem& f, const SymElem& g)
{
    SymElem fp = convert(f, Basis::power);
    SymElem gp = convert(g, Basis::power);
    Rat total = 0;
    for (auto& [mu, c] : fp.terms()) {
        Rat d = gp.coeff(mu);
        if (d != 0)
            total += c * d * Rat(mu.z());
    }
    return total;
}

TensorSym comult(const SymElem& f)
{
    SymElem fp = convert(f, Basis::power);
    TensorSym out;
    for (auto& [mu, c] : fp.terms()) {
        auto vals = mu.part_multiplicities();
        std::vector<int> take(vals.size(), 0);
        std::function<void(size_t)> rec = [&](size_t idx) {
            if (idx == vals.size()) {
                std::vector<int> left, right;
                Int ways = 1;
                for (size_t i = 0; i < vals.size(); ++i) {
                    for (int t = 0; t < take[i]; ++t)
                        left.push_back(vals[i].first);
                    for (int t = take[i]; t < vals[i].second; ++t)
                        right.push_back(vals[i].first);
                    ways *= binomial(vals[i].second, take[i]);
                }
                auto key = std::make_pair(Partition(left), Partition(right));
                Rat add = c * Rat(ways);
                auto it = out.find(key);
                if (it == out.end())
                    out.emplace(key, add);
                else {
                    it->second += add;
                    if (it->second == 0)
                        out.erase(it);
                }
                return;
            }
            for (int t = 0; t <= vals[idx].second; ++t) {
                take[idx] = t;
                rec(idx + 1);
            }
        };
        rec(0);
    }
    return out;
}

namespace {

Int kostka_rec(const Partition& shape, const Partition& content)
{
    if (shape.weight() != content.weight())
        return 0;
    if (shape.empty())
        return 1;
    if (content.empty())
        return 0;
    auto& C = caches();
    auto key = std::make_pair(shape, content);
    auto it = C.kostka.find(key);
    if (it != C.kostka.end())
        return it->second;

    int biggest = content.length();  // value with content.parts().back() boxes
    int count = content.parts().back();
    Partition rest(std::vector<int>(content.parts().begin(), content.parts().end() - 1));
    (void)biggest;

    // nu <= shape with shape/nu a horizontal strip of `count` boxes
    Int total = 0;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int rem) {
        if (row > shape.length()) {
            if (rem == 0)
                total += kostka_rec(Partition(cur), rest);
            return;
        }
        int hi = shape.parts()[row - 1];
        int lo = shape.part(row + 1);  // horizontal strip: nu_i >= shape_{i+1}
        if (row > 1)
            lo = std::max(lo, 0);
        for (int v = hi; v >= lo; --v) {
            int take = hi - v;
            if (take > rem)
                break;
            // nu must be a partition: v <= previous nu value
            if (!cur.empty() && v > cur.back())
                continue;
            cur.push_back(v);
            rec(row + 1, rem - take);
            cur.pop_back();
        }
    };
    rec(1, count);
    C.kostka.emplace(std::move(key), total);
    return total;
}

}  // namespace

Int kostka_number(const Partition& shape, const Partition& content)
{
    std::scoped_lock lk(caches().lock);
    return kostka_rec(shape, content);
}

int PolyOracle::degree() const
{
    int d = 0;
    for (auto& [e, c] : terms) {
        int s = 0;
        for (int v : e)
            s += v;
        d = std::max(d, s);
    }
    return d;
}

void PolyOracle::add_term(const std::vector<int>& expo, const Rat& c)
{
    if (c == 0)
        return;
    auto it = terms.find(expo);
    if (it == terms.end())
        terms.emplace(expo, c);
    else {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
}

PolyOracle to_oracle(const SymElem& f, int nvars)
{
    if (nvars <= 0)
        throw std::invalid_argument("to_oracle: nvars must be positive");
    check_cap(f.degree());
    SymElem fm = convert(f, Basis::monomial);
    PolyOracle out;
    out.nvars = nvars;
    for (auto& [lam, c] : fm.terms()) {
        if (lam.length() > nvars)
            continue;
        std::vector<int> expo(nvars, 0);
        for (int i = 0; i < lam.length(); ++i)
            expo[i] = lam.parts()[i];
        std::sort(expo.begin(), expo.end());
        do {
            out.add_term(expo, c);
        } while (std::next_permutation(expo.begin(), expo.end()));
    }
    return out;
}

SymElem from_oracle(const PolyOracle& p)
{
    PolyOracle work = p;
    SymElem out(Basis::monomial);
    while (!work.terms.empty()) {
        auto it = std::prev(work.terms.end());  // lexicographically largest
        std::vector<int> expo = it->first;
        Rat c = it->second;
        std::vector<int> sorted = expo;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        for (size_t i = 0; i < expo.size(); ++i)
            if (expo[i] != sorted[i])
                throw std::invalid_argument("from_oracle: polynomial is not symmetric");
        Partition lam(sorted);
        out.add_term(lam, c);
        std::vector<int> orbit = expo;
        std::sort(orbit.begin(), orbit.end());
        do {
            work.add_term(orbit, -c);
        } while (std::next_permutation(orbit.begin(), orbit.end()));
    }
    return out;
}

PolyOracle oracle_multiply(const PolyOracle& a, const PolyOracle& b)
{
    if (a.nvars != b.nvars)
        throw std::invalid_argument("oracle_multiply: variable counts differ");
    PolyOracle out;
    out.nvars = a.nvars;
    for (auto& [ea, ca] : a.terms)
        for (auto& [eb, cb] : b.terms) {
            std::vector<int> e(a.nvars);
            for (int i = 0; i < a.nvars; ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

}  // namespace steengrass
