#include "steengrass/diffop.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace steengrass {

DiffOp DiffOp::identity()
{
    return basis(Partition{});
}

DiffOp DiffOp::basis(const Partition& lambda)
{
    DiffOp op;
    op.terms_[lambda] = 1;
    return op;
}

DiffOp DiffOp::d(int k)
{
    if (k < 0)
        throw std::invalid_argument("D_k needs k >= 0");
    return k == 0 ? identity() : basis(Partition{k});
}

void DiffOp::add_term(const Partition& lambda, const Int& c)
{
    auto it = terms_.find(lambda);
    if (it == terms_.end()) {
        if (c != 0)
            terms_[lambda] = c;
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

DiffOp& DiffOp::operator+=(const DiffOp& other)
{
    for (auto& [p, c] : other.terms_)
        add_term(p, c);
    return *this;
}

DiffOp& DiffOp::operator*=(const Int& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, c] : terms_)
        c *= scalar;
    return *this;
}

std::string DiffOp::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [p, c] : terms_) {
        if (!first)
            os << " + ";
        os << c.get_str() << "*D" << p.to_string();
        first = false;
    }
    return os.str();
}

namespace {

// w(sigma, n): coefficient in D_sigma p_n = w p_{n+|sigma|}, the number of
// arrangements of sigma's parts with n - l(sigma) zeros appended.
Int single_row_weight(int slot_value, int assigned_total, const std::vector<int>& assigned_counts)
{
    if (assigned_total > slot_value)
        return 0;
    Int w = 1;
    for (int i = 0; i < assigned_total; ++i)
        w *= slot_value - i;
    for (int c : assigned_counts)
        w = exact_div(w, factorial(c));
    return w;
}

}  // namespace

SymElem apply_sym(const DiffOp& op, const SymElem& f)
{
    SymElem fp = convert(f, Basis::power);
    SymElem out(Basis::power);
    for (auto& [lambda, c_op] : op.terms()) {
        if (lambda.empty()) {
            SymElem id = fp;
            id *= Rat(c_op);
            out += id;
            continue;
        }
        auto vals = lambda.part_multiplicities();
        for (auto& [mu, c_f] : fp.terms()) {
            int slots = mu.length();
            if (slots == 0)
                continue;  // constants are annihilated
            // counts[j][v] = how many parts of value vals[v] go to factor j
            std::vector<std::vector<int>> counts(slots, std::vector<int>(vals.size(), 0));
            std::vector<int> used(slots, 0);  // total parts per slot
            std::function<void(size_t)> place = [&](size_t vi) {
                if (vi == vals.size()) {
                    Int w = 1;
                    std::vector<int> parts = mu.parts();
                    for (int j = 0; j < slots; ++j) {
                        if (used[j] == 0)
                            continue;
                        w *= single_row_weight(mu.parts()[j], used[j], counts[j]);
                        if (w == 0)
                            break;
                        int bump = 0;
                        for (size_t v = 0; v < vals.size(); ++v)
                            bump += counts[j][v] * vals[v].first;
                        parts[j] += bump;
                    }
                    if (w != 0)
                        out.add_term(Partition(parts), c_f * Rat(c_op * w));
                    return;
                }
                int m = vals[vi].second;
                std::function<void(int, int)> distribute = [&](int j, int rem) {
                    if (j == slots) {
                        if (rem == 0)
                            place(vi + 1);
                        return;
                    }
                    int cap = std::min(rem, mu.parts()[j] - used[j]);
                    for (int t = 0; t <= cap; ++t) {
                        counts[j][vi] = t;
                        used[j] += t;
                        distribute(j + 1, rem - t);
                        used[j] -= t;
                    }
                    counts[j][vi] = 0;
                };
                distribute(0, m);
            };
            place(0);
        }
    }
    return convert(out, f.basis());
}

SymElem apply_perp(const DiffOp& op, const SymElem& f)
{
    SymElem fp = convert(f, Basis::power);
    SymElem out(Basis::power);
    for (auto& [lambda, c_op] : op.terms()) {
        if (lambda.empty()) {
            SymElem id = fp;
            id *= Rat(c_op);
            out += id;
            continue;
        }
        if (lambda.length() == 1) {
            // D_k^perp = sum_i p_i p_{i+k}^perp
            int k = lambda.parts()[0];
            for (auto& [mu, c] : fp.terms())
                for (auto [value, mult] : mu.part_multiplicities())
                    if (value > k)
                        out.add_term(mu.remove_part(value).add_part(value - k),
                                     c * Rat(c_op * Int(value) * mult));
            continue;
        }
        // General adjoint via the transpose of apply_sym on each degree block.
        for (auto& [mu, c] : fp.terms()) {
            int target = mu.weight() - lambda.weight();
            if (target < 0)
                continue;
            for (const Partition& nu : partitions_of(target)) {
                SymElem forward =
                    apply_sym(DiffOp::basis(lambda), SymElem::generator(Basis::power, nu));
                Rat cnm = forward.coeff(mu);
                if (cnm == 0)
                    continue;
                out.add_term(nu, c * Rat(c_op) * cnm * make_rat(mu.z(), nu.z()));
            }
        }
    }
    return convert(out, f.basis());
}

PolyOracle apply_oracle(const DiffOp& op, const PolyOracle& poly)
{
    PolyOracle out;
    out.nvars = poly.nvars;
    for (auto& [lambda, c_op] : op.terms()) {
        if (lambda.empty()) {
            for (auto& [e, c] : poly.terms)
                out.add_term(e, c * Rat(c_op));
            continue;
        }
        auto vals = lambda.part_multiplicities();
        for (auto& [expo, c] : poly.terms) {
            std::vector<int> support;
            for (int v = 0; v < poly.nvars; ++v)
                if (expo[v] > 0)
                    support.push_back(v);
            if (support.empty())
                continue;
            size_t ns = support.size();
            // counts[u][vi]: parts of value vals[vi] assigned to variable support[u]
            std::vector<std::vector<int>> counts(ns, std::vector<int>(vals.size(), 0));
            std::vector<int> dtot(ns, 0);
            std::function<void(size_t)> place = [&](size_t vi) {
                if (vi == vals.size()) {
                    Int factor = 1;
                    std::vector<int> ne = expo;
                    for (size_t u = 0; u < ns; ++u) {
                        if (dtot[u] == 0)
                            continue;
                        int a = expo[support[u]];
                        factor *= binomial(a, dtot[u]) * factorial(dtot[u]);
                        for (size_t v = 0; v < vals.size(); ++v) {
                            factor = exact_div(factor * 1, factorial(counts[u][v]));
                            ne[support[u]] += counts[u][v] * vals[v].first;
                        }
                        if (factor == 0)
                            break;
                    }
                    if (factor != 0)
                        out.add_term(ne, c * Rat(c_op * factor));
                    return;
                }
                int m = vals[vi].second;
                std::function<void(size_t, int)> distribute = [&](size_t u, int rem) {
                    if (u == ns) {
                        if (rem == 0)
                            place(vi + 1);
                        return;
                    }
                    int cap = std::min(rem, expo[support[u]] - dtot[u]);
                    for (int t = 0; t <= cap; ++t) {
                        counts[u][vi] = t;
                        dtot[u] += t;
                        distribute(u + 1, rem - t);
                        dtot[u] -= t;
                    }
                    counts[u][vi] = 0;
                };
                distribute(0, m);
            };
            place(0);
        }
    }
    return out;
}

SymElem lie_bracket(int k, int l, const SymElem& probe)
{
    SymElem kl = apply_sym(DiffOp::d(k), apply_sym(DiffOp::d(l), probe));
    SymElem lk = apply_sym(DiffOp::d(l), apply_sym(DiffOp::d(k), probe));
    return kl - lk;
}

OpPipeline OpPipeline::parse(const std::string& text)
{
    OpPipeline pipe;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t star = text.find('*', pos);
        std::string tok = text.substr(pos, star == std::string::npos ? std::string::npos
                                                                     : star - pos);
        // trim
        while (!tok.empty() && tok.front() == ' ')
            tok.erase(tok.begin());
        while (!tok.empty() && tok.back() == ' ')
            tok.pop_back();
        if (tok.empty())
            throw std::invalid_argument("empty operator token in '" + text + "'");

        OpStage stage;
        stage.name = tok;
        auto parse_sup = [&](const std::string& body) -> std::pair<long, long> {
            // "n" or "n@p"
            size_t at = body.find('@');
            long n = std::stol(body.substr(0, at));
            long p = (at == std::string::npos) ? 0 : std::stol(body.substr(at + 1));
            return {n, p};
        };

        try {
            if (tok.rfind("SQ^", 0) == 0) {
                auto [n, p] = parse_sup(tok.substr(3));
                if (n < 0)
                    throw std::invalid_argument("negative exponent");
                stage.kind = OpStage::Kind::strip_power;
                stage.k = 1;
                stage.n = static_cast<int>(n);
                stage.modulus = p;
            } else if (tok.rfind("Sq^", 0) == 0) {
                auto [m, p] = parse_sup(tok.substr(3));
                if (m < 0 || m % 2 != 0)
                    throw std::invalid_argument("Sq^m acts only for even m here");
                if (p != 0 && p != 2)
                    throw std::invalid_argument("Sq^m is a mod 2 operation");
                stage.kind = OpStage::Kind::strip_power;
                stage.k = 1;
                stage.n = static_cast<int>(m / 2);
                stage.modulus = 2;
            } else if (tok.rfind("P^", 0) == 0) {
                auto [n, p] = parse_sup(tok.substr(2));
                if (n < 0)
                    throw std::invalid_argument("negative exponent");
                stage.kind = OpStage::Kind::strip_power;
                stage.n = static_cast<int>(n);
                if (p != 0) {
                    if (!is_prime(p))
                        throw std::invalid_argument("P^n needs a prime");
                    stage.k = static_cast<int>(p - 1);
                    stage.modulus = p;
                } else {
                    stage.needs_prime = true;
                }
            } else if (tok.rfind("D[", 0) == 0 || tok == "D[]") {
                stage.kind = OpStage::Kind::basis_combo;
                stage.op = DiffOp::basis(Partition::parse(tok.substr(1)));
            } else {
                throw std::invalid_argument("unknown operator");
            }
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse operator token '" + tok + "'");
        }
        pipe.stages.push_back(std::move(stage));
        if (star == std::string::npos)
            break;
        pos = star + 1;
    }
    if (pipe.stages.empty())
        throw std::invalid_argument("empty operator expression");
    return pipe;
}

long OpPipeline::modulus() const
{
    long p = 0;
    for (auto& s : stages) {
        if (s.needs_prime)
            throw std::invalid_argument("operator " + s.name + " needs a prime (use P^n@p or --prime)");
        if (s.modulus != 0) {
            if (p != 0 && p != s.modulus)
                throw std::invalid_argument("pipeline mixes different moduli");
            p = s.modulus;
        }
    }
    return p;
}

void OpPipeline::fill_prime(long p)
{
    if (p == 0)
        return;
    if (!is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    for (auto& s : stages) {
        if (s.needs_prime) {
            s.k = static_cast<int>(p - 1);
            s.modulus = p;
            s.needs_prime = false;
        } else if (s.modulus != 0 && s.modulus != p) {
            throw std::invalid_argument("operator " + s.name + " conflicts with --prime " +
                                        std::to_string(p));
        }
    }
}

int OpPipeline::degree() const
{
    int d = 0;
    for (auto& s : stages) {
        if (s.kind == OpStage::Kind::strip_power)
            d += s.k * s.n;
        else
            for (auto& [p, c] : s.op.terms())
                d = std::max(d, p.weight());  // combos are graded per term
    }
    return d;
}

SymElem OpPipeline::apply(const SymElem& f) const
{
    SymElem cur = f;
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
        if (it->needs_prime)
            throw std::invalid_argument("operator " + it->name + " needs a prime");
        if (it->kind == OpStage::Kind::strip_power)
            cur = apply_strip_power(it->k, it->n, cur);
        else
            cur = apply_sym(it->op, cur);
    }
    return cur;
}

std::string OpPipeline::to_string() const
{
    std::string s;
    for (size_t i = 0; i < stages.size(); ++i) {
        if (i)
            s += "*";
        s += stages[i].name.empty() ? stages[i].op.to_string() : stages[i].name;
    }
    return s;
}

OpPipeline d_power(int k, int n)
{
    if (k <= 0 || n < 0)
        throw std::invalid_argument("d_power needs k >= 1, n >= 0");
    OpPipeline pipe;
    OpStage st;
    st.kind = OpStage::Kind::strip_power;
    st.k = k;
    st.n = n;
    st.name = "D[(" + std::to_string(k) + "^" + std::to_string(n) + ")]";
    pipe.stages.push_back(std::move(st));
    return pipe;
}

namespace {

SymElem divide_exact(const SymElem& f, long n)
{
    SymElem out(f.basis());
    for (auto& [p, c] : f.terms()) {
        if (!is_integer(c) || c.get_num() % n != 0)
            throw std::logic_error("non-exact division by " + std::to_string(n) +
                                   " in the strip-power recursion at " + p.to_string());
        out.set_coeff(p, c / Rat(n));
    }
    return out;
}

}  // namespace

SymElem apply_strip_power(int k, int n, const SymElem& f)
{
    if (k <= 0)
        throw std::invalid_argument("strip power needs k >= 1");
    if (n == 0)
        return f;
    SymElem fs = convert(f, Basis::schur);
    std::vector<SymElem> v;  // v[j] = D_{(k^j)} f
    v.reserve(n + 1);
    v.push_back(fs);
    for (int j = 1; j <= n; ++j) {
        SymElem acc(Basis::schur);
        Int sign_pow = 1;  // (-k-1)^{i-1}
        for (int i = 1; i <= j; ++i) {
            SymElem term = apply_sym(DiffOp::d(i * k), v[j - i]);
            term *= Rat(sign_pow);
            acc += term;
            sign_pow *= Int(-k - 1);
        }
        v.push_back(divide_exact(acc, j));
    }
    return convert(v[n], f.basis());
}

SymElem reduce_mod(const SymElem& f, long p)
{
    if (p <= 0)
        throw std::invalid_argument("reduce_mod needs a positive modulus");
    SymElem out(f.basis());
    for (auto& [part, c] : f.terms()) {
        Int r = mod_reduce(to_int(c), p);
        if (r != 0)
            out.set_coeff(part, Rat(r));
    }
    return out;
}

SymElem steenrod(const std::string& name, const SymElem& f, long modulus)
{
    OpPipeline pipe = OpPipeline::parse(name);
    if (modulus != 0)
        pipe.fill_prime(modulus);
    long p = pipe.modulus();
    if (modulus != 0 && p != 0 && p != modulus)
        throw std::invalid_argument("modulus conflicts with operator name");
    if (modulus != 0)
        p = modulus;
    SymElem result = pipe.apply(f);
    return p > 0 ? reduce_mod(result, p) : result;
}

BSeries BSeries::one()
{
    BSeries b;
    b.terms[Partition{}] = 1;
    return b;
}

BSeries BSeries::gen(int k)
{
    if (k < 0)
        throw std::invalid_argument("b_k needs k >= 0");
    BSeries b;
    b.terms[k == 0 ? Partition{} : Partition{k}] = 1;
    return b;
}

void BSeries::add_term(const Partition& p, const Int& c)
{
    auto it = terms.find(p);
    if (it == terms.end()) {
        if (c != 0)
            terms[p] = c;
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms.erase(it);
}

BSeries& BSeries::operator+=(const BSeries& other)
{
    for (auto& [p, c] : other.terms)
        add_term(p, c);
    return *this;
}

BSeries BSeries::operator*(const BSeries& other) const
{
    BSeries out;
    for (auto& [pa, ca] : terms)
        for (auto& [pb, cb] : other.terms)
            out.add_term(pa.union_with(pb), ca * cb);
    return out;
}

BSeries& BSeries::operator*=(const Int& c)
{
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [p, v] : terms)
        v *= c;
    return *this;
}

std::string BSeries::to_string() const
{
    if (terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [p, c] : terms) {
        if (!first)
            os << " + ";
        os << c.get_str() << "*b" << p.to_string();
        first = false;
    }
    return os.str();
}

TensorB comult_b(int k)
{
    TensorB out;
    for (int i = 0; i <= k; ++i) {
        // degree (k - i) part of (b_0 + b_1 + ...)^{i+1}
        for (const Partition& lam : partitions_of(k - i, i + 1, k - i)) {
            Int coeff = exact_div(factorial(i + 1),
                                  lam.sym_factor() * factorial(i + 1 - lam.length()));
            Partition right = (i == 0) ? Partition{} : Partition{i};
            auto key = std::make_pair(lam, right);
            auto it = out.find(key);
            if (it == out.end())
                out.emplace(key, coeff);
            else
                it->second += coeff;
        }
    }
    return out;
}

namespace {

using BPoly = std::vector<BSeries>;  // coefficient of t^j at index j

BPoly bpoly_mul(const BPoly& a, const BPoly& b, int maxdeg)
{
    BPoly out(maxdeg + 1);
    for (int i = 0; i <= maxdeg; ++i) {
        if (i >= static_cast<int>(a.size()) || a[i].is_zero())
            continue;
        for (int j = 0; i + j <= maxdeg; ++j) {
            if (j >= static_cast<int>(b.size()) || b[j].is_zero())
                continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

}  // namespace

BSeries antipode_b(int k)
{
    if (k == 0)
        return BSeries::one();
    // g(t) = 1 + b_1 t + b_2 t^2 + ...; S(b_k) = [t^k] g^{-(k+1)} / (k+1).
    int maxdeg = k;
    BPoly g(maxdeg + 1);
    g[0] = BSeries::one();
    for (int j = 1; j <= maxdeg; ++j)
        g[j] = BSeries::gen(j);
    BPoly inv(maxdeg + 1);
    inv[0] = BSeries::one();
    for (int nn = 1; nn <= maxdeg; ++nn) {
        BSeries acc;
        for (int i = 1; i <= nn; ++i) {
            BSeries t = g[i] * inv[nn - i];
            t *= Int(-1);
            acc += t;
        }
        inv[nn] = acc;
    }
    BPoly power(maxdeg + 1);
    power[0] = BSeries::one();
    for (int rep = 0; rep < k + 1; ++rep)
        power = bpoly_mul(power, inv, maxdeg);
    BSeries result;
    for (auto& [p, c] : power[k].terms)
        result.add_term(p, exact_div(c, Int(k + 1)));
    return result;
}

std::map<std::pair<Partition, int>, Int> coaction_h(int n)
{
    std::map<std::pair<Partition, int>, Int> out;
    for (int k = 0; k <= n; ++k) {
        for (const Partition& lam : partitions_of(n - k, k, n - k)) {
            if (lam.length() > k)
                continue;
            Int coeff =
                exact_div(factorial(k), lam.sym_factor() * factorial(k - lam.length()));
            if (coeff != 0)
                out[{lam, k}] = coeff;
        }
    }
    return out;
}

namespace {

using TPoly = std::vector<TensorB>;

void tensorb_add(TensorB& into, const TensorB& other, const Int& scale = 1)
{
    for (auto& [key, c] : other) {
        Int v = c * scale;
        auto it = into.find(key);
        if (it == into.end()) {
            if (v != 0)
                into.emplace(key, v);
        } else {
            it->second += v;
            if (it->second == 0)
                into.erase(it);
        }
    }
}

TensorB tensorb_mul(const TensorB& a, const TensorB& b)
{
    TensorB out;
    for (auto& [ka, ca] : a)
        for (auto& [kb, cb] : b) {
            auto key = std::make_pair(ka.first.union_with(kb.first),
                                      ka.second.union_with(kb.second));
            Int v = ca * cb;
            auto it = out.find(key);
            if (it == out.end())
                out.emplace(key, v);
            else {
                it->second += v;
                if (it->second == 0)
                    out.erase(it);
            }
        }
    return out;
}

TPoly tpoly_mul(const TPoly& a, const TPoly& b, int maxdeg)
{
    TPoly out(maxdeg + 1);
    for (int i = 0; i <= maxdeg; ++i)
        for (int j = 0; i + j <= maxdeg; ++j) {
            if (i >= static_cast<int>(a.size()) || j >= static_cast<int>(b.size()))
                continue;
            if (a[i].empty() || b[j].empty())
                continue;
            tensorb_add(out[i + j], tensorb_mul(a[i], b[j]));
        }
    return out;
}

}  // namespace

std::vector<TensorB> comult_b_by_composition(int max_k)
{
    int maxdeg = max_k + 1;
    TensorB unit{{std::make_pair(Partition{}, Partition{}), Int(1)}};

    // b1(t) = sum (b_k x 1) t^{k+1}
    TPoly b1(maxdeg + 1);
    for (int k = 0; k + 1 <= maxdeg; ++k) {
        Partition left = (k == 0) ? Partition{} : Partition{k};
        b1[k + 1] = TensorB{{std::make_pair(left, Partition{}), Int(1)}};
    }
    // result = sum_k (1 x b_k) b1(t)^{k+1}
    TPoly result(maxdeg + 1);
    TPoly power(maxdeg + 1);
    power[0] = unit;
    for (int k = 0; k + 1 <= maxdeg; ++k) {
        power = tpoly_mul(power, b1, maxdeg);  // now b1^{k+1}
        Partition right = (k == 0) ? Partition{} : Partition{k};
        TensorB factor{{std::make_pair(Partition{}, right), Int(1)}};
        for (int d = 0; d <= maxdeg; ++d) {
            if (power[d].empty())
                continue;
            tensorb_add(result[d], tensorb_mul(factor, power[d]));
        }
    }
    std::vector<TensorB> out(max_k + 1);
    for (int k = 0; k <= max_k; ++k)
        out[k] = result[k + 1];
    return out;
}

std::vector<BSeries> b_of_antipode_series(int max_k)
{
    int maxdeg = max_k + 1;
    BPoly s(maxdeg + 1);
    s[1] = BSeries::one();
    for (int k = 1; k + 1 <= maxdeg; ++k)
        s[k + 1] = antipode_b(k);

    BPoly result(maxdeg + 1);
    BPoly power(maxdeg + 1);
    power[0] = BSeries::one();
    for (int k = 0; k + 1 <= maxdeg; ++k) {
        power = bpoly_mul(power, s, maxdeg);  // s^{k+1}
        BSeries bk = BSeries::gen(k);
        for (int d = 0; d <= maxdeg; ++d) {
            if (power[d].is_zero())
                continue;
            BSeries t = bk * power[d];
            result[d] += t;
        }
    }
    return result;
}

}  // namespace steengrass
