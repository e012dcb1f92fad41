#include "steengrass/grass.hpp"

#include <sstream>

namespace steengrass {

std::string BoxedClass::to_string() const
{
    if (terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [lam, c] : terms) {
        if (!first)
            os << " + ";
        os << c.get_str() << "*sigma" << lam.to_string();
        first = false;
    }
    return os.str();
}

BoxedClass project(const SymElem& f, int n_rows, int k_cols, long p)
{
    if (n_rows <= 0 || k_cols <= 0)
        throw std::invalid_argument("project needs a positive box");
    if (p < 0 || (p > 0 && !is_prime(p)))
        throw std::invalid_argument("project needs p = 0 or a prime");
    BoxedClass out;
    out.n_rows = n_rows;
    out.k_cols = k_cols;
    out.p = p;
    SymElem fs = convert(f, Basis::schur);
    for (auto& [lam, c] : fs.terms()) {
        if (!lam.fits_in_box(n_rows, k_cols))
            continue;
        Int v = to_int(c);
        if (p > 0)
            v = mod_reduce(v, p);
        if (v != 0)
            out.terms[lam] = v;
    }
    return out;
}

BoxedClass steenrod_schubert(const OpPipeline& pipe, const Partition& lambda, long p,
                             int n_rows, int k_cols)
{
    if (!lambda.fits_in_box(n_rows, k_cols))
        throw std::invalid_argument("class " + lambda.to_string() + " lies outside the " +
                                    std::to_string(n_rows) + "x" + std::to_string(k_cols) +
                                    " box");
    SymElem lifted = apply_pipeline_schur(pipe, SymElem::generator(Basis::schur, lambda));
    return project(lifted, n_rows, k_cols, p);
}

BoxedClass steenrod_schubert(const std::string& op, const Partition& lambda, long p, int n_rows,
                             int k_cols)
{
    OpPipeline pipe = OpPipeline::parse(op);
    if (p != 0)
        pipe.fill_prime(p);
    long implied = pipe.modulus();
    if (p != 0 && implied != 0 && implied != p)
        throw std::invalid_argument("--prime conflicts with the operator's modulus");
    return steenrod_schubert(pipe, lambda, p != 0 ? p : implied, n_rows, k_cols);
}

namespace {

// The strip-power recursion with every intermediate pruned to the box. The
// operators only add boxes and a predecessor of an in-box partition is again
// in-box, so pruning is exact for the surviving coefficients.
SymElem strip_power_in_box(int k, int n, const Partition& lambda, int rows, int cols)
{
    auto prune = [&](const SymElem& f) {
        SymElem out(Basis::schur);
        for (auto& [mu, c] : f.terms())
            if (mu.fits_in_box(rows, cols))
                out.set_coeff(mu, c);
        return out;
    };
    std::vector<SymElem> v{SymElem::generator(Basis::schur, lambda)};
    for (int j = 1; j <= n; ++j) {
        SymElem acc(Basis::schur);
        Int sign_pow = 1;
        for (int i = 1; i <= j; ++i) {
            SymElem term = apply_dk_schur(i * k, v[j - i], DkDirection::raise);
            term *= Rat(sign_pow);
            acc += term;
            sign_pow *= Int(-k - 1);
        }
        acc = prune(acc);
        SymElem divided(Basis::schur);
        for (auto& [mu, c] : acc.terms())
            divided.set_coeff(mu, c / Rat(j));
        for (auto& [mu, c] : divided.terms())
            if (!is_integer(c))
                throw std::logic_error("non-exact division in the boxed strip recursion");
        v.push_back(std::move(divided));
    }
    return v[n];
}

}  // namespace

AttachPoset build_poset(int n_rows, int k_cols, long p)
{
    if (!is_prime(p))
        throw std::invalid_argument("build_poset needs a prime p");
    AttachPoset poset;
    poset.n_rows = n_rows;
    poset.k_cols = k_cols;
    poset.p = p;
    poset.elements = partitions_in_box(n_rows, k_cols);

    int capacity = n_rows * k_cols;
    int step = static_cast<int>(p) - 1;

    // Single-step edges from each P^n (equivalently Sq^{2n} when p = 2),
    // with the witnessing operation name kept for inspection.
    std::map<std::pair<Partition, Partition>, std::string> single;
    std::map<Partition, std::vector<Partition>> succ;
    for (const Partition& lam : poset.elements) {
        for (int n = 1; lam.weight() + n * step <= capacity; ++n) {
            SymElem lifted = strip_power_in_box(step, n, lam, n_rows, k_cols);
            std::string name =
                (p == 2) ? "Sq^" + std::to_string(2 * n) : "P^" + std::to_string(n);
            for (auto& [mu, c] : lifted.terms()) {
                if (mod_reduce(to_int(c), p) == 0)
                    continue;
                auto key = std::make_pair(lam, mu);
                if (!single.count(key)) {
                    single.emplace(key, name);
                    succ[lam].push_back(mu);
                }
            }
        }
    }

    // Transitive closure by memoized reachability; degree strictly increases,
    // so the single-step graph is acyclic.
    std::map<Partition, std::set<Partition>> reach;
    std::function<const std::set<Partition>&(const Partition&)> reach_of =
        [&](const Partition& lam) -> const std::set<Partition>& {
        auto it = reach.find(lam);
        if (it != reach.end())
            return it->second;
        std::set<Partition> acc;
        auto sit = succ.find(lam);
        if (sit != succ.end())
            for (const Partition& nxt : sit->second) {
                acc.insert(nxt);
                const std::set<Partition>& sub = reach_of(nxt);
                acc.insert(sub.begin(), sub.end());
            }
        return reach.emplace(lam, std::move(acc)).first->second;
    };
    for (const Partition& lam : poset.elements)
        for (const Partition& mu : reach_of(lam))
            poset.relation.insert({lam, mu});

    // Cover edges are single steps with no element strictly between.
    for (auto& [edge, name] : single) {
        auto& [a, b] = edge;
        bool cover = true;
        for (const Partition& mid : reach.at(a)) {
            if (mid == b)
                continue;
            if (poset.related(mid, b)) {
                cover = false;
                break;
            }
        }
        if (cover)
            poset.covers.push_back({a, b, name});
    }
    return poset;
}

std::string emit_dot(const AttachPoset& poset)
{
    std::ostringstream os;
    os << "digraph attaching {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box];\n";
    std::map<int, std::vector<Partition>> by_weight;
    for (const Partition& lam : poset.elements)
        by_weight[lam.weight()].push_back(lam);
    for (auto& [w, elems] : by_weight) {
        os << "  { rank=same;";
        for (const Partition& lam : elems)
            os << " \"" << lam.to_string() << "\";";
        os << " }\n";
    }
    for (const CoverEdge& e : poset.covers) {
        os << "  \"" << e.from.to_string() << "\" -> \"" << e.to.to_string() << "\"";
        if (!e.witness.empty())
            os << " [label=\"" << e.witness << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace steengrass
