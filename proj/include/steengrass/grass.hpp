#pragma once

#include "steengrass/schubert.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace steengrass {

/// Linear combination of Schubert classes sigma_lambda inside an
/// n_rows x k_cols box, integral (p = 0) or with canonical residues mod p.
struct BoxedClass {
    int n_rows = 0;
    int k_cols = 0;
    long p = 0;
    std::map<Partition, Int> terms;

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const BoxedClass&, const BoxedClass&) = default;
    std::string to_string() const;
};

/// Quotient projection: drop Schur terms outside the box, reduce mod p if p > 0.
BoxedClass project(const SymElem& f, int n_rows, int k_cols, long p);

/// Apply a named operation (or composition) to sigma_lambda integrally via
/// the strip route, then project. The class must fit the box.
BoxedClass steenrod_schubert(const std::string& op, const Partition& lambda, long p,
                             int n_rows, int k_cols);
BoxedClass steenrod_schubert(const OpPipeline& pipe, const Partition& lambda, long p,
                             int n_rows, int k_cols);

struct CoverEdge {
    Partition from;
    Partition to;
    std::string witness;  // one single-step operation exhibiting the relation
};

/// Attaching-map order: transitive closure of "sigma_mu appears in some P^n
/// applied to sigma_lambda" over single operations P^n, n >= 1.
struct AttachPoset {
    int n_rows = 0;
    int k_cols = 0;
    long p = 2;
    std::vector<Partition> elements;
    std::set<std::pair<Partition, Partition>> relation;  // strict, closed
    std::vector<CoverEdge> covers;

    bool related(const Partition& a, const Partition& b) const
    {
        return relation.count({a, b}) > 0;
    }
};

AttachPoset build_poset(int n_rows, int k_cols, long p);

/// Graphviz DOT with nodes ranked by |lambda| and cover edges labelled by a
/// witnessing operation; byte-identical across runs.
std::string emit_dot(const AttachPoset& poset);

}  // namespace steengrass
