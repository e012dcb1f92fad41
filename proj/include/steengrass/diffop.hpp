#pragma once

#include "steengrass/symfunc.hpp"

#include <map>
#include <string>
#include <vector>

namespace steengrass {

/// Integer combination sum c_lambda D_lambda of basis differential operators.
/// D_{} acts as the identity; D_lambda raises degree by |lambda|.
class DiffOp {
public:
    DiffOp() = default;
    static DiffOp identity();
    static DiffOp basis(const Partition& lambda);
    /// D_k, shorthand for basis({k}).
    static DiffOp d(int k);

    const std::map<Partition, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Partition& lambda, const Int& c);
    DiffOp& operator+=(const DiffOp& other);
    DiffOp& operator*=(const Int& scalar);
    friend bool operator==(const DiffOp&, const DiffOp&) = default;

    std::string to_string() const;

private:
    std::map<Partition, Int> terms_;
};

/// Left action on symmetric functions, computed in the power basis from
/// D_lambda p_n = n!/(||lambda|| (n-l)!) p_{n+|lambda|} (zero for l > n)
/// and the Cartan formula over the union coproduct. Result keeps f's basis.
SymElem apply_sym(const DiffOp& op, const SymElem& f);

/// Right (adjoint) action D^perp; lowers degree by |lambda| per term.
SymElem apply_perp(const DiffOp& op, const SymElem& f);

/// Literal differential-operator action on a truncated polynomial:
/// D_lambda = (1/||lambda||) sum over index tuples of x^{lambda+1} d.
PolyOracle apply_oracle(const DiffOp& op, const PolyOracle& p);

/// (D_k compose D_l - D_l compose D_k)(probe); equals (l-k) D_{k+l} probe.
SymElem lie_bracket(int k, int l, const SymElem& probe);

/// One stage of a lazily composed operator pipeline.
struct OpStage {
    enum class Kind { basis_combo, strip_power };
    Kind kind = Kind::basis_combo;
    DiffOp op;           // basis_combo
    int k = 0, n = 0;    // strip_power: D_{(k^n)}
    long modulus = 0;    // 0 = integral; >0 = reduce mod p at the end
    bool needs_prime = false;  // P^n written without @p
    std::string name;
};

/// Ordered composition of operators, applied right-to-left and never expanded
/// into the D_lambda basis.
struct OpPipeline {
    std::vector<OpStage> stages;

    /// Parses e.g. "D[2,1]", "SQ^3", "P^2@5", "Sq^4", "SQ^2*SQ^1".
    static OpPipeline parse(const std::string& text);

    /// Common modulus implied by the stages (0 = integral); throws when two
    /// stages disagree. `fill_prime` resolves P^n stages written without @p.
    long modulus() const;
    void fill_prime(long p);
    /// Total degree raised by the pipeline.
    int degree() const;

    /// Integral application in the power-basis route; reduction mod p is the
    /// caller's job (reduction never happens mid-pipeline).
    SymElem apply(const SymElem& f) const;

    std::string to_string() const;
};

/// D_{(k^n)} as a single-stage pipeline; its application uses the recursion
/// n D_{(k^n)} = sum_i (-k-1)^{i-1} D_{ik} D_{(k^{n-i})}, asserting that every
/// division by n is exact.
OpPipeline d_power(int k, int n);

/// Evaluate D_{(k^n)} f by the recursion above, with D_{ik} acting through
/// `apply_sym`. The exactness of each division is checked in the Schur basis.
SymElem apply_strip_power(int k, int n, const SymElem& f);

/// Named Steenrod operations: SQ^n (integral), P^n at an odd-or-even prime p,
/// Sq^m for even m (equal to SQ^{m/2} mod 2). A positive modulus reduces the
/// integral result mod p.
SymElem steenrod(const std::string& name, const SymElem& f, long modulus = 0);

/// Reduce an integral element mod p, coefficients canonical in [0, p).
SymElem reduce_mod(const SymElem& f, long p);

/// Polynomial in the generators b_1, b_2, ... of the dual algebra D_*,
/// with integer coefficients; monomial b_lambda has degree |lambda|.
struct BSeries {
    std::map<Partition, Int> terms;

    static BSeries one();
    static BSeries gen(int k);  // b_k (b_0 = 1)
    bool is_zero() const { return terms.empty(); }
    void add_term(const Partition& p, const Int& c);
    BSeries& operator+=(const BSeries& other);
    BSeries operator*(const BSeries& other) const;
    BSeries& operator*=(const Int& c);
    friend bool operator==(const BSeries&, const BSeries&) = default;
    std::string to_string() const;
};

using TensorB = std::map<std::pair<Partition, Partition>, Int>;

/// Delta(b_k) = sum_{i=0}^k (b)^{i+1}_{k-i} x b_i.
TensorB comult_b(int k);
/// Antipode by Lagrange inversion: S(b_k) = [t^k] (t/b(t))^{k+1} / (k+1).
BSeries antipode_b(int k);
/// Coefficients of b_lambda x h_k in the coaction of D_* on h_n.
std::map<std::pair<Partition, int>, Int> coaction_h(int n);

/// Composition sum_k Delta(b_k) t^{k+1} computed as b2(b1(t)); used to check
/// the closed comultiplication formula.
std::vector<TensorB> comult_b_by_composition(int max_k);

/// Coefficients of b(S(b))(t) up to t^{max_k+1}; the identity says this is t.
std::vector<BSeries> b_of_antipode_series(int max_k);

}  // namespace steengrass
