#pragma once

#include "steengrass/partition.hpp"

#include <map>
#include <string>
#include <vector>

namespace steengrass {

enum class Basis { monomial, elementary, homogeneous, power, schur };

char basis_code(Basis b);
Basis basis_from_code(char c);

/// Exact linear combination of basis elements indexed by partitions.
/// Zero coefficients are never stored.
class SymElem {
public:
    SymElem() : basis_(Basis::power) {}
    explicit SymElem(Basis b) : basis_(b) {}

    static SymElem zero(Basis b) { return SymElem(b); }
    static SymElem one(Basis b);
    /// The basis element indexed by `p` (e.g. s_p, m_p, ...).
    static SymElem generator(Basis b, const Partition& p);

    Basis basis() const { return basis_; }
    const std::map<Partition, Rat>& terms() const { return terms_; }
    Rat coeff(const Partition& p) const;
    bool is_zero() const { return terms_.empty(); }
    /// Maximal weight of an indexing partition (0 for the zero element).
    int degree() const;
    bool is_homogeneous() const;
    SymElem homogeneous_component(int d) const;
    bool integral() const;

    void set_coeff(const Partition& p, const Rat& c);
    void add_term(const Partition& p, const Rat& c);

    SymElem& operator+=(const SymElem& other);
    SymElem& operator-=(const SymElem& other);
    SymElem& operator*=(const Rat& scalar);
    friend SymElem operator+(SymElem a, const SymElem& b) { return a += b; }
    friend SymElem operator-(SymElem a, const SymElem& b) { return a -= b; }
    friend SymElem operator*(SymElem a, const Rat& c) { return a *= c; }
    friend bool operator==(const SymElem&, const SymElem&) = default;

    std::string to_string() const;

private:
    Basis basis_;
    std::map<Partition, Rat> terms_;
};

/// Degree cap for conversions and products. Defaults to 40; override with the
/// STEENGRASS_DEGREE_CAP environment variable.
int degree_cap();

/// Re-express in another basis. Exact; throws past the degree cap.
SymElem convert(const SymElem& f, Basis target);

SymElem multiply(const SymElem& f, const SymElem& g);

/// Hammond operator f^perp applied to g (adjoint of multiplication by f
/// under <m_lambda, h_mu> = delta).
SymElem hammond(const SymElem& f, const SymElem& g);

/// p_k * f on the Schur basis via border strips; agrees with multiply.
SymElem mn_multiply(int k, const SymElem& f);

/// Skew Schur function of the shape, expanded in the Schur basis.
SymElem skew_schur(const SkewShape& shape);

/// Principal specialization ps^1_n: p_k -> n, extended to negative n via the
/// antipode.
Rat principal_spec(const SymElem& f, long n);

/// prod over boxes b of lambda of (n - c(b)) / h(b); equals ps^1_n(s_{lambda'}).
Rat hook_content_spec(const Partition& lambda, long n);

/// ps^1_n(s_{outer/inner}) via the Jacobi-Trudi determinant; exact for any
/// integer n and cheap even for large shapes.
Rat principal_spec_skew(const Partition& outer, const Partition& inner, long n);

/// Hopf antipode: p_k -> -p_k as an algebra map; S(h_n) = (-1)^n e_n.
SymElem antipode(const SymElem& f);

/// Hall pairing <f, g> with <p_lambda, p_mu> = z_lambda delta.
Rat pairing(const SymElem& f, const SymElem& g);

/// Comultiplication delta(f) in Sym x Sym, in the power basis on both legs.
using TensorSym = std::map<std::pair<Partition, Partition>, Rat>;
TensorSym comult(const SymElem& f);

/// Number of semistandard tableaux of the given shape and content.
Int kostka_number(const Partition& shape, const Partition& content);

/// Irreducible symmetric group character chi^lambda(mu).
Int sym_character(const Partition& lambda, const Partition& mu);

/// Truncation of a symmetric function to finitely many variables.
struct PolyOracle {
    int nvars = 0;
    std::map<std::vector<int>, Rat> terms;  // exponent vector -> coefficient

    bool is_zero() const { return terms.empty(); }
    int degree() const;
    void add_term(const std::vector<int>& expo, const Rat& c);
    friend bool operator==(const PolyOracle&, const PolyOracle&) = default;
};

PolyOracle to_oracle(const SymElem& f, int nvars);
/// Inverse of to_oracle; throws if the polynomial is not symmetric.
SymElem from_oracle(const PolyOracle& p);
PolyOracle oracle_multiply(const PolyOracle& a, const PolyOracle& b);

}  // namespace steengrass
