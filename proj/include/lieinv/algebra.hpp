#ifndef LIEINV_ALGEBRA_HPP
#define LIEINV_ALGEBRA_HPP

#include "lieinv/linear.hpp"

#include <map>
#include <string>
#include <vector>

namespace lieinv {

/// Domain error with a stable machine-readable code.
class LieInvError : public std::runtime_error {
public:
    LieInvError(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

enum class AlgKind { lie, jordan, raw };

std::string kind_name(AlgKind k);
AlgKind kind_from_name(const std::string& s);

/// Structure constants c^k_{ij} of an n-dimensional algebra over Q(i):
/// e_i * e_j = sum_k c[i][j][k] e_k.
class StructureConstants {
public:
    StructureConstants() = default;
    StructureConstants(int dim, AlgKind kind, std::vector<std::string> basis_labels = {},
                       std::string name = {});

    int dim() const { return dim_; }
    AlgKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    const std::vector<std::string>& basis() const { return basis_; }

    const Scalar& at(int i, int j, int k) const { return c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k]; }
    Scalar& at(int i, int j, int k) { return c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k]; }

    /// Product of two coordinate vectors.
    std::vector<Scalar> product(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

    /// Matrix of ad(e_i) (lie) resp. left multiplication by e_i.
    ScalarMatrix left_mult_matrix(int i) const;

    bool operator==(const StructureConstants& o) const {
        return dim_ == o.dim_ && kind_ == o.kind_ && c_ == o.c_;
    }

    /// Nonzero products rendered as bracket strings, e.g. "[e1,e3] = e1+2*e2"
    /// (i<j only for lie, i<=j for jordan/raw).
    std::vector<std::string> bracket_strings() const;

private:
    int dim_ = 0;
    AlgKind kind_ = AlgKind::raw;
    std::string name_;
    std::vector<std::string> basis_;
    std::vector<Scalar> c_;
};

struct Violation {
    std::string law; // "antisymmetry", "symmetry", "jacobi", "jordan"
    std::vector<int> index;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the defining identities of the tagged kind; raw always passes.
ValidationReport validate(const StructureConstants& sc);

using BracketRelation = std::tuple<std::string, std::string, std::string>;

/// Build a tensor from bracket relations; unspecified products are zero,
/// lie brackets are antisymmetrized and jordan products symmetrized.
StructureConstants from_brackets(int dim, const std::vector<std::string>& basis_labels,
                                 const std::vector<BracketRelation>& relations, AlgKind kind,
                                 const std::map<std::string, Scalar>& params = {},
                                 const std::string& name = {});

/// Structure constants of the isomorphic algebra with new basis f(e_i) where
/// f(e_i) = sum_r g[r][i] e_r; g must be invertible.
StructureConstants change_basis(const StructureConstants& sc, const ScalarMatrix& g);

StructureConstants direct_sum(const StructureConstants& a, const StructureConstants& b);

/// Inverse of a square Scalar matrix; throws SingularMatrix.
ScalarMatrix matrix_inverse(const ScalarMatrix& g);

ScalarMatrix matrix_product(const ScalarMatrix& a, const ScalarMatrix& b);

/// Basis of n x n matrices spanning a solution space.
struct OperatorSpace {
    int dim_ambient = 0;
    std::vector<ScalarMatrix> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

enum class OperatorProduct { commutator, anticommutator };

/// Structure constants of the operator algebra when the span is closed under
/// the chosen product; throws NotClosed with a witness pair otherwise.
StructureConstants operator_space_algebra(const OperatorSpace& os, OperatorProduct product);

/// Evaluate a coefficient expression (rationals, i, parameters, + - * / ^)
/// to a Scalar.
Scalar eval_scalar_expr(const std::string& text, const std::map<std::string, Scalar>& params);

} // namespace lieinv

#endif
