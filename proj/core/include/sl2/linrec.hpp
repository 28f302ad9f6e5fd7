#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl2/errors.hpp"
#include "sl2/numeric.hpp"

namespace sl2 {

using QVec = std::vector<Rational>;

/// Dense matrix over exact rationals.
class QMat {
  public:
    QMat() = default;
    QMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static QMat identity(std::size_t n);
    static QMat kronecker(const QMat& a, const QMat& b);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QMat operator*(const QMat& o) const;
    QMat transpose() const;
    Rational trace() const;
    bool operator==(const QMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

// Coefficients of det(tI - M), index i holding the coefficient of t^i
// (monic, length dim+1). Faddeev-LeVerrier, exact.
QVec char_poly(const QMat& m);

/**
 * Linear representation of a sequence: term(n) = lambda * M^n * gamma over
 * exact rationals.
 */
struct LinearRep {
    QVec lambda;
    QMat m;
    QVec gamma;
    // Every entry is a nonnegative integer; such representations witness
    // N-rationality by construction.
    bool nonnegative = false;

    std::size_t dim() const { return lambda.size(); }
    Rational term(long long n) const;
    QVec terms(std::size_t count) const;
    void refresh_nonnegative();
};

LinearRep make_rep(QVec lambda, QMat m, QVec gamma);

/// a_{n+d} = coeffs[0] a_{n+d-1} + ... + coeffs[d-1] a_n.
struct Recursion {
    QVec coeffs;
    QVec initial;

    std::size_t order() const { return coeffs.size(); }
    bool satisfied_by(const QVec& terms) const;
};

// Minimal-order recursion (order <= max_order) fitting all supplied terms,
// found by exact elimination and verified against every term; nullopt when
// no recursion of such order exists. Needs at least 2*max_order + 2 terms.
std::optional<Recursion> guess_recursion(const QVec& terms, std::size_t max_order);

// Recursion induced by the characteristic polynomial of the representation
// matrix (Cayley-Hamilton).
Recursion char_recursion(const LinearRep& rep);

// Interlacing: term(i + n*p) = reps[i].term(n).
LinearRep merge(const std::vector<LinearRep>& reps);

// Termwise product via the Kronecker construction; dimensions multiply.
LinearRep hadamard(const LinearRep& a, const LinearRep& b);

/// Finite directed multigraph for path counting.
struct Digraph {
    std::vector<std::string> vertices;
    std::vector<std::vector<long>> arcs; // arcs[u][v] = multiplicity

    std::size_t index_of(const std::string& name) const;
};

// Rep counting length-n paths from v0 to any final vertex: M is the
// adjacency matrix, lambda the indicator of v0, gamma of the finals.
LinearRep digraph_path_counter(const Digraph& g, const std::string& v0,
                               const std::vector<std::string>& finals);

} // namespace sl2
