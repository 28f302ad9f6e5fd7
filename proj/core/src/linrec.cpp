#include "sl2/linrec.hpp"

#include <algorithm>

namespace sl2 {

QMat QMat::identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::kronecker(const QMat& a, const QMat& b) {
    QMat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
                }
            }
        }
    }
    return r;
}

QMat QMat::operator*(const QMat& o) const {
    if (cols_ != o.rows_) fail("ShapeMismatch", "matrix product shape mismatch");
    QMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                r.at(i, j) += at(i, k) * o.at(k, j);
            }
        }
    }
    return r;
}

QMat QMat::transpose() const {
    QMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    }
    return r;
}

Rational QMat::trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

QVec char_poly(const QMat& m) {
    if (m.rows() != m.cols()) fail("ShapeMismatch", "char_poly needs a square matrix");
    const std::size_t d = m.rows();
    QVec coef(d + 1, Rational(0));
    coef[d] = 1;
    QMat a = m;
    for (std::size_t k = 1; k <= d; ++k) {
        if (k > 1) {
            // a <- m * (a + c_{d-k+1} I)
            QMat shifted = a;
            for (std::size_t i = 0; i < d; ++i) shifted.at(i, i) += coef[d - k + 1];
            a = m * shifted;
        }
        coef[d - k] = -a.trace() / Rational(static_cast<long>(k));
    }
    return coef;
}

Rational LinearRep::term(long long n) const {
    if (n < 0) fail("BadIndex", "term index must be nonnegative");
    QVec row = lambda;
    for (long long i = 0; i < n; ++i) {
        QVec next(m.cols(), Rational(0));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (row[r] == 0) continue;
            for (std::size_t c = 0; c < m.cols(); ++c) {
                next[c] += row[r] * m.at(r, c);
            }
        }
        row = std::move(next);
    }
    Rational out = 0;
    for (std::size_t i = 0; i < row.size(); ++i) out += row[i] * gamma[i];
    return out;
}

QVec LinearRep::terms(std::size_t count) const {
    QVec out;
    out.reserve(count);
    QVec row = lambda;
    for (std::size_t n = 0; n < count; ++n) {
        Rational v = 0;
        for (std::size_t i = 0; i < row.size(); ++i) v += row[i] * gamma[i];
        out.push_back(v);
        QVec next(m.cols(), Rational(0));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (row[r] == 0) continue;
            for (std::size_t c = 0; c < m.cols(); ++c) {
                next[c] += row[r] * m.at(r, c);
            }
        }
        row = std::move(next);
    }
    return out;
}

void LinearRep::refresh_nonnegative() {
    const auto ok = [](const Rational& x) { return x >= 0 && is_integral(x); };
    nonnegative = std::all_of(lambda.begin(), lambda.end(), ok) &&
                  std::all_of(gamma.begin(), gamma.end(), ok);
    if (!nonnegative) return;
    for (std::size_t i = 0; i < m.rows() && nonnegative; ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!ok(m.at(i, j))) {
                nonnegative = false;
                break;
            }
        }
    }
}

LinearRep make_rep(QVec lambda, QMat m, QVec gamma) {
    if (lambda.size() != m.rows() || gamma.size() != m.cols() || m.rows() != m.cols()) {
        fail("ShapeMismatch", "linear representation shape mismatch");
    }
    if (lambda.empty()) fail("ShapeMismatch", "dimension must be at least 1");
    LinearRep rep{std::move(lambda), std::move(m), std::move(gamma)};
    rep.refresh_nonnegative();
    return rep;
}

bool Recursion::satisfied_by(const QVec& terms) const {
    const std::size_t d = order();
    for (std::size_t n = 0; n + d < terms.size(); ++n) {
        Rational acc = 0;
        for (std::size_t j = 0; j < d; ++j) acc += coeffs[j] * terms[n + d - 1 - j];
        if (acc != terms[n + d]) return false;
    }
    return true;
}

namespace {

// Particular solution of A x = rhs with free variables set to zero; nullopt
// when inconsistent.
std::optional<QVec> solve_exact(QMat a, QVec rhs) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a.at(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(pivot, j), a.at(r, j));
            std::swap(rhs[pivot], rhs[r]);
        }
        const Rational inv = a.at(r, c);
        for (std::size_t j = c; j < cols; ++j) a.at(r, j) /= inv;
        rhs[r] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            const Rational f = a.at(i, c);
            for (std::size_t j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i) {
        if (rhs[i] != 0) return std::nullopt;
    }
    QVec x(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
    return x;
}

} // namespace

std::optional<Recursion> guess_recursion(const QVec& terms, std::size_t max_order) {
    if (max_order < 1) fail("BadOrder", "max_order must be at least 1");
    if (terms.size() < 2 * max_order + 2) {
        fail("InsufficientTerms", "need at least " + std::to_string(2 * max_order + 2) +
                                      " terms, got " + std::to_string(terms.size()));
    }
    for (std::size_t d = 1; d <= max_order; ++d) {
        const std::size_t rows = terms.size() - d;
        QMat a(rows, d);
        QVec rhs(rows);
        for (std::size_t n = 0; n < rows; ++n) {
            for (std::size_t j = 0; j < d; ++j) a.at(n, j) = terms[n + d - 1 - j];
            rhs[n] = terms[n + d];
        }
        auto sol = solve_exact(std::move(a), std::move(rhs));
        if (!sol) continue;
        Recursion rec{*sol, QVec(terms.begin(), terms.begin() + static_cast<long>(d))};
        if (rec.satisfied_by(terms)) return rec;
    }
    return std::nullopt;
}

Recursion char_recursion(const LinearRep& rep) {
    const QVec coef = char_poly(rep.m);
    const std::size_t d = rep.dim();
    QVec alphas(d);
    for (std::size_t k = 1; k <= d; ++k) alphas[k - 1] = -coef[d - k];
    return Recursion{alphas, rep.terms(d)};
}

LinearRep merge(const std::vector<LinearRep>& reps) {
    if (reps.empty()) fail("BadInput", "merge needs at least one representation");
    const std::size_t p = reps.size();
    std::size_t total = 0;
    for (const auto& r : reps) total += p * r.dim();

    QVec lambda(total, Rational(0));
    QMat m(total, total);
    QVec gamma(total, Rational(0));
    std::size_t base = 0;
    for (std::size_t i = 0; i < p; ++i) {
        const std::size_t d = reps[i].dim();
        // Phase blocks rotate; the wrap-around edge applies the component map.
        for (std::size_t phase = 0; phase + 1 < p; ++phase) {
            for (std::size_t k = 0; k < d; ++k) {
                m.at(base + (phase + 1) * d + k, base + phase * d + k) = 1;
            }
        }
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                m.at(base + r, base + (p - 1) * d + c) = reps[i].m.at(r, c);
            }
        }
        for (std::size_t k = 0; k < d; ++k) {
            lambda[base + i * d + k] = reps[i].lambda[k];
            gamma[base + k] = reps[i].gamma[k];
        }
        base += p * d;
    }
    return make_rep(std::move(lambda), std::move(m), std::move(gamma));
}

LinearRep hadamard(const LinearRep& a, const LinearRep& b) {
    QVec lambda(a.dim() * b.dim());
    QVec gamma(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            lambda[i * b.dim() + j] = a.lambda[i] * b.lambda[j];
            gamma[i * b.dim() + j] = a.gamma[i] * b.gamma[j];
        }
    }
    return make_rep(std::move(lambda), QMat::kronecker(a.m, b.m), std::move(gamma));
}

std::size_t Digraph::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] == name) return i;
    }
    fail("UnknownVertex", "no vertex named '" + name + "'");
}

LinearRep digraph_path_counter(const Digraph& g, const std::string& v0,
                               const std::vector<std::string>& finals) {
    const std::size_t n = g.vertices.size();
    if (n == 0) fail("BadInput", "digraph must be nonempty");
    QVec lambda(n, Rational(0));
    lambda[g.index_of(v0)] = 1;
    QMat m(n, n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) m.at(u, v) = g.arcs[u][v];
    }
    QVec gamma(n, Rational(0));
    for (const auto& f : finals) gamma[g.index_of(f)] = 1;
    return make_rep(std::move(lambda), std::move(m), std::move(gamma));
}

} // namespace sl2
