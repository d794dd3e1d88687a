#pragma once

#include <utility>
#include <vector>

#include "graphjoin/rational.hpp"

namespace graphjoin {

// Dense exact rational matrix, row-major.
class RMatrix {
  public:
    RMatrix() : rows_(0), cols_(0) {}
    RMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return data_[i * cols_ + j]; }
    const Rational& at(int i, int j) const { return data_[i * cols_ + j]; }

    bool operator==(const RMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

  private:
    int rows_, cols_;
    std::vector<Rational> data_;
};

RMatrix identity_matrix(int n);
RMatrix stack_rows(const RMatrix& top, const RMatrix& bottom);
RMatrix matmul(const RMatrix& a, const RMatrix& b);

struct RrefResult {
    RMatrix matrix;
    std::vector<int> pivot_cols;
};

// Fraction-exact Gauss-Jordan reduction.
RrefResult rref(const RMatrix& m);

int rank(const RMatrix& m);

// Rank of [base; extra] computed incrementally against an existing reduction
// of base. Equivalent to rank(stack_rows(base, extra)).
int rank_stacked(const RrefResult& base_rref, const RMatrix& extra);

// Basis of {v : m v = 0} with the standard free-variable parameterization:
// one vector per free column, with a 1 in that column. Asserts rank-nullity.
std::vector<std::vector<Rational>> null_space(const RMatrix& m);

// Univariate polynomial with exact rational coefficients, ascending degree.
// Zero polynomial is represented by an empty coefficient list.
class RPoly {
  public:
    RPoly() = default;
    explicit RPoly(std::vector<Rational> coeffs);

    static RPoly zero() { return RPoly(); }
    static RPoly constant(const Rational& c) { return RPoly({c}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(int i) const { return coeffs_[i]; }
    const Rational& leading() const { return coeffs_.back(); }

    RPoly monic() const;
    bool operator==(const RPoly& other) const { return coeffs_ == other.coeffs_; }

  private:
    std::vector<Rational> coeffs_;
};

std::string to_string(const RPoly& p);

RPoly poly_add(const RPoly& a, const RPoly& b);
RPoly poly_scale(const RPoly& a, const Rational& s);
RPoly poly_mul(const RPoly& a, const RPoly& b);

// Quotient and remainder of a / b; throws Error(UndefinedGcd) never, but
// division by the zero polynomial is a ShapeError.
std::pair<RPoly, RPoly> poly_divmod(const RPoly& a, const RPoly& b);

// Monic characteristic polynomial det(xI - m) via Faddeev-LeVerrier.
RPoly char_poly(const RMatrix& m);

// Monic gcd via the Euclidean algorithm; both inputs zero -> UndefinedGcd.
RPoly poly_gcd(const RPoly& a, const RPoly& b);

Rational eval_poly(const RPoly& p, const Rational& x);

// All rational roots with multiplicities, sorted ascending, found by the
// rational root theorem on the primitive integer form plus exact deflation.
std::vector<std::pair<Rational, int>> rational_roots(const RPoly& p);

}  // namespace graphjoin
