#include "graphjoin/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "graphjoin/errors.hpp"

namespace graphjoin {

RMatrix identity_matrix(int n) {
    RMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RMatrix stack_rows(const RMatrix& top, const RMatrix& bottom) {
    if (top.cols() != bottom.cols() && top.rows() != 0 && bottom.rows() != 0) {
        throw Error(ErrorCode::ShapeError, "stack_rows: column mismatch");
    }
    const int cols = top.rows() != 0 ? top.cols() : bottom.cols();
    RMatrix out(top.rows() + bottom.rows(), cols);
    for (int i = 0; i < top.rows(); ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = top.at(i, j);
    for (int i = 0; i < bottom.rows(); ++i)
        for (int j = 0; j < cols; ++j) out.at(top.rows() + i, j) = bottom.at(i, j);
    return out;
}

RMatrix matmul(const RMatrix& a, const RMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeError, "matmul: inner dim mismatch");
    RMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b.at(k, j) == 0) continue;
                out.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    }
    return out;
}

RrefResult rref(const RMatrix& m) {
    RrefResult result{m, {}};
    RMatrix& a = result.matrix;
    int pivot_row = 0;
    for (int col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        int sel = -1;
        for (int i = pivot_row; i < a.rows(); ++i) {
            if (a.at(i, col) != 0) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != pivot_row) {
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(pivot_row, j));
        }
        const Rational inv = Rational(1) / a.at(pivot_row, col);
        for (int j = col; j < a.cols(); ++j) a.at(pivot_row, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == pivot_row || a.at(i, col) == 0) continue;
            const Rational factor = a.at(i, col);
            for (int j = col; j < a.cols(); ++j) a.at(i, j) -= factor * a.at(pivot_row, j);
        }
        result.pivot_cols.push_back(col);
        ++pivot_row;
    }
    return result;
}

int rank(const RMatrix& m) {
    return static_cast<int>(rref(m).pivot_cols.size());
}

int rank_stacked(const RrefResult& base_rref, const RMatrix& extra) {
    if (extra.rows() == 0) return static_cast<int>(base_rref.pivot_cols.size());
    if (base_rref.matrix.rows() > 0 && base_rref.matrix.cols() != extra.cols()) {
        throw Error(ErrorCode::ShapeError, "rank_stacked: column mismatch");
    }
    // Reduce each extra row against the rref of the base, then count how many
    // independent residuals remain.
    const RMatrix& base = base_rref.matrix;
    const auto& pivots = base_rref.pivot_cols;
    RMatrix residuals(extra.rows(), extra.cols());
    for (int i = 0; i < extra.rows(); ++i) {
        std::vector<Rational> row(extra.cols());
        for (int j = 0; j < extra.cols(); ++j) row[j] = extra.at(i, j);
        for (std::size_t p = 0; p < pivots.size(); ++p) {
            const int col = pivots[p];
            if (row[col] == 0) continue;
            const Rational factor = row[col];
            for (int j = 0; j < extra.cols(); ++j) {
                if (base.at(static_cast<int>(p), j) == 0) continue;
                row[j] -= factor * base.at(static_cast<int>(p), j);
            }
        }
        for (int j = 0; j < extra.cols(); ++j) residuals.at(i, j) = row[j];
    }
    return static_cast<int>(base_rref.pivot_cols.size()) + rank(residuals);
}

std::vector<std::vector<Rational>> null_space(const RMatrix& m) {
    const RrefResult r = rref(m);
    const int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int col : r.pivot_cols) is_pivot[col] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[free_col] = 1;
        for (std::size_t p = 0; p < r.pivot_cols.size(); ++p) {
            v[r.pivot_cols[p]] = -r.matrix.at(static_cast<int>(p), free_col);
        }
        basis.push_back(std::move(v));
    }
    assert(static_cast<int>(basis.size()) == n - static_cast<int>(r.pivot_cols.size()));
    return basis;
}

RPoly::RPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RPoly RPoly::monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> c = coeffs_;
    const Rational lead = c.back();
    for (auto& x : c) x /= lead;
    return RPoly(std::move(c));
}

std::string to_string(const RPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = p.degree(); d >= 0; --d) {
        const Rational& c = p.coeff(d);
        if (c == 0) continue;
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const bool unit = (mag == 1) && d > 0;
        if (!unit) out << to_string(mag);
        if (d > 0) {
            if (!unit) out << "*";
            out << "x";
            if (d > 1) out << "^" << d;
        }
    }
    return out.str();
}

RPoly poly_add(const RPoly& a, const RPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeff(static_cast<int>(i));
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b.coeff(static_cast<int>(i));
    return RPoly(std::move(c));
}

RPoly poly_scale(const RPoly& a, const Rational& s) {
    if (s == 0) return RPoly::zero();
    std::vector<Rational> c = a.coeffs();
    for (auto& x : c) x *= s;
    return RPoly(std::move(c));
}

RPoly poly_mul(const RPoly& a, const RPoly& b) {
    if (a.is_zero() || b.is_zero()) return RPoly::zero();
    std::vector<Rational> c(a.coeffs().size() + b.coeffs().size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeff(static_cast<int>(i)) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            c[i + j] += a.coeff(static_cast<int>(i)) * b.coeff(static_cast<int>(j));
        }
    }
    return RPoly(std::move(c));
}

std::pair<RPoly, RPoly> poly_divmod(const RPoly& a, const RPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::ShapeError, "poly_divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {RPoly::zero(), a};
    std::vector<Rational> rem = a.coeffs();
    std::vector<Rational> quot(a.degree() - b.degree() + 1, Rational(0));
    const Rational lead = b.leading();
    for (int d = a.degree(); d >= b.degree(); --d) {
        const Rational coeff = rem[d] / lead;
        if (coeff == 0) continue;
        quot[d - b.degree()] = coeff;
        for (int i = 0; i <= b.degree(); ++i) {
            rem[d - b.degree() + i] -= coeff * b.coeff(i);
        }
    }
    return {RPoly(std::move(quot)), RPoly(std::move(rem))};
}

RPoly char_poly(const RMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeError, "char_poly: non-square matrix");
    const int n = m.rows();
    // Faddeev-LeVerrier: c_n = 1 and M_{k+1} = A M_k + c_{n-k} I,
    // c_{n-k-1} = -trace(A M_{k+1})/(k+1).
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[n] = 1;
    RMatrix mk(n, n);  // M_0 = 0
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i) mk.at(i, i) += coeffs[n - k + 1];
        mk = matmul(m, mk);
        Rational trace(0);
        for (int i = 0; i < n; ++i) trace += mk.at(i, i);
        coeffs[n - k] = -trace / k;
    }
    return RPoly(std::move(coeffs));
}

RPoly poly_gcd(const RPoly& a, const RPoly& b) {
    if (a.is_zero() && b.is_zero()) {
        throw Error(ErrorCode::UndefinedGcd, "gcd of two zero polynomials");
    }
    RPoly x = a, y = b;
    while (!y.is_zero()) {
        RPoly r = poly_divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

Rational eval_poly(const RPoly& p, const Rational& x) {
    Rational acc(0);
    for (int d = p.degree(); d >= 0; --d) acc = acc * x + p.coeff(d);
    return acc;
}

std::vector<std::pair<Rational, int>> rational_roots(const RPoly& p) {
    if (p.is_zero()) throw Error(ErrorCode::ShapeError, "rational_roots: zero polynomial");
    std::vector<std::pair<Rational, int>> roots;
    RPoly cur = p;

    // Strip x^k factors first: they contribute the root 0.
    int zero_mult = 0;
    while (!cur.is_zero() && cur.coeff(0) == 0) {
        std::vector<Rational> shifted(cur.coeffs().begin() + 1, cur.coeffs().end());
        cur = RPoly(std::move(shifted));
        ++zero_mult;
    }
    if (zero_mult > 0) roots.push_back({Rational(0), zero_mult});

    while (cur.degree() >= 1) {
        // Primitive integer form: clear denominators, then candidates are
        // +- (divisor of constant term) / (divisor of leading term).
        mpz_class denom_lcm(1);
        for (const auto& c : cur.coeffs()) {
            mpz_class d = c.get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), denom_lcm.get_mpz_t(), d.get_mpz_t());
            denom_lcm = denom_lcm / g * d;
        }
        std::vector<mpz_class> icoeffs;
        for (const auto& c : cur.coeffs()) {
            Rational scaled = c * Rational(denom_lcm);
            icoeffs.push_back(scaled.get_num());
        }
        mpz_class a0 = icoeffs.front();
        mpz_class an = icoeffs.back();
        if (a0 < 0) a0 = -a0;
        if (an < 0) an = -an;

        auto divisors = [](const mpz_class& value) {
            std::vector<mpz_class> divs;
            for (mpz_class d = 1; d * d <= value; ++d) {
                if (value % d == 0) {
                    divs.push_back(d);
                    divs.push_back(value / d);
                }
            }
            return divs;
        };

        bool found = false;
        Rational root;
        for (const mpz_class& num : divisors(a0)) {
            for (const mpz_class& den : divisors(an)) {
                for (int sign = 1; sign >= -1; sign -= 2) {
                    Rational cand(sign * num, den);
                    cand.canonicalize();
                    if (eval_poly(cur, cand) == 0) {
                        root = cand;
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;

        int mult = 0;
        const RPoly linear({-root, Rational(1)});
        while (true) {
            auto [q, r] = poly_divmod(cur, linear);
            if (!r.is_zero()) break;
            cur = q;
            ++mult;
        }
        roots.push_back({root, mult});
    }

    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

}  // namespace graphjoin
