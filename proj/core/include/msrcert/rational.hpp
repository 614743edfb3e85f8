#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace msrcert {

/// Exact arbitrary-precision rational. All certification arithmetic runs on
/// these: zero means zero, there is no tolerance anywhere.
using Rational = mpq_class;

/// Coordinates of one vertex vector; never the zero vector in a valid
/// representation, always in canonical reduced form.
using RationalVector = std::vector<Rational>;

Rational rational_from(long num, long den = 1);

/// Accepts "p" or "p/q"; rejects zero denominators and junk.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& value);

Rational inner_product(const RationalVector& a, const RationalVector& b);
bool is_zero_vector(const RationalVector& v);

/// True when one vector is an exact scalar multiple of the other
/// (zero vectors count as dependent on everything).
bool scalar_multiples(const RationalVector& a, const RationalVector& b);

/// Clears denominators and divides by the integer content, producing the
/// primitive integer vector spanning the same line. No-op on zero vectors.
void scale_to_primitive(RationalVector& v);

/// Dense row-major rational matrix, sized at construction.
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return cells_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return cells_[static_cast<std::size_t>(r) * cols_ + c]; }

private:
    int rows_;
    int cols_;
    std::vector<Rational> cells_;
};

/// Exact rank by Gaussian elimination; takes its argument by value because
/// elimination is destructive.
int rank(RationalMatrix m);

/// Basis of {x : constraints * x = 0}, one primitive integer vector per free
/// column of the reduced row echelon form. Size is cols - rank.
std::vector<RationalVector> nullspace_basis(RationalMatrix constraints);

} // namespace msrcert
