#include "msrcert/rational.hpp"

#include <stdexcept>

#include "msrcert/errors.hpp"

namespace msrcert {

Rational rational_from(long num, long den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InputError("empty rational");
    mpq_class r;
    if (r.set_str(text, 10) != 0) throw InputError("invalid rational '" + text + "'");
    if (r.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) {
    return value.get_str();
}

Rational inner_product(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw PreconditionError("inner product: dimension mismatch");
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

bool is_zero_vector(const RationalVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

bool scalar_multiples(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw PreconditionError("dependence check: dimension mismatch");
    if (is_zero_vector(a) || is_zero_vector(b)) return true;
    // a || b  iff all 2x2 minors vanish.
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

void scale_to_primitive(RationalVector& v) {
    if (is_zero_vector(v)) return;
    mpz_class lcm_den = 1;
    for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
    mpz_class content = 0;
    std::vector<mpz_class> nums;
    nums.reserve(v.size());
    for (const auto& x : v) {
        mpz_class num = x.get_num() * (lcm_den / x.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
        nums.push_back(std::move(num));
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = Rational(nums[i] / content);
    }
}

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw PreconditionError("matrix with negative shape");
    cells_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

int rank(RationalMatrix m) {
    int r = 0;
    for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
        int pivot = -1;
        for (int row = r; row < m.rows(); ++row) {
            if (m.at(row, col) != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot == -1) continue;
        if (pivot != r)
            for (int c = col; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(r, c));
        for (int row = r + 1; row < m.rows(); ++row) {
            if (m.at(row, col) == 0) continue;
            Rational factor = m.at(row, col) / m.at(r, col);
            for (int c = col; c < m.cols(); ++c) m.at(row, c) -= factor * m.at(r, c);
        }
        ++r;
    }
    return r;
}

std::vector<RationalVector> nullspace_basis(RationalMatrix m) {
    const int rows = m.rows();
    const int cols = m.cols();
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pivot = -1;
        for (int row = r; row < rows; ++row) {
            if (m.at(row, col) != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot == -1) continue;
        if (pivot != r)
            for (int c = 0; c < cols; ++c) std::swap(m.at(pivot, c), m.at(r, c));
        Rational inv = m.at(r, col);
        for (int c = 0; c < cols; ++c) m.at(r, c) /= inv;
        for (int row = 0; row < rows; ++row) {
            if (row == r || m.at(row, col) == 0) continue;
            Rational factor = m.at(row, col);
            for (int c = 0; c < cols; ++c) m.at(row, c) -= factor * m.at(r, c);
        }
        pivot_col.push_back(col);
        ++r;
    }

    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<RationalVector> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        RationalVector x(static_cast<std::size_t>(cols), Rational(0));
        x[static_cast<std::size_t>(free)] = 1;
        for (int row = 0; row < r; ++row)
            x[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(row)])] = -m.at(row, free);
        scale_to_primitive(x);
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace msrcert
