#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace difftan {

// Exact scalars. All rank and membership decisions in the engine are made
// over the rationals; floating point never enters.
using Rational = mpq_class;

Rational rat(long num, long den = 1);

// Accepts "int" or "int/int" with an optional leading minus; denominator > 0.
Rational rat_from_string(const std::string& token);

// "n" when the denominator is 1, otherwise "n/d" with d > 0.
std::string rat_to_string(const Rational& value);

// Dense rational matrix, row-major. Zero-row or zero-column matrices are
// legal; they carry the Jacobians of morphisms touching dimension-0 objects.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, Rational(0)) {}

    static Matrix identity(int n);
    static Matrix block_diag(const Matrix& a, const Matrix& b);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }

    std::vector<Rational> column(int c) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const; // this * v

    bool is_zero() const;
    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    // Canonical text: [[a,b],[c,d]]; [] when either extent is zero.
    std::string to_string() const;

private:
    int rows_;
    int cols_;
    std::vector<Rational> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

// Reduced row echelon form with the deterministic pivot rule: sweep columns
// left to right, take the first remaining row with a nonzero entry. The rule
// is part of the output contract (projection matrices are golden-tested).
struct RrefResult {
    Matrix reduced;              // nonzero rows only, in pivot order
    std::vector<int> pivot_cols; // ascending
    int rank = 0;
};

RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

// One particular solution of a x = b with free variables set to zero,
// or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b);

bool in_column_span(const Matrix& a, const std::vector<Rational>& v);

// Basis of the right null space, one vector per free column, deterministic.
std::vector<std::vector<Rational>> null_space_basis(const Matrix& m);

bool all_zero(const std::vector<Rational>& v);

std::string vec_to_string(const std::vector<Rational>& v);

} // namespace difftan
