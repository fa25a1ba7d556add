#include "rational.hpp"

#include <cstdlib>

#include "error.hpp"

namespace difftan {

Rational rat(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rat_from_string(const std::string& token) {
    if (token.empty()) {
        throw Error(ErrorKind::Parse, "empty rational literal");
    }
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
        }
        return true;
    };
    std::string num = token;
    std::string den = "1";
    if (auto slash = token.find('/'); slash != std::string::npos) {
        num = token.substr(0, slash);
        den = token.substr(slash + 1);
    }
    if (!is_int(num) || !is_int(den) || den[0] == '-') {
        throw Error(ErrorKind::Parse, "bad rational literal '" + token + "'");
    }
    mpz_class n(num), d(den);
    if (d == 0) {
        throw Error(ErrorKind::Parse, "zero denominator in '" + token + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rational& value) {
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

std::vector<Rational> Matrix::column(int c) const {
    std::vector<Rational> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
    std::vector<Rational> out(rows_, Rational(0));
    for (int i = 0; i < rows_; ++i) {
        Rational acc(0);
        for (int j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_) {
        if (e != 0) return false;
    }
    return true;
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

std::string Matrix::to_string() const {
    if (rows_ == 0 || cols_ == 0) return "[]";
    std::string out = "[";
    for (int i = 0; i < rows_; ++i) {
        out += (i == 0) ? "[" : ",[";
        for (int j = 0; j < cols_; ++j) {
            if (j > 0) out += ",";
            out += rat_to_string(at(i, j));
        }
        out += "]";
    }
    out += "]";
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                m.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return m;
}

RrefResult rref(const Matrix& m) {
    RrefResult result;
    Matrix work = m;
    int next_row = 0;
    for (int col = 0; col < work.cols() && next_row < work.rows(); ++col) {
        int pivot = -1;
        for (int r = next_row; r < work.rows(); ++r) {
            if (work.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != next_row) {
            for (int j = 0; j < work.cols(); ++j) std::swap(work.at(pivot, j), work.at(next_row, j));
        }
        Rational inv = 1 / work.at(next_row, col);
        for (int j = col; j < work.cols(); ++j) work.at(next_row, j) *= inv;
        for (int r = 0; r < work.rows(); ++r) {
            if (r == next_row) continue;
            const Rational factor = work.at(r, col);
            if (factor == 0) continue;
            for (int j = col; j < work.cols(); ++j) {
                work.at(r, j) -= factor * work.at(next_row, j);
            }
        }
        result.pivot_cols.push_back(col);
        ++next_row;
    }
    result.rank = next_row;
    result.reduced = Matrix(next_row, work.cols());
    for (int r = 0; r < next_row; ++r)
        for (int j = 0; j < work.cols(); ++j) result.reduced.at(r, j) = work.at(r, j);
    return result;
}

int rank(const Matrix& m) {
    return rref(m).rank;
}

std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b) {
    Matrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    RrefResult red = rref(aug);
    std::vector<Rational> x(a.cols(), Rational(0));
    for (int r = 0; r < red.rank; ++r) {
        int p = red.pivot_cols[r];
        if (p == a.cols()) return std::nullopt; // pivot in the augmented column
        x[p] = red.reduced.at(r, a.cols());
    }
    return x;
}

bool in_column_span(const Matrix& a, const std::vector<Rational>& v) {
    return solve(a, v).has_value();
}

std::vector<std::vector<Rational>> null_space_basis(const Matrix& m) {
    RrefResult red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : red.pivot_cols) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free] = 1;
        for (int r = 0; r < red.rank; ++r) {
            v[red.pivot_cols[r]] = -red.reduced.at(r, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool all_zero(const std::vector<Rational>& v) {
    for (const auto& e : v) {
        if (e != 0) return false;
    }
    return true;
}

std::string vec_to_string(const std::vector<Rational>& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ",";
        out += rat_to_string(v[i]);
    }
    out += "]";
    return out;
}

} // namespace difftan
