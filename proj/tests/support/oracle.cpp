#include "oracle.hpp"

#include <stdexcept>

namespace difftan::oracle {

namespace {

// Relation columns of F = ⊕ Q^dim(r), one per non-identity morphism and
// source basis vector, cleared to integers by the column's denominator lcm.
std::vector<std::vector<mpz_class>> integer_relation_columns(const TangentDiagram& d) {
    std::vector<int> offset(d.cat().object_count() + 1, 0);
    for (int i = 0; i < d.cat().object_count(); ++i) offset[i + 1] = offset[i] + d.dim(i);
    const int total = offset.back();

    std::vector<std::vector<mpz_class>> columns;
    for (int m = 0; m < d.cat().morphism_count(); ++m) {
        const Morphism& mor = d.cat().morphism(m);
        const Matrix& jac = d.declared_jac(m);
        for (int e = 0; e < d.dim(mor.src); ++e) {
            std::vector<Rational> column(total, Rational(0));
            column[offset[mor.src] + e] += 1;
            for (int r = 0; r < d.dim(mor.dst); ++r) {
                column[offset[mor.dst] + r] -= jac.at(r, e);
            }
            mpz_class lcm = 1;
            for (const auto& q : column) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
            std::vector<mpz_class> scaled(total);
            for (int i = 0; i < total; ++i) {
                scaled[i] = column[i].get_num() * (lcm / column[i].get_den());
            }
            columns.push_back(std::move(scaled));
        }
    }
    return columns;
}

std::vector<mpz_class> integer_flat_vector(const TangentDiagram& d, const FormalVector& w,
                                           int* out_total) {
    std::vector<int> offset(d.cat().object_count() + 1, 0);
    for (int i = 0; i < d.cat().object_count(); ++i) offset[i + 1] = offset[i] + d.dim(i);
    const int total = offset.back();
    *out_total = total;

    std::vector<Rational> flat(total, Rational(0));
    for (const auto& [obj, coords] : w.terms) {
        for (size_t i = 0; i < coords.size(); ++i) flat[offset[obj] + i] += coords[i];
    }
    mpz_class lcm = 1;
    for (const auto& q : flat) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> scaled(total);
    for (int i = 0; i < total; ++i) scaled[i] = flat[i].get_num() * (lcm / flat[i].get_den());
    return scaled;
}

} // namespace

int bareiss_rank(std::vector<std::vector<mpz_class>> rows) {
    const int m = static_cast<int>(rows.size());
    const int n = m ? static_cast<int>(rows[0].size()) : 0;
    mpz_class prev = 1;
    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int pivot = -1;
        for (int r = rank; r < m; ++r) {
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[pivot], rows[rank]);
        for (int r = rank + 1; r < m; ++r) {
            for (int c = col + 1; c < n; ++c) {
                mpz_class num = rows[rank][col] * rows[r][c] - rows[r][col] * rows[rank][c];
                mpz_class q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0) {
                    throw std::logic_error("Bareiss division was not exact");
                }
                rows[r][c] = q;
            }
            rows[r][col] = 0;
        }
        prev = rows[rank][col];
        ++rank;
    }
    return rank;
}

int tangent_dimension(const TangentDiagram& d) {
    int total = 0;
    for (int i = 0; i < d.cat().object_count(); ++i) total += d.dim(i);
    // Rank is transpose-invariant; feed the columns as rows.
    return total - bareiss_rank(integer_relation_columns(d));
}

bool vector_is_zero(const TangentDiagram& d, const FormalVector& w) {
    auto rows = integer_relation_columns(d);
    const int base_rank = bareiss_rank(rows);
    int total = 0;
    auto extra = integer_flat_vector(d, w, &total);
    if (total == 0) return true;
    rows.push_back(std::move(extra));
    return bareiss_rank(rows) == base_rank;
}

} // namespace difftan::oracle
