#include "brauer/linalg.hpp"

namespace brauer {

int rank(Matrix<Rat> m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Int>> a(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        Int scale = 1;
        for (int j = 0; j < cols; ++j) {
            Int den = m.at(i, j).den();
            Int g;
            mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
            scale *= den / g;
        }
        auto& row = a[static_cast<size_t>(i)];
        row.reserve(static_cast<size_t>(cols));
        for (int j = 0; j < cols; ++j) {
            const Rat& q = m.at(i, j);
            row.push_back(q.num() * (scale / q.den()));
        }
    }

    Int prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        // smallest nonzero magnitude as pivot limits coefficient growth
        int prow = -1;
        for (int i = rank; i < rows; ++i) {
            const Int& v = a[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (v == 0) continue;
            if (prow < 0 ||
                mpz_cmpabs(v.get_mpz_t(),
                           a[static_cast<size_t>(prow)][static_cast<size_t>(col)].get_mpz_t()) < 0)
                prow = i;
        }
        if (prow < 0) continue;
        std::swap(a[static_cast<size_t>(prow)], a[static_cast<size_t>(rank)]);
        const std::vector<Int>& prow_v = a[static_cast<size_t>(rank)];
        for (int i = rank + 1; i < rows; ++i) {
            auto& row = a[static_cast<size_t>(i)];
            const Int lead = row[static_cast<size_t>(col)];
            for (int j = col; j < cols; ++j) {
                Int t = prow_v[static_cast<size_t>(col)] * row[static_cast<size_t>(j)] -
                        lead * prow_v[static_cast<size_t>(j)];
                mpz_divexact(row[static_cast<size_t>(j)].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = prow_v[static_cast<size_t>(col)];
        ++rank;
    }
    return rank;
}

}  // namespace brauer
