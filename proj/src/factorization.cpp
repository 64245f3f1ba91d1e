#include "sntrank/factorization.hpp"

#include <stdexcept>

namespace sntrank {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    const int r = int(rows.size());
    const int c = r == 0 ? 0 : int(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c) throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void IntMatrix::set(int i, int j, long long value) {
    if (value < 0) throw std::invalid_argument("matrix entries must be nonnegative");
    a_[std::size_t(i) * cols_ + j] = value;
}

bool IntMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

SupportList row_supports(const IntMatrix& m) {
    SupportList out;
    out.supports.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Bitset s(m.cols());
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) > 0) s.set(j);
        out.supports.push_back(std::move(s));
    }
    return out;
}

std::pair<IntMatrix, IntMatrix> cover_to_factors(const Cover& cover) {
    const Cover canon = canonical_form(cover);
    const int n = canon.ground_n();
    const int k = canon.order();
    IntMatrix b(n, k);
    for (int j = 0; j < k; ++j) {
        const Component& comp = canon.components()[j];
        for (int v = comp.find_first(); v >= 0; v = comp.find_next(v)) b.set(v, j, 1);
    }
    IntMatrix cmat(k, k);
    for (auto [x, y] : canon.joins()) {
        cmat.set(x, y, 1);
        cmat.set(y, x, 1);
    }
    return {b, cmat};
}

IntMatrix triproduct(const IntMatrix& b, const IntMatrix& cmat) {
    if (b.cols() != cmat.rows() || cmat.rows() != cmat.cols())
        throw std::invalid_argument("triproduct: incompatible dimensions");
    if (!cmat.is_symmetric()) throw std::invalid_argument("triproduct: middle factor not symmetric");
    const int n = b.rows(), k = b.cols();
    IntMatrix bc(n, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) {
            long long s = 0;
            for (int t = 0; t < k; ++t) s += b.at(i, t) * cmat.at(t, j);
            bc.set(i, j, s);
        }
    IntMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long s = 0;
            for (int t = 0; t < k; ++t) s += bc.at(i, t) * b.at(j, t);
            a.set(i, j, s);
        }
    return a;
}

Graph pattern_of(const IntMatrix& a) {
    if (!a.is_symmetric()) throw std::invalid_argument("pattern_of: matrix not symmetric");
    Graph g(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i; j < a.cols(); ++j)
            if (a.at(i, j) > 0) g.add_edge(i, j);
    return g;
}

bool verify_realization(const Graph& g, const IntMatrix& b, const IntMatrix& cmat) {
    if (b.rows() != g.vertex_count())
        throw std::invalid_argument("verify_realization: row count must match vertex count");
    return pattern_of(triproduct(b, cmat)) == g;
}

bool support_condition_check(const IntMatrix& a, const IntMatrix& b, const IntMatrix& cmat) {
    if (a != triproduct(b, cmat))
        throw std::invalid_argument("support_condition_check: a != b * cmat * b^T");
    const SupportList supports = row_supports(b);
    const int n = a.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool all_zero = true;
            const Bitset& ri = supports.supports[i];
            const Bitset& rj = supports.supports[j];
            for (int x = ri.find_first(); x >= 0 && all_zero; x = ri.find_next(x))
                for (int y = rj.find_first(); y >= 0; y = rj.find_next(y))
                    if (cmat.at(x, y) != 0) {
                        all_zero = false;
                        break;
                    }
            if (all_zero != (a.at(i, j) == 0)) return false;
        }
    return true;
}

Cover factors_to_cover(const IntMatrix& b, const IntMatrix& cmat) {
    if (b.cols() != cmat.rows() || !cmat.is_symmetric())
        throw std::invalid_argument("factors_to_cover: incompatible factors");
    const int n = b.rows(), k = b.cols();
    std::vector<Component> col_support(k, Component(n));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i)
            if (b.at(i, j) > 0) col_support[j].set(i);
    Cover cover(n);
    for (int x = 0; x < k; ++x)
        for (int y = x; y < k; ++y) {
            if (cmat.at(x, y) == 0) continue;
            if (col_support[x].none() || col_support[y].none()) continue;
            cover.add_join(cover.add_component(col_support[x]),
                           cover.add_component(col_support[y]));
        }
    return cover;
}

}  // namespace sntrank
