#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sntrank/cover.hpp"
#include "sntrank/graph.hpp"

namespace sntrank {

// Dense nonnegative integer matrix; all arithmetic here is exact.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}

    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    long long at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }
    void set(int i, int j, long long value);

    bool is_symmetric() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<long long> a_;
};

struct SupportList {
    std::vector<Bitset> supports;  // one nonzero-index set per row
};

SupportList row_supports(const IntMatrix& m);

// The witness pair of a cover: B is the vertex/component incidence matrix
// (components in canonical order), Cmat the 0/1 adjacency of the cover
// graph. Then B * Cmat * B^T realizes the covered pattern.
std::pair<IntMatrix, IntMatrix> cover_to_factors(const Cover& c);

// Exact integer product B * Cmat * B^T.
IntMatrix triproduct(const IntMatrix& b, const IntMatrix& cmat);

// Edge {i,j} iff a_ij > 0; loop at i iff a_ii > 0. Requires symmetry.
Graph pattern_of(const IntMatrix& a);

// True iff pattern_of(triproduct(b, cmat)) equals g exactly, loops included.
bool verify_realization(const Graph& g, const IntMatrix& b, const IntMatrix& cmat);

// Checks Cmat[R_i, R_j] = 0 exactly when a_ij = 0, where R_i is the
// support of row i of B. Requires a = triproduct(b, cmat).
bool support_condition_check(const IntMatrix& a, const IntMatrix& b, const IntMatrix& cmat);

// The reverse extraction: column supports of B joined per nonzero entries
// of Cmat. Inverse of cover_to_factors up to canonical form.
Cover factors_to_cover(const IntMatrix& b, const IntMatrix& cmat);

}  // namespace sntrank
