#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fk/rat.hpp"

namespace fk {

// Sparse vector: (index, coefficient) pairs, strictly increasing indices,
// no zero coefficients.
using SVec = std::vector<std::pair<int32_t, Rat>>;
using DVec = std::vector<Rat>;

SVec to_sparse(const DVec& v);
DVec to_dense(const SVec& v, int n);
bool is_zero(const DVec& v);

// y += c * x
void axpy(DVec& y, const Rat& c, const DVec& x);
void axpy(DVec& y, const Rat& c, const SVec& x);
Rat dot(const SVec& a, const DVec& b);

// Sparse row matrix over exact rationals.
struct RatMat {
    int rows = 0;
    int cols = 0;
    std::vector<SVec> row;

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), row(r) {}
    static RatMat identity(int n);
    static RatMat from_dense(const std::vector<std::vector<Rat>>& d);

    Rat at(int r, int c) const;
    void set(int r, int c, const Rat& v);
    bool operator==(const RatMat& o) const;

    RatMat transpose() const;
    friend RatMat operator*(const RatMat& a, const RatMat& b);
    friend RatMat operator+(const RatMat& a, const RatMat& b);
    friend RatMat operator-(const RatMat& a, const RatMat& b);
    DVec apply(const DVec& v) const;  // matrix * vector
    bool is_zero_matrix() const;
};

// Reduced row echelon form; pivots are the pivot column indices in order.
// Row space is preserved. Pivot rows are scaled to leading coefficient 1.
std::pair<RatMat, std::vector<int>> rref(const RatMat& m);

int rank(const RatMat& m);

// Basis of the right null space, dimension cols - rank.
std::vector<DVec> kernel(const RatMat& m);

struct SolveResult {
    bool consistent = false;
    DVec particular;           // valid when consistent
    std::vector<DVec> kernel;  // basis of homogeneous solutions
};
SolveResult solve(const RatMat& m, const DVec& rhs);

// Rank over F_p (p odd prime, p < 2^31). Entries with denominators divisible
// by p are rejected (returns nullopt); callers pick a different prime.
std::optional<int> rank_mod_p(const RatMat& m, uint32_t p);

// Incremental row-echelon span of dense vectors.
class SpanBuilder {
public:
    explicit SpanBuilder(int dim) : dim_(dim), pivot_of_col_(dim, -1) {}

    // Reduces v against the span; returns true (and absorbs the residual)
    // if v was independent.
    bool insert(DVec v);
    // Reduce v in place to its residual modulo the span.
    void reduce(DVec& v) const;
    bool contains(DVec v) const;

    int dim() const { return int(rows_.size()); }
    int ambient_dim() const { return dim_; }
    const std::vector<DVec>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Coordinates of a member vector in the echelon basis; nullopt if outside.
    std::optional<DVec> coordinates(const DVec& v) const;

private:
    int dim_;
    std::vector<DVec> rows_;      // echelon, pivot coefficient 1
    std::vector<int> pivots_;     // pivot column of rows_[i]
    std::vector<int> pivot_of_col_;
};

bool spans_equal(const SpanBuilder& a, const SpanBuilder& b);

}  // namespace fk
