#include "fk/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace fk {

SVec to_sparse(const DVec& v) {
    SVec s;
    for (int i = 0; i < int(v.size()); ++i)
        if (!v[i].is_zero()) s.emplace_back(i, v[i]);
    return s;
}

DVec to_dense(const SVec& v, int n) {
    DVec d(n);
    for (auto& [i, c] : v) d[i] = c;
    return d;
}

bool is_zero(const DVec& v) {
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

void axpy(DVec& y, const Rat& c, const DVec& x) {
    if (c.is_zero()) return;
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) Rat::addmul(y[i], c, x[i]);
}

void axpy(DVec& y, const Rat& c, const SVec& x) {
    if (c.is_zero()) return;
    for (auto& [i, v] : x) Rat::addmul(y[i], c, v);
}

Rat dot(const SVec& a, const DVec& b) {
    Rat r;
    for (auto& [i, v] : a) Rat::addmul(r, v, b[i]);
    return r;
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.row[i].emplace_back(i, Rat(1));
    return m;
}

RatMat RatMat::from_dense(const std::vector<std::vector<Rat>>& d) {
    RatMat m(int(d.size()), d.empty() ? 0 : int(d[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (!d[i][j].is_zero()) m.row[i].emplace_back(j, d[i][j]);
    return m;
}

Rat RatMat::at(int r, int c) const {
    for (auto& [j, v] : row[r])
        if (j == c) return v;
    return Rat(0);
}

void RatMat::set(int r, int c, const Rat& v) {
    auto& rw = row[r];
    auto it = std::lower_bound(rw.begin(), rw.end(), c,
                               [](const auto& p, int col) { return p.first < col; });
    if (it != rw.end() && it->first == c) {
        if (v.is_zero())
            rw.erase(it);
        else
            it->second = v;
    } else if (!v.is_zero()) {
        rw.insert(it, {c, v});
    }
}

bool RatMat::operator==(const RatMat& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (int i = 0; i < rows; ++i)
        if (row[i] != o.row[i]) return false;
    return true;
}

RatMat RatMat::transpose() const {
    RatMat t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (auto& [j, v] : row[i]) t.row[j].emplace_back(i, v);
    return t;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("RatMat: shape mismatch in *");
    RatMat c(a.rows, b.cols);
    DVec acc(b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (auto& x : acc) x = Rat(0);
        for (auto& [k, v] : a.row[i]) axpy(acc, v, b.row[k]);
        c.row[i] = to_sparse(acc);
    }
    return c;
}

RatMat operator+(const RatMat& a, const RatMat& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("RatMat: shape mismatch in +");
    RatMat c(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i) {
        DVec acc = to_dense(a.row[i], a.cols);
        axpy(acc, Rat(1), b.row[i]);
        c.row[i] = to_sparse(acc);
    }
    return c;
}

RatMat operator-(const RatMat& a, const RatMat& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("RatMat: shape mismatch in -");
    RatMat c(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i) {
        DVec acc = to_dense(a.row[i], a.cols);
        axpy(acc, Rat(-1), b.row[i]);
        c.row[i] = to_sparse(acc);
    }
    return c;
}

DVec RatMat::apply(const DVec& v) const {
    if (int(v.size()) != cols) throw std::invalid_argument("RatMat: shape mismatch in apply");
    DVec r(rows);
    for (int i = 0; i < rows; ++i) r[i] = dot(row[i], v);
    return r;
}

bool RatMat::is_zero_matrix() const {
    for (auto& r : row)
        if (!r.empty()) return false;
    return true;
}

namespace {

// Dense Gaussian elimination to RREF. Pivot choice within a column: the
// remaining row whose entry has the smallest bit size, which keeps
// intermediate entries from ballooning on the structured matrices we meet.
struct Elim {
    int rows, cols;
    std::vector<DVec> a;
    std::vector<int> pivots;          // pivot columns in order
    std::vector<int> pivot_row_of;    // per pivot index, the row holding it

    Elim(const RatMat& m) : rows(m.rows), cols(m.cols) {
        a.reserve(rows);
        for (int i = 0; i < rows; ++i) a.push_back(to_dense(m.row[i], cols));
    }

    void run() {
        int r = 0;
        for (int c = 0; c < cols && r < rows; ++c) {
            int best = -1, best_bits = 0;
            for (int i = r; i < rows; ++i) {
                if (a[i][c].is_zero()) continue;
                int bits = a[i][c].bit_size();
                if (best < 0 || bits < best_bits) {
                    best = i;
                    best_bits = bits;
                }
            }
            if (best < 0) continue;
            std::swap(a[r], a[best]);
            Rat inv = a[r][c].inv();
            for (int j = c; j < cols; ++j)
                if (!a[r][j].is_zero()) a[r][j] *= inv;
            for (int i = 0; i < rows; ++i) {
                if (i == r || a[i][c].is_zero()) continue;
                Rat f = -a[i][c];
                for (int j = c; j < cols; ++j)
                    if (!a[r][j].is_zero()) Rat::addmul(a[i][j], f, a[r][j]);
            }
            pivots.push_back(c);
            pivot_row_of.push_back(r);
            ++r;
        }
    }
};

}  // namespace

std::pair<RatMat, std::vector<int>> rref(const RatMat& m) {
    Elim e(m);
    e.run();
    RatMat out(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i) out.row[i] = to_sparse(e.a[i]);
    return {out, e.pivots};
}

int rank(const RatMat& m) {
    Elim e(m);
    e.run();
    return int(e.pivots.size());
}

std::vector<DVec> kernel(const RatMat& m) {
    Elim e(m);
    e.run();
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : e.pivots) is_pivot[c] = true;
    std::vector<DVec> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        DVec v(m.cols);
        v[c] = Rat(1);
        for (size_t k = 0; k < e.pivots.size(); ++k) {
            const Rat& coef = e.a[k][c];
            if (!coef.is_zero()) v[e.pivots[k]] = -coef;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

SolveResult solve(const RatMat& m, const DVec& rhs) {
    if (int(rhs.size()) != m.rows) throw std::invalid_argument("solve: rhs length != rows");
    RatMat aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        aug.row[i] = m.row[i];
        if (!rhs[i].is_zero()) aug.row[i].emplace_back(m.cols, rhs[i]);
    }
    Elim e(aug);
    e.run();
    SolveResult res;
    for (int c : e.pivots)
        if (c == m.cols) return res;  // pivot in rhs column: inconsistent
    res.consistent = true;
    res.particular.assign(m.cols, Rat(0));
    for (size_t k = 0; k < e.pivots.size(); ++k) res.particular[e.pivots[k]] = e.a[k][m.cols];
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : e.pivots) is_pivot[c] = true;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        DVec v(m.cols);
        v[c] = Rat(1);
        for (size_t k = 0; k < e.pivots.size(); ++k) {
            const Rat& coef = e.a[k][c];
            if (!coef.is_zero()) v[e.pivots[k]] = -coef;
        }
        res.kernel.push_back(std::move(v));
    }
    return res;
}

std::optional<int> rank_mod_p(const RatMat& m, uint32_t p) {
    auto modval = [p](const Rat& r) -> std::optional<uint64_t> {
        if (!r.is_small()) return std::nullopt;  // big entries: let exact path handle
        int64_t n = r.num_small() % int64_t(p);
        if (n < 0) n += p;
        uint64_t d = uint64_t(r.den_small() % int64_t(p));
        if (d == 0) return std::nullopt;
        // d^(p-2) mod p
        uint64_t inv = 1, base = d, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return uint64_t(n) * inv % p;
    };
    std::vector<std::vector<uint64_t>> a(m.rows, std::vector<uint64_t>(m.cols, 0));
    for (int i = 0; i < m.rows; ++i)
        for (auto& [j, v] : m.row[i]) {
            auto mv = modval(v);
            if (!mv) return std::nullopt;
            a[i][j] = *mv;
        }
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (a[i][c]) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        uint64_t inv = 1, base = a[r][c], e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (int j = c; j < m.cols; ++j) a[r][j] = a[r][j] * inv % p;
        for (int i = r + 1; i < m.rows; ++i) {
            if (!a[i][c]) continue;
            uint64_t f = p - a[i][c];
            for (int j = c; j < m.cols; ++j) a[i][j] = (a[i][j] + f * a[r][j]) % p;
        }
        ++r;
    }
    return r;
}

bool SpanBuilder::insert(DVec v) {
    if (int(v.size()) != dim_) throw std::invalid_argument("SpanBuilder: dimension mismatch");
    reduce(v);
    int p = -1;
    for (int i = 0; i < dim_; ++i)
        if (!v[i].is_zero()) { p = i; break; }
    if (p < 0) return false;
    Rat inv = v[p].inv();
    for (int i = p; i < dim_; ++i)
        if (!v[i].is_zero()) v[i] *= inv;
    // keep existing rows reduced against the new pivot
    for (size_t k = 0; k < rows_.size(); ++k) {
        if (!rows_[k][p].is_zero()) {
            Rat f = -rows_[k][p];
            axpy(rows_[k], f, v);
        }
    }
    pivot_of_col_[p] = int(rows_.size());
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

void SpanBuilder::reduce(DVec& v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Rat& c = v[pivots_[k]];
        if (!c.is_zero()) {
            Rat f = -c;
            axpy(v, f, rows_[k]);
        }
    }
}

bool SpanBuilder::contains(DVec v) const {
    reduce(v);
    return is_zero(v);
}

std::optional<DVec> SpanBuilder::coordinates(const DVec& v) const {
    DVec w = v;
    DVec coef(rows_.size());
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Rat& c = w[pivots_[k]];
        if (!c.is_zero()) {
            coef[k] = c;
            Rat f = -c;
            axpy(w, f, rows_[k]);
        }
    }
    if (!is_zero(w)) return std::nullopt;
    return coef;
}

bool spans_equal(const SpanBuilder& a, const SpanBuilder& b) {
    if (a.dim() != b.dim() || a.ambient_dim() != b.ambient_dim()) return false;
    for (auto& r : a.basis())
        if (!b.contains(r)) return false;
    return true;
}

}  // namespace fk
