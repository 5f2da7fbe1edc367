#pragma once

// Bit-packed linear algebra over F2: linear forms, quadratic polynomials
// with explicit square terms, row-packed bit matrices, row-reduced
// subspaces, and factorization of quadratics into linear forms.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hwcoho {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxQuadVars = 10; // 55 monomials, fits one word

namespace detail {
inline bool parity64(std::uint64_t x) { return (std::popcount(x) & 1) != 0; }
}

// Linear form sum_{i in support} x_i, variables 1-based, bit k-1 <-> x_k.
class LinForm {
public:
    LinForm() = default;
    LinForm(int vars, std::uint64_t bits) : m_(vars), bits_(bits) {
        if (vars < 1 || vars > 63) throw error("LinForm: variable count out of range");
        if ((bits >> vars) != 0) throw error("LinForm: coefficient past x_m");
    }

    int vars() const { return m_; }
    std::uint64_t bits() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }
    bool coeff(int i) const { return ((bits_ >> (i - 1)) & 1) != 0; }
    int support_size() const { return std::popcount(bits_); }

    bool eval(std::uint64_t point) const { return detail::parity64(bits_ & point); }

    friend LinForm operator+(LinForm a, LinForm b) {
        if (a.m_ != b.m_) throw error("LinForm: mixed variable counts");
        return LinForm(a.m_, a.bits_ ^ b.bits_);
    }
    friend bool operator==(const LinForm& a, const LinForm& b) {
        return a.m_ == b.m_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const LinForm& a, const LinForm& b) { return !(a == b); }
    friend bool operator<(const LinForm& a, const LinForm& b) {
        return a.bits_ < b.bits_;
    }

private:
    int m_ = 1;
    std::uint64_t bits_ = 0;
};

// Homogeneous degree-2 polynomial over monomials {x_i x_j : i <= j}.
// Squares are kept as their own slots; only eval() folds x_i^2 -> x_i.
class QuadPoly {
public:
    QuadPoly() = default;
    explicit QuadPoly(int vars, std::uint64_t bits = 0) : m_(vars), bits_(bits) {
        if (vars < 1 || vars > kMaxQuadVars) throw error("QuadPoly: variable count out of range");
        int mono = vars * (vars + 1) / 2;
        if (mono < 64 && (bits >> mono) != 0) throw error("QuadPoly: coefficient past last monomial");
    }

    // Monomial slot of x_i x_j (1-based, i <= j): row-wise upper triangle.
    static int monomial_index(int i, int j, int m) {
        if (i < 1 || j < i || j > m) throw error("QuadPoly: bad monomial");
        return (i - 1) * m - (i - 1) * (i - 2) / 2 + (j - i);
    }

    int vars() const { return m_; }
    std::uint64_t bits() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }

    bool coeff(int i, int j) const {
        return ((bits_ >> monomial_index(i, j, m_)) & 1) != 0;
    }
    QuadPoly& toggle(int i, int j) {
        bits_ ^= std::uint64_t(1) << monomial_index(i, j, m_);
        return *this;
    }

    // True iff only diagonal slots x_i^2 are present (the polynomial is a
    // square of a linear form; zero counts as a square of the zero form).
    bool is_square() const { return (bits_ & ~diag_mask(m_)) == 0; }

    // The linear form whose square this is; only valid when is_square().
    LinForm sqrt() const {
        if (!is_square()) throw error("QuadPoly: not a square");
        std::uint64_t v = 0;
        for (int i = 1; i <= m_; ++i)
            if (coeff(i, i)) v |= std::uint64_t(1) << (i - 1);
        return LinForm(m_, v);
    }

    // Polynomial function at a point of F2^m (x_i^2 evaluates as x_i).
    bool eval(std::uint64_t point) const {
        bool acc = false;
        std::uint64_t rest = bits_;
        while (rest) {
            int slot = std::countr_zero(rest);
            rest &= rest - 1;
            auto [i, j] = slot_to_monomial(slot);
            acc ^= ((point >> (i - 1)) & (point >> (j - 1)) & 1) != 0;
        }
        return acc;
    }

    std::pair<int, int> slot_to_monomial(int slot) const {
        int i = 1;
        int row_len = m_;
        while (slot >= row_len) {
            slot -= row_len;
            --row_len;
            ++i;
        }
        return {i, i + slot};
    }

    friend QuadPoly operator+(QuadPoly a, QuadPoly b) {
        if (a.m_ != b.m_) throw error("QuadPoly: mixed variable counts");
        return QuadPoly(a.m_, a.bits_ ^ b.bits_);
    }
    QuadPoly& operator+=(const QuadPoly& o) {
        if (m_ != o.m_) throw error("QuadPoly: mixed variable counts");
        bits_ ^= o.bits_;
        return *this;
    }
    friend bool operator==(const QuadPoly& a, const QuadPoly& b) {
        return a.m_ == b.m_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const QuadPoly& a, const QuadPoly& b) { return !(a == b); }
    friend bool operator<(const QuadPoly& a, const QuadPoly& b) {
        return a.bits_ < b.bits_;
    }

private:
    static std::uint64_t diag_mask(int m) {
        std::uint64_t mask = 0;
        for (int i = 1; i <= m; ++i)
            mask |= std::uint64_t(1) << monomial_index(i, i, m);
        return mask;
    }

    int m_ = 1;
    std::uint64_t bits_ = 0;
};

// Product of two linear forms; x_i * x_i lands in the square slot.
inline QuadPoly lin_mul(const LinForm& a, const LinForm& b) {
    if (a.vars() != b.vars()) throw error("lin_mul: mixed variable counts");
    int m = a.vars();
    QuadPoly q(m);
    for (int i = 1; i <= m; ++i) {
        if (!a.coeff(i)) continue;
        for (int j = 1; j <= m; ++j) {
            if (!b.coeff(j)) continue;
            q.toggle(std::min(i, j), std::max(i, j));
        }
    }
    return q;
}

// Row-packed bit matrix, at most 64 columns (plenty for this domain).
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows, 0) {
        if (rows < 0 || cols < 0 || cols > 64) throw error("F2Matrix: bad shape");
    }

    static F2Matrix identity(int n) {
        F2Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.row_[i] = std::uint64_t(1) << i;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint64_t row(int i) const { return row_[i]; }
    void set_row(int i, std::uint64_t bits) { row_[i] = bits; }

    bool at(int i, int j) const { return ((row_[i] >> j) & 1) != 0; }
    void set(int i, int j, bool v) {
        std::uint64_t bit = std::uint64_t(1) << j;
        row_[i] = v ? (row_[i] | bit) : (row_[i] & ~bit);
    }

    friend bool operator==(const F2Matrix& a, const F2Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_ == b.row_;
    }

    // B = this * o over F2.
    F2Matrix mul(const F2Matrix& o) const {
        if (cols_ != o.rows_) throw error("F2Matrix: shape mismatch in mul");
        F2Matrix out(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i) {
            std::uint64_t acc = 0;
            std::uint64_t r = row_[i];
            while (r) {
                int k = std::countr_zero(r);
                r &= r - 1;
                acc ^= o.row_[k];
            }
            out.row_[i] = acc;
        }
        return out;
    }

    // Row vector (as bits) times this matrix.
    std::uint64_t apply_left(std::uint64_t v) const {
        std::uint64_t acc = 0;
        while (v) {
            int k = std::countr_zero(v);
            v &= v - 1;
            if (k < rows_) acc ^= row_[k];
        }
        return acc;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::uint64_t> row_;
};

inline int rank(const F2Matrix& m) {
    std::vector<std::uint64_t> rows;
    rows.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        if (m.row(i)) rows.push_back(m.row(i));
    int r = 0;
    for (int c = 0; c < m.cols() && r < static_cast<int>(rows.size()); ++c) {
        std::uint64_t bit = std::uint64_t(1) << c;
        int pivot = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i] & bit) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(rows[r], rows[pivot]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

// Columns minus rank; never grows when columns are removed.
inline int defect(const F2Matrix& m) { return m.cols() - rank(m); }

inline std::optional<F2Matrix> f2_inverse(const F2Matrix& m) {
    if (m.rows() != m.cols()) throw error("f2_inverse: not square");
    int n = m.rows();
    std::vector<std::uint64_t> a(n), inv(n);
    for (int i = 0; i < n; ++i) {
        a[i] = m.row(i);
        inv[i] = std::uint64_t(1) << i;
    }
    for (int c = 0; c < n; ++c) {
        std::uint64_t bit = std::uint64_t(1) << c;
        int pivot = -1;
        for (int i = c; i < n; ++i)
            if (a[i] & bit) { pivot = i; break; }
        if (pivot < 0) return std::nullopt;
        std::swap(a[c], a[pivot]);
        std::swap(inv[c], inv[pivot]);
        for (int i = 0; i < n; ++i)
            if (i != c && (a[i] & bit)) { a[i] ^= a[c]; inv[i] ^= inv[c]; }
    }
    F2Matrix out(n, n);
    for (int i = 0; i < n; ++i) out.set_row(i, inv[i]);
    return out;
}

// Seed-deterministic invertible matrix, by rejection.
inline F2Matrix gl_random(int m, std::uint64_t seed) {
    if (m < 1 || m > 64) throw error("gl_random: size out of range");
    std::mt19937_64 rng(seed);
    std::uint64_t mask = (m == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << m) - 1);
    for (;;) {
        F2Matrix g(m, m);
        for (int i = 0; i < m; ++i) g.set_row(i, rng() & mask);
        if (rank(g) == m) return g;
    }
}

// Substitute x_i -> row i of g (as a linear form) into a linear form.
inline LinForm substitute(const LinForm& l, const F2Matrix& g) {
    if (g.rows() != l.vars() || g.cols() != l.vars())
        throw error("substitute: matrix shape does not match variable count");
    return LinForm(l.vars(), g.apply_left(l.bits()));
}

// Ring-homomorphic substitution on a quadratic.
inline QuadPoly substitute(const QuadPoly& q, const F2Matrix& g) {
    int m = q.vars();
    if (g.rows() != m || g.cols() != m)
        throw error("substitute: matrix shape does not match variable count");
    QuadPoly out(m);
    std::uint64_t rest = q.bits();
    while (rest) {
        int slot = std::countr_zero(rest);
        rest &= rest - 1;
        auto [i, j] = q.slot_to_monomial(slot);
        out += lin_mul(LinForm(m, g.row(i - 1)), LinForm(m, g.row(j - 1)));
    }
    return out;
}

// Factor a nonzero quadratic into two nonzero linear forms, if possible.
// The polar form q(x+y)+q(x)+q(y) of l*k is l k^T + k l^T, so its row
// space pins the candidate factors down to a 2-dimensional space; rank 0
// happens exactly for perfect squares.  At most one unordered pair can
// succeed (unique factorization), which the candidate scan re-checks.
inline std::optional<std::pair<LinForm, LinForm>> quad_factor(const QuadPoly& q) {
    if (q.is_zero()) throw error("quad_factor: zero polynomial");
    int m = q.vars();
    if (q.is_square()) {
        LinForm l = q.sqrt();
        return std::make_pair(l, l);
    }
    F2Matrix polar(m, m);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            if (q.coeff(i, j)) { polar.set(i - 1, j - 1, true); polar.set(j - 1, i - 1, true); }
    if (rank(polar) != 2) return std::nullopt;

    std::uint64_t u = 0, v = 0;
    for (int i = 0; i < m; ++i) {
        std::uint64_t r = polar.row(i);
        if (!r) continue;
        if (!u) { u = r; continue; }
        if (r != u) { v = r; break; }
    }
    if (!v) return std::nullopt;
    LinForm fu(m, u), fv(m, v), fw(m, u ^ v);
    const LinForm* cands[3][2] = {{&fu, &fv}, {&fu, &fw}, {&fv, &fw}};
    std::optional<std::pair<LinForm, LinForm>> found;
    for (auto& c : cands) {
        if (lin_mul(*c[0], *c[1]) == q) {
            if (found) throw error("quad_factor: factorization not unique");
            found = std::make_pair(*c[0], *c[1]);
        }
    }
    return found;
}

// Subspace of F2^dim kept as a reduced row-echelon basis.
class Subspace {
public:
    explicit Subspace(int ambient) : ambient_(ambient) {
        if (ambient < 0 || ambient > 64) throw error("Subspace: ambient out of range");
    }

    static Subspace span(int ambient, const std::vector<std::uint64_t>& vectors) {
        Subspace s(ambient);
        for (auto v : vectors) s.insert(v);
        return s;
    }

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::uint64_t>& basis() const { return basis_; }

    // Returns true if v was independent of the current basis.
    bool insert(std::uint64_t v) {
        if (ambient_ < 64 && (v >> ambient_) != 0)
            throw error("Subspace: vector outside ambient space");
        v = reduce(v);
        if (!v) return false;
        int pos = std::countr_zero(v);
        // keep basis sorted by pivot and fully reduced
        for (auto& b : basis_)
            if ((b >> pos) & 1) b ^= v;
        auto it = basis_.begin();
        while (it != basis_.end() && std::countr_zero(*it) < pos) ++it;
        basis_.insert(it, v);
        return true;
    }

    bool contains(std::uint64_t v) const {
        if (ambient_ < 64 && (v >> ambient_) != 0)
            throw error("Subspace: vector outside ambient space");
        return reduce(v) == 0;
    }

    // All 2^dim members, each exactly once, in a deterministic order.
    std::vector<std::uint64_t> elements() const {
        if (dim() > 24) throw error("Subspace: too large to enumerate");
        std::vector<std::uint64_t> out;
        out.reserve(std::size_t(1) << dim());
        for (std::uint64_t c = 0; c < (std::uint64_t(1) << dim()); ++c) {
            std::uint64_t v = 0;
            for (int k = 0; k < dim(); ++k)
                if ((c >> k) & 1) v ^= basis_[k];
            out.push_back(v);
        }
        return out;
    }

private:
    std::uint64_t reduce(std::uint64_t v) const {
        for (auto b : basis_) {
            int pos = std::countr_zero(b);
            if ((v >> pos) & 1) v ^= b;
        }
        return v;
    }

    int ambient_;
    std::vector<std::uint64_t> basis_;
};

} // namespace hwcoho
