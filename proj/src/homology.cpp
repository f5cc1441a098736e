#include "acatlab/homology.hpp"

#include <algorithm>
#include <climits>
#include <istream>
#include <ostream>

#include "acatlab/error.hpp"
#include "acatlab/group.hpp"

namespace acatlab {

// ------------------------------------------------------------ sparse basics

void SparseMatrix::canonicalize() {
    for (auto& col : columns) {
        std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
        std::size_t out = 0;
        for (std::size_t i = 0; i < col.size();) {
            auto row = col[i].first;
            std::int64_t v = 0;
            for (; i < col.size() && col[i].first == row; ++i) v += col[i].second;
            if (v != 0) col[out++] = {row, v};
        }
        col.resize(out);
    }
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns) n += c.size();
    return n;
}

std::int64_t SparseMatrix::at(std::size_t r, std::size_t c) const {
    for (const auto& [row, v] : columns[c])
        if (row == r) return v;
    return 0;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols != b.rows) fail(ErrorKind::Invariant, "matrix shapes do not chain");
    SparseMatrix out(a.rows, b.cols);
    for (std::size_t j = 0; j < b.cols; ++j) {
        for (const auto& [k, bv] : b.columns[j])
            for (const auto& [i, av] : a.columns[k]) out.push(i, j, av * bv);
    }
    out.canonicalize();
    return out;
}

void write_triplets(std::ostream& out, const SparseMatrix& m) {
    out << m.rows << ' ' << m.cols << ' ' << m.nonzeros() << '\n';
    for (std::size_t c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.columns[c]) out << r << ' ' << c << ' ' << v << '\n';
}

SparseMatrix read_triplets(std::istream& in) {
    std::size_t rows = 0, cols = 0, nnz = 0;
    if (!(in >> rows >> cols >> nnz)) fail(ErrorKind::Input, "triplet header must be 'rows cols nnz'");
    SparseMatrix m(rows, cols);
    for (std::size_t i = 0; i < nnz; ++i) {
        std::size_t r = 0, c = 0;
        long long v = 0;
        if (!(in >> r >> c >> v)) fail(ErrorKind::Input, "truncated triplet list");
        if (r >= rows || c >= cols) fail(ErrorKind::Input, "triplet index out of range");
        m.push(r, c, v);
    }
    m.canonicalize();
    return m;
}

// ------------------------------------------------------------ chain complex

ChainComplex::ChainComplex(int min_degree, std::vector<std::size_t> dims, std::vector<SparseMatrix> boundaries,
                           Coefficients coefficients, bool reduced)
    : min_degree_(min_degree),
      dims_(std::move(dims)),
      boundaries_(std::move(boundaries)),
      coefficients_(coefficients),
      reduced_(reduced) {
    if (boundaries_.size() != dims_.size()) fail(ErrorKind::Invariant, "one boundary per degree is required");
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        const auto& d = boundaries_[i];
        const std::size_t below = i == 0 ? 0 : dims_[i - 1];
        if (d.cols != dims_[i] || d.rows != below)
            fail(ErrorKind::Invariant, "boundary out of degree " + std::to_string(min_degree_ + static_cast<int>(i)) +
                                           " has the wrong shape");
        if (i > 0 && !multiply(boundaries_[i - 1], d).is_zero())
            fail(ErrorKind::Invariant, "boundary of boundary is nonzero in degree " +
                                           std::to_string(min_degree_ + static_cast<int>(i)));
    }
}

std::size_t ChainComplex::dim(int k) const {
    if (k < min_degree_ || k > max_degree()) return 0;
    return dims_[static_cast<std::size_t>(k - min_degree_)];
}

SparseMatrix ChainComplex::boundary(int k) const {
    if (k < min_degree_ || k > max_degree()) return SparseMatrix(dim(k - 1), dim(k));
    return boundaries_[static_cast<std::size_t>(k - min_degree_)];
}

ChainComplex ChainComplex::with_coefficients(Coefficients c) const {
    ChainComplex copy = *this;
    copy.coefficients_ = c;
    return copy;
}

long long ChainComplex::euler_characteristic() const {
    long long chi = 0;
    for (int k = min_degree_; k <= max_degree(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(dim(k));
    return chi;
}

// ------------------------------------------------------------ dense SNF core

namespace {

struct Overflow {};
using i64 = std::int64_t;

i64 add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}
i64 sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
i64 mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
i64 neg(i64 a) {
    if (a == INT64_MIN) throw Overflow{};
    return -a;
}
i64 quot(i64 a, i64 b) {
    if (a == INT64_MIN && b == -1) throw Overflow{};
    return a / b;
}
i64 rem(i64 a, i64 b) { return b == -1 ? 0 : a % b; }
int sign(i64 a) { return (a > 0) - (a < 0); }
bool is_zero(i64 a) { return a == 0; }
i64 magnitude(i64 a) { return a < 0 ? neg(a) : a; }

BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
BigInt neg(const BigInt& a) { return -a; }
BigInt quot(const BigInt& a, const BigInt& b) { return a / b; }  // truncating
BigInt rem(const BigInt& a, const BigInt& b) { return a % b; }
int sign(const BigInt& a) { return sgn(a); }
bool is_zero(const BigInt& a) { return sgn(a) == 0; }
BigInt magnitude(const BigInt& a) { return abs(a); }

i64 floor_div(i64 a, i64 b) {
    i64 q = quot(a, b);
    if ((a % b != 0) && ((a < 0) != (b < 0))) q = sub(q, 1);
    return q;
}
BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// s*a + t*b = g = gcd(a, b) > 0
void gcdext(i64 a, i64 b, i64& g, i64& s, i64& t) {
    i64 r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        i64 q = quot(r0, r1);
        i64 r2 = sub(r0, mul(q, r1));
        r0 = r1;
        r1 = r2;
        i64 s2 = sub(s0, mul(q, s1));
        s0 = s1;
        s1 = s2;
        i64 t2 = sub(t0, mul(q, t1));
        t0 = t1;
        t1 = t2;
    }
    if (r0 < 0) {
        r0 = neg(r0);
        s0 = neg(s0);
        t0 = neg(t0);
    }
    g = r0;
    s = s0;
    t = t0;
}

void gcdext(const BigInt& a, const BigInt& b, BigInt& g, BigInt& s, BigInt& t) {
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}


template <class T>
struct Dense {
    std::size_t rows = 0, cols = 0;
    std::vector<T> a;
    Dense() = default;
    Dense(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, T(0)) {}
    T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    static Dense identity(std::size_t n) {
        Dense d(n, n);
        for (std::size_t i = 0; i < n; ++i) d(i, i) = T(1);
        return d;
    }
};

// Row/column reduction to Smith form. With `track`, U, U^-1, V, V^-1 follow
// every elementary operation so that U·A0·V = A at all times.
template <class T>
struct SnfEngine {
    Dense<T> a;
    bool track;
    Dense<T> u, uinv, v, vinv;
    std::size_t rank = 0;

    SnfEngine(Dense<T> m, bool with_transforms) : a(std::move(m)), track(with_transforms) {
        if (track) {
            u = uinv = Dense<T>::identity(a.rows);
            v = vinv = Dense<T>::identity(a.cols);
        }
    }

    void row_add(std::size_t i, std::size_t t, const T& c) {  // row_i += c row_t
        if (is_zero(c)) return;
        for (std::size_t j = 0; j < a.cols; ++j)
            if (!is_zero(a(t, j))) a(i, j) = add(a(i, j), mul(c, a(t, j)));
        if (!track) return;
        for (std::size_t j = 0; j < u.cols; ++j)
            if (!is_zero(u(t, j))) u(i, j) = add(u(i, j), mul(c, u(t, j)));
        for (std::size_t r = 0; r < uinv.rows; ++r)
            if (!is_zero(uinv(r, i))) uinv(r, t) = sub(uinv(r, t), mul(c, uinv(r, i)));
    }
    void col_add(std::size_t j, std::size_t t, const T& c) {  // col_j += c col_t
        if (is_zero(c)) return;
        for (std::size_t i = 0; i < a.rows; ++i)
            if (!is_zero(a(i, t))) a(i, j) = add(a(i, j), mul(c, a(i, t)));
        if (!track) return;
        for (std::size_t i = 0; i < v.rows; ++i)
            if (!is_zero(v(i, t))) v(i, j) = add(v(i, j), mul(c, v(i, t)));
        for (std::size_t k = 0; k < vinv.cols; ++k)
            if (!is_zero(vinv(j, k))) vinv(t, k) = sub(vinv(t, k), mul(c, vinv(j, k)));
    }
    void row_swap(std::size_t i, std::size_t t) {
        if (i == t) return;
        for (std::size_t j = 0; j < a.cols; ++j) std::swap(a(i, j), a(t, j));
        if (!track) return;
        for (std::size_t j = 0; j < u.cols; ++j) std::swap(u(i, j), u(t, j));
        for (std::size_t r = 0; r < uinv.rows; ++r) std::swap(uinv(r, i), uinv(r, t));
    }
    void col_swap(std::size_t j, std::size_t t) {
        if (j == t) return;
        for (std::size_t i = 0; i < a.rows; ++i) std::swap(a(i, j), a(i, t));
        if (!track) return;
        for (std::size_t i = 0; i < v.rows; ++i) std::swap(v(i, j), v(i, t));
        for (std::size_t k = 0; k < vinv.cols; ++k) std::swap(vinv(j, k), vinv(t, k));
    }
    void row_negate(std::size_t t) {
        for (std::size_t j = 0; j < a.cols; ++j) a(t, j) = neg(a(t, j));
        if (!track) return;
        for (std::size_t j = 0; j < u.cols; ++j) u(t, j) = neg(u(t, j));
        for (std::size_t r = 0; r < uinv.rows; ++r) uinv(r, t) = neg(uinv(r, t));
    }

    // Rows t and i go to M·(t; i) with M = [[s, r], [-b/g, a/g]], det M = 1,
    // where a = A(t,c), b = A(i,c), g = s a + r b = gcd. Clears A(i,c).
    void row_combine(std::size_t t, std::size_t i, std::size_t c) {
        T g, s, r;
        gcdext(a(t, c), a(i, c), g, s, r);
        const T x = quot(a(t, c), g), y = quot(a(i, c), g);
        auto mix = [&](T& p, T& q) {
            T np = add(mul(s, p), mul(r, q));
            q = sub(mul(x, q), mul(y, p));
            p = np;
        };
        for (std::size_t j = 0; j < a.cols; ++j) mix(a(t, j), a(i, j));
        if (!track) return;
        for (std::size_t j = 0; j < u.cols; ++j) mix(u(t, j), u(i, j));
        // U^-1 picks up M^-1 = [[a/g, -r], [b/g, s]] on the right
        for (std::size_t k = 0; k < uinv.rows; ++k) {
            T& p = uinv(k, t);
            T& q = uinv(k, i);
            T np = add(mul(p, x), mul(q, y));
            q = sub(mul(q, s), mul(p, r));
            p = np;
        }
    }

    // U A V = D  <=>  V^T A^T U^T = D^T, so column work is row work on the transpose.
    void transpose() {
        auto tr = [](const Dense<T>& m) {
            Dense<T> out(m.cols, m.rows);
            for (std::size_t i = 0; i < m.rows; ++i)
                for (std::size_t j = 0; j < m.cols; ++j) out(j, i) = m(i, j);
            return out;
        };
        a = tr(a);
        if (!track) return;
        Dense<T> nu = tr(v), nv = tr(u), nui = tr(vinv), nvi = tr(uinv);
        u = std::move(nu);
        v = std::move(nv);
        uinv = std::move(nui);
        vinv = std::move(nvi);
    }

    // Row Hermite form, one row at a time against the already reduced pivot
    // rows (Kannan-Bachem order). Rows below are untouched until their turn and
    // every pivot row stays reduced into [0, pivot) above its pivots, so entries
    // stay bounded by minors of the input. Returns the pivot columns; pivot row
    // t ends up physically in row t.
    std::vector<std::size_t> hermite() {
        std::vector<std::pair<std::size_t, std::size_t>> piv;  // (column, row), sorted by column
        auto reduce_all = [&] {
            for (std::size_t m = 0; m < piv.size(); ++m) {
                const auto [c, rm] = piv[m];
                for (std::size_t k = 0; k < m; ++k) {
                    const auto rk = piv[k].second;
                    if (!is_zero(a(rk, c))) row_add(rk, rm, neg(floor_div(a(rk, c), a(rm, c))));
                }
            }
        };
        for (std::size_t i = 0; i < a.rows; ++i) {
            // clear row i from its leading column on; it becomes a pivot row at the
            // first column no pivot row owns
            for (std::size_t lead = 0;;) {
                while (lead < a.cols && is_zero(a(i, lead))) ++lead;
                if (lead == a.cols) break;
                auto it = std::lower_bound(piv.begin(), piv.end(), std::make_pair(lead, std::size_t{0}));
                if (it == piv.end() || it->first != lead) {
                    if (sign(a(i, lead)) < 0) row_negate(i);
                    piv.insert(it, {lead, i});
                    break;
                }
                const auto rm = it->second;
                if (is_zero(rem(a(i, lead), a(rm, lead))))
                    row_add(i, rm, neg(quot(a(i, lead), a(rm, lead))));
                else
                    row_combine(rm, i, lead);
            }
            for (auto& [c, rm] : piv)
                if (sign(a(rm, c)) < 0) row_negate(rm);
            reduce_all();
        }
        // physical order: pivot row t to row t
        std::vector<std::size_t> where(a.rows), at(a.rows);  // where[r]: current slot of original row r
        for (std::size_t r = 0; r < a.rows; ++r) where[r] = at[r] = r;
        std::vector<std::size_t> cols;
        for (std::size_t t = 0; t < piv.size(); ++t) {
            const auto slot = where[piv[t].second];
            const auto other = at[t];
            row_swap(t, slot);
            std::swap(at[t], at[slot]);
            where[other] = slot;
            where[piv[t].second] = t;
            cols.push_back(piv[t].first);
        }
        return cols;
    }

    bool rows_are_monomial(std::size_t r) const {
        for (std::size_t i = 0; i < r; ++i) {
            std::size_t nz = 0;
            for (std::size_t j = 0; j < a.cols; ++j) nz += !is_zero(a(i, j));
            if (nz != 1) return false;
        }
        return true;
    }

    void run() {
        // alternate row and column Hermite forms until the matrix is diagonal
        bool transposed = false;
        std::vector<std::size_t> pivots;
        for (;;) {
            pivots = hermite();
            if (rows_are_monomial(pivots.size())) break;
            transpose();
            transposed = !transposed;
        }
        rank = pivots.size();
        for (std::size_t t = 0; t < rank; ++t) col_swap(t, pivots[t]);
        if (transposed) transpose();
        // gcd/lcm on diagonal pairs until d_t | d_k
        for (std::size_t t = 0; t < rank; ++t)
            for (std::size_t k = t + 1; k < rank; ++k) {
                if (is_zero(rem(a(k, k), a(t, t)))) continue;
                col_add(t, k, T(1));              // a(k,t) = d_k
                row_combine(t, k, t);             // a(t,t) = g, a(k,t) = 0
                col_add(k, t, neg(quot(a(t, k), a(t, t))));
                if (sign(a(k, k)) < 0) row_negate(k);
            }
    }
};

template <class T>
Dense<T> to_dense(const SparseMatrix& m) {
    Dense<T> d(m.rows, m.cols);
    for (std::size_t c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.columns[c]) d(r, c) = T(static_cast<long>(v));
    return d;
}

BigInt to_big(i64 x) { return BigInt(static_cast<long>(x)); }
BigInt to_big(const BigInt& x) { return x; }

template <class T>
IntMatrix to_int_matrix(const Dense<T>& d) {
    IntMatrix m(d.rows, d.cols);
    for (std::size_t i = 0; i < d.a.size(); ++i) m.data[i] = to_big(d.a[i]);
    return m;
}

template <class T>
std::vector<BigInt> diagonal(const SnfEngine<T>& e) {
    std::vector<BigInt> out;
    for (std::size_t t = 0; t < e.rank; ++t) out.push_back(to_big(e.a(t, t)));
    return out;
}

bool fits_i64(const BigInt& x) { return x.fits_slong_p(); }

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols) fail(ErrorKind::Input, "ragged matrix rows");
        for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = BigInt(static_cast<long>(rows[i][j]));
    }
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) fail(ErrorKind::Invariant, "matrix shapes do not chain");
    IntMatrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

SnfResult smith_normal_form(const IntMatrix& input) {
    SnfResult res;
    auto finish = [&](auto& engine) {
        engine.run();
        res.invariant_factors = diagonal(engine);
        res.d = to_int_matrix(engine.a);
        res.u = to_int_matrix(engine.u);
        res.v = to_int_matrix(engine.v);
        res.u_inv = to_int_matrix(engine.uinv);
        res.v_inv = to_int_matrix(engine.vinv);
    };
    bool small = std::all_of(input.data.begin(), input.data.end(), fits_i64);
    bool done = false;
    if (small) {
        try {
            Dense<i64> d(input.rows, input.cols);
            for (std::size_t i = 0; i < input.data.size(); ++i) d.a[i] = input.data[i].get_si();
            SnfEngine<i64> engine(std::move(d), true);
            finish(engine);
            done = true;
        } catch (const Overflow&) {
            res.promoted = true;
        }
    }
    if (!done) {
        Dense<BigInt> d(input.rows, input.cols);
        d.a = input.data;
        SnfEngine<BigInt> engine(std::move(d), true);
        finish(engine);
    }
    // certificate
    if (!(res.u * input * res.v == res.d) || !(res.u * res.u_inv == IntMatrix::identity(input.rows)) ||
        !(res.v * res.v_inv == IntMatrix::identity(input.cols)))
        fail(ErrorKind::Invariant, "Smith normal form certificate failed to verify");
    for (std::size_t i = 0; i < res.d.rows; ++i)
        for (std::size_t j = 0; j < res.d.cols; ++j)
            if (i != j && sgn(res.d(i, j)) != 0) fail(ErrorKind::Invariant, "Smith form is not diagonal");
    for (std::size_t t = 1; t < res.invariant_factors.size(); ++t)
        if (!mpz_divisible_p(res.invariant_factors[t].get_mpz_t(), res.invariant_factors[t - 1].get_mpz_t()))
            fail(ErrorKind::Invariant, "invariant factors do not form a divisibility chain");
    return res;
}

// --------------------------------------------------------- sparse elimination

namespace {

using Column = std::vector<SparseMatrix::Entry>;

// dst += c * src, both sorted; reports rows that became nonzero in dst.
void axpy(Column& dst, const Column& src, i64 c, std::vector<std::uint32_t>* new_rows) {
    Column out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, mul(c, src[j].second));
            if (new_rows) new_rows->push_back(src[j].first);
            ++j;
        } else {
            i64 v = add(dst[i].second, mul(c, src[j].second));
            if (v != 0) out.emplace_back(dst[i].first, v);
            ++i;
            ++j;
        }
    }
    dst.swap(out);
}

i64 value_at(const Column& col, std::uint32_t row) {
    auto it = std::lower_bound(col.begin(), col.end(), row,
                               [](const SparseMatrix::Entry& e, std::uint32_t r) { return e.first < r; });
    return it != col.end() && it->first == row ? it->second : 0;
}

std::vector<BigInt> dense_invariants(const Dense<BigInt>& big) {
    SnfEngine<BigInt> engine(big, false);
    engine.run();
    return diagonal(engine);
}

std::vector<BigInt> sparse_invariants(const SparseMatrix& m) {
    std::vector<Column> cols = m.columns;
    std::vector<std::vector<std::uint32_t>> row_cols(m.rows);
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, v] : cols[c]) row_cols[r].push_back(static_cast<std::uint32_t>(c));
    std::vector<bool> col_live(m.cols, true), row_live(m.rows, true);
    std::size_t units = 0;

    // Unit pivots: clear the pivot row from every other column, then drop both.
    std::vector<std::size_t> order(m.cols);
    for (std::size_t c = 0; c < m.cols; ++c) order[c] = c;
    bool progress = true;
    while (progress) {
        progress = false;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return cols[a].size() < cols[b].size(); });
        for (auto p : order) {
            if (!col_live[p] || cols[p].empty()) continue;
            std::uint32_t r = 0;
            i64 pv = 0;
            std::size_t best_fill = SIZE_MAX;
            for (const auto& [row, v] : cols[p])
                if ((v == 1 || v == -1) && row_cols[row].size() < best_fill) {
                    r = row;
                    pv = v;
                    best_fill = row_cols[row].size();
                }
            if (pv == 0) continue;
            auto users = row_cols[r];
            for (auto k : users) {
                if (k == p || !col_live[k]) continue;
                i64 w = value_at(cols[k], r);
                if (w == 0) continue;
                std::vector<std::uint32_t> fresh;
                axpy(cols[k], cols[p], neg(mul(w, pv)), &fresh);
                for (auto row : fresh) row_cols[row].push_back(k);
            }
            col_live[p] = false;
            row_live[r] = false;
            row_cols[r].clear();
            ++units;
            progress = true;
        }
    }

    std::vector<std::uint32_t> live_rows(m.rows, UINT32_MAX);
    std::size_t nr = 0;
    std::vector<std::size_t> live_cols;
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (!col_live[c] || cols[c].empty()) continue;
        live_cols.push_back(c);
        for (const auto& [r, v] : cols[c])
            if (live_rows[r] == UINT32_MAX) live_rows[r] = static_cast<std::uint32_t>(nr++);
    }
    std::vector<BigInt> out(units, BigInt(1));
    if (live_cols.empty()) return out;
    Dense<i64> rest(nr, live_cols.size());
    for (std::size_t j = 0; j < live_cols.size(); ++j)
        for (const auto& [r, v] : cols[live_cols[j]]) rest(live_rows[r], j) = v;
    std::vector<BigInt> tail;
    try {
        SnfEngine<i64> engine(rest, false);
        engine.run();
        tail = diagonal(engine);
    } catch (const Overflow&) {
        Dense<BigInt> big(rest.rows, rest.cols);
        for (std::size_t i = 0; i < rest.a.size(); ++i) big.a[i] = to_big(rest.a[i]);
        tail = dense_invariants(big);
    }
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

}  // namespace

std::vector<BigInt> invariant_factors(const SparseMatrix& m) {
    try {
        return sparse_invariants(m);
    } catch (const Overflow&) {
        return dense_invariants(to_dense<BigInt>(m));
    }
}

// ------------------------------------------------------------- F_p spans

FpSpan::Vec FpSpan::reduce(Vec col) const {
    const auto p = p_;
    while (!col.empty()) {
        auto [low, lv] = col.back();
        const auto& piv = pivots_[low];
        if (piv.empty()) break;
        // col -= lv * piv  (piv is normalized to 1 at its low row)
        Vec out;
        out.reserve(col.size() + piv.size());
        std::size_t i = 0, j = 0;
        while (i < col.size() || j < piv.size()) {
            if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
                out.push_back(col[i++]);
            } else if (i == col.size() || piv[j].first < col[i].first) {
                out.emplace_back(piv[j].first, (p - lv * piv[j].second % p) % p);
                ++j;
            } else {
                std::uint64_t x = (col[i].second + p - lv * piv[j].second % p) % p;
                if (x) out.emplace_back(col[i].first, x);
                ++i;
                ++j;
            }
        }
        col.swap(out);
    }
    return col;
}

bool FpSpan::insert(Vec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    // normalize the low entry to 1 by Fermat inversion
    std::uint64_t result = 1, base = v.back().second, e = p_ - 2;
    while (e) {
        if (e & 1) result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    for (auto& x : v) x.second = x.second * result % p_;
    const auto low = v.back().first;
    pivots_[low] = std::move(v);
    ++rank_;
    return true;
}

namespace {

std::uint64_t mod_big(const BigInt& x, std::uint64_t p) { return mpz_fdiv_ui(x.get_mpz_t(), p); }

}  // namespace

bool FpSpan::add(const std::vector<BigInt>& v) {
    Vec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (auto x = mod_big(v[i], p_)) s.emplace_back(static_cast<std::uint32_t>(i), x);
    return insert(std::move(s));
}

bool FpSpan::add_column(const SparseMatrix& m, std::size_t col) {
    Vec s;
    const auto sp = static_cast<i64>(p_);
    for (const auto& [r, v] : m.columns[col])
        if (auto x = static_cast<std::uint64_t>(((v % sp) + sp) % sp)) s.emplace_back(r, x);
    return insert(std::move(s));
}

bool FpSpan::contains(const std::vector<BigInt>& v) const {
    Vec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (auto x = mod_big(v[i], p_)) s.emplace_back(static_cast<std::uint32_t>(i), x);
    return reduce(std::move(s)).empty();
}

std::size_t rank(const SparseMatrix& m, Coefficients p) {
    if (p == 0) return invariant_factors(m).size();
    FpSpan span(p, m.rows);
    for (std::size_t c = 0; c < m.cols; ++c) span.add_column(m, c);
    return span.rank();
}

// ------------------------------------------------------------ integral kernel

namespace {

template <class T>
using SVec = std::vector<std::pair<std::uint32_t, T>>;

// a*x + b*y
template <class T>
SVec<T> lincomb(const T& a, const SVec<T>& x, const T& b, const SVec<T>& y) {
    SVec<T> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            if (!is_zero(a)) out.emplace_back(x[i].first, mul(a, x[i].second));
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            if (!is_zero(b)) out.emplace_back(y[j].first, mul(b, y[j].second));
            ++j;
        } else {
            T v = add(mul(a, x[i].second), mul(b, y[j].second));
            if (!is_zero(v)) out.emplace_back(x[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

template <class T>
std::vector<std::vector<BigInt>> kernel_impl(const SparseMatrix& m) {
    std::vector<std::int64_t> pivot_of_row(m.rows, -1);
    std::vector<SVec<T>> pv, pc;
    std::vector<std::vector<BigInt>> kernel;
    for (std::size_t j = 0; j < m.cols; ++j) {
        SVec<T> v, c{{static_cast<std::uint32_t>(j), T(1)}};
        for (const auto& [r, x] : m.columns[j]) v.emplace_back(r, T(static_cast<long>(x)));
        while (!v.empty()) {
            const auto low = v.back().first;
            const T a = v.back().second;
            const auto idx = pivot_of_row[low];
            if (idx < 0) {
                pivot_of_row[low] = static_cast<std::int64_t>(pv.size());
                pv.push_back(std::move(v));
                pc.push_back(std::move(c));
                v.clear();
                c.clear();
                break;
            }
            auto& P = pv[static_cast<std::size_t>(idx)];
            auto& C = pc[static_cast<std::size_t>(idx)];
            const T b = P.back().second;
            if (is_zero(rem(a, b))) {
                const T q = neg(quot(a, b));
                v = lincomb(T(1), v, q, P);
                c = lincomb(T(1), c, q, C);
            } else {
                T g, s, t;
                gcdext(b, a, g, s, t);
                const T ag = quot(a, g), bg = neg(quot(b, g));
                auto np = lincomb(s, P, t, v), nc = lincomb(s, C, t, c);
                v = lincomb(ag, P, bg, v);
                c = lincomb(ag, C, bg, c);
                P = std::move(np);
                C = std::move(nc);
            }
        }
        if (!c.empty()) {
            std::vector<BigInt> dense(m.cols, BigInt(0));
            for (const auto& [i, x] : c) dense[i] = to_big(x);
            kernel.push_back(std::move(dense));
        }
    }
    return kernel;
}

}  // namespace

std::vector<std::vector<BigInt>> kernel_basis(const SparseMatrix& m) {
    try {
        return kernel_impl<i64>(m);
    } catch (const Overflow&) {
        return kernel_impl<BigInt>(m);
    }
}

// ----------------------------------------------------------------- homology

bool HomologyResult::acyclic() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const Degree& d) { return d.vanishes(); });
}

const HomologyResult::Degree* HomologyResult::at(int k) const {
    for (const auto& d : degrees)
        if (d.degree == k) return &d;
    return nullptr;
}

namespace {

struct BoundaryData {
    std::size_t rank = 0;
    std::vector<BigInt> torsion;
};

BoundaryData analyze(const SparseMatrix& m, Coefficients c) {
    BoundaryData b;
    if (m.is_zero()) return b;
    if (c != 0) {
        b.rank = rank(m, c);
        return b;
    }
    for (auto& f : invariant_factors(m)) {
        ++b.rank;
        if (f != 1) b.torsion.push_back(f);
    }
    return b;
}

}  // namespace

HomologyResult::Degree homology_in_degree(const ChainComplex& cc, int k) {
    auto out = analyze(cc.boundary(k), cc.coefficients());
    auto in = analyze(cc.boundary(k + 1), cc.coefficients());
    HomologyResult::Degree d;
    d.degree = k;
    d.rank = cc.dim(k) - out.rank - in.rank;
    d.torsion = std::move(in.torsion);
    return d;
}

HomologyResult homology(const ChainComplex& cc) {
    HomologyResult res;
    res.coefficients = cc.coefficients();
    std::vector<BoundaryData> data;
    for (int k = cc.min_degree(); k <= cc.max_degree() + 1; ++k) data.push_back(analyze(cc.boundary(k), cc.coefficients()));
    for (int k = cc.min_degree(); k <= cc.max_degree(); ++k) {
        auto i = static_cast<std::size_t>(k - cc.min_degree());
        HomologyResult::Degree d;
        d.degree = k;
        d.rank = cc.dim(k) - data[i].rank - data[i + 1].rank;
        d.torsion = data[i + 1].torsion;
        res.degrees.push_back(std::move(d));
    }
    return res;
}

namespace {

bool acyclic_result(const ChainComplex& cc, const HomologyResult& h) {
    if (cc.reduced()) return h.acyclic();
    for (const auto& d : h.degrees) {
        if (d.degree == 0) {
            if (d.rank != 1 || !d.torsion.empty()) return false;
        } else if (!d.vanishes()) {
            return false;
        }
    }
    return h.at(0) != nullptr;
}

}  // namespace

bool is_acyclic(const ChainComplex& cc) { return acyclic_result(cc, homology(cc.with_coefficients(0))); }

bool is_p_acyclic(const ChainComplex& cc, std::uint64_t p) {
    if (!is_prime(p)) fail(ErrorKind::Input, std::to_string(p) + " is not prime");
    auto c = cc.with_coefficients(p);
    return acyclic_result(c, homology(c));
}

// ------------------------------------------------------ homology generators

namespace {

template <class T>
HomologyGenerators generators_impl(const SparseMatrix& out_of_k, const SparseMatrix& into_k) {
    const std::size_t n = out_of_k.cols;
    SnfEngine<T> cycles(to_dense<T>(out_of_k), true);
    cycles.run();
    const std::size_t r = cycles.rank;
    const std::size_t z = n - r;
    // boundaries in kernel coordinates: rows r.. of V^-1 times the incoming boundary
    Dense<T> b(z, into_k.cols);
    for (std::size_t j = 0; j < into_k.cols; ++j)
        for (const auto& [row, val] : into_k.columns[j]) {
            T x(static_cast<long>(val));
            for (std::size_t i = 0; i < z; ++i) {
                const T& w = cycles.vinv(r + i, row);
                if (!is_zero(w)) b(i, j) = add(b(i, j), mul(w, x));
            }
        }
    SnfEngine<T> quotient(std::move(b), true);
    quotient.run();

    HomologyGenerators gens;
    for (std::size_t i = 0; i < z; ++i) {
        T order = i < quotient.rank ? quotient.a(i, i) : T(0);
        if (magnitude(order) == T(1)) continue;
        std::vector<BigInt> cyc(n, BigInt(0));
        // column i of K · U'^-1 with K = trailing columns of V
        for (std::size_t l = 0; l < z; ++l) {
            const T& c = quotient.uinv(l, i);
            if (is_zero(c)) continue;
            for (std::size_t row = 0; row < n; ++row) {
                const T& kv = cycles.v(row, r + l);
                if (!is_zero(kv)) cyc[row] += to_big(mul(kv, c));
            }
        }
        gens.cycles.push_back(std::move(cyc));
        gens.orders.push_back(to_big(order));
    }
    return gens;
}

}  // namespace

HomologyGenerators homology_generators(const ChainComplex& cc, int k) {
    auto out = cc.boundary(k);
    auto in = cc.boundary(k + 1);
    HomologyGenerators gens;
    try {
        gens = generators_impl<i64>(out, in);
    } catch (const Overflow&) {
        gens = generators_impl<BigInt>(out, in);
    }
    for (const auto& cyc : gens.cycles) {
        std::vector<BigInt> image(out.rows, BigInt(0));
        for (std::size_t c = 0; c < out.cols; ++c)
            for (const auto& [row, v] : out.columns[c]) image[row] += cyc[c] * BigInt(static_cast<long>(v));
        for (const auto& x : image)
            if (sgn(x) != 0) fail(ErrorKind::Invariant, "homology generator is not a cycle");
    }
    return gens;
}

// ----------------------------------------------------- simplicial complexes

ChainComplex simplicial_chain_complex(const SkeletalComplex& complex, Coefficients coefficients, bool reduced,
                                      const Caps& caps) {
    if (complex.face_count() > caps.homology_faces)
        fail(ErrorKind::CapExceeded, "complex has " + std::to_string(complex.face_count()) +
                                         " faces, above the homology cap " + std::to_string(caps.homology_faces));
    const int top = complex.dim();
    const int lo = reduced ? -1 : 0;
    std::vector<std::size_t> dims;
    std::vector<SparseMatrix> bds;
    for (int k = lo; k <= top; ++k) {
        const std::size_t n = k < 0 ? 1 : complex.count(k);
        const std::size_t below = k == lo ? 0 : (k - 1 < 0 ? 1 : complex.count(k - 1));
        SparseMatrix d(below, n);
        if (k == 0 && reduced) {
            for (std::size_t i = 0; i < n; ++i) d.push(0, i, 1);
        } else if (k >= 1) {
            std::vector<Vertex> sub(static_cast<std::size_t>(k));
            for (std::size_t i = 0; i < n; ++i) {
                auto f = complex.face(k, i);
                for (std::size_t drop = 0; drop <= static_cast<std::size_t>(k); ++drop) {
                    std::size_t w = 0;
                    for (std::size_t v = 0; v <= static_cast<std::size_t>(k); ++v)
                        if (v != drop) sub[w++] = f[v];
                    auto idx = complex.index_of(sub);
                    if (!idx) fail(ErrorKind::Invariant, "simplicial complex is not closed downward");
                    d.push(*idx, i, drop % 2 == 0 ? 1 : -1);
                }
            }
        }
        d.canonicalize();
        dims.push_back(n);
        bds.push_back(std::move(d));
    }
    return ChainComplex(lo, std::move(dims), std::move(bds), coefficients, reduced);
}

}  // namespace acatlab
