#include "holant/sigcalc.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace holant {

mpq_class binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return mpq_class(r);
}

SymmetricSignature::SymmetricSignature(std::vector<Alg> entries) : e_(std::move(entries)) {
    if (e_.empty()) throw ArityError("symmetric signature needs at least one entry");
}

bool SymmetricSignature::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Alg& x) { return x.is_zero(); });
}

bool SymmetricSignature::is_degenerate() const {
    int n = arity();
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            if (e_[j] * e_[k + 1] != e_[j + 1] * e_[k]) return false;
    return true;
}

SymmetricSignature SymmetricSignature::reversed() const {
    return SymmetricSignature(std::vector<Alg>(e_.rbegin(), e_.rend()));
}

SymmetricSignature SymmetricSignature::scaled(const Alg& c) const {
    std::vector<Alg> out;
    out.reserve(e_.size());
    for (const auto& x : e_) out.push_back(c * x);
    return SymmetricSignature(std::move(out));
}

SymmetricSignature operator+(const SymmetricSignature& a, const SymmetricSignature& b) {
    if (a.arity() != b.arity()) throw ArityError("arity mismatch in sum");
    std::vector<Alg> out(a.e_.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.e_[k] + b.e_[k];
    return SymmetricSignature(std::move(out));
}

SymmetricSignature operator-(const SymmetricSignature& a, const SymmetricSignature& b) {
    return a + b.scaled(Alg(-1));
}

std::string SymmetricSignature::to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < e_.size(); ++k) {
        if (k) s += ", ";
        s += e_[k].to_string();
    }
    return s + "]";
}

std::optional<Alg> proportional(const Sig& a, const Sig& b) {
    if (a.arity() != b.arity()) return std::nullopt;
    int piv = -1;
    for (int k = 0; k <= b.arity(); ++k)
        if (!b[k].is_zero()) {
            piv = k;
            break;
        }
    if (piv < 0 || a[piv].is_zero()) return std::nullopt;
    Alg c = a[piv] / b[piv];
    for (int k = 0; k <= a.arity(); ++k)
        if (a[k] != c * b[k]) return std::nullopt;
    return c;
}

Transform2x2 Transform2x2::Z() { return {1, 1, Alg::i(), -Alg::i()}; }
Transform2x2 Transform2x2::H() { return {1, 1, 1, -1}; }

bool Transform2x2::orthogonal() const {
    return t00 * t00 + t01 * t01 == Alg(1) && t10 * t10 + t11 * t11 == Alg(1) &&
           (t00 * t10 + t01 * t11).is_zero();
}

Transform2x2 Transform2x2::inverse() const {
    Alg d = det();
    if (d.is_zero()) throw SingularTransform();
    Alg inv = d.inverse();
    return {t11 * inv, -t01 * inv, -t10 * inv, t00 * inv};
}

Transform2x2 operator*(const Transform2x2& a, const Transform2x2& b) {
    return {a.t00 * b.t00 + a.t01 * b.t10, a.t00 * b.t01 + a.t01 * b.t11, a.t10 * b.t00 + a.t11 * b.t10,
            a.t10 * b.t01 + a.t11 * b.t11};
}

GeneralSignature::GeneralSignature(int arity, std::vector<Alg> entries) : n_(arity), e_(std::move(entries)) {
    if (arity < 0 || arity > 24 || e_.size() != (std::size_t{1} << arity))
        throw ArityError("general signature needs 2^n entries");
}

GeneralSignature GeneralSignature::from_symmetric(const Sig& f) {
    int n = f.arity();
    std::vector<Alg> e(std::size_t{1} << n);
    for (unsigned idx = 0; idx < e.size(); ++idx) e[idx] = f[__builtin_popcount(idx)];
    return GeneralSignature(n, std::move(e));
}

const Alg& GeneralSignature::at_bits(const std::vector<int>& bits) const {
    if (static_cast<int>(bits.size()) != n_) throw ArityError("bit vector length mismatch");
    unsigned idx = 0;
    for (int b : bits) idx = (idx << 1) | static_cast<unsigned>(b & 1);
    return e_[idx];
}

bool GeneralSignature::is_symmetric() const { return symmetric().has_value(); }

std::optional<Sig> GeneralSignature::symmetric() const {
    std::vector<Alg> f(n_ + 1);
    std::vector<bool> seen(n_ + 1, false);
    for (unsigned idx = 0; idx < e_.size(); ++idx) {
        int w = __builtin_popcount(idx);
        if (!seen[w]) {
            f[w] = e_[idx];
            seen[w] = true;
        } else if (f[w] != e_[idx]) {
            return std::nullopt;
        }
    }
    return Sig(std::move(f));
}

GeneralSignature GeneralSignature::rotated() const {
    if (n_ == 0) return *this;
    std::vector<Alg> out(e_.size());
    unsigned top = 1u << (n_ - 1);
    for (unsigned x = 0; x < e_.size(); ++x) {
        // x = x1..xn (x1 most significant); source index is x2..xn x1.
        unsigned x1 = (x & top) ? 1u : 0u;
        unsigned src = ((x << 1) & (e_.size() - 1)) | x1;
        out[x] = e_[src];
    }
    return GeneralSignature(n_, std::move(out));
}

GeneralSignature GeneralSignature::transformed(const Transform2x2& t) const {
    std::vector<Alg> cur = e_;
    for (int slot = 0; slot < n_; ++slot) {
        unsigned bit = 1u << (n_ - 1 - slot);
        std::vector<Alg> nxt(cur.size());
        for (unsigned idx = 0; idx < cur.size(); ++idx) {
            if (idx & bit) continue;
            const Alg& a0 = cur[idx];
            const Alg& a1 = cur[idx | bit];
            nxt[idx] = t.t00 * a0 + t.t01 * a1;
            nxt[idx | bit] = t.t10 * a0 + t.t11 * a1;
        }
        cur = std::move(nxt);
    }
    return GeneralSignature(n_, std::move(cur));
}

Sig eq_sig(int k) {
    if (k < 1) throw ArityError("equality needs arity >= 1");
    return gen_eq(1, 1, k);
}

Sig neq2() { return Sig{0, 1, 0}; }

Sig exact_one(int k) {
    if (k < 1) throw ArityError("ExactOne needs arity >= 1");
    std::vector<Alg> e(k + 1);
    e[1] = 1;
    return Sig(std::move(e));
}

Sig all_but_one(int k) { return exact_one(k).reversed(); }

Sig gen_eq(const Alg& a, const Alg& b, int k) {
    if (k < 1) throw ArityError("generalized equality needs arity >= 1");
    std::vector<Alg> e(k + 1);
    e[0] = a;
    e[k] = b;
    return Sig(std::move(e));
}

Sig tensor_power(const Vec2& u, int k) {
    if (k < 0) throw ArityError("negative arity");
    std::vector<Alg> e(k + 1);
    for (int j = 0; j <= k; ++j) e[j] = u[0].pow(k - j) * u[1].pow(j);
    return Sig(std::move(e));
}

Sig sym_one(const Vec2& u, const Vec2& v, int n) {
    if (n < 1) throw ArityError("Sym form needs arity >= 1");
    std::vector<Alg> e(n + 1);
    for (int k = 0; k <= n; ++k) {
        Alg s;
        if (n - k >= 1) s += Alg(n - k) * u[0].pow(n - k - 1) * u[1].pow(k) * v[0];
        if (k >= 1) s += Alg(k) * u[0].pow(n - k) * u[1].pow(k - 1) * v[1];
        e[k] = s;
    }
    return Sig(std::move(e));
}

Sig derivative(const Sig& f, const Sig& g) {
    int n = f.arity(), m = g.arity();
    if (m >= n) throw ArityError("derivative needs arity(g) < arity(f)");
    std::vector<Alg> h(n - m + 1);
    for (int k = 0; k <= n - m; ++k) {
        Alg s;
        for (int j = 0; j <= m; ++j) {
            if (g[j].is_zero()) continue;
            s += Alg(binomial(m, j)) * g[j] * f[k + j];
        }
        h[k] = s;
    }
    return Sig(std::move(h));
}

Sig self_loop(const Sig& f) { return derivative(f, Sig{1, 0, 1}); }

Sig integral(const Sig& fp) {
    int n = fp.arity();
    std::vector<Alg> F(n + 3);
    for (int k = 0; k <= n + 2; ++k) {
        Alg s;
        for (int t = 0; k + 2 * t <= n; ++t) {
            if (t % 2 == 0)
                s += fp[k + 2 * t];
            else
                s -= fp[k + 2 * t];
        }
        F[k] = s;
    }
    return Sig(std::move(F));
}

namespace {

using Poly = std::vector<Alg>;  // coefficient of Y^j in a homogeneous form

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

std::vector<Poly> linear_powers(const Alg& x_coeff, const Alg& y_coeff, int n) {
    std::vector<Poly> p(n + 1);
    p[0] = Poly{Alg(1)};
    Poly lin{x_coeff, y_coeff};
    for (int k = 1; k <= n; ++k) p[k] = poly_mul(p[k - 1], lin);
    return p;
}

}  // namespace

Sig transform(const Transform2x2& t, const Sig& f) {
    int n = f.arity();
    // Q_f(X, Y) = sum_w C(n,w) f_w X^{n-w} Y^w; Q_{Tf}(X, Y) = Q_f(t00 X + t10 Y, t01 X + t11 Y).
    auto A = linear_powers(t.t00, t.t10, n);
    auto B = linear_powers(t.t01, t.t11, n);
    Poly q(n + 1);
    for (int w = 0; w <= n; ++w) {
        if (f[w].is_zero()) continue;
        Poly term = poly_mul(A[n - w], B[w]);
        Alg c = Alg(binomial(n, w)) * f[w];
        for (int j = 0; j <= n; ++j)
            if (!term[j].is_zero()) q[j] += c * term[j];
    }
    for (int k = 0; k <= n; ++k) q[k] /= Alg(binomial(n, k));
    return Sig(std::move(q));
}

Sig transform_row(const Sig& f, const Transform2x2& t) { return transform(t.transpose(), f); }

Sig z_hat(const Sig& f) { return transform(Transform2x2::Z().inverse(), f); }

namespace {

// Row reduction; returns the rank and a basis of the right null space.
std::pair<int, std::vector<std::vector<Alg>>> rank_null(Matrix m, int cols) {
    int rows = static_cast<int>(m.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Alg inv = m[r][c].inverse();
        for (int k = c; k < cols; ++k) m[r][k] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Alg f = m[i][c];
            for (int k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::vector<Alg>> null;
    for (int free = 0; free < cols; ++free) {
        if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
        std::vector<Alg> v(cols);
        v[free] = 1;
        for (int i = 0; i < r; ++i) v[pivot_col[i]] = -m[i][free];
        null.push_back(std::move(v));
    }
    return {r, null};
}

}  // namespace

RecurrenceType recurrence_analysis(const Sig& f) {
    int n = f.arity();
    if (n < 2) throw ArityError("recurrence analysis needs arity >= 2");
    Matrix h;
    for (int k = 0; k + 2 <= n; ++k) h.push_back({f[k], f[k + 1], f[k + 2]});
    auto [rank, null] = rank_null(h, 3);
    RecurrenceType out;
    out.rank = rank;
    for (auto& v : null) out.types.push_back({v[0], -v[1], v[2]});
    if (out.types.size() == 1) {
        const auto& t = out.types[0];
        out.distinct_roots = t[1] * t[1] != Alg(4) * t[0] * t[2];
    }
    return out;
}

VanishingDegrees vanishing_degrees(const Sig& f) {
    int n = f.arity();
    Sig fh = z_hat(f);
    int last = -1, first = -1;
    for (int k = 0; k <= n; ++k)
        if (!fh[k].is_zero()) {
            if (first < 0) first = k;
            last = k;
        }
    VanishingDegrees d{};
    d.rd_plus = last;
    d.rd_minus = last < 0 ? -1 : n - first;
    d.vd_plus = n - d.rd_plus;
    d.vd_minus = n - d.rd_minus;
    d.in_v_plus = 2 * d.vd_plus > n;
    d.in_v_minus = 2 * d.vd_minus > n;
    return d;
}

Sig TensorDecomposition::reexpand(int n) const {
    switch (kind) {
        case Kind::Zero:
            return Sig(std::vector<Alg>(n + 1));
        case Kind::Degenerate:
            return tensor_power(u, n).scaled(x);
        case Kind::Distinct:
            return tensor_power(u, n).scaled(x) + tensor_power(v, n).scaled(y);
        case Kind::DoubleRoot:
            return sym_one(u, v, n);
        default:
            throw std::logic_error("no expansion available");
    }
}

namespace {

Vec2 normalize(const Vec2& u) {
    if (!u[0].is_zero()) return {Alg(1), u[1] / u[0]};
    return {Alg(0), Alg(1)};
}

// Solve f = x A + y B using two entries, then verify.
std::optional<std::pair<Alg, Alg>> solve_two(const Sig& f, const Sig& A, const Sig& B) {
    int n = f.arity();
    for (int k = 0; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
            Alg d = A[k] * B[l] - A[l] * B[k];
            if (d.is_zero()) continue;
            Alg x = (f[k] * B[l] - f[l] * B[k]) / d;
            Alg y = (A[k] * f[l] - A[l] * f[k]) / d;
            if (A.scaled(x) + B.scaled(y) == f) return std::make_pair(x, y);
            return std::nullopt;
        }
    return std::nullopt;
}

TensorDecomposition degenerate_of(const Sig& f) {
    TensorDecomposition d;
    d.kind = TensorDecomposition::Kind::Degenerate;
    int n = f.arity();
    if (!f[0].is_zero()) {
        d.u = {Alg(1), f[1] / f[0]};
        d.x = f[0];
    } else {
        d.u = {Alg(0), Alg(1)};
        d.x = f[n];
    }
    return d;
}

TensorDecomposition binary_decompose(const Sig& f) {
    TensorDecomposition d;
    d.kind = TensorDecomposition::Kind::Distinct;
    const Alg &f0 = f[0], &f1 = f[1], &f2 = f[2];
    if (f1.is_zero()) {
        d.x = f0, d.u = {Alg(1), Alg(0)}, d.y = f2, d.v = {Alg(0), Alg(1)};
    } else if (!f2.is_zero()) {
        d.x = f0 - f1 * f1 / f2, d.u = {Alg(1), Alg(0)};
        d.v = {Alg(1), f2 / f1};
        d.y = f1 * f1 / f2;
    } else if (!f0.is_zero()) {
        d.x = -f1 * f1 / f0, d.u = {Alg(0), Alg(1)};
        d.v = {Alg(1), f1 / f0};
        d.y = f0;
    } else {
        Alg half = f1 / Alg(2);
        d.x = half, d.u = {Alg(1), Alg(1)}, d.y = -half, d.v = {Alg(1), Alg(-1)};
    }
    return d;
}

}  // namespace

TensorDecomposition tensor_decompose(const Sig& f) {
    int n = f.arity();
    if (n < 1) throw ArityError("tensor decomposition needs arity >= 1");
    TensorDecomposition d;
    if (f.is_zero()) return d;
    if (f.is_degenerate()) return degenerate_of(f);
    if (n == 2) return binary_decompose(f);
    RecurrenceType rec = recurrence_analysis(f);
    if (rec.types.size() != 1) {
        d.kind = TensorDecomposition::Kind::NoRecurrence;
        return d;
    }
    const Alg &a = rec.types[0][0], &b = rec.types[0][1], &c = rec.types[0][2];
    d.type = rec.types[0];
    // Roots [s, t] of a s^2 - b s t + c t^2 = 0.
    Alg disc = b * b - Alg(4) * a * c;
    if (disc.is_zero()) {
        Vec2 u = c.is_zero() ? Vec2{Alg(0), Alg(1)} : normalize(Vec2{Alg(2) * c, b});
        Vec2 w0 = u[0].is_zero() ? Vec2{Alg(1), Alg(0)} : Vec2{Alg(0), Alg(1)};
        auto xy = solve_two(f, tensor_power(u, n), sym_one(u, w0, n));
        if (!xy) throw std::logic_error("double-root decomposition failed");
        Alg coef = xy->first / Alg(n);
        d.kind = TensorDecomposition::Kind::DoubleRoot;
        d.u = u;
        d.v = {coef * u[0] + xy->second * w0[0], coef * u[1] + xy->second * w0[1]};
        return d;
    }
    Vec2 r1, r2;
    if (c.is_zero()) {
        r1 = {Alg(0), Alg(1)};
        r2 = normalize(Vec2{b, a});
    } else {
        auto r = sqrt_exact(disc);
        if (!r) {
            d.kind = TensorDecomposition::Kind::Irrational;
            return d;
        }
        r1 = normalize(Vec2{Alg(2) * c, b + *r});
        r2 = normalize(Vec2{Alg(2) * c, b - *r});
    }
    // Deterministic order: [1, t] before [0, 1]; larger t first.
    if (r1[0].is_zero() || (!r2[0].is_zero() && lex_less(r1[1], r2[1]))) std::swap(r1, r2);
    auto xy = solve_two(f, tensor_power(r1, n), tensor_power(r2, n));
    if (!xy) throw std::logic_error("distinct-root decomposition failed");
    d.kind = TensorDecomposition::Kind::Distinct;
    d.x = xy->first, d.u = r1, d.y = xy->second, d.v = r2;
    return d;
}

Matrix signature_matrix(const GeneralSignature& g) {
    if (g.arity() != 4) throw ArityError("signature matrix needs arity 4");
    Matrix m(4, std::vector<Alg>(4));
    for (unsigned r = 0; r < 4; ++r)
        for (unsigned c = 0; c < 4; ++c) {
            // Row bits x1 x2, column bits x4 x3.
            unsigned x1 = r >> 1, x2 = r & 1, x4 = c >> 1, x3 = c & 1;
            m[r][c] = g.at((x1 << 3) | (x2 << 2) | (x3 << 1) | x4);
        }
    return m;
}

Matrix compress(const Matrix& m) {
    Matrix out(3, std::vector<Alg>(3));
    Alg half = Alg::rational(1, 2);
    for (int c = 0; c < 3; ++c) {
        auto col = [&](int r) {
            if (c == 0) return m[r][0];
            if (c == 1) return m[r][1] + m[r][2];
            return m[r][3];
        };
        out[0][c] = col(0);
        out[1][c] = half * (col(1) + col(2));
        out[2][c] = col(3);
    }
    return out;
}

Alg det3(const Matrix& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Alg determinant(Matrix m) {
    int n = static_cast<int>(m.size());
    Alg det = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Alg inv = m[c][c].inverse();
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            Alg f = m[r][c] * inv;
            for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

SignatureMatrixInfo signature_matrix_ops(const GeneralSignature& g) {
    SignatureMatrixInfo info;
    info.m = signature_matrix(g);
    const Matrix& m = info.m;
    bool rows = m[1] == m[2];
    bool cols = true;
    for (int r = 0; r < 4; ++r) cols = cols && m[r][1] == m[r][2];
    info.redundant = rows && cols;
    if (info.redundant) {
        info.compressed = compress(m);
        info.compressed_det = det3(info.compressed);
    }
    info.rotated = g.rotated();
    return info;
}

SignatureMatrixInfo signature_matrix_ops(const Sig& f) {
    if (f.arity() != 4) throw ArityError("signature matrix needs arity 4");
    return signature_matrix_ops(GeneralSignature::from_symmetric(f));
}

}  // namespace holant
