#include "holant/classify.hpp"

#include <functional>
#include <numeric>

namespace holant {

namespace {

const Alg kI = Alg::i();
const Alg kW = Alg::zeta();

Alg pairing(const Vec2& u, const Vec2& v) { return u[0] * v[0] + u[1] * v[1]; }

bool fourth_root_of_unity(const Alg& x) { return unit_tests(x).fourth_power_one; }

bool is_pm1(const Alg& x) { return x == Alg(1) || x == Alg(-1); }
bool is_pmi(const Alg& x) { return x == kI || x == -kI; }

Transform2x2 columns(const Vec2& a, const Vec2& b) { return {a[0], b[0], a[1], b[1]}; }

Vec2 scale_vec(const Vec2& u, const Alg& c) { return {u[0] * c, u[1] * c}; }

// Element p + q*sqrt(D) of the quadratic extension Q(w)(sqrt D).
struct QExt {
    Alg p, q;
};

QExt mul(const QExt& a, const QExt& b, const Alg& D) {
    return {a.p * b.p + a.q * b.q * D, a.p * b.q + a.q * b.p};
}

QExt qpow(QExt a, long e, const Alg& D) {
    QExt r{Alg(1), Alg(0)};
    while (e > 0) {
        if (e & 1) r = mul(r, a, D);
        a = mul(a, a, D);
        e >>= 1;
    }
    return r;
}

// Orthogonal O with O u0 = u/s and O v0 = v/t.
Transform2x2 frame(const Vec2& u, const Alg& s, const Vec2& v, const Alg& t, const Vec2& u0, const Vec2& v0) {
    Transform2x2 target = columns(scale_vec(u, s.inverse()), scale_vec(v, t.inverse()));
    return target * columns(u0, v0).inverse();
}

// Witness for f = x u^n + y v^n in the two-vector canonical form over (u0, v0), where
// s^2 <u0,u0> = A and t = C / (s <u0,v0>) or sqrt(B / <v0,v0>) when C = 0.
std::optional<Witness> two_vector_witness(const TensorDecomposition& d, int n, const Vec2& u0, const Vec2& v0) {
    Alg A = pairing(d.u, d.u), B = pairing(d.v, d.v), C = pairing(d.u, d.v);
    auto s = sqrt_exact(A / pairing(u0, u0));
    if (!s) return std::nullopt;
    Alg t;
    Alg c0 = pairing(u0, v0);
    if (C.is_zero() || c0.is_zero()) {
        auto tt = sqrt_exact(B / pairing(v0, v0));
        if (!tt) return std::nullopt;
        t = *tt;
    } else {
        t = C / (*s * c0);
    }
    Witness w;
    w.t = frame(d.u, *s, d.v, t, u0, v0);
    Alg beta = d.y * t.pow(n) / (d.x * s->pow(n));
    w.canonical = tensor_power(u0, n) + tensor_power(v0, n).scaled(beta);
    w.scale = d.x * s->pow(n);
    return w;
}

std::optional<Witness> m2_witness(const TensorDecomposition& d, int n) {
    Alg A = pairing(d.u, d.u), B = pairing(d.v, d.v), C = pairing(d.u, d.v);
    auto r = sqrt_exact(A * B);
    if (!r) return std::nullopt;
    Alg rho = C / *r;
    if (rho == Alg(-1)) rho = Alg(1);
    Alg g = (Alg(1) - rho) / (Alg(1) + rho);
    auto gamma = sqrt_exact(g);
    if (!gamma) return std::nullopt;
    return two_vector_witness(d, n, {Alg(1), *gamma}, {Alg(1), -*gamma});
}

Membership yes(std::optional<Witness> w = std::nullopt, std::string note = "") {
    Membership m;
    m.member = true;
    m.witness = std::move(w);
    m.note = std::move(note);
    return m;
}

std::vector<Sig> nonzero(const std::vector<Sig>& F) {
    std::vector<Sig> out;
    for (const auto& f : F)
        if (!f.is_zero()) out.push_back(f);
    return out;
}

bool all_in(const std::vector<Sig>& F, const Transform2x2& t, const std::function<bool(const Sig&)>& pred) {
    Transform2x2 ti = t.inverse();
    for (const auto& g : F)
        if (!pred(transform(ti, g))) return false;
    return true;
}

// Non-degenerate signatures of arity at least 3.
std::vector<Sig> anchors_of(const std::vector<Sig>& F) {
    std::vector<Sig> out;
    for (const auto& f : F)
        if (f.arity() >= 3 && !f.is_degenerate()) out.push_back(f);
    return out;
}

const Sig kEq2{Alg(1), Alg(0), Alg(1)};

// Search over candidates; valid ones keep [1,0,1] T^{(x)2} inside the class.
bool try_candidates(const std::vector<Sig>& F, const std::vector<Transform2x2>& cands,
                    const std::function<bool(const Sig&)>& pred, SetTransform& out) {
    for (const auto& t : cands) {
        if (!t.invertible()) continue;
        if (!pred(transform_row(kEq2, t))) continue;
        if (all_in(F, t, pred)) {
            out.found = true;
            out.t = t;
            return true;
        }
    }
    return false;
}

std::optional<Alg> rational_root(const mpq_class& q, int n) {
    if (q == 0) return Alg(0);
    if (q < 0 && n % 2 == 0) return std::nullopt;
    mpz_class num = abs(q.get_num()), den = q.get_den(), rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n)) return std::nullopt;
    mpq_class r(rn, rd);
    if (q < 0) r = -r;
    return Alg(r);
}

int gcd_of(const std::vector<int>& xs) {
    int g = 0;
    for (int x : xs) g = std::gcd(g, x);
    return g;
}

}  // namespace

std::string class_name(TractableClass c) {
    switch (c) {
        case TractableClass::P: return "P";
        case TractableClass::A: return "A";
        case TractableClass::Adagger: return "Adagger";
        case TractableClass::Mhat: return "Mhat";
        case TractableClass::MhatDagger: return "MhatDagger";
        case TractableClass::Matchgate: return "Matchgate";
        case TractableClass::Vplus: return "Vplus";
        case TractableClass::Vminus: return "Vminus";
        case TractableClass::P1: return "P1";
        case TractableClass::P2: return "P2";
        case TractableClass::A1: return "A1";
        case TractableClass::A3: return "A3";
        case TractableClass::M1: return "M1";
        case TractableClass::M2: return "M2";
        case TractableClass::M3: return "M3";
        case TractableClass::M4plus: return "M4plus";
        case TractableClass::M4minus: return "M4minus";
        case TractableClass::ZP: return "ZP";
    }
    return "?";
}

std::string framework_name(Framework f) {
    switch (f) {
        case Framework::PlCSP: return "plcsp";
        case Framework::PlCSP2: return "plcsp2";
        case Framework::BinaryEq: return "binary-eq";
        case Framework::Single: return "single";
        case Framework::PlHolant: return "plholant";
        case Framework::Hypergraph: return "hpm";
    }
    return "?";
}

bool Witness::verify(const Sig& f) const {
    if (canonical.arity() != f.arity()) return false;
    return transform(t, canonical).scaled(scale) == f;
}

std::optional<Alg> nth_root_exact(const Alg& z, int n) {
    if (n < 1 || z.is_zero()) return std::nullopt;
    if (n == 1) return z;
    if (n % 2 == 0) {
        auto s = sqrt_exact(z);
        if (!s) return std::nullopt;
        if (auto r = nth_root_exact(*s, n / 2)) return r;
        return nth_root_exact(-*s, n / 2);
    }
    for (int j = 0; j < 8; ++j) {
        Alg q = z * Alg::zeta_pow(-j);
        if (!q.is_rational()) continue;
        auto r = rational_root(q.coeff(0), n);
        if (!r) continue;
        for (int jp = 0; jp < 8; ++jp)
            if ((n * jp) % 8 == j) return *r * Alg::zeta_pow(jp);
    }
    return std::nullopt;
}

bool in_P(const Sig& f) {
    if (f.is_zero() || f.is_degenerate()) return true;
    int n = f.arity();
    if (n == 2 && f[0].is_zero() && f[2].is_zero()) return true;
    for (int k = 1; k < n; ++k)
        if (!f[k].is_zero()) return false;
    return true;
}

bool in_A(const Sig& f) {
    if (f.is_zero()) return true;
    int n = f.arity();
    if (f.is_degenerate()) {
        if (f[0].is_zero()) return true;
        Alg t = f[1] / f[0];
        return t.is_zero() || fourth_root_of_unity(t);
    }
    const std::array<std::pair<Vec2, Vec2>, 3> pairs{{
        {{Alg(1), Alg(0)}, {Alg(0), Alg(1)}},
        {{Alg(1), Alg(1)}, {Alg(1), Alg(-1)}},
        {{Alg(1), kI}, {Alg(1), -kI}},
    }};
    for (const auto& [p, q] : pairs) {
        Sig a = tensor_power(p, n), b = tensor_power(q, n);
        Alg ir(1);
        for (int r = 0; r < 4; ++r, ir *= kI)
            if (proportional(f, a + b.scaled(ir))) return true;
    }
    return false;
}

bool in_Adagger(const Sig& f) { return in_A(transform(Transform2x2::diag(Alg(1), kW.inverse()), f)); }

bool in_matchgate(const Sig& f) {
    if (f.is_zero()) return true;
    int n = f.arity();
    bool odd_zero = true, even_zero = true;
    for (int k = 0; k <= n; ++k) {
        if (f[k].is_zero()) continue;
        (k % 2 ? odd_zero : even_zero) = false;
    }
    if (!odd_zero && !even_zero) return false;
    std::vector<Alg> sub;
    for (int k = odd_zero ? 0 : 1; k <= n; k += 2) sub.push_back(f[k]);
    if (sub.size() <= 2) return true;
    return Sig(sub).is_degenerate();
}

bool in_Mhat(const Sig& f) { return in_matchgate(transform(Transform2x2::H(), f)); }

bool in_MhatDagger(const Sig& f) { return in_matchgate(transform(Transform2x2::Z().inverse(), f)); }

bool in_ZP(const Sig& f) { return in_P(z_hat(f)); }

bool in_P2(const Sig& f) {
    Sig h = z_hat(f);
    int n = h.arity();
    if (h[0].is_zero() || h[n].is_zero()) return false;
    for (int k = 1; k < n; ++k)
        if (!h[k].is_zero()) return false;
    return true;
}

SignPair in_vanishing(const Sig& f) {
    VanishingDegrees v = vanishing_degrees(f);
    return {v.in_v_plus, v.in_v_minus};
}

SignPair in_M4(const Sig& f) {
    if (f.is_zero()) return {};
    Sig h = z_hat(f);
    int n = h.arity();
    return {proportional(h, exact_one(n)).has_value(), proportional(h, all_but_one(n)).has_value()};
}

SignPair in_R2(const Sig& f) {
    VanishingDegrees v = vanishing_degrees(f);
    return {v.rd_plus <= 1, v.rd_minus <= 1};
}

FamilyReport in_transformable_family(const Sig& f) {
    FamilyReport rep;
    int n = f.arity();
    SignPair m4 = in_M4(f);
    if (m4.plus || m4.minus) {
        Sig h = z_hat(f);
        Sig canon = m4.plus ? exact_one(n) : all_but_one(n);
        Witness w{Transform2x2::Z(), canon, *proportional(h, canon)};
        (m4.plus ? rep.m4plus : rep.m4minus) = yes(w);
    }
    if (n < 1 || f.is_zero() || f.is_degenerate()) return rep;
    TensorDecomposition d = tensor_decompose(f);
    rep.decomposition = d;
    using K = TensorDecomposition::Kind;

    if (d.kind == K::DoubleRoot) {
        Alg A = pairing(d.u, d.u), C = pairing(d.u, d.v);
        if (C.is_zero() && !A.is_zero()) {
            std::optional<Witness> w;
            auto s = sqrt_exact(A);
            auto t = sqrt_exact(pairing(d.v, d.v));
            if (s && t) {
                Witness ww;
                ww.t = columns(scale_vec(d.u, s->inverse()), scale_vec(d.v, t->inverse()));
                ww.canonical = exact_one(n);
                ww.scale = s->pow(n - 1) * *t;
                w = ww;
            }
            rep.m3 = yes(w, w ? "" : "orthogonal frame outside Q(w)");
        }
        return rep;
    }

    if (d.kind == K::Distinct) {
        Alg A = pairing(d.u, d.u), B = pairing(d.v, d.v), C = pairing(d.u, d.v);
        if (A.is_zero() && B.is_zero()) {
            Witness w{Transform2x2::Z(), z_hat(f), Alg(1)};
            rep.p2 = yes(w, "canonical form [1,i]^n + beta [1,-i]^n");
            rep.m2 = rep.p2;
            return rep;
        }
        if (A.is_zero() || B.is_zero()) return rep;
        Alg beta2 = d.y * d.y * B.pow(n) / (d.x * d.x * A.pow(n));
        const Vec2 e1{Alg(1), Alg(1)}, e2{Alg(1), Alg(-1)};
        if (C.is_zero()) {
            auto w = two_vector_witness(d, n, e1, e2);
            std::string note = w ? "" : "orthogonal frame outside Q(w)";
            rep.p1 = yes(w, note);
            if (beta2 == Alg(n % 2 ? -1 : 1)) rep.m1 = yes(w, note);
            if (is_pm1(beta2) || (n % 2 == 1 && is_pmi(beta2))) rep.a1 = yes(w, note);
        }
        if (C * C == -(A * B) && is_pm1(beta2)) {
            auto w = two_vector_witness(d, n, {Alg(1), kW}, {Alg(1), -kW});
            rep.a3 = yes(w, w ? "" : "orthogonal frame outside Q(w)");
        }
        if (beta2 == Alg(1)) {
            auto w = m2_witness(d, n);
            rep.m2 = yes(w, w ? "" : "orthogonal frame outside Q(w)");
        }
        return rep;
    }

    if (d.kind == K::Irrational) {
        rep.irrational = true;
        const Alg &a = d.type[0], &b = d.type[1], &c = d.type[2];
        Alg D = b * b - Alg(4) * a * c;
        Alg two_c = Alg(2) * c;
        // u = [2c, b + sqrt D], v = [2c, b - sqrt D]; f = x u^n + y v^n with y the conjugate of x.
        Alg P = f[0] / two_c.pow(n);
        Alg Q = f[1] / two_c.pow(n - 1) - b * P;
        QExt x{P / Alg(2), Q / (Alg(2) * D)};
        QExt A{Alg(4) * c * c + b * b + D, Alg(2) * b};
        Alg C = Alg(4) * c * c + Alg(4) * a * c;
        Alg AB = A.p * A.p - A.q * A.q * D;
        const std::string note = "roots outside Q(w); decided by conjugate arithmetic, no witness";
        if (AB.is_zero()) return rep;
        QExt w = mul(mul(x, x, D), qpow(A, n, D), D);
        // beta^2 = conj(w) / w, which is 1 iff w.q = 0 and -1 iff w.p = 0.
        bool b_one = w.q.is_zero(), b_minus = w.p.is_zero();
        if (C.is_zero()) {
            rep.p1 = yes(std::nullopt, note);
            if ((n % 2 == 0 && b_one) || (n % 2 == 1 && b_minus)) rep.m1 = yes(std::nullopt, note);
            if (b_one || b_minus) rep.a1 = yes(std::nullopt, note);
        }
        if (C * C == -AB && (b_one || b_minus)) rep.a3 = yes(std::nullopt, note);
        if (b_one) rep.m2 = yes(std::nullopt, note);
        return rep;
    }
    return rep;
}

std::vector<ClassRow> class_table(const Sig& f) {
    FamilyReport r = in_transformable_family(f);
    SignPair v = in_vanishing(f);
    return {
        {TractableClass::P, in_P(f)},
        {TractableClass::A, in_A(f)},
        {TractableClass::Adagger, in_Adagger(f)},
        {TractableClass::Mhat, in_Mhat(f)},
        {TractableClass::MhatDagger, in_MhatDagger(f)},
        {TractableClass::Matchgate, in_matchgate(f)},
        {TractableClass::Vplus, v.plus},
        {TractableClass::Vminus, v.minus},
        {TractableClass::P1, r.p1.member},
        {TractableClass::P2, r.p2.member},
        {TractableClass::A1, r.a1.member},
        {TractableClass::A3, r.a3.member},
        {TractableClass::M1, r.m1.member},
        {TractableClass::M2, r.m2.member},
        {TractableClass::M3, r.m3.member},
        {TractableClass::M4plus, r.m4plus.member},
        {TractableClass::M4minus, r.m4minus.member},
        {TractableClass::ZP, in_ZP(f)},
    };
}

SetVerdict dichotomy_binary_eq(const Sig& f, const std::vector<int>& S) {
    if (f.arity() != 2) throw ArityError("binary signature expected");
    bool big = false;
    for (int r : S) {
        if (r < 1) throw BadS("arities must be positive");
        if (r >= 3) big = true;
    }
    if (!big) throw BadS("S must contain some r >= 3");
    int d = gcd_of(S);
    const Alg &f0 = f[0], &f1 = f[1], &f2 = f[2];
    Alg f0d = f0.pow(d), f2d = f2.pow(d);
    SetVerdict v;
    v.framework = Framework::BinaryEq;
    v.note = "d = " + std::to_string(d);
    int hit = 0;
    if (f0 * f2 == f1 * f1) hit = 1;
    else if (f0.is_zero() && f2.is_zero()) hit = 2;
    else if (f1.is_zero()) hit = 3;
    else if (f0 * f2 == -(f1 * f1) && f0d == -f2d && !f0d.is_zero()) hit = 4;
    else if (f0d == f2d && !f0d.is_zero()) hit = 5;
    v.tractable = hit != 0;
    if (hit) v.case_id = "condition " + std::to_string(hit);
    else v.obstruction = "none of the five conditions holds";
    return v;
}

namespace {

SetVerdict csp_verdict(Framework fw, const std::vector<Sig>& F,
                       const std::vector<std::pair<std::string, std::function<bool(const Sig&)>>>& classes) {
    SetVerdict v;
    v.framework = fw;
    std::string obstruction;
    for (const auto& [name, pred] : classes) {
        int bad = -1;
        for (std::size_t j = 0; j < F.size() && bad < 0; ++j)
            if (!pred(F[j])) bad = static_cast<int>(j);
        if (bad < 0) {
            v.tractable = true;
            v.case_id = name;
            return v;
        }
        if (!obstruction.empty()) obstruction += "; ";
        obstruction += "signature " + std::to_string(bad) + " not in " + name;
    }
    v.obstruction = obstruction;
    return v;
}

}  // namespace

SetVerdict dichotomy_plcsp(const std::vector<Sig>& F) {
    return csp_verdict(Framework::PlCSP, F, {{"P", in_P}, {"A", in_A}, {"Mhat", in_Mhat}});
}

SetVerdict dichotomy_plcsp2(const std::vector<Sig>& F) {
    return csp_verdict(Framework::PlCSP2, F,
                       {{"P", in_P}, {"A", in_A}, {"Adagger", in_Adagger}, {"Mhat", in_Mhat},
                        {"MhatDagger", in_MhatDagger}});
}

SetVerdict dichotomy_single(const Sig& f) {
    if (f.arity() < 3) throw ArityError("single-signature verdict needs arity >= 3");
    SetVerdict v;
    v.framework = Framework::Single;
    if (f.is_degenerate()) {
        v.tractable = true;
        v.case_id = "degenerate";
        return v;
    }
    FamilyReport r = in_transformable_family(f);
    SignPair van = in_vanishing(f);
    const std::vector<std::pair<std::string, const Membership*>> fams{
        {"P1", &r.p1}, {"M2", &r.m2}, {"A3", &r.a3}, {"M3", &r.m3}, {"M4plus", &r.m4plus}, {"M4minus", &r.m4minus}};
    for (const auto& [name, m] : fams)
        if (m->member) {
            v.tractable = true;
            v.case_id = name;
            if (m->witness) v.transform = m->witness->t;
            return v;
        }
    if (van.plus || van.minus) {
        v.tractable = true;
        v.case_id = van.plus ? "Vplus" : "Vminus";
        return v;
    }
    v.obstruction = "not in P1, M2, A3, M3, M4 or V";
    return v;
}

SetTransform set_P_transformable(const std::vector<Sig>& Fin) {
    std::vector<Sig> F = nonzero(Fin);
    SetTransform out;
    if (all_in(F, Transform2x2::Z(), in_P)) {
        out.found = true;
        out.t = Transform2x2::Z();
        return out;
    }
    bool pending = false;
    for (const auto& f : anchors_of(F)) {
        FamilyReport r = in_transformable_family(f);
        if (!r.p1.member && !r.p2.member) return out;
        if (r.p1.member && r.decomposition.kind == TensorDecomposition::Kind::Distinct) {
            try_candidates(F, {columns(r.decomposition.u, r.decomposition.v)}, in_P, out);
            return out;
        }
        if (r.p1.member) pending = true;
    }
    if (anchors_of(F).empty() && all_in(F, Transform2x2::identity(), in_P)) {
        out.found = true;
        return out;
    }
    out.undecided = pending;
    return out;
}

SetTransform set_A_transformable(const std::vector<Sig>& Fin) {
    std::vector<Sig> F = nonzero(Fin);
    SetTransform out;
    auto anchors = anchors_of(F);
    if (anchors.empty()) {
        out.found = all_in(F, Transform2x2::identity(), in_A);
        return out;
    }
    std::vector<FamilyReport> reps;
    for (const auto& f : anchors) {
        reps.push_back(in_transformable_family(f));
        const auto& r = reps.back();
        if (!r.a1.member && !r.p2.member && !r.a3.member) return out;
    }
    bool pending = false;
    for (const auto& r : reps) {
        const auto& d = r.decomposition;
        if (d.kind != TensorDecomposition::Kind::Distinct || r.p2.member) continue;
        auto rho = sqrt_exact(pairing(d.u, d.u) / pairing(d.v, d.v));
        if (!rho) {
            pending = true;
            continue;
        }
        Transform2x2 base = columns(d.u, d.v);
        try_candidates(F, {base * Transform2x2::diag(Alg(1), *rho), base * Transform2x2::diag(Alg(1), *rho * kW)},
                       in_A, out);
        return out;
    }
    bool irr = false;
    for (const auto& r : reps) irr = irr || r.irrational;
    if (pending || irr) {
        out.undecided = true;
        return out;
    }
    // Every anchor lies in A2: one free parameter kappa; try the roots that stay in Q(w).
    out.best_effort = true;
    std::vector<Transform2x2> cands;
    Sig h = z_hat(anchors.front());
    int m = h.arity();
    Alg ratio = h[m] / h[0];
    Alg ir(1);
    for (int k = 0; k < 4; ++k, ir *= kI)
        if (auto kappa = nth_root_exact(ratio * ir, m))
            cands.push_back(Transform2x2::Z() * Transform2x2::diag(Alg(1), *kappa));
    try_candidates(F, cands, in_A, out);
    return out;
}

SetTransform set_M_transformable(const std::vector<Sig>& Fin) {
    std::vector<Sig> F = nonzero(Fin);
    SetTransform out;
    if (all_in(F, Transform2x2::Z(), in_matchgate)) {
        out.found = true;
        out.t = Transform2x2::Z();
        return out;
    }
    auto anchors = anchors_of(F);
    if (anchors.empty()) {
        out.found = all_in(F, Transform2x2::identity(), in_matchgate);
        return out;
    }
    std::vector<FamilyReport> reps;
    for (const auto& f : anchors) {
        reps.push_back(in_transformable_family(f));
        const auto& r = reps.back();
        bool any = r.m1.member || r.m2.member || r.m3.member || r.m4plus.member || r.m4minus.member;
        if (!any) return out;
    }
    bool pending = false;
    for (const auto& r : reps) {
        const auto& d = r.decomposition;
        if (r.m3.member && d.kind == TensorDecomposition::Kind::DoubleRoot) {
            try_candidates(F, {columns(d.u, d.v)}, in_matchgate, out);
            return out;
        }
        if (!r.m2.member || r.p2.member) continue;
        if (d.kind != TensorDecomposition::Kind::Distinct) {
            pending = true;
            continue;
        }
        auto rho = sqrt_exact(pairing(d.u, d.u) / pairing(d.v, d.v));
        if (!rho) {
            pending = true;
            continue;
        }
        Vec2 c0{d.u[0] + *rho * d.v[0], d.u[1] + *rho * d.v[1]};
        Vec2 c1{d.u[0] - *rho * d.v[0], d.u[1] - *rho * d.v[1]};
        try_candidates(F, {columns(c0, c1)}, in_matchgate, out);
        return out;
    }
    if (pending) {
        out.undecided = true;
        return out;
    }
    // Remaining anchors in M2 are A2 (isotropic pair); or only M1/M4 anchors, settled by the Z test.
    bool iso = false;
    for (const auto& r : reps) iso = iso || r.p2.member;
    if (!iso) return out;
    out.best_effort = true;
    for (std::size_t j = 0; j < reps.size(); ++j) {
        if (!reps[j].p2.member) continue;
        const auto& d = reps[j].decomposition;
        int n = anchors[j].arity();
        std::vector<Transform2x2> cands;
        for (int sgn : {1, -1})
            if (auto kappa = nth_root_exact(Alg(sgn) * d.y / d.x, n)) {
                Vec2 c0{d.u[0] + *kappa * d.v[0], d.u[1] + *kappa * d.v[1]};
                Vec2 c1{d.u[0] - *kappa * d.v[0], d.u[1] - *kappa * d.v[1]};
                cands.push_back(columns(c0, c1));
            }
        try_candidates(F, cands, in_matchgate, out);
        break;
    }
    return out;
}

Case7 case7_check(const std::vector<Sig>& Fin) {
    std::vector<Sig> F = nonzero(Fin);
    Case7 out;
    std::vector<int> arities;
    for (const auto& f : F) {
        if (f.is_degenerate()) {
            auto d = tensor_decompose(f);
            if (in_P2(Sig{d.u[0], d.u[1]})) arities.push_back(1);
        } else if (in_P2(f)) {
            arities.push_back(f.arity());
        }
    }
    out.gcd = gcd_of(arities);
    for (int sigma : {1, -1}) {
        bool ok = true;
        for (const auto& f : F) {
            if (in_ZP(f)) continue;
            SignPair m = in_M4(f);
            if (!(sigma > 0 ? m.plus : m.minus)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.sigma = sigma;
            out.holds = out.gcd >= 5;
            return out;
        }
    }
    return out;
}

SetVerdict dichotomy_plholant_set(const std::vector<Sig>& Fin) {
    std::vector<Sig> F = nonzero(Fin);
    SetVerdict v;
    v.framework = Framework::PlHolant;
    auto done = [&](const std::string& id) {
        v.tractable = true;
        v.case_id = id;
        return v;
    };
    if (anchors_of(F).empty()) {
        bool small = true;
        for (const auto& f : F)
            if (!f.is_degenerate() && f.arity() > 2) small = false;
        if (small) return done("case 1");
    }
    for (int sigma : {1, -1}) {
        bool ok4 = true, ok5 = true;
        for (const auto& f : F) {
            SignPair van = in_vanishing(f), r2 = in_R2(f);
            bool vs = sigma > 0 ? van.plus : van.minus;
            bool rs = sigma > 0 ? r2.plus : r2.minus;
            if (!(vs || (f.arity() == 2 && rs))) ok4 = false;
            if (!f.is_degenerate() && !rs) ok5 = false;
        }
        if (ok4) {
            v.note = sigma > 0 ? "sigma = +" : "sigma = -";
            return done("case 4");
        }
        if (ok5) {
            v.note = sigma > 0 ? "sigma = +" : "sigma = -";
            return done("case 5");
        }
    }
    Case7 c7 = case7_check(F);
    if (c7.holds) {
        v.note = std::string("sigma = ") + (c7.sigma > 0 ? "+" : "-") + ", gcd = " + std::to_string(c7.gcd);
        v.transform = Transform2x2::Z();
        return done("case 7");
    }
    const std::vector<std::pair<std::string, SetTransform (*)(const std::vector<Sig>&)>> tests{
        {"case 2", set_A_transformable}, {"case 3", set_P_transformable}, {"case 6", set_M_transformable}};
    for (const auto& [id, fn] : tests) {
        SetTransform st = fn(F);
        if (st.found) {
            v.transform = st.t;
            v.best_effort = st.best_effort;
            return done(id);
        }
        if (st.undecided) v.undecided = true;
        if (st.best_effort) v.best_effort = true;
    }
    v.obstruction = "no tractable case applies";
    if (c7.sigma != 0) v.obstruction += " (within Z P union M4 but gcd = " + std::to_string(c7.gcd) + ")";
    if (v.undecided) v.note = "some transformability test left Q(w); hardness is provisional";
    return v;
}

SetVerdict hypergraph_verdict(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("no hyperedge sizes");
    SetVerdict v;
    v.framework = Framework::Hypergraph;
    int t = gcd_of(sizes);
    bool small = true;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("hyperedge sizes must be positive");
        if (s > 2) small = false;
    }
    v.note = "t = " + std::to_string(t);
    if (t >= 5) {
        v.tractable = true;
        v.case_id = "gcd >= 5";
    } else if (small) {
        v.tractable = true;
        v.case_id = "sizes within {1,2}";
    } else {
        v.obstruction = "gcd " + std::to_string(t) + " <= 4 with a hyperedge of size >= 3";
    }
    return v;
}

}  // namespace holant
