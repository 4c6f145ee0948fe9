#pragma once

#include "holant/algebra.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace holant {

class ArityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Vec2 = std::array<Alg, 2>;

mpq_class binomial(int n, int k);

/// Symmetric signature [f_0, ..., f_n]; f_k is the value on inputs of Hamming weight k.
class SymmetricSignature {
public:
    SymmetricSignature() : e_(1) {}
    explicit SymmetricSignature(std::vector<Alg> entries);
    SymmetricSignature(std::initializer_list<Alg> entries) : SymmetricSignature(std::vector<Alg>(entries)) {}

    int arity() const { return static_cast<int>(e_.size()) - 1; }
    const Alg& operator[](int k) const { return e_[k]; }
    const std::vector<Alg>& entries() const { return e_; }

    bool is_zero() const;
    /// f = c u^{(x)n}; the zero signature counts as degenerate.
    bool is_degenerate() const;
    SymmetricSignature reversed() const;
    SymmetricSignature scaled(const Alg& c) const;

    friend SymmetricSignature operator+(const SymmetricSignature& a, const SymmetricSignature& b);
    friend SymmetricSignature operator-(const SymmetricSignature& a, const SymmetricSignature& b);
    friend bool operator==(const SymmetricSignature& a, const SymmetricSignature& b) { return a.e_ == b.e_; }

    std::string to_string() const;

private:
    std::vector<Alg> e_;
};

using Sig = SymmetricSignature;

/// Nonzero c with a = c * b, if one exists (both nonzero).
std::optional<Alg> proportional(const Sig& a, const Sig& b);

/// Transform2x2 [[t00, t01], [t10, t11]] acting on column vectors.
struct Transform2x2 {
    Alg t00 = 1, t01 = 0, t10 = 0, t11 = 1;

    static Transform2x2 identity() { return {}; }
    static Transform2x2 Z();
    static Transform2x2 H();
    static Transform2x2 diag(const Alg& a, const Alg& b) { return {a, 0, 0, b}; }
    static Transform2x2 swap() { return {0, 1, 1, 0}; }

    Alg det() const { return t00 * t11 - t01 * t10; }
    bool invertible() const { return !det().is_zero(); }
    bool orthogonal() const;
    Transform2x2 inverse() const;
    Transform2x2 transpose() const { return {t00, t10, t01, t11}; }
    Vec2 apply(const Vec2& u) const { return {t00 * u[0] + t01 * u[1], t10 * u[0] + t11 * u[1]}; }

    friend Transform2x2 operator*(const Transform2x2& a, const Transform2x2& b);
    friend bool operator==(const Transform2x2& a, const Transform2x2& b) {
        return a.t00 == b.t00 && a.t01 == b.t01 && a.t10 == b.t10 && a.t11 == b.t11;
    }
    Transform2x2 scaled(const Alg& c) const { return {c * t00, c * t01, c * t10, c * t11}; }
};

class SingularTransform : public std::domain_error {
public:
    SingularTransform() : std::domain_error("singular transform") {}
};

/// Signature on n ordered inputs; index bit (n-1-j) holds input j, so input 0 is most significant.
class GeneralSignature {
public:
    GeneralSignature() : n_(0), e_(1) {}
    GeneralSignature(int arity, std::vector<Alg> entries);
    static GeneralSignature from_symmetric(const Sig& f);

    int arity() const { return n_; }
    const Alg& at(unsigned idx) const { return e_[idx]; }
    Alg& at(unsigned idx) { return e_[idx]; }
    const Alg& at_bits(const std::vector<int>& bits) const;
    const std::vector<Alg>& entries() const { return e_; }

    bool is_symmetric() const;
    std::optional<Sig> symmetric() const;
    /// One counterclockwise rotation of the inputs: g'(x1..xn) = g(x2..xn, x1).
    GeneralSignature rotated() const;
    /// Slot-wise tensor action T^{(x)n} g.
    GeneralSignature transformed(const Transform2x2& t) const;

    friend bool operator==(const GeneralSignature& a, const GeneralSignature& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

private:
    int n_;
    std::vector<Alg> e_;
};

// Constructors.
Sig eq_sig(int k);
Sig neq2();
Sig exact_one(int k);
Sig all_but_one(int k);
Sig gen_eq(const Alg& a, const Alg& b, int k);
Sig tensor_power(const Vec2& u, int k);
/// Sym_n^{n-1}(u; v): sum over positions of u^{(x)(n-1)} with v in one slot.
Sig sym_one(const Vec2& u, const Vec2& v, int n);

// Calculus.
Sig derivative(const Sig& f, const Sig& g);
Sig self_loop(const Sig& f);
Sig integral(const Sig& fp);

/// T^{(x)n} f, with transform(T, u^{(x)n}) = (T u)^{(x)n}.
Sig transform(const Transform2x2& t, const Sig& f);
/// Row action f T^{(x)n}.
Sig transform_row(const Sig& f, const Transform2x2& t);
/// (Z^-1)^{(x)n} f.
Sig z_hat(const Sig& f);

struct RecurrenceType {
    int rank = 0;
    /// Null-space basis, each (a, b, c) with a f_k - b f_{k+1} + c f_{k+2} = 0.
    std::vector<std::array<Alg, 3>> types;
    bool has_recurrence() const { return !types.empty(); }
    /// Meaningful when the recurrence is unique; b^2 != 4ac.
    bool distinct_roots = false;
};

RecurrenceType recurrence_analysis(const Sig& f);

struct VanishingDegrees {
    int rd_plus, vd_plus, rd_minus, vd_minus;
    bool in_v_plus, in_v_minus;
};

VanishingDegrees vanishing_degrees(const Sig& f);

struct TensorDecomposition {
    enum class Kind { Zero, Degenerate, Distinct, DoubleRoot, Irrational, NoRecurrence };
    Kind kind = Kind::Zero;
    Alg x = 0, y = 0;
    Vec2 u{Alg(0), Alg(0)}, v{Alg(0), Alg(0)};
    /// Recurrence type behind the Irrational verdict.
    std::array<Alg, 3> type{Alg(0), Alg(0), Alg(0)};

    /// Degenerate: x u^n. Distinct: x u^n + y v^n. DoubleRoot: Sym(u; v).
    Sig reexpand(int n) const;
};

TensorDecomposition tensor_decompose(const Sig& f);

using Matrix = std::vector<std::vector<Alg>>;

struct SignatureMatrixInfo {
    Matrix m;
    bool redundant = false;
    Matrix compressed;  // empty unless redundant
    std::optional<Alg> compressed_det;
    GeneralSignature rotated;
};

Matrix signature_matrix(const GeneralSignature& g);
Matrix compress(const Matrix& m);
Alg det3(const Matrix& m);
Alg determinant(Matrix m);
SignatureMatrixInfo signature_matrix_ops(const GeneralSignature& g);
SignatureMatrixInfo signature_matrix_ops(const Sig& f);

}  // namespace holant
