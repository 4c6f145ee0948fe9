#pragma once

#include "holant/algebra.hpp"
#include "holant/sigcalc.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace holant {

class BadS : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class TractableClass {
    P, A, Adagger, Mhat, MhatDagger, Matchgate, Vplus, Vminus,
    P1, P2, A1, A3, M1, M2, M3, M4plus, M4minus, ZP
};

std::string class_name(TractableClass c);

/// f = scale * T^{(x)n} canonical.
struct Witness {
    Transform2x2 t;
    Sig canonical;
    Alg scale = 1;
    bool verify(const Sig& f) const;
};

struct Membership {
    bool member = false;
    /// Set when the answer could not be decided inside Q(w).
    bool undecided = false;
    std::optional<Witness> witness;
    std::string note;
};

// Basic classes.
bool in_P(const Sig& f);
bool in_A(const Sig& f);
bool in_Adagger(const Sig& f);
bool in_matchgate(const Sig& f);
bool in_Mhat(const Sig& f);
bool in_MhatDagger(const Sig& f);
bool in_ZP(const Sig& f);
bool in_P2(const Sig& f);

struct SignPair {
    bool plus = false, minus = false;
};

SignPair in_vanishing(const Sig& f);
SignPair in_M4(const Sig& f);
/// rd^sigma(f) <= 1.
SignPair in_R2(const Sig& f);

struct FamilyReport {
    Membership p1, p2, a1, a3, m1, m2, m3, m4plus, m4minus;
    /// Roots of the recurrence lie outside Q(w); memberships decided by conjugate arithmetic.
    bool irrational = false;
    TensorDecomposition decomposition;
};

/// Memberships in the transformable families; degenerate input yields all false.
FamilyReport in_transformable_family(const Sig& f);

struct ClassRow {
    TractableClass cls;
    bool member;
};

/// One row per class for a single signature.
std::vector<ClassRow> class_table(const Sig& f);

enum class Framework { PlCSP, PlCSP2, BinaryEq, Single, PlHolant, Hypergraph };

std::string framework_name(Framework f);

struct SetVerdict {
    Framework framework = Framework::PlHolant;
    bool tractable = false;
    /// Some test along the way could not be decided; a PHard outcome is then provisional.
    bool undecided = false;
    bool best_effort = false;
    std::string case_id;
    std::optional<Transform2x2> transform;
    std::string obstruction;
    std::string note;
};

SetVerdict dichotomy_binary_eq(const Sig& f, const std::vector<int>& S);
SetVerdict dichotomy_plcsp(const std::vector<Sig>& F);
SetVerdict dichotomy_plcsp2(const std::vector<Sig>& F);
SetVerdict dichotomy_single(const Sig& f);
SetVerdict dichotomy_plholant_set(const std::vector<Sig>& F);
SetVerdict hypergraph_verdict(const std::vector<int>& sizes);

/// Set-level transformability tests used by the Pl-Holant verdict.
struct SetTransform {
    bool found = false;
    bool undecided = false;
    bool best_effort = false;
    Transform2x2 t;
};

SetTransform set_A_transformable(const std::vector<Sig>& F);
SetTransform set_P_transformable(const std::vector<Sig>& F);
SetTransform set_M_transformable(const std::vector<Sig>& F);

/// Case 7 test: F within Z P union M4^sigma and gcd of P2 arities in F* at least 5.
struct Case7 {
    bool holds = false;
    int sigma = 0;  // +1 or -1
    int gcd = 0;
};

Case7 case7_check(const std::vector<Sig>& F);

/// A kappa with kappa^n = z inside Q(w), when one is found.
std::optional<Alg> nth_root_exact(const Alg& z, int n);

}  // namespace holant
