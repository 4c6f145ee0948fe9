#include "support.hpp"

#include "holant/fixtures.hpp"

#include <gtest/gtest.h>

using namespace holant;
using namespace holant::ts;

namespace {

bool row_of(const Sig& f, TractableClass c) {
    for (const auto& r : class_table(f))
        if (r.cls == c) return r.member;
    return false;
}

const std::vector<TractableClass> kAll{
    TractableClass::P,  TractableClass::A,      TractableClass::Adagger, TractableClass::Mhat,
    TractableClass::MhatDagger, TractableClass::Matchgate, TractableClass::Vplus, TractableClass::Vminus,
    TractableClass::P1, TractableClass::P2,     TractableClass::A1,      TractableClass::A3,
    TractableClass::M1, TractableClass::M2,     TractableClass::M3,      TractableClass::M4plus,
    TractableClass::M4minus, TractableClass::ZP};

bool is_family(TractableClass c) {
    switch (c) {
        case TractableClass::P1: case TractableClass::P2: case TractableClass::A1: case TractableClass::A3:
        case TractableClass::M1: case TractableClass::M2: case TractableClass::M3: case TractableClass::M4plus:
        case TractableClass::M4minus: return true;
        default: return false;
    }
}

}  // namespace

TEST(Classify, GeneratedMembersAreAccepted) {
    Rng rng(41);
    for (TractableClass c : kAll) {
        for (int t = 0; t < 60; ++t) {
            int n = uniform(rng, is_family(c) ? 3 : 2, 6);
            Sig f = class_member(rng, c, n);
            EXPECT_TRUE(row_of(f, c)) << class_name(c) << " rejects " << f.to_string();
        }
    }
}

TEST(Classify, WitnessesReproduceTheSignature) {
    Rng rng(42);
    for (int t = 0; t < 200; ++t) {
        TractableClass c = kAll[8 + t % 9];
        Sig f = class_member(rng, c, uniform(rng, 3, 6));
        FamilyReport r = in_transformable_family(f);
        for (const Membership* m : {&r.p1, &r.p2, &r.a1, &r.a3, &r.m1, &r.m2, &r.m3, &r.m4plus, &r.m4minus})
            if (m->member && m->witness) EXPECT_TRUE(m->witness->verify(f)) << f.to_string();
    }
}

TEST(Classify, HierarchyInclusions) {
    Rng rng(43);
    const TractableClass pool[] = {TractableClass::M1, TractableClass::A1, TractableClass::P1,
                                   TractableClass::P2, TractableClass::M2, TractableClass::A3};
    for (int t = 0; t < 300; ++t) {
        int n = uniform(rng, 3, 6);
        Sig f = t % 7 == 6 ? random_sig(rng, n) : class_member(rng, pool[t % 6], n);
        FamilyReport r = in_transformable_family(f);
        if (r.m1.member) EXPECT_TRUE(r.a1.member) << f.to_string();
        if (r.a1.member) EXPECT_TRUE(r.p1.member) << f.to_string();
        if (r.p2.member) EXPECT_TRUE(r.m2.member) << f.to_string();
    }
}

TEST(Classify, FamiliesClosedUnderOrthogonalTransforms) {
    Rng rng(44);
    for (int t = 0; t < 100; ++t) {
        TractableClass c = t % 3 == 0 ? TractableClass::P1 : t % 3 == 1 ? TractableClass::M2 : TractableClass::M3;
        Sig f = class_member(rng, c, uniform(rng, 3, 6));
        Sig g = transform(random_orthogonal(rng), f);
        EXPECT_TRUE(row_of(g, c)) << class_name(c) << " " << g.to_string();
    }
}

TEST(Classify, BasicMembershipExamples) {
    const Alg w = Alg::zeta(), I = Alg::i();
    EXPECT_TRUE(in_P(Sig{1, 0, 0, 1}));
    EXPECT_TRUE(in_A(Sig{1, 0, 0, 1}));
    EXPECT_TRUE(in_P(Sig{0, 1, 0}));
    EXPECT_FALSE(in_P(Sig{3, 1, 0}));
    EXPECT_FALSE(in_A(Sig{3, 1, 0}));
    EXPECT_FALSE(in_Mhat(Sig{3, 1, 0}));
    EXPECT_TRUE(in_A(Sig{1, I, 1, I}));
    EXPECT_TRUE(in_matchgate(exact_one(5)));
    EXPECT_FALSE(in_matchgate(Sig{1, 1, 0}));
    EXPECT_TRUE(in_Adagger(Sig{1, w, -(w * w)}));
    EXPECT_FALSE(in_A(Sig{1, w, -(w * w)}));
    for (Alg b : {Alg(2), Alg(3), w, Alg(1) + I, Alg::rational(1, 2)}) {
        Sig f{1, b, 1};
        EXPECT_TRUE(in_Mhat(f)) << b;
        EXPECT_FALSE(in_P(f) || in_A(f) || in_Adagger(f)) << b;
    }
}

TEST(Classify, TransformableFamilyExamples) {
    const Alg w = Alg::zeta(), I = Alg::i();
    Sig p1 = tensor_power({Alg(1), Alg(1)}, 4) + tensor_power({Alg(1), Alg(-1)}, 4).scaled(Alg(5));
    FamilyReport r = in_transformable_family(p1);
    EXPECT_TRUE(r.p1.member);
    EXPECT_FALSE(r.a1.member);
    EXPECT_TRUE(in_transformable_family(exact_one(5)).m3.member);
    Sig a3 = tensor_power({Alg(1), w}, 4) + tensor_power({Alg(1), -w}, 4).scaled(I);
    EXPECT_TRUE(in_transformable_family(a3).a3.member);
    EXPECT_FALSE(in_transformable_family(Sig{1, 1, 1, 1}).p1.member);
}

TEST(Classify, VanishingMatchesDegrees) {
    Rng rng(45);
    for (int t = 0; t < 100; ++t) {
        Sig f = t % 2 ? class_member(rng, TractableClass::Vplus, uniform(rng, 1, 7)) : random_sig(rng, uniform(rng, 1, 7));
        auto d = vanishing_degrees(f);
        SignPair v = in_vanishing(f);
        EXPECT_EQ(v.plus, d.in_v_plus);
        EXPECT_EQ(v.minus, d.in_v_minus);
    }
}

TEST(Classify, BinaryEqAgreesWithConditionOracle) {
    Rng rng(46);
    auto value = [&]() -> Alg {
        if (coin(rng, 0.2)) return Alg(0);
        return random_special(rng);
    };
    for (int t = 0; t < 400; ++t) {
        Alg f0 = value(), f1 = value(), f2 = value();
        if (t % 5 == 0) f2 = f1 * f1 / (f0.is_zero() ? Alg(1) : f0);
        std::vector<int> S{uniform(rng, 3, 12)};
        for (int k = uniform(rng, 0, 2); k > 0; --k) S.push_back(uniform(rng, 1, 12));
        SetVerdict v = dichotomy_binary_eq(Sig{f0, f1, f2}, S);
        int hit = binary_eq_conditions(f0, f1, f2, S);
        EXPECT_EQ(v.tractable, hit != 0);
        if (hit) EXPECT_EQ(v.case_id, "condition " + std::to_string(hit));
    }
}

TEST(Classify, BinaryEqExamples) {
    EXPECT_TRUE(dichotomy_binary_eq(Sig{1, 2, 4}, {3}).tractable);
    EXPECT_TRUE(dichotomy_binary_eq(Sig{0, 1, 0}, {3, 5}).tractable);
    EXPECT_FALSE(dichotomy_binary_eq(Sig{3, 1, 0}, {3}).tractable);
    EXPECT_THROW(dichotomy_binary_eq(Sig{3, 1, 0}, {1, 2}), BadS);
}

TEST(Classify, CspVerdicts) {
    const Alg w = Alg::zeta();
    EXPECT_TRUE(dichotomy_plcsp({Sig{1, 0, 0, 1}}).tractable);
    EXPECT_FALSE(dichotomy_plcsp({Sig{3, 1, 0}}).tractable);
    SetVerdict m = dichotomy_plcsp2({Sig{1, 2, 1}});
    EXPECT_TRUE(m.tractable);
    EXPECT_EQ(m.case_id, "Mhat");
    EXPECT_FALSE(dichotomy_plcsp2({Sig{1, 2, 1}, Sig{1, w, -(w * w)}}).tractable);
}

TEST(Classify, SingleSignatureVerdicts) {
    Rng rng(47);
    EXPECT_TRUE(dichotomy_single(exact_one(7)).tractable);
    for (int t = 0; t < 20; ++t) {
        Alg v = random_nonzero(rng);
        EXPECT_FALSE(dichotomy_single(Sig{v, 1, 0, 0, 0}).tractable) << v;
    }
    for (int n = 3; n <= 6; ++n)
        for (int t = 0; t < 5; ++t) {
            std::vector<Alg> e(n + 1, Alg(0));
            e[0] = random_special(rng);
            e[1] = 1;
            e[n] = random_special(rng);
            Sig f = transform(Transform2x2::Z(), Sig(e));
            EXPECT_FALSE(dichotomy_single(f).tractable) << f.to_string();
        }
    EXPECT_THROW(dichotomy_single(Sig{1, 0, 1}), ArityError);
}

TEST(Classify, SetVerdictCaseSeven) {
    const auto Z = Transform2x2::Z();
    SetVerdict yes = dichotomy_plholant_set({transform(Z, eq_sig(5)), transform(Z, exact_one(3))});
    EXPECT_TRUE(yes.tractable);
    EXPECT_EQ(yes.case_id, "case 7");
    EXPECT_FALSE(dichotomy_plholant_set({transform(Z, eq_sig(4)), transform(Z, exact_one(3))}).tractable);
}

TEST(Classify, SetVerdictOnClassMembers) {
    Rng rng(48);
    const TractableClass cs[] = {TractableClass::P1, TractableClass::M2, TractableClass::A3, TractableClass::M3};
    for (int t = 0; t < 40; ++t) {
        Sig f = class_member(rng, cs[t % 4], uniform(rng, 3, 5));
        EXPECT_TRUE(dichotomy_plholant_set({f}).tractable) << f.to_string();
    }
    EXPECT_TRUE(dichotomy_plholant_set({Sig{1, 0, 1}, Sig{2, 1}}).tractable);
}

TEST(Classify, HypergraphVerdicts) {
    EXPECT_TRUE(hypergraph_verdict({5, 10}).tractable);
    EXPECT_TRUE(hypergraph_verdict({1, 2}).tractable);
    EXPECT_FALSE(hypergraph_verdict({3}).tractable);
    EXPECT_FALSE(hypergraph_verdict({4, 8}).tractable);
    EXPECT_FALSE(hypergraph_verdict({5, 6}).tractable);
}

TEST(Classify, EmbeddedVerdictFixtures) {
    for (const auto& r : verdict_fixtures()) EXPECT_TRUE(r.pass) << r.name << ": " << r.detail;
}
