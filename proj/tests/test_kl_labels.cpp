#include "doctest.h"

#include "semiq/errors.hpp"
#include "semiq/kl_labels.hpp"

using namespace semiq;

TEST_CASE("dual_I on A1") {
    const RootDatum& a1 = RootDatum::preset("A1");
    LevelScalar kp = reflect_level(a1, LevelScalar::kappa()); // treat kappa' = -k - 4
    ModuleLabel v0 = make_affine_label(LabelKind::Verma, Weight::zero(1), kp);
    ModuleLabel d = dual_I(a1, v0);
    CHECK(d.kind == LabelKind::Verma);
    CHECK(d.weight[0] == LevelScalar::from_int(2)); // -0 + 2rho
    CHECK(d.level == LevelScalar::kappa());
    CHECK(d.shift == 1); // dim(G/B) = |R+| = 1
    CHECK(dual_I(a1, d) == v0);
}

TEST_CASE("dual_I on A2 at rho") {
    const RootDatum& a2 = RootDatum::preset("A2");
    ModuleLabel v = make_affine_label(LabelKind::Verma, a2.rho(), LevelScalar::kappa());
    ModuleLabel d = dual_I(a2, v);
    // -rho + 2rho = rho, shift |R+| = 3
    CHECK(kweight_eq(d.weight, kweight_from(a2.rho())));
    CHECK(d.shift == 3);
    CHECK(dual_I(a2, d) == v);
}

TEST_CASE("dual_GO") {
    const RootDatum& a1 = RootDatum::preset("A1");
    ModuleLabel w = make_affine_label(LabelKind::Weyl, Weight({Rat(3)}), LevelScalar::kappa());
    ModuleLabel d = dual_GO(a1, w);
    CHECK(d.weight[0] == LevelScalar::from_int(3)); // -w0 = id on A1 weights
    CHECK(d.shift == 0);
    CHECK(dual_GO(a1, d) == w);

    const RootDatum& a2 = RootDatum::preset("A2");
    ModuleLabel w1 = make_affine_label(LabelKind::Weyl, Weight({Rat(1), Rat(0)}),
                                       LevelScalar::kappa());
    ModuleLabel d1 = dual_GO(a2, w1);
    // -w0 swaps the two fundamental weights of A2
    CHECK(d1.weight[0] == LevelScalar::from_int(0));
    CHECK(d1.weight[1] == LevelScalar::from_int(1));
    CHECK(dual_GO(a2, d1) == w1);

    ModuleLabel bad = make_affine_label(LabelKind::Weyl, Weight({Rat(-1), Rat(0)}),
                                        LevelScalar::kappa());
    CHECK_THROWS_AS(dual_GO(a2, bad), ValidationError);
}

TEST_CASE("positive-level KL square commutes") {
    for (const char* name : {"A1", "A2"}) {
        const RootDatum& rd = RootDatum::preset(name);
        LevelScalar kappa_neg = reflect_level(rd, LevelScalar::kappa());
        Rng rng(42);
        for (int t = 0; t < 20; ++t) {
            Weight lambda = Weight::zero(rd.rank());
            for (auto& x : lambda.c) x = Rat(rng.range(0, 4));
            ModuleLabel w = make_affine_label(LabelKind::Weyl, lambda, kappa_neg);
            ModuleLabel via_dual = kl_positive(rd, dual_GO(rd, w));
            ModuleLabel via_quantum = dual_q(rd, kl_negative(rd, w));
            CHECK(via_dual == via_quantum);
        }
    }
}

TEST_CASE("kl_positive explicit form on A1") {
    const RootDatum& a1 = RootDatum::preset("A1");
    for (long m = 0; m <= 4; ++m) {
        ModuleLabel w = make_affine_label(LabelKind::Weyl, Weight({Rat(m)}), LevelScalar::kappa());
        ModuleLabel q = kl_positive(a1, w);
        CHECK(q.kind == LabelKind::DualQuantumWeyl);
        CHECK(q.weight[0] == LevelScalar::from_int(m));
    }
    // wrong level sign rejected in the numeric mode
    ModuleLabel neg = make_affine_label(LabelKind::Weyl, Weight({Rat(0)}),
                                        LevelScalar::from_int(-5));
    CHECK_THROWS_AS(kl_positive(a1, neg), ValidationError);
    ModuleLabel pos = make_affine_label(LabelKind::Weyl, Weight({Rat(0)}),
                                        LevelScalar::from_int(1));
    CHECK_THROWS_AS(kl_negative(a1, pos), ValidationError);
}

TEST_CASE("kl_negative character contract") {
    // quantum Weyl labels keep the same highest weight as the Weyl module
    const RootDatum& a2 = RootDatum::preset("A2");
    ModuleLabel w = make_affine_label(LabelKind::Weyl, a2.rho(),
                                      reflect_level(a2, LevelScalar::kappa()));
    ModuleLabel q = kl_negative(a2, w);
    CHECK(q.kind == LabelKind::QuantumWeyl);
    CHECK(kweight_eq(q.weight, kweight_from(a2.rho())));
}

TEST_CASE("wakimoto convolution shifts") {
    const RootDatum& a1 = RootDatum::preset("A1");
    LevelScalar kappa = LevelScalar::kappa();
    ModuleLabel w = make_affine_label(LabelKind::WakimotoStar, Weight({Rat(1)}), kappa);
    Coweight alpha_check({Rat(1)});
    ModuleLabel down = wakimoto_convolution(a1, w, alpha_check, ConvFlavor::Star);
    // weight moved by -phi_kappa(coroot) = -2/(kappa+2)
    LevelScalar expected = LevelScalar::from_int(1) -
                           LevelScalar::from_int(2) /
                               (kappa + LevelScalar::from_int(2));
    CHECK(down.weight[0] == expected);
    ModuleLabel back = wakimoto_convolution(a1, down, alpha_check, ConvFlavor::Star, true);
    CHECK(back == w);

    // flavor bookkeeping: *-kind uses *, w0-kind uses !
    CHECK_THROWS_AS(wakimoto_convolution(a1, w, alpha_check, ConvFlavor::Shriek),
                    ValidationError);
    ModuleLabel w0lab = make_affine_label(LabelKind::WakimotoW0, Weight({Rat(0)}), kappa);
    CHECK_NOTHROW(wakimoto_convolution(a1, w0lab, alpha_check, ConvFlavor::Shriek));
    CHECK_THROWS_AS(wakimoto_convolution(a1, w0lab, alpha_check, ConvFlavor::Star),
                    ValidationError);
    // non-dominant coweight rejected
    CHECK_THROWS_AS(wakimoto_convolution(a1, w, Coweight({Rat(-1)}), ConvFlavor::Star),
                    ValidationError);
}

TEST_CASE("pairing index bookkeeping round-trip") {
    // the Verma label (-mu + 2rho, kappa') with shift dim(G/B) is dual to
    // (mu, kappa, 0): the Hom-characterization of the duality pairing
    for (const char* name : {"A1", "A2", "B2"}) {
        const RootDatum& rd = RootDatum::preset(name);
        long dim_gb = static_cast<long>(rd.positive_roots().size());
        Rng rng(7);
        for (int t = 0; t < 10; ++t) {
            Weight mu = Weight::zero(rd.rank());
            for (auto& x : mu.c) x = Rat(rng.range(-3, 3));
            ModuleLabel partner = make_affine_label(
                LabelKind::Verma, -mu + rd.rho() + rd.rho(),
                reflect_level(rd, LevelScalar::kappa()), dim_gb);
            ModuleLabel expect = make_affine_label(LabelKind::Verma, mu, LevelScalar::kappa(), 0);
            CHECK(dual_I(rd, partner) == expect);
        }
    }
}

TEST_CASE("dual involutions on 100 random labels") {
    const RootDatum& a2 = RootDatum::preset("A2");
    Rng rng(123);
    for (int t = 0; t < 100; ++t) {
        Weight mu({Rat(rng.range(-4, 4)), Rat(rng.range(-4, 4))});
        LevelScalar level = rng.range(0, 1) ? LevelScalar::kappa()
                                            : LevelScalar::from_rat(rng.rat(5));
        ModuleLabel v = make_affine_label(LabelKind::Verma, mu, level,
                                          rng.range(-2, 2));
        CHECK(dual_I(a2, dual_I(a2, v)) == v);
        Weight lam({Rat(rng.range(0, 4)), Rat(rng.range(0, 4))});
        ModuleLabel w = make_affine_label(LabelKind::Weyl, lam, level, rng.range(-2, 2));
        CHECK(dual_GO(a2, dual_GO(a2, w)) == w);
    }
}
