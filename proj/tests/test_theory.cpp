#include <gtest/gtest.h>

#include "commacat/adjoints.hpp"
#include "commacat/homotopy.hpp"
#include "commacat/monoidal.hpp"
#include "commacat/suites.hpp"
#include "oracles.hpp"

using namespace commacat;

namespace {

const Prime F2(2);
const Prime F3(3);

ChainMap from_zero(const ChainComplex& x) { return ChainMap::zero(ChainComplex::zero(x.prime()), x); }

std::string failures_of(const Report& r) {
    std::string s;
    for (const auto& c : r.checks)
        if (!c.ok()) s += c.name + (c.counterexamples.empty() ? "" : ": " + c.counterexamples[0]) + "\n";
    return s;
}

bool has_check(const Report& r, const std::string& needle) {
    for (const auto& c : r.checks)
        if (c.name.find(needle) != std::string::npos && c.cases > 0) return true;
    return false;
}

// Both triangles of a lifting square, recomputed here.
bool solves(const ChainComma& c, const LiftingProblem<ChainComma>& pr, const ChainCommaMorphism& s) {
    return c.equal(c.compose(s, pr.sigma), pr.top) && c.equal(c.compose(pr.beta, s), pr.bottom);
}

}  // namespace

// ---- independent oracle ----------------------------------------------------------

TEST(Oracle, ConeAcyclicityMatchesQuasiIso) {
    for (unsigned pv : {2u, 3u})
        for (std::uint64_t i = 0; i < 200; ++i) {
            Rng rng = Rng::for_case(31, i);
            auto f = random_chain_map(rng, Prime(pv));
            auto [lo, hi] = oracle::span({f.source(), f.target()});
            EXPECT_EQ(oracle::cone_acyclic(oracle::gmap(f, lo, hi)), is_quasi_iso(f)) << "case " << i;
            EXPECT_EQ(oracle::flags(oracle::gmap(f, lo, hi)), classify_map(f)) << "case " << i;
        }
}

TEST(Oracle, ClassificationAgreesOnSmallSample) {
    ChainComma c(hom_tensor_adjunction(ChainComplex::disk(F3, 0)));
    for (std::uint64_t i = 0; i < 20; ++i) {
        Rng rng = Rng::for_case(32, i);
        auto s = random_comma_morphism(rng, c);
        for (auto id : all_structures) {
            auto want = oracle::classify(c, s, id);
            EXPECT_EQ(classify_comma(c, s, id), want) << to_string(id) << " case " << i;
            EXPECT_EQ(classify_via_dual(c, s, id), want) << to_string(id) << " case " << i;
        }
    }
}

// ---- factorization ---------------------------------------------------------------

TEST(Factor, IdentityFactorsIntoClasses) {
    ChainComma c(identity_adjunction(F2));
    auto x = c.iota(named::S0(F2));
    for (auto s : all_structures)
        for (auto k : {FactorKind::CofThenTrivFib, FactorKind::TrivCofThenFib}) {
            auto f = factorize_comma(c, c.identity(x), s, k);
            std::string why;
            EXPECT_TRUE(factorization_in_classes(c, c.identity(x), f, s, k, &why)) << to_string(s) << ": " << why;
        }
}

TEST(Factor, LProjFromZero) {
    ChainComma c(identity_adjunction(F2));
    auto sigma = c.iota(from_zero(named::S0(F2)));
    auto f = factorize_comma(c, sigma, StructureId::LProj, FactorKind::TrivCofThenFib);
    EXPECT_TRUE(c.equal(c.compose(f.r, f.l), sigma));
    EXPECT_TRUE(oracle::classify(c, f.l, StructureId::LProj).trivial_cof());
    EXPECT_TRUE(oracle::classify(c, f.r, StructureId::LProj).is_fib);
}

TEST(Factor, Strong0FromZeroObject) {
    ChainComma c(identity_adjunction(F2));
    auto q = named::q(F2);
    auto tgt = c.make_object(named::D1(F2), named::S0(F2), q);
    auto sigma = c.from_initial(tgt);
    auto f = factorize_comma(c, sigma, StructureId::Strong0, FactorKind::CofThenTrivFib);
    EXPECT_TRUE(c.equal(c.compose(f.r, f.l), sigma));
    auto kl = oracle::classify(c, f.l, StructureId::Strong0);
    auto kr = oracle::classify(c, f.r, StructureId::Strong0);
    EXPECT_TRUE(kl.is_cof);
    EXPECT_TRUE(kr.trivial_fib());
    // The A-square of l is a pushout: its corner map is an isomorphism.
    EXPECT_TRUE(oracle::iso(oracle::flags(oracle::pushout_corner(c, f.l))));
}

TEST(Factor, EveryStructureAgainstOracle) {
    for (int inst = 0; inst < 2; ++inst) {
        ChainComma c(inst ? hom_tensor_adjunction(ChainComplex::disk(F2, 0)) : identity_adjunction(F2));
        for (std::uint64_t i = 0; i < 8; ++i) {
            Rng rng = Rng::for_case(33, i);
            auto s = random_comma_morphism(rng, c);
            for (auto id : all_structures)
                for (auto k : {FactorKind::CofThenTrivFib, FactorKind::TrivCofThenFib}) {
                    auto f = factorize_comma(c, s, id, k);
                    ASSERT_TRUE(c.equal(c.compose(f.r, f.l), s));
                    auto kl = oracle::classify(c, f.l, id), kr = oracle::classify(c, f.r, id);
                    if (k == FactorKind::CofThenTrivFib)
                        EXPECT_TRUE(kl.is_cof && kr.trivial_fib()) << to_string(id) << " case " << i;
                    else
                        EXPECT_TRUE(kl.trivial_cof() && kr.is_fib) << to_string(id) << " case " << i;
                }
        }
    }
}

TEST(Factor, LProjTraceRecordsIntermediateWe) {
    ChainComma c(identity_adjunction(F3));
    for (std::uint64_t i = 0; i < 10; ++i) {
        Rng rng = Rng::for_case(34, i);
        auto f = factorize_comma(c, random_comma_morphism(rng, c), StructureId::LProj, FactorKind::TrivCofThenFib);
        bool found = false;
        for (const auto& [n, v] : f.trace_m.facts)
            if (n == "tau_we") {
                found = true;
                EXPECT_TRUE(v);
            }
        EXPECT_TRUE(found);
    }
}

// ---- lifting ---------------------------------------------------------------------

TEST(Lift, LInjDiskExample) {
    ChainComma c(identity_adjunction(F2));
    auto d1 = named::D1(F2);
    auto q = named::q(F2);
    LiftingProblem<ChainComma> pr{c.iota(from_zero(d1)), c.iota(q), c.iota(from_zero(d1)), c.iota(q)};
    EXPECT_TRUE(classify_comma(c, pr.sigma, StructureId::LInj).trivial_cof());
    EXPECT_TRUE(classify_comma(c, pr.beta, StructureId::LInj).is_fib);
    auto s = lift_comma(c, pr, StructureId::LInj, LiftStrategy::Structural);
    ASSERT_TRUE(s.has_value());
    EXPECT_TRUE(c.equal(*s, c.iota(ChainMap::identity(d1))));
}

TEST(Lift, IdentityLeftLegReturnsTop) {
    ChainComma c(identity_adjunction(F3));
    Rng rng(35);
    auto beta = random_comma_morphism(rng, c);
    auto id = c.identity(beta.src);
    LiftingProblem<ChainComma> pr{id, beta, c.identity(beta.src), beta};
    for (auto s : all_structures) {
        auto l = lift_comma(c, pr, s);
        ASSERT_TRUE(l.has_value()) << to_string(s);
        EXPECT_TRUE(c.equal(*l, pr.top));
    }
}

TEST(Lift, StructuralAndLinearSolversOnEveryStructure) {
    ChainComma c(identity_adjunction(F2));
    for (auto s : all_structures) {
        for (std::uint64_t i = 0; i < 6; ++i) {
            Rng rng = Rng::for_case(36, i);
            auto pr = random_lifting_problem(rng, c, s, {2, 2, 0, 1});
            auto lin = lift_comma(c, pr, s, LiftStrategy::Linear);
            ASSERT_TRUE(lin.has_value()) << to_string(s) << " case " << i;
            EXPECT_TRUE(solves(c, pr, *lin));
            if (has_structural_lift(s)) {
                auto st = lift_comma(c, pr, s, LiftStrategy::Structural);
                ASSERT_TRUE(st.has_value()) << to_string(s) << " case " << i;
                EXPECT_TRUE(solves(c, pr, *st));
            }
        }
    }
    Rng rng(37);
    auto pr = random_lifting_problem(rng, c, StructureId::LProj, {2, 2, 0, 1});
    EXPECT_THROW(lift_comma(c, pr, StructureId::LProj, LiftStrategy::Structural), std::invalid_argument);
}

TEST(Lift, RejectsNonCommutingSquare) {
    ChainComma c(identity_adjunction(F2));
    auto s0 = named::S0(F2);
    auto x = c.iota(s0);
    auto zero = ChainCommaMorphism{x, x, ChainMap::zero(s0, s0), ChainMap::zero(s0, s0)};
    LiftingProblem<ChainComma> pr{c.identity(x), c.identity(x), zero, c.identity(x)};
    EXPECT_THROW(lift_comma(c, pr, StructureId::Inj), std::invalid_argument);
}

// ---- class equalities ---------------------------------------------------------------

TEST(ClassEquality, Examples) {
    ChainComma c(identity_adjunction(F2));
    auto s0 = named::S0(F2);
    auto id = c.identity(c.iota(s0));
    auto k = classify_comma(c, id, StructureId::LProj);
    EXPECT_TRUE(k.is_fib && k.is_we);

    Rng rng(38);
    for (int i = 0; i < 10; ++i) {
        auto r = factorize_chain(random_chain_map(rng, F2), FactorKind::CofThenTrivFib).r;
        auto f = classify_comma(c, c.iota(r), StructureId::LProj);
        EXPECT_TRUE(f.is_fib && f.is_we);
    }

    auto q = named::q(F2);
    auto sq = c.make_morphism(c.make_object(named::D1(F2), s0, q), c.iota(s0), q, ChainMap::identity(s0));
    EXPECT_FALSE(classify_comma(c, sq, StructureId::Inj).is_we);
    EXPECT_TRUE(classify_comma(c, sq, StructureId::LInj).is_we);
}

TEST(ClassEquality, SuiteOnHomTensor) {
    ChainComma c(hom_tensor_adjunction(ChainComplex::disk(F3, 0)));
    ClassEqualityStats st;
    auto r = class_equality_suite(c, {39, 60}, &st);
    EXPECT_TRUE(r.ok()) << failures_of(r);
    EXPECT_GT(st.members, 0u);
    EXPECT_GT(st.non_members, 0u);
}

TEST(ClassEquality, InClassGeneration) {
    ChainComma c(identity_adjunction(F2));
    Rng rng(40);
    for (int i = 0; i < 10; ++i) {
        auto s = generate_in_class(rng, c, StructureId::LInj, MorphismClass::Fib, {2, 2, 0, 1});
        EXPECT_TRUE(oracle::classify(c, s, StructureId::LInj).is_fib);
    }
}

// ---- adjunctions -------------------------------------------------------------------

TEST(Adjunctions, CommaSuite) {
    for (int inst = 0; inst < 2; ++inst) {
        ChainComma c(inst ? hom_tensor_adjunction(ChainComplex::disk(F3, 0)) : identity_adjunction(F3));
        AdjunctionSuiteStats st;
        auto r = verify_comma_adjunctions(c, {41, 4}, &st);
        EXPECT_TRUE(r.ok()) << failures_of(r);
        EXPECT_GT(st.exhaustive, 0u);
    }
}

TEST(Adjunctions, FactorizationIdentities) {
    ChainComma c(hom_tensor_adjunction(ChainComplex::disk(F2, 0)));
    Rng rng(42);
    for (int i = 0; i < 10; ++i) {
        auto f = random_chain_map(rng, F2);
        EXPECT_EQ(c.iota(f).s0, c.U(f));
        EXPECT_EQ(c.iota(f).s1, f);
        EXPECT_EQ(c.R0(f).s0, f);
        EXPECT_EQ(c.L1(f).s1, f);
    }
}

TEST(Adjunctions, EhkForIdentitySquareIsIdentity) {
    ChainComma c(identity_adjunction(F2));
    auto id = identity_adjunction(F2);
    AdjunctionSquare<ChainBackend, ChainBackend, ChainBackend, ChainBackend> sq{id, id};
    Rng rng(43);
    for (int i = 0; i < 10; ++i) {
        auto s = random_comma_morphism(rng, c);
        EXPECT_TRUE(c.equal(ehk(c, c, sq, s), s));
        EXPECT_TRUE(c.equal(ehk_left(c, c, sq, s), s));
    }
}

TEST(Adjunctions, EhkHomSetsMatch) {
    ChainComma c(identity_adjunction(F2));
    auto h = hom_tensor_adjunction(ChainComplex::disk(F2, 0));
    AdjunctionSquare<ChainBackend, ChainBackend, ChainBackend, ChainBackend> sq{h, h};
    for (std::uint64_t i = 0; i < 20; ++i) {
        Rng rng = Rng::for_case(44, i);
        auto x = random_comma_object(rng, c, {1, 2, 0, 0});
        auto f = random_comma_object(rng, c, {1, 2, 0, 0});
        auto s = random_comma_morphism(rng, c, {1, 2, 0, 0});
        EXPECT_TRUE(c.commutes(ehk(c, c, sq, s)));
        EXPECT_EQ(CommaHomSpace(c, ehk_left(c, c, sq, x), f).dim(), CommaHomSpace(c, x, ehk(c, c, sq, f)).dim())
            << "case " << i;
    }
}

// ---- monoidal structure ---------------------------------------------------------------

class MonoidalExamples : public ::testing::Test {
protected:
    ChainComma c{identity_adjunction(F2)};
    MonoidalComma mc = MonoidalComma::of(c);
    ChainComplex s0 = named::S0(F2), s1 = named::S1(F2);
};

TEST_F(MonoidalExamples, UnitAndTensor) {
    EXPECT_TRUE(c.equal_objects(mc.unit(), c.iota(s0)));
    EXPECT_TRUE(c.equal_objects(mc.tensor(c.iota(s0), c.iota(s0)), c.iota(s0)));
    auto fq = c.make_object(named::D1(F2), s0, named::q(F2));
    auto u = mc.right_unitor(fq);
    EXPECT_TRUE(c.equal_objects(u.tgt, fq));
    EXPECT_TRUE(c.inverse(u).has_value());
    EXPECT_TRUE(c.equal(mc.iota_laxity(s0, s0), c.identity(c.iota(s0))));
    EXPECT_TRUE(c.inverse(mc.fplus_colaxity(s0, s1)).has_value());
}

TEST_F(MonoidalExamples, InternalHom) {
    auto h = mc.hom_r(c.iota(s0), c.iota(s0));
    EXPECT_TRUE(h.f0 == s0 && h.f1 == s0);
    EXPECT_TRUE(h.pi == ChainMap::identity(s0));
    auto h2 = mc.hom_r(c.iota(s1), c.iota(s0));
    EXPECT_TRUE(h2.f1 == hom_chain(s1, s0));
    EXPECT_EQ(h2.f0.dim(-1), 1u);
}

TEST_F(MonoidalExamples, TransposeRoundTrip) {
    auto x = c.iota(s0);
    EXPECT_EQ(CommaHomSpace(c, mc.tensor(x, x), x).dim(), 1u);
    EXPECT_EQ(CommaHomSpace(c, x, mc.hom_r(x, x)).dim(), 1u);
    for (std::uint64_t i = 0; i < 10; ++i) {
        Rng rng = Rng::for_case(45, i);
        auto e = random_comma_object(rng, c, {1, 2, 0, 0});
        auto f = random_comma_object(rng, c, {1, 2, 0, 0});
        auto g = random_comma_object(rng, c, {1, 2, 0, 0});
        CommaHomSpace hs(c, mc.tensor(e, f), g);
        if (hs.dim() == 0) continue;
        auto s = random_comma_hom(rng, hs);
        auto t = mc.transpose(s, e, f);
        EXPECT_TRUE(c.equal(mc.untranspose(t, f, g), s)) << "case " << i;
    }
}

TEST_F(MonoidalExamples, PushoutProduct) {
    auto z = c.from_initial(c.iota(s0));
    auto pp = mc.pushout_product(z, z);
    EXPECT_TRUE(pp.src.f0.is_zero() && pp.src.f1.is_zero());
    EXPECT_TRUE(c.equal_objects(pp.tgt, c.iota(s0)));
    EXPECT_TRUE(classify_comma(c, pp, StructureId::Inj).is_cof);
    for (std::uint64_t i = 0; i < 10; ++i) {
        Rng rng = Rng::for_case(46, i);
        auto a = random_comma_morphism(rng, c, {1, 2, 0, 0});
        auto b = random_comma_morphism(rng, c, {1, 2, 0, 0});
        EXPECT_TRUE(c.equal(mc.pushout_product(a, b), mc.pushout_product_componentwise(a, b))) << "case " << i;
    }
}

TEST(Monoidal, SuiteOverF3) {
    ChainComma c(identity_adjunction(F3));
    auto r = monoidal_suite(MonoidalComma::of(c), {47, 8});
    EXPECT_TRUE(r.ok()) << failures_of(r);
}

TEST(Monoidal, OnlyTheIdentityInstanceIsLax) {
    EXPECT_TRUE(lax_structure(identity_adjunction(F2)).has_value());
    EXPECT_FALSE(lax_structure(hom_tensor_adjunction(ChainComplex::disk(F2, 0))).has_value());
}

// ---- homotopy --------------------------------------------------------------------------

class HomotopyExamples : public ::testing::Test {
protected:
    ChainComma c{identity_adjunction(F2)};
    CanonicalFunctors fn = canonical_functors(c);
    GenBounds b{2, 2, 0, 1};

    std::vector<ChainCommaObject> pool(StructureId s, std::uint64_t seed) {
        Rng rng(seed);
        return fibrant_pool(c, s, rng, 20, b);
    }
};

TEST_F(HomotopyExamples, IdentityTransformation) {
    auto id = identity_functor<ChainCommaObject, ChainCommaMorphism>("comma");
    TwoMorphism<ChainCommaObject, ChainCommaMorphism, ChainCommaObject, ChainCommaMorphism> t{
        id, id, [this](const ChainCommaObject& x) { return c.identity(x); }};
    auto cat = comma_category(c, StructureId::Inj);
    auto r = is_right_homotopy(t, cat, cat, pool(StructureId::Inj, 50));
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.checked, 20u);
}

TEST_F(HomotopyExamples, UnitsAreRightHomotopies) {
    auto linj = comma_category(c, StructureId::LInj);
    EXPECT_TRUE(is_right_homotopy(fn.eta_iota_pi1, linj, linj, pool(StructureId::LInj, 51)).ok);
    auto rinj = comma_category(c, StructureId::RInj);
    EXPECT_TRUE(is_right_homotopy(fn.eta_r0_pi0, rinj, rinj, pool(StructureId::RInj, 52)).ok);
}

TEST_F(HomotopyExamples, UnitIsNotARightHomotopyForInj) {
    auto inj = comma_category(c, StructureId::Inj);
    auto r = is_right_homotopy(fn.eta_iota_pi1, inj, inj, pool(StructureId::Inj, 53));
    EXPECT_FALSE(r.ok);
    EXPECT_FALSE(r.first_failure.empty());
}

TEST_F(HomotopyExamples, RejectsNonFibrantSample) {
    auto linj = comma_category(c, StructureId::LInj);
    auto fq = c.make_object(named::D1(F2), named::S0(F2), named::q(F2));
    EXPECT_THROW(is_right_homotopy(fn.eta_iota_pi1, linj, linj, std::vector{fq}), std::invalid_argument);
}

TEST_F(HomotopyExamples, DegenerateRetraction) {
    auto id = identity_functor<ChainCommaObject, ChainCommaMorphism>("comma");
    TwoMorphism<ChainCommaObject, ChainCommaMorphism, ChainCommaObject, ChainCommaMorphism> t{
        id, id, [this](const ChainCommaObject& x) { return c.identity(x); }};
    auto cat = comma_category(c, StructureId::LInj);
    Rng rng(54);
    std::vector<ChainCommaObject> objs;
    std::vector<ChainCommaMorphism> mors;
    for (int i = 0; i < 5; ++i) {
        objs.push_back(random_comma_object(rng, c, b));
        mors.push_back(random_comma_morphism(rng, c, b));
    }
    auto r = verify_weak_retraction(id, id, t, cat, cat, objs, mors, objs, mors, pool(StructureId::LInj, 55));
    EXPECT_TRUE(r.ok()) << failures_of(r);
    auto s = verify_weak_section(id, id, t, cat, cat, objs, mors, objs, mors, pool(StructureId::LInj, 55));
    EXPECT_TRUE(s.ok()) << failures_of(s);
}

TEST_F(HomotopyExamples, IotaRetractionOnLInj) {
    auto linj = comma_category(c, StructureId::LInj);
    auto a = chain_category("A");
    Rng rng(56);
    std::vector<ChainComplex> xs;
    std::vector<ChainMap> fs;
    std::vector<ChainCommaObject> objs;
    std::vector<ChainCommaMorphism> mors;
    for (int i = 0; i < 5; ++i) {
        xs.push_back(random_complex(rng, F2, b));
        fs.push_back(random_chain_map(rng, F2, b));
        objs.push_back(random_comma_object(rng, c, b));
        mors.push_back(random_comma_morphism(rng, c, b));
    }
    auto r = verify_weak_retraction(fn.iota, fn.pi1, fn.eta_iota_pi1, a, linj, xs, fs, objs, mors,
                                    pool(StructureId::LInj, 57));
    EXPECT_TRUE(r.ok()) << failures_of(r);
}

TEST_F(HomotopyExamples, IdentitySquareLiftsToIdentity) {
    using Id = FunctorData<ChainCommaObject, ChainCommaMorphism, ChainCommaObject, ChainCommaMorphism>;
    Id id = identity_functor<ChainCommaObject, ChainCommaMorphism>("comma");
    FunctorSquare<ChainCommaObject, ChainCommaMorphism, ChainCommaObject, ChainCommaMorphism, ChainCommaObject,
                  ChainCommaMorphism, ChainCommaObject, ChainCommaMorphism>
        sq{id, id, id, id};
    TwoMorphism<ChainCommaObject, ChainCommaMorphism, ChainCommaObject, ChainCommaMorphism> tau{
        id, id, [this](const ChainCommaObject& x) { return c.identity(x); }};
    auto [t, h] = htpy_lift_retraction(sq, id, tau);
    Rng rng(58);
    for (int i = 0; i < 5; ++i) {
        auto x = random_comma_object(rng, c, b);
        auto s = random_comma_morphism(rng, c, b);
        EXPECT_TRUE(c.equal_objects(t.obj(x), x));
        EXPECT_TRUE(c.equal(t.mor(s), s));
        EXPECT_TRUE(c.equal(h.component(x), c.identity(x)));
    }
}

TEST_F(HomotopyExamples, SectionCaseCommutesWithK) {
    // Case 2 with K = Π⁰ and its section R⁰: Φ⁰ = ι, Φ¹ = Id_M, G = U.
    auto idm = identity_functor<ChainComplex, ChainMap>("M");
    FunctorSquare<ChainComplex, ChainMap, ChainComplex, ChainMap, ChainCommaObject, ChainCommaMorphism, ChainComplex,
                  ChainMap>
        sq{fn.u, fn.pi0, fn.iota, idm};
    auto [t, h] = htpy_lift_section(sq, fn.r0, fn.eta_r0_pi0);
    Rng rng(59);
    for (int i = 0; i < 10; ++i) {
        auto m = random_complex(rng, F2, b);
        EXPECT_TRUE(fn.pi0.obj(t.obj(m)) == m);
        auto a = random_complex(rng, F2, b);
        auto hx = h.component(a);
        EXPECT_TRUE(c.equal_objects(hx.src, c.iota(a)));
        EXPECT_TRUE(c.equal_objects(hx.tgt, t.obj(fn.u.obj(a))));
    }
}

TEST(MainTheorem, IdentityLInjAndHomTensorRProj) {
    ChainComma ci(identity_adjunction(F2));
    auto r = verify_main_theorem(ci, StructureId::LInj, {60, 10, 20, {2, 2, 0, 1}});
    EXPECT_TRUE(r.ok()) << failures_of(r);
    EXPECT_TRUE(has_check(r, "2-out-of-3"));
    EXPECT_TRUE(has_check(r, "retract closure"));

    ChainComma ch(hom_tensor_adjunction(ChainComplex::disk(F2, 0)));
    auto s = verify_main_theorem(ch, StructureId::RProj, {61, 10, 20, {2, 2, 0, 1}});
    EXPECT_TRUE(s.ok()) << failures_of(s);
    EXPECT_TRUE(has_check(s, "Pi0 section"));
}

TEST(MainTheorem, RejectsNonLocalizedVariant) {
    ChainComma c(identity_adjunction(F2));
    EXPECT_THROW(verify_main_theorem(c, StructureId::Inj), std::invalid_argument);
    EXPECT_THROW(verify_main_theorem(c, StructureId::Strong0), std::invalid_argument);
}

TEST(MainTheorem, QuillenSegalFibrantObjects) {
    ChainComma c(identity_adjunction(F3));
    auto r = quillen_segal_check(c, 62, 20);
    EXPECT_TRUE(r.ok()) << failures_of(r);
}
