#include <gtest/gtest.h>

#include "commacat/exact.hpp"
#include "commacat/json_io.hpp"
#include "commacat/site.hpp"
#include "commacat/tensor.hpp"

using namespace commacat;

namespace {

const Prime F2(2);
const Prime F3(3);

Matrix rows(Prime p, std::vector<std::vector<long long>> r) { return Matrix::from_rows(p, r); }

ChainMap from_zero(const ChainComplex& x) { return ChainMap::zero(ChainComplex::zero(x.prime()), x); }

}  // namespace

// ---- linear algebra ---------------------------------------------------------------

TEST(Linalg, Rank) {
    EXPECT_EQ(rank(Matrix::identity(F2, 2)), 2u);
    EXPECT_EQ(rank(Matrix(F2, 3, 2)), 0u);
    EXPECT_EQ(rank(rows(F2, {{1, 1}, {1, 1}})), 1u);
    EXPECT_EQ(rank(rows(F3, {{1, 1}, {1, 2}})), 2u);
}

TEST(Linalg, Solve) {
    auto b = rows(F3, {{2, 1}, {0, 1}});
    EXPECT_EQ(*solve(Matrix::identity(F3, 2), b), b);

    auto a = rows(F2, {{1, 1}});
    auto x = solve(a, rows(F2, {{1}}));
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(a * *x, rows(F2, {{1}}));

    EXPECT_FALSE(solve(Matrix(F2, 1, 1), rows(F2, {{1}})).has_value());
}

TEST(Linalg, KernelBasis) {
    EXPECT_EQ(kernel_basis(Matrix::identity(F3, 2)).cols(), 0u);
    auto k = kernel_basis(Matrix(F2, 1, 2));
    EXPECT_EQ(k.cols(), 2u);
    EXPECT_EQ(rank(k), 2u);
    auto k1 = kernel_basis(rows(F2, {{1, 1}}));
    ASSERT_EQ(k1.cols(), 1u);
    EXPECT_EQ(k1, rows(F2, {{1}, {1}}));
}

TEST(Linalg, KronAndDirectSum) {
    auto b = rows(F3, {{1, 2}, {0, 1}});
    EXPECT_EQ(kron(Matrix::identity(F3, 1), b), b);
    EXPECT_EQ(direct_sum(Matrix::identity(F2, 1), Matrix::identity(F2, 2)), Matrix::identity(F2, 3));
    EXPECT_EQ(kron(rows(F2, {{1, 0}}), rows(F2, {{1}, {1}})), rows(F2, {{1, 0}, {1, 0}}));
}

TEST(Linalg, RejectsBadInput) {
    EXPECT_THROW(Prime(4), std::invalid_argument);
    EXPECT_THROW(rows(F2, {{1}}) * rows(F2, {{1, 1}, {0, 1}}), std::invalid_argument);
    EXPECT_THROW(kron(Matrix::identity(F2, 1), Matrix::identity(F3, 1)), std::invalid_argument);
}

// ---- chain complexes --------------------------------------------------------------

TEST(Chain, RejectsNonComplex) {
    // d∘d ≠ 0
    std::map<int, Matrix> d{{1, Matrix::identity(F2, 1)}, {2, Matrix::identity(F2, 1)}};
    EXPECT_THROW(ChainComplex(F2, 0, {1, 1, 1}, d), std::invalid_argument);
    // q₀ with D1 in degrees 1, 0 does not commute with the differential
    auto d1 = ChainComplex::disk(F2, 1);
    EXPECT_THROW(ChainMap(d1, named::S0(F2), {{0, Matrix::identity(F2, 1)}}), std::invalid_argument);
}

TEST(Chain, ClassifyExamples) {
    auto d1 = named::D1(F2);
    EXPECT_EQ(classify_map(ChainMap::identity(d1)), (ClassFlags{true, true, true}));
    EXPECT_EQ(classify_map(from_zero(d1)), (ClassFlags{true, false, true}));
    EXPECT_EQ(classify_map(named::q(F2)), (ClassFlags{false, true, false}));
}

TEST(Chain, Homology) {
    auto h0 = homology(named::S0(F2));
    EXPECT_EQ(h0[0], 1u);
    for (auto [n, v] : homology(named::D1(F3))) EXPECT_EQ(v, 0u) << n;
    auto h = homology(direct_sum(named::S0(F2), named::D1(F2)).sum);
    EXPECT_EQ(h[0], 1u);
    EXPECT_EQ(h[-1], 0u);
}

TEST(Chain, FactorizeExamples) {
    auto s0 = named::S0(F2);
    auto f = factorize_chain(from_zero(s0), FactorKind::CofThenTrivFib);
    EXPECT_TRUE(f.l.target() == s0);
    EXPECT_EQ(f.r, ChainMap::identity(s0));

    auto g = factorize_chain(ChainMap::identity(s0), FactorKind::TrivCofThenFib);
    EXPECT_EQ(compose(g.r, g.l), ChainMap::identity(s0));
    EXPECT_TRUE(classify_map(g.l).trivial_cof());
    EXPECT_TRUE(classify_map(g.r).is_fib);

    // Cyl(q) with D1 in degrees 0, -1: dims 1, 3, 1 in degrees -1, 0, 1.
    auto q = named::q(F2);
    auto c = factorize_chain(q, FactorKind::CofThenTrivFib);
    auto mid = c.l.target();
    EXPECT_EQ(mid.lo(), -1);
    EXPECT_EQ(mid.dims(), (std::vector<std::size_t>{1, 3, 1}));
    EXPECT_TRUE(classify_map(c.l).is_cof);
    EXPECT_TRUE(classify_map(c.r).trivial_fib());
    EXPECT_EQ(compose(c.r, c.l), q);
}

TEST(Chain, FactorizationProperty) {
    for (unsigned pv : {2u, 3u})
        for (std::uint64_t i = 0; i < 40; ++i) {
            Rng rng = Rng::for_case(100, i);
            auto f = random_chain_map(rng, Prime(pv));
            for (auto k : {FactorKind::CofThenTrivFib, FactorKind::TrivCofThenFib}) {
                auto fr = factorize_chain(f, k);
                EXPECT_EQ(compose(fr.r, fr.l), f);
                auto cl = classify_map(fr.l), cr = classify_map(fr.r);
                EXPECT_TRUE(k == FactorKind::CofThenTrivFib ? cl.is_cof && cr.trivial_fib()
                                                            : cl.trivial_cof() && cr.is_fib);
            }
        }
}

TEST(Chain, LiftExamples) {
    auto d1 = named::D1(F2);
    auto q = named::q(F2);
    auto s = solve_lift_chain(from_zero(d1), q, from_zero(d1), q);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(*s, ChainMap::identity(d1));
    EXPECT_EQ(chain_hom_dim(d1, d1), 1u);

    Rng rng(3);
    auto top = random_chain_map(rng, d1, d1);
    auto t = solve_lift_chain(ChainMap::identity(d1), ChainMap::identity(d1), top, top);
    ASSERT_TRUE(t.has_value());
    EXPECT_EQ(*t, top);

    auto s1 = named::S1(F2);
    auto u = solve_lift_chain(from_zero(s1), q, from_zero(d1), ChainMap::zero(s1, named::S0(F2)));
    ASSERT_TRUE(u.has_value());
    EXPECT_EQ(*u, ChainMap::zero(s1, d1));

    // 0 → S0 against 0 → S0 with bottom id: s would factor id through 0.
    auto s0 = named::S0(F2);
    auto z = ChainComplex::zero(F2);
    EXPECT_FALSE(solve_lift_chain(from_zero(s0), from_zero(s0), ChainMap::zero(z, z), ChainMap::identity(s0))
                     .has_value());
}

TEST(Chain, LimitsAndColimits) {
    ChainBackend b(F2);
    auto q = named::q(F2);
    auto s0 = named::S0(F2);
    auto pb = b.pullback(q, ChainMap::identity(s0));
    EXPECT_TRUE(pb.apex == named::D1(F2));
    EXPECT_EQ(compose(q, pb.legs[0]), compose(ChainMap::identity(s0), pb.legs[1]));

    auto pr = finite_limit(b, LimitShape::Product, {s0, named::S1(F2)}, {});
    EXPECT_EQ(pr.apex.dims(), (std::vector<std::size_t>{1, 1}));
    EXPECT_TRUE(finite_limit(b, LimitShape::Terminal, {}, {}).apex.is_zero());

    auto po = b.pushout(from_zero(s0), from_zero(s0));
    EXPECT_EQ(po.apex.dim(0), 2u);
    EXPECT_TRUE(b.coequalizer(ChainMap::identity(s0), ChainMap::zero(s0, s0)).apex.is_zero());
    EXPECT_TRUE(finite_colimit(b, ColimitShape::Initial, {}, {}).apex.is_zero());
    EXPECT_THROW(finite_limit(b, LimitShape::Pullback, {s0}, {}), std::invalid_argument);
}

TEST(Chain, ZeroDimensionBoundGivesZeroComplexes) {
    for (std::uint64_t i = 0; i < 20; ++i) {
        Rng rng = Rng::for_case(6, i);
        EXPECT_TRUE(random_complex(rng, F3, {0, 3, -1, 1}).is_zero());
    }
}

TEST(Chain, TensorAndHom) {
    Rng rng(5);
    auto x = random_complex(rng, F3);
    EXPECT_TRUE(tensor_chain(named::S0(F3), x) == x);
    auto ss = tensor_chain(named::S1(F2), named::S1(F2));
    EXPECT_EQ(ss.dim(2), 1u);
    EXPECT_EQ(ss.lo(), 2);
    EXPECT_EQ(ss.hi(), 2);
    auto h = hom_chain(named::S1(F2), named::S0(F2));
    EXPECT_EQ(h.dim(-1), 1u);
    EXPECT_EQ(h.lo(), -1);
    EXPECT_EQ(h.hi(), -1);
}

TEST(Chain, OppositeAdapter) {
    ChainBackend b(F2);
    Opposite<ChainBackend> op(b);
    auto q = named::q(F2);
    auto flags = op.classify(OpMorphism<ChainMap>{q});
    EXPECT_TRUE(flags.is_cof);
    EXPECT_FALSE(flags.is_fib);
    EXPECT_FALSE(flags.is_we);

    auto s0 = named::S0(F2);
    auto cone = op.pullback(OpMorphism<ChainMap>{from_zero(s0)}, OpMorphism<ChainMap>{from_zero(s0)});
    EXPECT_TRUE(cone.apex == b.pushout(from_zero(s0), from_zero(s0)).apex);

    auto f = op.factorize(OpMorphism<ChainMap>{q}, FactorKind::CofThenTrivFib);
    EXPECT_TRUE(op.classify(f.l).is_cof);
    EXPECT_TRUE(op.classify(f.r).trivial_fib());
}

// ---- comma category ---------------------------------------------------------------

class CommaExamples : public ::testing::Test {
protected:
    ChainComma c{identity_adjunction(F2)};
    ChainComplex s0 = named::S0(F2), s1 = named::S1(F2), d1 = named::D1(F2);
    ChainMap q = named::q(F2);
    ChainCommaObject fq = c.make_object(d1, s0, q);
};

TEST_F(CommaExamples, CanonicalFunctors) {
    auto i = c.iota(s0);
    EXPECT_TRUE(i.f0 == s0 && i.f1 == s0);
    EXPECT_EQ(i.pi, ChainMap::identity(s0));
    auto l = c.L1(s0);
    EXPECT_TRUE(l.f0.is_zero() && l.f1 == s0);
    auto f = c.Fplus(s0);
    EXPECT_TRUE(c.equal_objects(f, i));
    EXPECT_TRUE(fq.f0 == d1);  // Π⁰
}

TEST_F(CommaExamples, HomSetSizes) {
    EXPECT_EQ(CommaHomSpace(c, c.iota(s0), c.iota(s0)).dim(), 1u);
    EXPECT_EQ(chain_hom_dim(s0, s0), 1u);
    EXPECT_EQ(CommaHomSpace(c, c.L1(s0), fq).dim(), 1u);
}

TEST_F(CommaExamples, Limits) {
    auto t = c.terminal();
    EXPECT_TRUE(t.f0.is_zero() && t.f1.is_zero());
    auto pr = c.product(c.iota(s0), c.iota(s1));
    EXPECT_EQ(pr.apex.f0.dims(), (std::vector<std::size_t>{1, 1}));
    EXPECT_EQ(pr.apex.pi, ChainMap::identity(pr.apex.f0));
    auto z = c.iota(ChainComplex::zero(F2));
    auto po = c.pushout(c.from_initial(c.iota(s0)), c.from_initial(c.iota(s0)));
    EXPECT_EQ(po.apex.f0.dim(0), 2u);
    EXPECT_EQ(po.apex.f1.dim(0), 2u);
    EXPECT_EQ(po.apex.pi, ChainMap::identity(po.apex.f0));
    EXPECT_TRUE(c.equal_objects(z, c.initial()));
}

TEST_F(CommaExamples, Classification) {
    auto id = c.identity(c.iota(s0));
    for (auto s : all_structures) EXPECT_EQ(classify_comma(c, id, s), (ClassFlags{true, true, true})) << to_string(s);

    auto sq = c.make_morphism(fq, c.iota(s0), q, ChainMap::identity(s0));
    EXPECT_TRUE(classify_comma(c, sq, StructureId::Inj).is_fib);
    EXPECT_FALSE(classify_comma(c, sq, StructureId::LInj).is_fib);
    EXPECT_TRUE(classify_comma(c, sq, StructureId::LProj).is_we);
    EXPECT_FALSE(classify_comma(c, sq, StructureId::RInj).is_we);

    auto inc = c.iota(from_zero(d1));
    auto fl = classify_comma(c, inc, StructureId::LInj);
    EXPECT_TRUE(fl.is_cof && fl.is_we);
}

TEST_F(CommaExamples, FibrancyAndQuillenSegal) {
    for (const auto& x : {s0, s1, d1}) EXPECT_TRUE(is_quillen_segal(c, c.iota(x)));
    EXPECT_FALSE(is_quillen_segal(c, fq));
    EXPECT_TRUE(is_fibrant(c, fq, StructureId::Inj));
    EXPECT_FALSE(is_fibrant(c, fq, StructureId::LInj));
    auto r = factorize_chain(q, FactorKind::TrivCofThenFib).r;
    auto cyl = factorize_chain(q, FactorKind::CofThenTrivFib).r;
    EXPECT_TRUE(is_quillen_segal(c, c.make_object(cyl.source(), s0, cyl)));
    EXPECT_FALSE(is_quillen_segal(c, c.make_object(r.source(), s0, r)));
}

TEST_F(CommaExamples, IsoLift) {
    auto [g, s] = iso_lift(c, fq, ChainMap::identity(d1));
    EXPECT_TRUE(c.equal_objects(g, fq));
    EXPECT_TRUE(c.equal(s, c.identity(fq)));

    ChainComma c3(identity_adjunction(F3));
    auto x = c3.iota(named::S0(F3));
    auto two = ChainMap(x.f0, x.f0, {{0, Matrix::scalar(F3, 1, 2)}});
    auto [gu, sig] = iso_lift(c3, x, two);
    EXPECT_EQ(gu.pi, two);
    EXPECT_EQ(sig.s0, two);
    EXPECT_EQ(sig.s1, ChainMap::identity(x.f1));

    for (std::uint64_t i = 0; i < 50; ++i) {
        Rng rng = Rng::for_case(78, i);
        auto f = random_comma_object(rng, c3);
        auto u = random_iso_from(rng, f.f0);
        auto [h, t] = iso_lift(c3, f, u);
        EXPECT_EQ(t.s0, u);
        EXPECT_TRUE(c3.commutes(t));
    }
    EXPECT_THROW(iso_lift(c, fq, q), std::invalid_argument);
}

TEST_F(CommaExamples, RejectsNonCommutingMorphism) {
    EXPECT_THROW(c.make_morphism(c.iota(s0), c.iota(s0), ChainMap::identity(s0), ChainMap::zero(s0, s0)),
                 std::invalid_argument);
}

// ---- JSON ---------------------------------------------------------------------------

TEST(Json, RoundTrip) {
    for (unsigned pv : {2u, 3u})
        for (std::uint64_t i = 0; i < 20; ++i) {
            ChainComma c(hom_tensor_adjunction(ChainComplex::disk(Prime(pv), 0)));
            Rng rng = Rng::for_case(9, i);
            auto s = random_comma_morphism(rng, c);
            auto j = to_json(s);
            auto back = comma_morphism_from_json(c, json::parse(j.dump()));
            EXPECT_TRUE(c.equal(s, back));
            EXPECT_EQ(to_json(back), j);
        }
}

TEST(Json, RejectsMalformedInput) {
    ChainComma c(identity_adjunction(F2));
    EXPECT_THROW(complex_from_json(json::parse(R"({"lo": 0, "dims": [1]})")), InputError);
    EXPECT_THROW(complex_from_json(json::parse(R"({"p": 4, "lo": 0, "dims": [1]})")), InputError);
    EXPECT_THROW(complex_from_json(json::parse(R"({"p": 3, "lo": 0, "dims": [1]})"), F2), InputError);
    EXPECT_THROW(complex_from_json(json::parse(R"({"p": 2, "lo": 0, "dims": [1, 1], "d": {"1": [[1, 1]]}})")),
                 InputError);
    EXPECT_THROW(complex_from_json(json::parse(R"({"p": 2, "lo": 0, "dims": [1, 1], "d": {"x": [[1]]}})")),
                 InputError);
    auto s0 = to_json(named::S0(F2));
    // π must land in U(f1)
    json bad_pi = {{"source", s0}, {"target", to_json(named::S1(F2))}, {"components", json::object()}};
    json obj = {{"f0", s0}, {"f1", s0}, {"pi", bad_pi}};
    EXPECT_THROW(comma_object_from_json(c, obj), InputError);
    EXPECT_THROW(adjunction_from_json(json::parse(R"({"name": "tensor"})")), InputError);
}

// ---- sites --------------------------------------------------------------------------

TEST(Sites, Sierpinski) {
    auto s = sierpinski_site();
    EXPECT_TRUE(verify_site_axioms(s).ok());
    EXPECT_TRUE(s.is_cover(2, {1, 2}));
    EXPECT_TRUE(s.is_cover(2, {0, 2}));
    EXPECT_FALSE(s.is_cover(2, {0, 1}));
    EXPECT_TRUE(s.is_cover(0, {}));
}

TEST(Sites, CommaOfIdentityIsArrowPoset) {
    auto cs = comma_site(identity_site_morphism(sierpinski_site()));
    EXPECT_EQ(cs.objects.size(), 6u);
    for (int x = 0; x < cs.site.size(); ++x) EXPECT_TRUE(cs.site.is_cover(x, {x}));
    EXPECT_TRUE(verify_site_axioms(cs.site).ok());
    EXPECT_TRUE(verify_site_morphism(cs.iota).ok());
    EXPECT_TRUE(verify_site_morphism(cs.pi0).ok());
}

TEST(Sites, CommaOfPointPreimage) {
    auto u = point_preimage_morphism();
    EXPECT_TRUE(verify_site_morphism(u).ok());
    auto cs = comma_site(u);
    EXPECT_EQ(cs.objects.size(), 4u);
    EXPECT_TRUE(verify_site_axioms(cs.site).ok());
    EXPECT_TRUE(verify_site_morphism(cs.iota).ok());
    EXPECT_TRUE(verify_site_morphism(cs.pi0).ok());
    EXPECT_TRUE(site_suite().ok());
}

TEST(Sites, CorruptedCoverageFailsStability) {
    auto r = verify_site_axioms(corrupted_sierpinski_site());
    EXPECT_FALSE(r.ok());
    for (const auto& c : r.checks) {
        if (c.name != "stability") continue;
        ASSERT_FALSE(c.ok());
        EXPECT_NE(c.counterexamples[0].find("σ: a → X"), std::string::npos) << c.counterexamples[0];
    }
}

// ---- abelian structure ----------------------------------------------------------------

TEST(Abelian, ZeroObjectAndBiproduct) {
    ChainComma c(identity_adjunction(F2));
    auto z = zero_object(c);
    EXPECT_TRUE(z.f0.is_zero() && z.f1.is_zero());
    auto x = c.iota(named::S0(F2)), y = c.iota(named::S1(F2));
    auto h = canonical_sum_to_product(c, x, y);
    EXPECT_TRUE(c.inverse(h).has_value());
    EXPECT_EQ(h.s0, chain_sum_to_product(c.m(), x.f0, y.f0));
}

TEST(Abelian, MonoWithSphereCokernel) {
    ChainComma c(identity_adjunction(F2));
    auto d1 = named::D1(F2);
    auto sm = ChainComplex::sphere(F2, -1);
    auto z = ChainComplex::zero(F2);
    auto inc = ChainMap(sm, d1, {{-1, Matrix::identity(F2, 1)}});
    auto src = c.make_object(z, sm, ChainMap::zero(z, sm));
    auto tgt = c.make_object(z, d1, ChainMap::zero(z, d1));
    auto s = c.make_morphism(src, tgt, ChainMap::identity(z), inc);
    EXPECT_TRUE(is_comma_mono(c, s));
    EXPECT_TRUE(is_levelwise_mono(s));
    EXPECT_FALSE(is_comma_epi(c, s));

    auto q = comma_cokernel(c, s);
    EXPECT_TRUE(q.tgt.f0.is_zero());
    EXPECT_TRUE(q.tgt.f1 == named::S0(F2));
    auto k = c.equalizer(q, zero_morphism(q.src, q.tgt));
    auto u = c.mediate(k, {s});
    ASSERT_TRUE(u.has_value());
    EXPECT_TRUE(c.inverse(*u).has_value());

    EXPECT_FALSE(is_comma_mono(c, zero_morphism(c.iota(named::S0(F2)), c.iota(named::S0(F2)))));
}

TEST(Abelian, SuiteSmoke) {
    for (unsigned pv : {2u, 3u}) {
        ChainComma c(identity_adjunction(Prime(pv)));
        auto r = abelian_suite(c, {4, 15});
        EXPECT_TRUE(r.ok());
    }
}
