#pragma once

#include <concepts>
#include <optional>
#include <utility>
#include <vector>

#include "core.hpp"

namespace commacat {

// r ∘ l
template <class Mor>
struct Factorization {
    Mor l;
    Mor r;
};

// Legs run out of the apex (limits) or into it (colimits).
template <class Obj, class Mor>
struct Cone {
    Obj apex;
    std::vector<Mor> legs;
};

template <class Obj, class Mor>
struct Cocone {
    Obj apex;
    std::vector<Mor> legs;
};

template <class B>
using ConeOf = Cone<typename B::Object, typename B::Morphism>;
template <class B>
using CoconeOf = Cocone<typename B::Object, typename B::Morphism>;

// What the comma constructions need from a model category.
//   pullback(f: X→Z, g: Y→Z)   legs P→X, P→Y
//   pushout(f: Z→X, g: Z→Y)    legs X→Q, Y→Q
//   equalizer(f, g: X⇉Y)       leg  E→X
//   coequalizer(f, g: X⇉Y)     leg  Y→Q
//   mediate(cone, maps)        h with legs[i]∘h = maps[i]
//   comediate(cocone, maps)    h with h∘legs[i] = maps[i]
//   lift(i, p, top, bottom)    s with s∘i = top, p∘s = bottom
template <class B>
concept ModelBackend = requires(const B& b, const typename B::Object& x, const typename B::Morphism& f,
                                FactorKind k, const std::vector<typename B::Morphism>& fs,
                                const ConeOf<B>& cone, const CoconeOf<B>& cocone) {
    { b.source(f) } -> std::same_as<typename B::Object>;
    { b.target(f) } -> std::same_as<typename B::Object>;
    { b.identity(x) } -> std::same_as<typename B::Morphism>;
    { b.compose(f, f) } -> std::same_as<typename B::Morphism>;
    { b.equal(f, f) } -> std::same_as<bool>;
    { b.equal_objects(x, x) } -> std::same_as<bool>;
    { b.classify(f) } -> std::same_as<ClassFlags>;
    { b.factorize(f, k) } -> std::same_as<Factorization<typename B::Morphism>>;
    { b.lift(f, f, f, f) } -> std::same_as<std::optional<typename B::Morphism>>;
    { b.terminal() } -> std::same_as<typename B::Object>;
    { b.initial() } -> std::same_as<typename B::Object>;
    { b.to_terminal(x) } -> std::same_as<typename B::Morphism>;
    { b.from_initial(x) } -> std::same_as<typename B::Morphism>;
    { b.product(x, x) } -> std::same_as<ConeOf<B>>;
    { b.coproduct(x, x) } -> std::same_as<CoconeOf<B>>;
    { b.pullback(f, f) } -> std::same_as<ConeOf<B>>;
    { b.pushout(f, f) } -> std::same_as<CoconeOf<B>>;
    { b.equalizer(f, f) } -> std::same_as<ConeOf<B>>;
    { b.coequalizer(f, f) } -> std::same_as<CoconeOf<B>>;
    { b.mediate(cone, fs) } -> std::same_as<std::optional<typename B::Morphism>>;
    { b.comediate(cocone, fs) } -> std::same_as<std::optional<typename B::Morphism>>;
    { b.inverse(f) } -> std::same_as<std::optional<typename B::Morphism>>;
};

template <class Mor>
struct OpMorphism {
    Mor base;  // the same arrow read in the base category, reversed
};

// The opposite model category: arrows reversed, cof and fib exchanged,
// limits computed as colimits of the base and conversely.
template <ModelBackend B>
class Opposite {
public:
    using Base = B;
    using Object = typename B::Object;
    using Morphism = OpMorphism<typename B::Morphism>;

    explicit Opposite(B base) : base_(std::move(base)) {}

    const B& base() const { return base_; }

    Object source(const Morphism& f) const { return base_.target(f.base); }
    Object target(const Morphism& f) const { return base_.source(f.base); }
    Morphism identity(const Object& x) const { return {base_.identity(x)}; }
    Morphism compose(const Morphism& g, const Morphism& f) const { return {base_.compose(f.base, g.base)}; }
    bool equal(const Morphism& f, const Morphism& g) const { return base_.equal(f.base, g.base); }
    bool equal_objects(const Object& x, const Object& y) const { return base_.equal_objects(x, y); }

    ClassFlags classify(const Morphism& f) const { return swap_cof_fib(base_.classify(f.base)); }

    // f = r'∘l' here comes from the base factorization f.base = r∘l of the
    // opposite kind: l' = r reversed, r' = l reversed.
    Factorization<Morphism> factorize(const Morphism& f, FactorKind k) const {
        auto fb = base_.factorize(f.base, opposite_kind(k));
        return {Morphism{fb.r}, Morphism{fb.l}};
    }

    std::optional<Morphism> lift(const Morphism& i, const Morphism& p, const Morphism& top,
                                 const Morphism& bottom) const {
        auto s = base_.lift(p.base, i.base, bottom.base, top.base);
        if (!s) return std::nullopt;
        return Morphism{*s};
    }

    Object terminal() const { return base_.initial(); }
    Object initial() const { return base_.terminal(); }
    Morphism to_terminal(const Object& x) const { return {base_.from_initial(x)}; }
    Morphism from_initial(const Object& x) const { return {base_.to_terminal(x)}; }

    Cone<Object, Morphism> product(const Object& x, const Object& y) const { return to_cone(base_.coproduct(x, y)); }
    Cocone<Object, Morphism> coproduct(const Object& x, const Object& y) const { return to_cocone(base_.product(x, y)); }
    Cone<Object, Morphism> pullback(const Morphism& f, const Morphism& g) const {
        return to_cone(base_.pushout(f.base, g.base));
    }
    Cocone<Object, Morphism> pushout(const Morphism& f, const Morphism& g) const {
        return to_cocone(base_.pullback(f.base, g.base));
    }
    Cone<Object, Morphism> equalizer(const Morphism& f, const Morphism& g) const {
        return to_cone(base_.coequalizer(f.base, g.base));
    }
    Cocone<Object, Morphism> coequalizer(const Morphism& f, const Morphism& g) const {
        return to_cocone(base_.equalizer(f.base, g.base));
    }

    std::optional<Morphism> mediate(const Cone<Object, Morphism>& cone, const std::vector<Morphism>& maps) const {
        CoconeOf<B> c{cone.apex, unwrap(cone.legs)};
        auto h = base_.comediate(c, unwrap(maps));
        if (!h) return std::nullopt;
        return Morphism{*h};
    }
    std::optional<Morphism> comediate(const Cocone<Object, Morphism>& cocone, const std::vector<Morphism>& maps) const {
        ConeOf<B> c{cocone.apex, unwrap(cocone.legs)};
        auto h = base_.mediate(c, unwrap(maps));
        if (!h) return std::nullopt;
        return Morphism{*h};
    }

    std::optional<Morphism> inverse(const Morphism& f) const {
        auto h = base_.inverse(f.base);
        if (!h) return std::nullopt;
        return Morphism{*h};
    }

private:
    static std::vector<typename B::Morphism> unwrap(const std::vector<Morphism>& v) {
        std::vector<typename B::Morphism> out;
        out.reserve(v.size());
        for (const auto& m : v) out.push_back(m.base);
        return out;
    }
    static std::vector<Morphism> wrap(const std::vector<typename B::Morphism>& v) {
        std::vector<Morphism> out;
        out.reserve(v.size());
        for (const auto& m : v) out.push_back(Morphism{m});
        return out;
    }
    static Cone<Object, Morphism> to_cone(const CoconeOf<B>& c) { return {c.apex, wrap(c.legs)}; }
    static Cocone<Object, Morphism> to_cocone(const ConeOf<B>& c) { return {c.apex, wrap(c.legs)}; }

    B base_;
};

}  // namespace commacat
