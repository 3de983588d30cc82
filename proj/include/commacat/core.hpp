#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace commacat {

struct ClassFlags {
    bool is_cof = false;
    bool is_fib = false;
    bool is_we = false;

    bool trivial_cof() const { return is_cof && is_we; }
    bool trivial_fib() const { return is_fib && is_we; }
    bool operator==(const ClassFlags&) const = default;

    std::string str() const {
        std::string s = "{";
        auto add = [&](bool b, const char* n) {
            if (!b) return;
            if (s.size() > 1) s += ",";
            s += n;
        };
        add(is_cof, "cof");
        add(is_fib, "fib");
        add(is_we, "we");
        return s + "}";
    }
};

// Classification in the opposite category.
inline ClassFlags swap_cof_fib(ClassFlags c) { return {c.is_fib, c.is_cof, c.is_we}; }

enum class FactorKind { CofThenTrivFib, TrivCofThenFib };

inline FactorKind opposite_kind(FactorKind k) {
    return k == FactorKind::CofThenTrivFib ? FactorKind::TrivCofThenFib : FactorKind::CofThenTrivFib;
}

inline std::string_view to_string(FactorKind k) {
    return k == FactorKind::CofThenTrivFib ? "cof-trivfib" : "trivcof-fib";
}

inline FactorKind parse_factor_kind(std::string_view s) {
    if (s == "cof-trivfib" || s == "CofThenTrivFib") return FactorKind::CofThenTrivFib;
    if (s == "trivcof-fib" || s == "TrivCofThenFib") return FactorKind::TrivCofThenFib;
    throw std::invalid_argument("unknown factorization kind: " + std::string(s));
}

enum class StructureId { Inj, Proj, LInj, LProj, RInj, RProj, Strong0, Strong1 };

inline constexpr std::array<StructureId, 8> all_structures = {
    StructureId::Inj,  StructureId::Proj,  StructureId::LInj,    StructureId::LProj,
    StructureId::RInj, StructureId::RProj, StructureId::Strong0, StructureId::Strong1};

inline std::string_view to_string(StructureId s) {
    switch (s) {
        case StructureId::Inj: return "inj";
        case StructureId::Proj: return "proj";
        case StructureId::LInj: return "linj";
        case StructureId::LProj: return "lproj";
        case StructureId::RInj: return "rinj";
        case StructureId::RProj: return "rproj";
        case StructureId::Strong0: return "strong0";
        case StructureId::Strong1: return "strong1";
    }
    return "?";
}

inline StructureId parse_structure(std::string_view s) {
    for (auto id : all_structures)
        if (to_string(id) == s) return id;
    throw std::invalid_argument("unknown structure: " + std::string(s));
}

// The structure on the dual comma category whose classes are the
// opposites of those of s.
inline StructureId dual_structure(StructureId s) {
    switch (s) {
        case StructureId::Inj: return StructureId::Proj;
        case StructureId::Proj: return StructureId::Inj;
        case StructureId::LInj: return StructureId::RProj;
        case StructureId::RProj: return StructureId::LInj;
        case StructureId::LProj: return StructureId::RInj;
        case StructureId::RInj: return StructureId::LProj;
        case StructureId::Strong0: return StructureId::Strong1;
        case StructureId::Strong1: return StructureId::Strong0;
    }
    return s;
}

inline bool is_right_structure(StructureId s) {
    return s == StructureId::RInj || s == StructureId::RProj || s == StructureId::Strong1;
}

}  // namespace commacat
