#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <type_traits>

#include "oreqs/field_concept.hpp"
#include "oreqs/gaussian.hpp"
#include "oreqs/rational.hpp"
#include "oreqs/rational_function.hpp"

namespace oreqs {

using RatFunc = RationalFunction<Rational>;        // Q(t)
using RatFuncTower = RationalFunction<RatFunc>;    // Q(q)(t)

/// The coefficient fields available for building rings.
enum class FieldKind { rationals, gaussian_rationals, rational_functions, rational_function_tower };

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static constexpr FieldKind kind = FieldKind::rationals;
    static constexpr const char* name = "Q";
    static constexpr std::array<const char*, 0> vars{};
};

template <>
struct FieldTraits<GaussianRational> {
    static constexpr FieldKind kind = FieldKind::gaussian_rationals;
    static constexpr const char* name = "Qi";
    static constexpr std::array<const char*, 0> vars{};
};

template <>
struct FieldTraits<RatFunc> {
    static constexpr FieldKind kind = FieldKind::rational_functions;
    static constexpr const char* name = "Qt";
    static constexpr std::array<const char*, 1> vars{"t"};
};

template <>
struct FieldTraits<RatFuncTower> {
    static constexpr FieldKind kind = FieldKind::rational_function_tower;
    static constexpr const char* name = "Qqt";
    static constexpr std::array<const char*, 2> vars{"t", "q"};
};

inline std::optional<FieldKind> field_kind_from_name(std::string_view name) {
    if (name == "Q") return FieldKind::rationals;
    if (name == "Qi") return FieldKind::gaussian_rationals;
    if (name == "Qt") return FieldKind::rational_functions;
    if (name == "Qqt") return FieldKind::rational_function_tower;
    return std::nullopt;
}

inline const char* field_kind_name(FieldKind k) {
    switch (k) {
        case FieldKind::rationals: return "Q";
        case FieldKind::gaussian_rationals: return "Qi";
        case FieldKind::rational_functions: return "Qt";
        case FieldKind::rational_function_tower: return "Qqt";
    }
    return "?";
}

/// Named generators a field expression may refer to.
template <Field K>
std::optional<K> generator_value(std::string_view name) {
    if constexpr (std::is_same_v<K, GaussianRational>) {
        if (name == "i") return GaussianRational::i();
    } else if constexpr (std::is_same_v<K, RatFunc>) {
        if (name == "t") return RatFunc::indeterminate();
    } else if constexpr (std::is_same_v<K, RatFuncTower>) {
        if (name == "t") return RatFuncTower::indeterminate();
        if (name == "q") return RatFuncTower::constant(RatFunc::indeterminate());
    }
    return std::nullopt;
}

/// Invokes fn with std::type_identity<K> for the field type behind `kind`.
template <class Fn>
decltype(auto) with_field_kind(FieldKind kind, Fn&& fn) {
    switch (kind) {
        case FieldKind::rationals: return fn(std::type_identity<Rational>{});
        case FieldKind::gaussian_rationals: return fn(std::type_identity<GaussianRational>{});
        case FieldKind::rational_functions: return fn(std::type_identity<RatFunc>{});
        case FieldKind::rational_function_tower: return fn(std::type_identity<RatFuncTower>{});
    }
    throw std::logic_error("with_field_kind: bad kind");
}

static_assert(Field<Rational>);
static_assert(Field<GaussianRational>);
static_assert(Field<RatFunc>);
static_assert(Field<RatFuncTower>);

}  // namespace oreqs
