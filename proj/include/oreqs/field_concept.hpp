#pragma once

#include <concepts>
#include <utility>

namespace oreqs {

/// An effective (exactly computable) commutative field. Every value is kept
/// in a canonical form, so operator== is mathematical equality.
template <class K>
concept Field = std::regular<K> && requires(const K a, const K b, long n) {
    { K::zero() } -> std::same_as<K>;
    { K::one() } -> std::same_as<K>;
    { K::from_int(n) } -> std::same_as<K>;
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { a / b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a.inv() } -> std::same_as<K>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.is_one() } -> std::same_as<bool>;
};

/// a^k for any integer k (k < 0 inverts first; 0^0 = 1).
template <Field K>
K pow_int(const K& a, long k) {
    K base = a;
    unsigned long e;
    if (k < 0) {
        base = a.inv();
        e = static_cast<unsigned long>(-(k + 1)) + 1;  // avoids LONG_MIN overflow
    } else {
        e = static_cast<unsigned long>(k);
    }
    K acc = K::one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

}  // namespace oreqs
