#pragma once

#include <concepts>
#include <type_traits>

namespace vwt {

/// A commutative ring element that carries its own context (field, level,
/// number of variables), so zero and one can be produced generically.
template <class E>
concept RingElement = requires(const E& a, const E& b, const typename E::context_type& ctx) {
  { E::zero(ctx) } -> std::same_as<E>;
  { E::one(ctx) } -> std::same_as<E>;
  { E::from_int(ctx, 1L) } -> std::same_as<E>;
  { a.context() } -> std::convertible_to<const typename E::context_type&>;
  { a + b } -> std::same_as<E>;
  { a - b } -> std::same_as<E>;
  { a * b } -> std::same_as<E>;
  { -a } -> std::same_as<E>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
};

/// Ring elements whose nonzero values are all invertible.
template <class E>
struct is_field : std::false_type {};

template <class E>
concept FieldElement = RingElement<E> && is_field<E>::value && requires(const E& a) {
  { a.inverse() } -> std::same_as<E>;
};

}  // namespace vwt
