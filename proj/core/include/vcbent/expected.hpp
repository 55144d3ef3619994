#pragma once

#include <stdexcept>
#include <type_traits>
#include <utility>
#include <variant>

namespace vcbent {

/// Either a value or a domain-level error. Used for outcomes that are part of
/// an operation's contract (a flat spectrum that is not a sign, a vector that
/// is not divisible); contract violations throw instead.
template <class T, class E>
class Expected {
 public:
  using value_type = T;
  using error_type = E;

  Expected(T value) : storage_(std::in_place_index<0>, std::move(value)) {}
  Expected(E error) : storage_(std::in_place_index<1>, std::move(error)) {}

  bool has_value() const noexcept { return storage_.index() == 0; }
  explicit operator bool() const noexcept { return has_value(); }

  const T& value() const& {
    if (!has_value()) throw std::logic_error("Expected: no value");
    return std::get<0>(storage_);
  }
  T&& value() && {
    if (!has_value()) throw std::logic_error("Expected: no value");
    return std::get<0>(std::move(storage_));
  }
  const E& error() const& {
    if (has_value()) throw std::logic_error("Expected: no error");
    return std::get<1>(storage_);
  }

  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

 private:
  std::variant<T, E> storage_;
};

}  // namespace vcbent
