#pragma once

#include <utility>

namespace ramsey {

/// Forward-mode first derivative: carries (value, derivative) through
/// arithmetic. T is any type with field operations plus exp/log.
template <class T>
struct Dual {
  T val;
  T der;
};

template <class T>
Dual<T> make_variable(T v, T unit) {
  return Dual<T>{std::move(v), std::move(unit)};
}

template <class T>
Dual<T> make_constant(T v, T zero) {
  return Dual<T>{std::move(v), std::move(zero)};
}

template <class T>
Dual<T> operator+(const Dual<T>& a, const Dual<T>& b) {
  return Dual<T>{a.val + b.val, a.der + b.der};
}

template <class T>
Dual<T> operator-(const Dual<T>& a, const Dual<T>& b) {
  return Dual<T>{a.val - b.val, a.der - b.der};
}

template <class T>
Dual<T> operator-(const Dual<T>& a) {
  return Dual<T>{-a.val, -a.der};
}

template <class T>
Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) {
  return Dual<T>{a.val * b.val, a.der * b.val + a.val * b.der};
}

template <class T>
Dual<T> operator/(const Dual<T>& a, const Dual<T>& b) {
  T q = a.val / b.val;
  T d = (a.der - q * b.der) / b.val;
  return Dual<T>{std::move(q), std::move(d)};
}

template <class T>
Dual<T> exp(const Dual<T>& a) {
  T e = exp(a.val);
  T d = a.der * e;
  return Dual<T>{std::move(e), std::move(d)};
}

template <class T>
Dual<T> log(const Dual<T>& a) {
  return Dual<T>{log(a.val), a.der / a.val};
}

}  // namespace ramsey
