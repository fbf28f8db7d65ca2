#pragma once

#include <string>

namespace hopf {

// Complex number over an arbitrary real field T.
template <class T>
struct Gauss {
  T re{0}, im{0};

  Gauss() = default;
  Gauss(int v) : re(v), im(0) {}  // NOLINT
  Gauss(const T& r) : re(r), im(0) {}  // NOLINT
  Gauss(const T& r, const T& i) : re(r), im(i) {}

  Gauss conj() const { return {re, -im}; }
  T norm2() const { return re * re + im * im; }

  Gauss operator-() const { return {-re, -im}; }
  friend Gauss operator+(const Gauss& a, const Gauss& b) { return {a.re + b.re, a.im + b.im}; }
  friend Gauss operator-(const Gauss& a, const Gauss& b) { return {a.re - b.re, a.im - b.im}; }
  friend Gauss operator*(const Gauss& a, const Gauss& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Gauss operator/(const Gauss& a, const Gauss& b) {
    T n = b.norm2();
    Gauss p = a * b.conj();
    return {p.re / n, p.im / n};
  }
  Gauss& operator+=(const Gauss& o) { return *this = *this + o; }
  Gauss& operator-=(const Gauss& o) { return *this = *this - o; }
  Gauss& operator*=(const Gauss& o) { return *this = *this * o; }
  friend bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }
};

template <class T>
bool is_zero(const Gauss<T>& g) {
  return is_zero(g.re) && is_zero(g.im);
}
inline bool is_zero(double d) { return d == 0.0; }

}  // namespace hopf
