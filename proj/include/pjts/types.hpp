#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <cstdint>
#include <numeric>

namespace pjts {

using Element = Eigen::VectorXd;
using LinOp = Eigen::MatrixXd;
using CElement = Eigen::VectorXcd;
using cplx = std::complex<double>;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericalDegeneracy : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact arithmetic for pole lattices and b-polynomial roots
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  friend Rational operator+(Rational a, Rational b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(Rational a, Rational b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(Rational a, Rational b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(Rational a, Rational b) {
    return Rational(a.num * b.den, a.den * b.num);
  }
  Rational operator-() const { return Rational(-num, den); }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  double value() const { return double(num) / double(den); }
  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace pjts
