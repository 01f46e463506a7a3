#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace arq {

// Exact rational arithmetic on 64-bit parts. All values in this library are
// desk scale (quiver data, interval endpoints, grid midpoints), so int64
// numerators/denominators with 128-bit comparison intermediates are plenty.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n) : num(n), den(1) {}
  Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num * b.num, a.den * b.den);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::invalid_argument("rational division by zero");
    return Rat(a.num * b.den, a.den * b.num);
  }
  Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

  friend int cmp(const Rat& a, const Rat& b) {
    __int128 l = static_cast<__int128>(a.num) * b.den;
    __int128 r = static_cast<__int128>(b.num) * a.den;
    return l < r ? -1 : (l > r ? 1 : 0);
  }
  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a, b) >= 0; }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Accepts "p", "p/q" and plain decimals like "-0.25".
  static Rat parse(const std::string& text);
};

inline Rat midpoint(const Rat& a, const Rat& b) { return (a + b) / Rat(2); }

inline Rat Rat::parse(const std::string& text) {
  std::string s;
  for (char c : text) if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      std::int64_t n = std::stoll(s.substr(0, slash));
      std::int64_t d = std::stoll(s.substr(slash + 1));
      return Rat(n, d);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(std::stoll(s));
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (ip == "-" || ip == "+" || ip.empty()) ip += "0";
    std::int64_t whole = std::stoll(ip);
    std::int64_t den = 1;
    std::int64_t frac = 0;
    for (char c : fp) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad decimal");
      frac = frac * 10 + (c - '0');
      den *= 10;
    }
    Rat r = Rat(whole < 0 ? -whole : whole) + Rat(frac, den);
    if (neg) r = -r;
    else if (whole < 0) r = Rat(whole) - Rat(frac, den);  // unreachable, kept for clarity
    return r;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

// Element of the extended real line.
struct ExtReal {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  Rat value;  // meaningful only when Finite

  ExtReal() = default;
  ExtReal(Rat v) : kind(Kind::Finite), value(v) {}
  static ExtReal neg_inf() { ExtReal e; e.kind = Kind::NegInf; return e; }
  static ExtReal pos_inf() { ExtReal e; e.kind = Kind::PosInf; return e; }
  static ExtReal finite(Rat v) { return ExtReal(v); }

  bool is_finite() const { return kind == Kind::Finite; }
  bool is_neg_inf() const { return kind == Kind::NegInf; }
  bool is_pos_inf() const { return kind == Kind::PosInf; }

  friend int cmp(const ExtReal& a, const ExtReal& b) {
    auto rank = [](Kind k) { return k == Kind::NegInf ? 0 : (k == Kind::Finite ? 1 : 2); };
    if (rank(a.kind) != rank(b.kind)) return rank(a.kind) < rank(b.kind) ? -1 : 1;
    if (a.kind != Kind::Finite) return 0;
    return cmp(a.value, b.value);
  }
  friend bool operator==(const ExtReal& a, const ExtReal& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const ExtReal& a, const ExtReal& b) { return cmp(a, b) != 0; }
  friend bool operator<(const ExtReal& a, const ExtReal& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const ExtReal& a, const ExtReal& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const ExtReal& a, const ExtReal& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const ExtReal& a, const ExtReal& b) { return cmp(a, b) >= 0; }

  // Completed arctan target: +-inf map to +-pi/2 via atan(+-HUGE_VAL).
  double to_double() const {
    switch (kind) {
      case Kind::NegInf: return -HUGE_VAL;
      case Kind::PosInf: return HUGE_VAL;
      default: return value.to_double();
    }
  }

  std::string str() const {
    switch (kind) {
      case Kind::NegInf: return "-inf";
      case Kind::PosInf: return "+inf";
      default: return value.str();
    }
  }

  // Accepts "-inf", "+inf", "inf" and rational literals.
  static ExtReal parse(const std::string& text) {
    std::string s;
    for (char c : text) if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s == "-inf" || s == "-oo") return neg_inf();
    if (s == "+inf" || s == "inf" || s == "+oo" || s == "oo") return pos_inf();
    return ExtReal(Rat::parse(s));
  }
};

}  // namespace arq
