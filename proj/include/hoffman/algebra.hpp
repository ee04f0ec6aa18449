#pragma once

// Exact arithmetic kernel: integer polynomials, numbers a + b*sqrt(5) with
// rational a and b, Sturm chains, and the "is the smallest eigenvalue at least
// theta" decision for symmetric integer matrices.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hoffman {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const BigInt& v) { return v.sign(); }
inline int sign_of(const Rational& v) { return v.sign(); }

inline std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

// ---------------------------------------------------------------------------
// IntMatrix

class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    n_ = static_cast<int>(rows.size());
    a_.reserve(static_cast<std::size_t>(n_) * n_);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n_) throw std::invalid_argument("IntMatrix: matrix must be square");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }

  int size() const { return n_; }
  std::int64_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  std::int64_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  bool is_symmetric() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  IntMatrix principal_submatrix(const std::vector<int>& keep) const {
    IntMatrix s(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j) s(static_cast<int>(i), static_cast<int>(j)) = (*this)(keep[i], keep[j]);
    return s;
  }

  friend IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("IntMatrix: size mismatch");
    IntMatrix r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
    return r;
  }
  friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("IntMatrix: size mismatch");
    IntMatrix r = x;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
    return r;
  }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  // Rows separated by newlines, entries right-aligned.
  std::string to_string() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        std::string cell = std::to_string((*this)(i, j));
        os << std::string(cell.size() < 3 ? 3 - cell.size() : 0, ' ') << cell << (j + 1 < n_ ? " " : "");
      }
      os << '\n';
    }
    return os.str();
  }

 private:
  int n_ = 0;
  std::vector<std::int64_t> a_;
};

// ---------------------------------------------------------------------------
// IntPolynomial: ascending coefficients, trailing zeros trimmed.

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }
  IntPolynomial(std::initializer_list<long long> ascending) {
    c_.reserve(ascending.size());
    for (long long v : ascending) c_.emplace_back(v);
    trim();
  }

  static IntPolynomial constant(const BigInt& v) { return IntPolynomial(std::vector<BigInt>{v}); }
  static IntPolynomial monomial(const BigInt& coeff, int degree) {
    std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = coeff;
    return IntPolynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coefficients() const { return c_; }
  BigInt coefficient(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : BigInt(0);
  }
  const BigInt& leading() const {
    if (c_.empty()) throw std::logic_error("IntPolynomial: zero polynomial has no leading coefficient");
    return c_.back();
  }

  IntPolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long long>(i);
    return IntPolynomial(std::move(d));
  }

  BigInt content() const {
    BigInt g = 0;
    for (const auto& v : c_) {
      g = boost::multiprecision::gcd(g, v);
      if (g == 1) break;
    }
    return boost::multiprecision::abs(g);
  }

  // Divides by the content and makes the leading coefficient positive.
  IntPolynomial primitive_part() const {
    if (c_.empty()) return {};
    BigInt g = content();
    if (c_.back().sign() < 0) g = -g;
    std::vector<BigInt> r(c_);
    for (auto& v : r) v /= g;
    return IntPolynomial(std::move(r));
  }

  // Divides by the positive content only; signs are untouched.
  IntPolynomial without_content() const {
    if (c_.empty()) return {};
    BigInt g = content();
    std::vector<BigInt> r(c_);
    for (auto& v : r) v /= g;
    return IntPolynomial(std::move(r));
  }

  int sign_at_pos_infinity() const { return c_.empty() ? 0 : c_.back().sign(); }
  int sign_at_neg_infinity() const {
    if (c_.empty()) return 0;
    int s = c_.back().sign();
    return (degree() % 2 == 0) ? s : -s;
  }

  // Sign of the value at a rational point.
  int sign_at(const Rational& x) const {
    if (c_.empty()) return 0;
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);  // positive
    // den^d * p(num/den) by Horner in homogeneous form.
    BigInt acc = c_.back();
    BigInt den_pow = 1;
    for (int i = degree() - 1; i >= 0; --i) {
      den_pow *= den;
      acc = acc * num + c_[static_cast<std::size_t>(i)] * den_pow;
    }
    return acc.sign();
  }

  double evaluate(double x) const {
    double acc = 0.0;
    for (int i = degree(); i >= 0; --i) acc = acc * x + static_cast<double>(c_[static_cast<std::size_t>(i)]);
    return acc;
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator-(const IntPolynomial& a) {
    std::vector<BigInt> r(a.c_);
    for (auto& v : r) v = -v;
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator*(const BigInt& k, const IntPolynomial& a) {
    std::vector<BigInt> r(a.c_);
    for (auto& v : r) v *= k;
    return IntPolynomial(std::move(r));
  }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  IntPolynomial pow(int e) const {
    IntPolynomial r = constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  // "c0 + c1*x + c2*x^2", zero terms omitted.
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      BigInt v = c_[i];
      if (!first) {
        os << (v.sign() < 0 ? " - " : " + ");
        v = boost::multiprecision::abs(v);
      }
      if (i == 0) {
        os << v;
      } else {
        if (v == -1) os << "-";
        else if (v != 1) os << v << "*";
        os << "x";
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

// Quotient of p by d when d divides p in Z[x]; nullopt otherwise. d must be
// primitive (then divisibility over Q and over Z coincide).
inline std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& d) {
  if (d.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
  if (p.is_zero()) return IntPolynomial{};
  if (p.degree() < d.degree()) return std::nullopt;
  std::vector<BigInt> rem = p.coefficients();
  const auto& dc = d.coefficients();
  const BigInt& lc = d.leading();
  const int dd = d.degree();
  std::vector<BigInt> q(static_cast<std::size_t>(p.degree() - dd) + 1, 0);
  for (int k = p.degree() - dd; k >= 0; --k) {
    BigInt& top = rem[static_cast<std::size_t>(k + dd)];
    if (top.is_zero()) continue;
    if (top % lc != 0) return std::nullopt;
    BigInt f = top / lc;
    q[static_cast<std::size_t>(k)] = f;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= f * dc[static_cast<std::size_t>(j)];
  }
  for (const auto& v : rem)
    if (!v.is_zero()) return std::nullopt;
  return IntPolynomial(std::move(q));
}

// c * p mod d for some positive integer constant c (a power of |lc(d)|).
inline IntPolynomial positive_pseudo_remainder(const IntPolynomial& p, const IntPolynomial& d) {
  if (d.is_zero()) throw std::invalid_argument("pseudo_remainder: division by zero polynomial");
  if (p.degree() < d.degree()) return p;
  std::vector<BigInt> rem = p.coefficients();
  const auto& dc = d.coefficients();
  const BigInt lc = d.leading();
  const BigInt abs_lc = boost::multiprecision::abs(lc);
  const int lc_sign = lc.sign();
  const int dd = d.degree();
  for (int top = p.degree(); top >= dd; --top) {
    const BigInt t = rem[static_cast<std::size_t>(top)];
    // rem := |lc| * rem - sign(lc) * t * x^(top-dd) * d ; the top coefficient cancels.
    for (auto& v : rem) v *= abs_lc;
    if (!t.is_zero()) {
      for (int j = 0; j <= dd; ++j)
        rem[static_cast<std::size_t>(top - dd + j)] -= lc_sign * t * dc[static_cast<std::size_t>(j)];
    }
    rem.pop_back();
  }
  return IntPolynomial(std::move(rem)).without_content();
}

// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
inline IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = positive_pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? IntPolynomial{} : r.primitive_part();
  }
  return a.primitive_part();
}

// p / gcd(p, p'), primitive.
inline IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p.primitive_part();
  IntPolynomial g = gcd(p, p.derivative());
  if (g.degree() == 0) return p.primitive_part();
  auto q = divide_exact(p.primitive_part(), g);
  if (!q) throw std::logic_error("squarefree_part: gcd does not divide polynomial");
  return q->primitive_part();
}

// ---------------------------------------------------------------------------
// GoldenNumber: a + b*sqrt(5)

class GoldenNumber {
 public:
  GoldenNumber() = default;
  GoldenNumber(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
  static GoldenNumber rational(Rational a) { return {std::move(a), Rational(0)}; }
  static GoldenNumber tau() { return {Rational(1, 2), Rational(1, 2)}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_rational() const { return b_.is_zero(); }
  GoldenNumber conjugate() const { return {a_, -b_}; }

  friend GoldenNumber operator+(const GoldenNumber& x, const GoldenNumber& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend GoldenNumber operator-(const GoldenNumber& x, const GoldenNumber& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend GoldenNumber operator-(const GoldenNumber& x) { return {-x.a_, -x.b_}; }
  friend GoldenNumber operator*(const GoldenNumber& x, const GoldenNumber& y) {
    return {x.a_ * y.a_ + 5 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend bool operator==(const GoldenNumber&, const GoldenNumber&) = default;

  double to_double() const {
    return static_cast<double>(a_) + static_cast<double>(b_) * 2.23606797749978969641;
  }

  std::string to_string() const {
    if (b_.is_zero()) return hoffman::to_string(a_);
    std::string s = a_.is_zero() ? "" : hoffman::to_string(a_);
    Rational b = b_;
    if (!a_.is_zero()) {
      s += b.sign() < 0 ? " - " : " + ";
      b = boost::multiprecision::abs(b);
    }
    if (b == 1) return s + "sqrt(5)";
    if (b == -1) return s + "-sqrt(5)";
    return s + hoffman::to_string(b) + "*sqrt(5)";
  }

 private:
  Rational a_ = 0;
  Rational b_ = 0;
};

// Exact sign of a + b*sqrt(5).
inline int golden_sign(const GoldenNumber& x) {
  const int sa = x.a().sign();
  const int sb = x.b().sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 against 5 b^2; equality is impossible for rationals.
  const Rational lhs = x.a() * x.a();
  const Rational rhs = 5 * x.b() * x.b();
  return lhs > rhs ? sa : sb;
}

inline std::strong_ordering operator<=>(const GoldenNumber& x, const GoldenNumber& y) {
  const int s = golden_sign(x - y);
  return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Threshold: a point of Q(sqrt 5) together with its minimal polynomial.

class Threshold {
 public:
  static Threshold rational(const Rational& v) {
    // den*x - num
    IntPolynomial mp(std::vector<BigInt>{-boost::multiprecision::numerator(v), boost::multiprecision::denominator(v)});
    return Threshold(GoldenNumber::rational(v), mp.primitive_part());
  }

  static Threshold golden(const GoldenNumber& v) {
    if (v.is_rational()) return rational(v.a());
    // x^2 - 2a x + (a^2 - 5 b^2), cleared of denominators.
    const Rational c1 = -2 * v.a();
    const Rational c0 = v.a() * v.a() - 5 * v.b() * v.b();
    const BigInt d1 = boost::multiprecision::denominator(c1);
    const BigInt d0 = boost::multiprecision::denominator(c0);
    const BigInt l = boost::multiprecision::lcm(d1, d0);
    IntPolynomial mp(std::vector<BigInt>{boost::multiprecision::numerator(c0) * (l / d0),
                                         boost::multiprecision::numerator(c1) * (l / d1), l});
    return Threshold(v, mp.primitive_part());
  }

  // -tau = (-1 - sqrt 5)/2, a root of x^2 + x - 1.
  static Threshold minus_tau() { return golden(GoldenNumber(Rational(-1, 2), Rational(-1, 2))); }
  // -1 - tau = (-3 - sqrt 5)/2, a root of x^2 + 3x + 1.
  static Threshold minus_one_minus_tau() { return golden(GoldenNumber(Rational(-3, 2), Rational(-1, 2))); }

  const GoldenNumber& value() const { return value_; }
  const IntPolynomial& minimal_polynomial() const { return minpoly_; }
  bool is_rational() const { return value_.is_rational(); }
  double to_double() const { return value_.to_double(); }
  std::string to_string() const { return value_.to_string(); }

  friend bool operator==(const Threshold& x, const Threshold& y) { return x.value_ == y.value_; }

 private:
  Threshold(GoldenNumber v, IntPolynomial mp) : value_(std::move(v)), minpoly_(std::move(mp)) {}

  GoldenNumber value_;
  IntPolynomial minpoly_;
};

// Exact sign of p at the threshold value.
inline int sign_at(const IntPolynomial& p, const Threshold& t) {
  if (p.is_zero()) return 0;
  if (t.is_rational()) return p.sign_at(t.value().a());
  // Reduce modulo the (quadratic) minimal polynomial; the scaling is positive.
  const IntPolynomial r = positive_pseudo_remainder(p, t.minimal_polynomial());
  GoldenNumber acc;
  for (int i = r.degree(); i >= 0; --i) acc = acc * t.value() + GoldenNumber::rational(Rational(r.coefficient(i)));
  return golden_sign(acc);
}

struct Deflation {
  IntPolynomial quotient;
  int multiplicity = 0;
};

// Strips every factor of the threshold's minimal polynomial from p.
inline Deflation deflate(const IntPolynomial& p, const Threshold& t) {
  if (p.is_zero()) throw std::invalid_argument("deflate: zero polynomial");
  Deflation d{p, 0};
  while (d.quotient.degree() >= t.minimal_polynomial().degree()) {
    auto q = divide_exact(d.quotient, t.minimal_polynomial());
    if (!q) break;
    d.quotient = std::move(*q);
    ++d.multiplicity;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Sturm chains

class SturmChain {
 public:
  // p must be squarefree and nonzero.
  explicit SturmChain(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
    chain_.push_back(p);
    if (p.degree() == 0) return;
    chain_.push_back(p.derivative().without_content());
    while (true) {
      const IntPolynomial& a = chain_[chain_.size() - 2];
      const IntPolynomial& b = chain_.back();
      if (b.degree() == 0) break;
      IntPolynomial r = positive_pseudo_remainder(a, b);
      if (r.is_zero()) break;
      chain_.push_back(-r);
    }
  }

  const std::vector<IntPolynomial>& polynomials() const { return chain_; }

  int variations_at_neg_infinity() const {
    return count_variations([](const IntPolynomial& q) { return q.sign_at_neg_infinity(); });
  }
  int variations_at_pos_infinity() const {
    return count_variations([](const IntPolynomial& q) { return q.sign_at_pos_infinity(); });
  }
  int variations_at(const Rational& x) const {
    return count_variations([&](const IntPolynomial& q) { return q.sign_at(x); });
  }
  int variations_at(const Threshold& t) const {
    return count_variations([&](const IntPolynomial& q) { return hoffman::sign_at(q, t); });
  }

  // Distinct roots in (a, b].
  int roots_in(const Rational& a, const Rational& b) const { return variations_at(a) - variations_at(b); }
  // Distinct roots in (-inf, b].
  int roots_at_most(const Rational& b) const { return variations_at_neg_infinity() - variations_at(b); }
  int total_roots() const { return variations_at_neg_infinity() - variations_at_pos_infinity(); }

 private:
  template <typename SignFn>
  int count_variations(SignFn sign) const {
    int v = 0;
    int last = 0;
    for (const auto& q : chain_) {
      const int s = sign(q);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  std::vector<IntPolynomial> chain_;
};

// Number of distinct real roots of p strictly below the threshold.
inline int count_roots_below(const IntPolynomial& p, const Threshold& t) {
  if (p.is_zero()) throw std::invalid_argument("count_roots_below: zero polynomial");
  const Deflation d = deflate(p, t);
  int count = 0;
  if (d.quotient.degree() > 0) {
    const SturmChain chain(squarefree_part(d.quotient));
    count = chain.variations_at_neg_infinity() - chain.variations_at(t);
  }
  // Deflation also removed the conjugate root; count it if it lies below.
  if (d.multiplicity > 0 && !t.is_rational() && t.value().conjugate() < t.value()) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial and determinant

// det(xI - m) via the division-free Berkowitz recurrence.
inline IntPolynomial char_poly(const IntMatrix& m) {
  const int n = m.size();
  // Descending coefficients of the characteristic polynomial of the leading r x r block.
  std::vector<BigInt> vect{1};
  std::vector<BigInt> w, w_next;
  for (int r = 0; r < n; ++r) {
    std::vector<BigInt> t(static_cast<std::size_t>(r) + 2);
    t[0] = 1;
    t[1] = -m(r, r);
    if (r > 0) {
      w.assign(static_cast<std::size_t>(r), 0);
      for (int i = 0; i < r; ++i) w[static_cast<std::size_t>(i)] = m(i, r);
      for (int k = 2; k <= r + 1; ++k) {
        BigInt dot = 0;
        for (int j = 0; j < r; ++j) {
          const std::int64_t e = m(r, j);
          if (e != 0) dot += e * w[static_cast<std::size_t>(j)];
        }
        t[static_cast<std::size_t>(k)] = -dot;
        if (k == r + 1) break;
        w_next.assign(static_cast<std::size_t>(r), 0);
        for (int i = 0; i < r; ++i) {
          BigInt acc = 0;
          for (int j = 0; j < r; ++j) {
            const std::int64_t e = m(i, j);
            if (e != 0) acc += e * w[static_cast<std::size_t>(j)];
          }
          w_next[static_cast<std::size_t>(i)] = std::move(acc);
        }
        std::swap(w, w_next);
      }
    }
    std::vector<BigInt> next(static_cast<std::size_t>(r) + 2, 0);
    for (int i = 0; i <= r + 1; ++i)
      for (int j = 0; j <= std::min(i, r); ++j)
        next[static_cast<std::size_t>(i)] += t[static_cast<std::size_t>(i - j)] * vect[static_cast<std::size_t>(j)];
    vect = std::move(next);
  }
  std::reverse(vect.begin(), vect.end());
  return IntPolynomial(std::move(vect));
}

// Fraction-free Bareiss elimination.
inline BigInt determinant(const IntMatrix& m) {
  const int n = m.size();
  if (n == 0) return 1;
  std::vector<BigInt> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m(i, j);
  auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i) * n + j]; };
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k).is_zero()) {
      int p = k + 1;
      while (p < n && at(p, k).is_zero()) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Smallest-eigenvalue decisions

inline bool lambda_min_at_least(const IntMatrix& m, const Threshold& t) {
  if (!m.is_symmetric()) throw std::invalid_argument("lambda_min_at_least: matrix is not symmetric");
  if (m.size() == 0) return true;
  return count_roots_below(char_poly(m), t) == 0;
}

// Smallest eigenvalue equals the threshold exactly.
inline bool lambda_min_equals(const IntMatrix& m, const Threshold& t) {
  if (!m.is_symmetric()) throw std::invalid_argument("lambda_min_equals: matrix is not symmetric");
  if (m.size() == 0) return false;
  const IntPolynomial cp = char_poly(m);
  return count_roots_below(cp, t) == 0 && deflate(cp, t).multiplicity > 0;
}

// Isolating interval (lo, hi] for the smallest real root of a polynomial with
// only real roots (or at least one); no root lies at or below lo.
class SmallestRoot {
 public:
  explicit SmallestRoot(const IntPolynomial& p) : sf_(squarefree_part(p)), chain_(sf_) {
    if (sf_.degree() < 1 || chain_.total_roots() == 0) throw std::invalid_argument("SmallestRoot: no real root");
    // Cauchy bound: every root has |x| < 1 + max |c_i / c_n|.
    Rational bound = 0;
    for (int i = 0; i < sf_.degree(); ++i) {
      Rational q(boost::multiprecision::abs(sf_.coefficient(i)), boost::multiprecision::abs(sf_.leading()));
      if (q > bound) bound = q;
    }
    bound += 1;
    // Round up to a power of two to keep endpoints dyadic.
    Rational pow2 = 1;
    while (pow2 < bound) pow2 *= 2;
    lo_ = -pow2;
    hi_ = pow2;
    while (chain_.roots_in(lo_, hi_) > 1 || chain_.roots_at_most(lo_) > 0) shrink();
  }

  const IntPolynomial& polynomial() const { return sf_; }
  const SturmChain& chain() const { return chain_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  // Halve the interval, keeping the smallest root inside.
  void refine() { shrink(); }

  void refine_until_width(const Rational& width) {
    while (hi_ - lo_ > width) shrink();
  }

  double approx() const { return static_cast<double>((lo_ + hi_) / 2); }

 private:
  void shrink() {
    const Rational mid = (lo_ + hi_) / 2;
    if (chain_.roots_at_most(mid) >= 1) hi_ = mid;
    else lo_ = mid;
  }

  IntPolynomial sf_;
  SturmChain chain_;
  Rational lo_, hi_;
};

// Orders the smallest real roots of p and q exactly.
inline std::strong_ordering compare_smallest_roots(const IntPolynomial& p, const IntPolynomial& q) {
  SmallestRoot a(p);
  SmallestRoot b(q);
  const IntPolynomial g = gcd(a.polynomial(), b.polynomial());
  auto shares_root_in = [](const IntPolynomial& f, const Rational& lo, const Rational& hi) {
    return f.degree() >= 1 && SturmChain(f).roots_in(lo, hi) > 0;
  };
  if (shares_root_in(g, a.lo(), a.hi())) {
    // The smallest root of p is also a root of q, so it is >= that of q.
    while (b.chain().roots_in(a.lo(), a.hi()) > 1) a.refine();
    return b.chain().roots_at_most(a.lo()) == 0 ? std::strong_ordering::equal : std::strong_ordering::greater;
  }
  if (shares_root_in(g, b.lo(), b.hi())) {
    while (a.chain().roots_in(b.lo(), b.hi()) > 1) b.refine();
    return a.chain().roots_at_most(b.lo()) == 0 ? std::strong_ordering::equal : std::strong_ordering::less;
  }
  while (true) {
    if (a.hi() <= b.lo()) return std::strong_ordering::less;
    if (b.hi() <= a.lo()) return std::strong_ordering::greater;
    a.refine();
    b.refine();
  }
}

// Floating approximation of the smallest eigenvalue, within 1e-9. Reporting only.
inline double lambda_min_approx(const IntMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("lambda_min_approx: matrix is not symmetric");
  if (m.size() == 0) throw std::invalid_argument("lambda_min_approx: empty matrix");
  SmallestRoot root(char_poly(m));
  root.refine_until_width(Rational(1, BigInt(1) << 34));
  return root.approx();
}

}  // namespace hoffman
