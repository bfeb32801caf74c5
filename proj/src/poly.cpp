#include "gammafield/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gammafield/errors.hpp"

namespace gammafield {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c);
  if (!is_zero() && leading() < 0) g = -g;
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  std::vector<Integer> v = coeffs_;
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntPoly(std::move(v));
}

Integer IntPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPoly::sign_at(const Rational& x) const {
  // den^n * f(num/den) evaluated over Z.
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = 0, den_pow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  return sgn(acc);
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(v));
}

IntPoly operator*(const Integer& c, const IntPoly& a) {
  std::vector<Integer> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const { return Integer(-1) * *this; }

bool canonical_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                      b.coeffs_.end());
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << "*";
    out << "x";
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

std::string IntPoly::to_coeff_list() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ",";
    s += coeffs_[i].get_str();
  }
  return s.empty() ? "0" : s;
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b) {
  if (!b.is_monic()) throw DomainError("divmod_monic: divisor is not monic");
  if (a.degree() < b.degree()) return {IntPoly{}, a};
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  std::vector<Integer> q(a.degree() - db + 1);
  for (int k = a.degree(); k >= db; --k) {
    Integer c = r[k];
    q[k - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
  }
  r.resize(db);
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DegenerateInputError("division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw DomainError("exact_divide: not divisible");
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  std::vector<Integer> q(a.degree() - db + 1);
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), b.leading().get_mpz_t()))
      throw DomainError("exact_divide: not divisible");
    Integer c = r[k] / b.leading();
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
  }
  for (int k = 0; k < db; ++k)
    if (r[k] != 0) throw DomainError("exact_divide: not divisible");
  return IntPoly(std::move(q));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DegenerateInputError("pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  const Integer& lb = b.leading();
  int steps = a.degree() - db + 1;
  for (int k = a.degree(); k >= db; --k) {
    Integer c = r[k];
    for (auto& x : r) x *= lb;
    --steps;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
    r.resize(k);
  }
  IntPoly out(std::move(r));
  return pow(lb, steps) * out;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part(), y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_part();
}

Integer resultant(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  IntPoly a = a_in, b = b_in;
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -1;
  }
  if (b.degree() == 0) return s * pow(b.leading(), a.degree());
  Integer ca = a.content(), cb = b.content();
  a = a.primitive_part();
  b = b.primitive_part();
  Integer t = pow(ca, b.degree()) * pow(cb, a.degree());
  Integer g = 1, h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    Integer divisor = g * pow(h, delta);
    if (r.is_zero()) return 0;
    std::vector<Integer> rc = r.coeffs();
    for (auto& c : rc) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    b = IntPoly(std::move(rc));
    g = a.leading();
    // h <- h^(1 - delta) * g^delta
    if (delta == 0) {
      // h unchanged
    } else {
      Integer num = pow(g, delta);
      Integer den = pow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() <= 0) break;
  }
  // b is a nonzero constant.
  Integer num = pow(b.leading(), a.degree());
  Integer den = pow(h, a.degree() - 1);
  Integer last;
  mpz_divexact(last.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return s * t * last;
}

Integer poly_discriminant(const IntPoly& f) {
  if (f.degree() < 1) throw DegenerateInputError("discriminant of a constant polynomial");
  const long n = f.degree();
  if (n == 1) return 1;
  Integer r = resultant(f, f.derivative());
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
  return ((n * (n - 1) / 2) % 2 == 0) ? r : Integer(-r);
}

bool is_squarefree(const IntPoly& f) {
  if (f.degree() < 1) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

unsigned sturm_count_real_roots(const IntPoly& f) {
  if (f.degree() < 1) return 0;
  if (!is_squarefree(f)) throw PreconditionError("Sturm count requires a squarefree polynomial");
  std::vector<IntPoly> seq{f.primitive_part(), f.derivative().primitive_part()};
  while (seq.back().degree() > 0) {
    const IntPoly& a = seq[seq.size() - 2];
    const IntPoly& b = seq.back();
    // prem = lc(b)^k * rem; strip the sign of lc(b)^k so that next = -rem up to a positive factor.
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    const int k = a.degree() - b.degree() + 1;
    const bool flip = b.leading() < 0 && k % 2 == 1;
    IntPoly next = flip ? r : -r;
    Integer c = abs(next.content());
    std::vector<Integer> v = next.coeffs();
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    seq.emplace_back(std::move(v));
  }
  auto variations = [&](bool at_plus_infinity) {
    unsigned count = 0;
    int prev = 0;
    for (const auto& p : seq) {
      int s = sgn(p.leading());
      if (!at_plus_infinity && p.degree() % 2 == 1) s = -s;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  };
  return variations(false) - variations(true);
}

namespace {

bool is_integer_token(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer to_integer(std::string_view s) {
  std::string t(s);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  return Integer(t, 10);
}

IntPoly parse_coeff_list(std::string_view text) {
  std::vector<Integer> coeffs;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(',', start);
    std::string_view tok = text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
    std::string clean;
    for (char c : tok)
      if (!std::isspace(static_cast<unsigned char>(c))) clean += c;
    if (!is_integer_token(clean)) throw ParseError("invalid coefficient '" + std::string(tok) + "'");
    coeffs.push_back(to_integer(clean));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return IntPoly(std::move(coeffs));
}

IntPoly parse_symbolic(const std::string& s) {
  std::vector<Integer> coeffs;
  std::string var;
  std::size_t i = 0;
  auto digits = [&]() {
    std::size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(b, i - b);
  };
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ParseError("expected '+' or '-' at position " + std::to_string(i));
    }
    first = false;
    std::string num = digits();
    Integer coeff = num.empty() ? Integer(1) : Integer(num, 10);
    std::size_t power = 0;
    bool has_var = false;
    if (i < s.size() && s[i] == '*') {
      if (num.empty()) throw ParseError("'*' without a coefficient");
      ++i;
      if (i >= s.size() || !std::isalpha(static_cast<unsigned char>(s[i])))
        throw ParseError("expected variable after '*'");
    }
    if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
      std::size_t b = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      std::string name = s.substr(b, i - b);
      if (var.empty())
        var = name;
      else if (name != var)
        throw ParseError("more than one variable: '" + var + "' and '" + name + "'");
      has_var = true;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e = digits();
        if (e.empty()) throw ParseError("expected exponent after '^'");
        if (e.size() > 4) throw ParseError("exponent too large");
        power = std::stoul(e);
      }
    }
    if (num.empty() && !has_var) throw ParseError("empty term at position " + std::to_string(i));
    if (i < s.size() && s[i] != '+' && s[i] != '-')
      throw ParseError(std::string("unexpected character '") + s[i] + "'");
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += sign * coeff;
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace

IntPoly parse_poly(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.empty()) throw ParseError("empty polynomial");
  if (text.find(',') != std::string_view::npos) return parse_coeff_list(text);
  return parse_symbolic(compact);
}

}  // namespace gammafield
