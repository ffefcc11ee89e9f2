#include "knotpoly/laurent.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

#include "knotpoly/gaussian.hpp"

namespace knotpoly {

// ---------------------------------------------------------------- one variable

LaurentPoly1 LaurentPoly1::monomial(const Integer& c, int e) {
  LaurentPoly1 p;
  p.add_term(e, c);
  return p;
}

Integer LaurentPoly1::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly1::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly1::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

void LaurentPoly1::add_term(int e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly1& LaurentPoly1::operator+=(const LaurentPoly1& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly1& LaurentPoly1::operator-=(const LaurentPoly1& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly1 operator*(const LaurentPoly1& p, const LaurentPoly1& q) {
  LaurentPoly1 r;
  for (const auto& [e1, c1] : p.terms_)
    for (const auto& [e2, c2] : q.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly1& LaurentPoly1::operator*=(const LaurentPoly1& o) { return *this = *this * o; }

LaurentPoly1 LaurentPoly1::operator-() const {
  LaurentPoly1 r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

namespace {

void append_power(std::string& out, std::string_view var, int e) {
  out += var;
  if (e != 1) {
    out += '^';
    out += std::to_string(e);
  }
}

}  // namespace

std::string LaurentPoly1::to_string(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) {
      out += mag.get_str();
      out += '*';
    }
    append_power(out, var, e);
  }
  return out;
}

// ---------------------------------------------------------------- two variables

LaurentPoly2 LaurentPoly2::monomial(const Integer& c, int v, int z) {
  LaurentPoly2 p;
  p.add_term(v, z, c);
  return p;
}

Integer LaurentPoly2::coeff(int v, int z) const {
  auto it = terms_.find(Exp2{v, z});
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly2::add_term(int v, int z, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Exp2{v, z}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.v, e.z, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.v, e.z, -c);
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& p, const LaurentPoly2& q) {
  LaurentPoly2 r;
  Integer prod;
  for (const auto& [e1, c1] : p.terms_)
    for (const auto& [e2, c2] : q.terms_) {
      prod = c1 * c2;
      r.add_term(e1.v + e2.v, e1.z + e2.z, prod);
    }
  return r;
}

LaurentPoly2& LaurentPoly2::operator*=(const LaurentPoly2& o) { return *this = *this * o; }

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly2 LaurentPoly2::shifted(int dv, int dz, const Integer& c) const {
  LaurentPoly2 r;
  if (c == 0) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), Exp2{e.v + dv, e.z + dz}, x * c);
  return r;
}

std::string LaurentPoly2::to_string(std::string_view var1, std::string_view var2) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      out += c.get_str();
    } else {
      out += c < 0 ? " - " : " + ";
      out += Integer(abs(c)).get_str();
    }
    first = false;
    if (e.v != 0) {
      out += '*';
      append_power(out, var1, e.v);
    }
    if (e.z != 0) {
      out += '*';
      append_power(out, var2, e.z);
    }
  }
  return out;
}

LaurentPoly2 pow(const LaurentPoly2& p, unsigned k) {
  LaurentPoly2 r(1);
  for (unsigned i = 0; i < k; ++i) r *= p;
  return r;
}

// ---------------------------------------------------------------- operations

LaurentPoly1 coeff_of_z(const LaurentPoly2& p, int b) {
  LaurentPoly1 r;
  auto it = p.terms().lower_bound(Exp2{std::numeric_limits<int>::min(), b});
  for (; it != p.terms().end() && it->first.z == b; ++it) r.add_term(it->first.v, it->second);
  return r;
}

std::pair<int, int> v_span(const LaurentPoly2& p) {
  if (p.is_zero()) throw std::domain_error("undefined span");
  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  for (const auto& [e, c] : p.terms()) {
    lo = std::min(lo, e.v);
    hi = std::max(hi, e.v);
  }
  return {lo, hi};
}

LaurentPoly1 derivative(const LaurentPoly1& p, unsigned a) {
  LaurentPoly1 r;
  for (const auto& [e, c] : p.terms()) {
    // falling factorial e (e-1) ... (e-a+1)
    Integer f = c;
    for (unsigned j = 0; j < a && f != 0; ++j) f *= e - static_cast<long>(j);
    r.add_term(e - static_cast<int>(a), f);
  }
  return r;
}

GaussianInt eval_at_i(const LaurentPoly1& p) {
  Integer re = 0, im = 0;
  for (const auto& [e, c] : p.terms()) {
    switch (((e % 4) + 4) % 4) {
      case 0: re += c; break;
      case 1: im += c; break;
      case 2: re -= c; break;
      case 3: im -= c; break;
    }
  }
  return {re, im};
}

// ---------------------------------------------------------------- parsing

namespace {

struct TermParser {
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos) + ": " + what);
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }
  bool starts_with_digit() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  std::string digits() {
    skip_ws();
    std::size_t b = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (b == pos) fail("expected digits");
    return std::string(s.substr(b, pos - b));
  }
  int exponent() {
    bool paren = eat('(') || eat('{');
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    long e = std::stol(digits());
    if (paren && !eat(')') && !eat('}')) fail("unclosed exponent");
    return static_cast<int>(neg ? -e : e);
  }
  // Returns index of the matched variable, or -1.
  int variable(const std::vector<std::string_view>& vars) {
    skip_ws();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const auto& v = vars[i];
      if (s.substr(pos, v.size()) == v) {
        std::size_t after = pos + v.size();
        if (after < s.size() && std::isalpha(static_cast<unsigned char>(s[after]))) continue;
        pos = after;
        return static_cast<int>(i);
      }
    }
    return -1;
  }
};

// Generic sparse parse: calls sink(exponents, coefficient) for each term.
template <typename Sink>
void parse_terms(std::string_view text, const std::vector<std::string_view>& vars, Sink sink) {
  TermParser p{text};
  if (p.at_end()) p.fail("empty input");
  bool first = true;
  while (!p.at_end()) {
    bool neg = false;
    if (p.eat('+')) {
    } else if (p.eat('-')) {
      neg = true;
    } else if (!first) {
      p.fail("expected + or -");
    }
    first = false;
    Integer c = 1;
    std::vector<int> exps(vars.size(), 0);
    bool any = false;
    while (true) {
      if (p.starts_with_digit()) {
        c *= Integer(p.digits());
      } else {
        int vi = p.variable(vars);
        if (vi < 0) p.fail("expected coefficient or variable");
        int e = 1;
        if (p.eat('^')) e = p.exponent();
        exps[vi] += e;
      }
      any = true;
      if (!p.eat('*')) break;
    }
    if (!any) p.fail("empty term");
    sink(exps, neg ? Integer(-c) : c);
  }
}

}  // namespace

LaurentPoly1 parse_laurent1(std::string_view text, std::string_view var) {
  LaurentPoly1 r;
  parse_terms(text, {var}, [&](const std::vector<int>& e, const Integer& c) { r.add_term(e[0], c); });
  return r;
}

LaurentPoly2 parse_laurent2(std::string_view text, std::string_view var1, std::string_view var2) {
  LaurentPoly2 r;
  parse_terms(text, {var1, var2},
              [&](const std::vector<int>& e, const Integer& c) { r.add_term(e[0], e[1], c); });
  return r;
}

}  // namespace knotpoly
