#include "cmspets/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cmspets {

MultiPoly::MultiPoly(std::vector<std::string> vars, const Rational& constant)
    : vars_(std::move(vars)) {
  add_term(Exponents(vars_.size(), 0), constant);
}

int MultiPoly::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw ShapeError("unknown variable '" + name + "'");
  return static_cast<int>(it - vars_.begin());
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

void MultiPoly::check_shape(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw ShapeError("polynomials over different variable lists");
}

MultiPoly MultiPoly::variable(const std::vector<std::string>& vars, const std::string& name) {
  MultiPoly p(vars);
  Exponents e(vars.size(), 0);
  e[p.index_of(name)] = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::from_uni(const std::vector<std::string>& vars, const std::string& name,
                              const RatPoly& u) {
  MultiPoly p(vars);
  const int idx = p.index_of(name);
  for (int i = 0; i <= u.degree(); ++i) {
    Exponents e(vars.size(), 0);
    e[idx] = i;
    p.add_term(e, u.coeff(i));
  }
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_shape(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_shape(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_shape(b);
  MultiPoly r(a.vars_);
  MultiPoly::Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly operator*(MultiPoly a, const Rational& s) {
  if (sgn(s) == 0) {
    a.terms_.clear();
    return a;
  }
  for (auto& [e, c] : a.terms_) c *= s;
  return a;
}

MultiPoly MultiPoly::pow(int k) const {
  if (k < 0) throw DomainError("negative power of a polynomial");
  MultiPoly result(vars_, 1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> values(vars_.size());
  std::vector<bool> needed(vars_.size(), false);
  for (const auto& [e, c] : terms_) {
    for (size_t i = 0; i < e.size(); ++i) needed[i] = needed[i] || e[i] > 0;
  }
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it != point.end()) {
      values[i] = it->second;
    } else if (needed[i]) {
      throw ShapeError("no value given for variable '" + vars_[i] + "'");
    }
  }
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) t *= values[i];
    }
    total += t;
  }
  return total;
}

MultiPoly MultiPoly::substitute(const std::string& name, const MultiPoly& value) const {
  check_shape(value);
  const int idx = index_of(name);
  MultiPoly result(vars_);
  std::map<int, MultiPoly> powers;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    const int k = rest[idx];
    rest[idx] = 0;
    MultiPoly mono(vars_);
    mono.add_term(rest, c);
    if (k == 0) {
      result += mono;
      continue;
    }
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, value.pow(k)).first;
    result += mono * it->second;
  }
  return result;
}

MultiPoly MultiPoly::substitute(const std::string& name, const Rational& value) const {
  return substitute(name, MultiPoly(vars_, value));
}

MultiPoly MultiPoly::reduce_product(const std::string& x, const std::string& y,
                                    const MultiPoly& product) const {
  check_shape(product);
  const int ix = index_of(x);
  const int iy = index_of(y);
  MultiPoly result(vars_);
  for (const auto& [e, c] : terms_) {
    const int k = std::min(e[ix], e[iy]);
    Exponents rest = e;
    rest[ix] -= k;
    rest[iy] -= k;
    MultiPoly mono(vars_);
    mono.add_term(rest, c);
    result += k == 0 ? mono : mono * product.pow(k);
  }
  return result;
}

std::vector<std::string> MultiPoly::support() const {
  std::vector<std::string> out;
  for (size_t i = 0; i < vars_.size(); ++i) {
    for (const auto& [e, c] : terms_) {
      if (e[i] > 0) {
        out.push_back(vars_[i]);
        break;
      }
    }
  }
  return out;
}

std::optional<int> MultiPoly::weighted_degree(const std::vector<int>& weights) const {
  if (weights.size() != vars_.size()) throw ShapeError("weight vector length mismatch");
  std::optional<int> w;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (size_t i = 0; i < e.size(); ++i) t += weights[i] * e[i];
    if (w && *w != t) return std::nullopt;
    w = t;
  }
  return w.value_or(0);
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = sgn(c) < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? vars_[i] : vars_[i] + "^" + std::to_string(e[i]));
    }
    if (factors.empty() || mag != 1) factors.insert(factors.begin(), to_string(mag));
    for (size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
  }
  return out.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  MultiPoly run() {
    MultiPoly p = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at offset " + std::to_string(pos_) + " in '" +
                                std::string(text_) + "'");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char ch) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly sum() {
    MultiPoly acc(vars_);
    bool neg = accept('-');
    if (!neg) accept('+');
    for (;;) {
      MultiPoly t = product();
      acc += neg ? -t : t;
      if (accept('+')) {
        neg = false;
      } else if (accept('-')) {
        neg = true;
      } else {
        return acc;
      }
    }
  }

  MultiPoly product() {
    MultiPoly acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip();
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(std::stoi(std::string(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  MultiPoly atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    if (accept('(')) {
      MultiPoly inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly(vars_, Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return MultiPoly::variable(vars_, name);
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, const std::vector<std::string>& vars) {
  return Parser(text, vars).run();
}

}  // namespace cmspets
