#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmspets/rational.hpp"
#include "cmspets/unipoly.hpp"

namespace cmspets {

/// Sparse polynomial over Q in a fixed, ordered list of named variables.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
  MultiPoly(std::vector<std::string> vars, const Rational& constant);

  /// Parses sums of products of integers, variables, `^` powers and parentheses.
  static MultiPoly parse(std::string_view text, const std::vector<std::string>& vars);
  static MultiPoly variable(const std::vector<std::string>& vars, const std::string& name);
  /// Embeds a univariate polynomial as a polynomial in `name`.
  static MultiPoly from_uni(const std::vector<std::string>& vars, const std::string& name,
                            const RatPoly& p);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  int index_of(const std::string& name) const;
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  MultiPoly pow(int k) const;

  Rational evaluate(const std::map<std::string, Rational>& point) const;
  /// Replaces `name` by `value` (same variable list); zero erases every term containing it.
  MultiPoly substitute(const std::string& name, const MultiPoly& value) const;
  MultiPoly substitute(const std::string& name, const Rational& value) const;
  /// Repeatedly replaces x*y by `product`, leaving unpaired powers of x or y.
  MultiPoly reduce_product(const std::string& x, const std::string& y,
                           const MultiPoly& product) const;
  /// Variables that occur in some term.
  std::vector<std::string> support() const;

  /// Common weight of all terms, or nullopt when not homogeneous. Zero gives 0.
  std::optional<int> weighted_degree(const std::vector<int>& weights) const;

  /// Highest term first in lexicographic order of exponent vectors.
  std::string str() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  void check_shape(const MultiPoly& o) const;

  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace cmspets
