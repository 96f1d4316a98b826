#include "permstat/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permstat {

bool GradedLexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  const long long da = std::accumulate(a.begin(), a.end(), 0LL);
  const long long db = std::accumulate(b.begin(), b.end(), 0LL);
  if (da != db) return da < db;
  return a > b;  // within a degree, t1-heavy exponents print first
}

Polynomial Polynomial::constant(int arity, BigNat value) {
  Polynomial p(arity);
  p.add_term(std::vector<int>(static_cast<size_t>(arity), 0), value);
  return p;
}

Polynomial Polynomial::variable(int arity, int var) {
  if (var < 1 || var > arity) throw std::invalid_argument("variable index out of range");
  Polynomial p(arity);
  std::vector<int> exp(static_cast<size_t>(arity), 0);
  exp[static_cast<size_t>(var) - 1] = 1;
  p.add_term(std::move(exp), 1);
  return p;
}

void Polynomial::add_term(std::vector<int> exponents, const BigNat& coefficient) {
  if (static_cast<int>(exponents.size()) != arity_)
    throw std::invalid_argument("exponent vector arity mismatch");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(exponents), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (arity_ != rhs.arity_) throw std::invalid_argument("polynomial arity mismatch");
  for (const auto& [exp, coef] : rhs.terms_) add_term(exp, coef);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (arity_ != rhs.arity_) throw std::invalid_argument("polynomial arity mismatch");
  Polynomial product(arity_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      std::vector<int> exp(ea.size());
      for (size_t i = 0; i < exp.size(); ++i) exp[i] = ea[i] + eb[i];
      product.add_term(std::move(exp), ca * cb);
    }
  }
  *this = std::move(product);
  return *this;
}

Polynomial& Polynomial::operator*=(const BigNat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exp, coef] : terms_) coef *= scalar;
  return *this;
}

Polynomial Polynomial::substitute_one(int var) const {
  if (var < 1 || var > arity_) throw std::invalid_argument("variable index out of range");
  Polynomial out(arity_ - 1);
  for (const auto& [exp, coef] : terms_) {
    std::vector<int> reduced;
    reduced.reserve(exp.size() - 1);
    for (size_t i = 0; i < exp.size(); ++i)
      if (static_cast<int>(i) != var - 1) reduced.push_back(exp[i]);
    out.add_term(std::move(reduced), coef);
  }
  return out;
}

BigNat Polynomial::evaluate_at_ones() const {
  BigNat sum = 0;
  for (const auto& [exp, coef] : terms_) sum += coef;
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exp, coef] : terms_) {
    if (!first) out << " + ";
    first = false;
    const bool constant_term =
        std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
    if (constant_term || coef != 1) {
      out << coef;
      if (!constant_term) out << '*';
    }
    bool need_star = false;
    for (size_t i = 0; i < exp.size(); ++i) {
      if (exp[i] == 0) continue;
      if (need_star) out << '*';
      need_star = true;
      out << 't' << i + 1;
      if (exp[i] > 1) out << '^' << exp[i];
    }
  }
  return out.str();
}

std::string Polynomial::to_json() const {
  std::ostringstream out;
  out << '[';
  bool first = true;
  for (const auto& [exp, coef] : terms_) {
    if (!first) out << ',';
    first = false;
    out << "{\"exp\":[";
    for (size_t i = 0; i < exp.size(); ++i) {
      if (i) out << ',';
      out << exp[i];
    }
    out << "],\"coef\":\"" << coef << "\"}";
  }
  out << ']';
  return out.str();
}

}  // namespace permstat
