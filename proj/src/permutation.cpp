#include "permstat/permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permstat {

namespace {

void validate_window(const std::vector<int>& window) {
  if (window.empty()) throw std::invalid_argument("permutation degree must be >= 1");
  const int m = static_cast<int>(window.size());
  std::vector<bool> seen(static_cast<size_t>(m), false);
  for (int v : window) {
    if (v < 1 || v > m || seen[static_cast<size_t>(v) - 1])
      throw std::invalid_argument("not a permutation of {1.." + std::to_string(m) + "}");
    seen[static_cast<size_t>(v) - 1] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
  validate_window(window_);
}

Permutation Permutation::identity(int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<int> w(static_cast<size_t>(degree));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::transposition(int i, int degree) {
  if (i < 1 || i + 1 > degree)
    throw std::invalid_argument("transposition index out of range");
  Permutation p = identity(degree);
  std::swap(p.window_[static_cast<size_t>(i) - 1], p.window_[static_cast<size_t>(i)]);
  return p;
}

Permutation Permutation::parse(std::string_view text) {
  std::string buf(text);
  for (char& c : buf)
    if (c == ',') c = ' ';
  std::istringstream in(buf);
  std::vector<int> window;
  std::string token;
  while (in >> token) {
    try {
      size_t pos = 0;
      int v = std::stoi(token, &pos);
      if (pos != token.size()) throw std::invalid_argument(token);
      window.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad permutation token '" + token + "'");
    }
  }
  return Permutation(std::move(window));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> w(window_.size());
  for (size_t i = 0; i < w.size(); ++i)
    w[i] = window_[static_cast<size_t>(rhs.window_[i]) - 1];
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(window_.size());
  for (size_t i = 0; i < w.size(); ++i)
    w[static_cast<size_t>(window_[i]) - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(w));
}

PositionSet Permutation::descent_set() const {
  PositionSet des;
  for (int i = 1; i < degree(); ++i)
    if ((*this)(i) > (*this)(i + 1)) des.push_back(i);
  return des;
}

long long Permutation::inversion_count() const {
  long long count = 0;
  const int m = degree();
  for (int i = 1; i < m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if ((*this)(i) > (*this)(j)) ++count;
  return count;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < window_.size(); ++i) {
    if (i) out << ' ';
    out << window_[i];
  }
  return out.str();
}

}  // namespace permstat
