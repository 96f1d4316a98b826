#include "permstat/alternating.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "permstat/qstats.hpp"

namespace permstat {

namespace {

void require_even(const Permutation& v) {
  if (!v.is_even()) throw std::invalid_argument("permutation must be even");
}

}  // namespace

int AWord::letter_count() const {
  int total = 0;
  for (const auto& f : factors) total += f.letter_count();
  return total;
}

Permutation a_gen(int i, int degree) {
  if (i < 1 || i > degree - 2) throw std::invalid_argument("a_i index out of range");
  return Permutation::transposition(1, degree).compose(
      Permutation::transposition(i + 1, degree));
}

Permutation a_factor_value(const AFactor& f, int degree) {
  Permutation value = Permutation::identity(degree);
  if (f.empty()) return value;
  for (int i = f.level; i >= std::max(f.start, 2); --i) value = value.compose(a_gen(i, degree));
  if (f.start == 1) value = value.compose(a_gen(1, degree));
  if (f.start == 0) value = value.compose(a_gen(1, degree).inverse());
  return value;
}

AWord a_decompose(const Permutation& v) {
  require_even(v);
  const int degree = v.degree();
  AWord word;
  word.degree = degree;
  word.factors.resize(static_cast<size_t>(std::max(degree - 2, 0)));

  Permutation current = v;
  for (int j = degree - 2; j >= 1; --j) {
    // pick the unique r in the level-j representative set for which
    // current * r^{-1} fixes the letter j+2
    bool found = false;
    for (int start = j + 1; start >= 0 && !found; --start) {
      const AFactor candidate{j, start};
      const Permutation rest = current.compose(a_factor_value(candidate, degree).inverse());
      if (rest(j + 2) == j + 2) {
        word.factors[static_cast<size_t>(j) - 1] = candidate;
        current = rest;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no level factor fixes the top letter");
  }
  if (!current.is_identity()) throw std::logic_error("A-word peeling left a nonidentity rest");
  return word;
}

Permutation a_recompose(const AWord& w) {
  Permutation value = Permutation::identity(w.degree);
  for (const auto& f : w.factors) value = value.compose(a_factor_value(f, w.degree));
  return value;
}

long long ell_A(const Permutation& v) {
  return a_decompose(v).letter_count();
}

long long del_A(const Permutation& v) {
  long long count = 0;
  for (const auto& f : a_decompose(v).factors)
    if (f.start <= 1) ++count;
  return count;
}

PositionSet des_set_A(const Permutation& v) {
  require_even(v);
  const int top = v.degree() - 2;
  PositionSet out;
  for (int i = 1; i <= top; ++i) {
    if (v(i + 1) > v(i + 2)) {
      out.push_back(i);
      continue;
    }
    bool all_above = true;
    for (int j = 1; j <= i && all_above; ++j)
      if (v(j) < v(i + 2)) all_above = false;
    if (all_above) out.push_back(i);
  }
  return out;
}

PositionSet del_set_A(const Permutation& v) {
  require_even(v);
  PositionSet out;
  for (int i : del_set_q(v, 2)) out.push_back(i - 1);
  return out;
}

long long maj_A(const Permutation& v) {
  long long total = 0;
  for (int i : des_set_A(v)) total += i;
  return total;
}

long long rmaj_A(const Permutation& v) {
  const int n = v.degree() - 1;
  long long total = 0;
  for (int i : des_set_A(v)) total += n - i;
  return total;
}

Permutation restrict_f(const Permutation& v) {
  require_even(v);
  return f_q(v, 2);
}

std::vector<Permutation> g_fiber(const Permutation& base, int q) {
  std::vector<Permutation> out;
  for (const auto& member : fiber(base, q).members)
    if (member.is_even()) out.push_back(member);
  return out;
}

std::string a_word_to_string(const AWord& w) {
  std::ostringstream out;
  for (size_t j = 0; j < w.factors.size(); ++j) {
    if (j) out << " | ";
    const auto& f = w.factors[j];
    for (int i = f.level; i >= std::max(f.start, 1); --i) {
      if (i != f.level) out << ' ';
      out << 'a' << i;
      if (i == 1 && f.has_inverse_tail()) out << "^-1";
    }
  }
  return out.str();
}

AWord string_to_a_word(std::string_view text) {
  std::vector<std::string> segments;
  {
    std::string current;
    for (char c : text) {
      if (c == '|') {
        segments.push_back(current);
        current.clear();
      } else {
        current.push_back(c);
      }
    }
    segments.push_back(current);
  }

  std::vector<AFactor> runs;
  for (const auto& segment : segments) {
    std::istringstream in(segment);
    std::string token;
    std::vector<int> indices;
    bool inverse_tail = false;
    while (in >> token) {
      if (inverse_tail) throw std::invalid_argument("a1^-1 must end the factor");
      if (token == "a1^-1") {
        indices.push_back(1);
        inverse_tail = true;
        continue;
      }
      if (token.size() < 2 || token[0] != 'a' ||
          !std::all_of(token.begin() + 1, token.end(),
                       [](unsigned char c) { return std::isdigit(c); }))
        throw std::invalid_argument("bad generator token '" + token + "'");
      indices.push_back(std::stoi(token.substr(1)));
    }
    if (indices.empty()) continue;
    for (size_t i = 1; i < indices.size(); ++i)
      if (indices[i] != indices[i - 1] - 1)
        throw std::invalid_argument("factor must be a descending run a<j> ... a<k>");
    if (indices.front() < 1) throw std::invalid_argument("generator index must be >= 1");
    runs.push_back(AFactor{indices.front(), inverse_tail ? 0 : indices.back()});
  }
  for (size_t i = 1; i < runs.size(); ++i)
    if (runs[i].level <= runs[i - 1].level)
      throw std::invalid_argument("factor levels must be strictly increasing");

  int levels = static_cast<int>(segments.size());
  if (!runs.empty()) levels = std::max(levels, runs.back().level);
  AWord word;
  word.degree = levels + 2;
  for (int j = 1; j <= levels; ++j) word.factors.push_back(AFactor{j, j + 1});
  for (const auto& run : runs) word.factors[static_cast<size_t>(run.level) - 1] = run;
  return word;
}

}  // namespace permstat
