#include "permstat/canonical.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace permstat {

int CanonicalWord::letter_count() const {
  int total = 0;
  for (const auto& f : factors) total += f.letter_count();
  return total;
}

int CanonicalWord::letter_count_at_least(int q) const {
  int total = 0;
  for (const auto& f : factors) {
    if (f.empty() || f.level < q) continue;
    // letters are s_level .. s_start; only those with index >= q count
    total += f.level - std::max(f.start, q) + 1;
  }
  return total;
}

std::vector<int> CanonicalWord::letters() const {
  std::vector<int> out;
  for (const auto& f : factors)
    for (int i = f.level; i >= f.start; --i) out.push_back(i);
  return out;
}

CanonicalWord decompose(const Permutation& p) {
  const int m = p.degree();
  CanonicalWord word;
  word.degree = m;
  word.factors.resize(static_cast<size_t>(m > 0 ? m - 1 : 0));

  std::vector<int> window = p.window();
  for (int j = m - 1; j >= 1; --j) {
    // value j+1 sits at position k of the current window of length j+1
    int k = 0;
    for (int i = 0; i <= j; ++i) {
      if (window[static_cast<size_t>(i)] == j + 1) {
        k = i + 1;
        break;
      }
    }
    word.factors[static_cast<size_t>(j) - 1] = CanonicalFactor{j, k};
    window.erase(window.begin() + (k - 1));
  }
  return word;
}

Permutation recompose(const CanonicalWord& w) {
  const int m = w.degree;
  if (m < 1) throw std::invalid_argument("word degree must be >= 1");
  if (static_cast<int>(w.factors.size()) != m - 1)
    throw std::invalid_argument("word must have one factor per level 1..degree-1");

  // Build the window directly: appending the factor (j, k) inserts value j+1
  // at position k of the current prefix.
  std::vector<int> window{1};
  window.reserve(static_cast<size_t>(m));
  for (int j = 1; j <= m - 1; ++j) {
    const auto& f = w.factors[static_cast<size_t>(j) - 1];
    if (f.level != j || f.start < 1 || f.start > j + 1)
      throw std::invalid_argument("malformed canonical factor");
    window.insert(window.begin() + (f.start - 1), j + 1);
  }
  return Permutation(std::move(window));
}

std::map<int, int> generator_multiset(const CanonicalWord& w) {
  std::map<int, int> counts;
  for (const auto& f : w.factors)
    for (int i = f.start; i <= f.level; ++i) ++counts[i];
  return counts;
}

Permutation embed(const Permutation& p, int m) {
  if (m < p.degree()) throw std::invalid_argument("embed: target degree too small");
  std::vector<int> w = p.window();
  for (int v = p.degree() + 1; v <= m; ++v) w.push_back(v);
  return Permutation(std::move(w));
}

std::string word_to_string(const CanonicalWord& w) {
  std::ostringstream out;
  for (size_t j = 0; j < w.factors.size(); ++j) {
    if (j) out << " | ";
    const auto& f = w.factors[j];
    for (int i = f.level; i >= f.start; --i) {
      if (i != f.level) out << ' ';
      out << 's' << i;
    }
  }
  return out.str();
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

int parse_generator_token(const std::string& token, char prefix) {
  if (token.size() < 2 || token[0] != prefix)
    throw std::invalid_argument("bad generator token '" + token + "'");
  for (size_t i = 1; i < token.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(token[i])))
      throw std::invalid_argument("bad generator token '" + token + "'");
  int index = std::stoi(token.substr(1));
  if (index < 1) throw std::invalid_argument("generator index must be >= 1");
  return index;
}

}  // namespace

CanonicalWord string_to_word(std::string_view text) {
  const auto segments = split(text, '|');

  // (level, start) pairs of the nonempty segments, in order of appearance
  std::vector<CanonicalFactor> runs;
  for (const auto& segment : segments) {
    std::istringstream in(segment);
    std::string token;
    std::vector<int> indices;
    while (in >> token) indices.push_back(parse_generator_token(token, 's'));
    if (indices.empty()) continue;
    for (size_t i = 1; i < indices.size(); ++i)
      if (indices[i] != indices[i - 1] - 1)
        throw std::invalid_argument("factor must be a descending run s<j> s<j-1> ... s<k>");
    runs.push_back(CanonicalFactor{indices.front(), indices.back()});
  }
  for (size_t i = 1; i < runs.size(); ++i)
    if (runs[i].level <= runs[i - 1].level)
      throw std::invalid_argument("factor levels must be strictly increasing");

  int degree = static_cast<int>(segments.size()) + 1;
  if (!runs.empty()) degree = std::max(degree, runs.back().level + 1);

  CanonicalWord word;
  word.degree = degree;
  for (int j = 1; j <= degree - 1; ++j)
    word.factors.push_back(CanonicalFactor{j, j + 1});
  for (const auto& run : runs) word.factors[static_cast<size_t>(run.level) - 1] = run;
  return word;
}

CanonicalWord string_to_word(std::string_view text, int degree) {
  CanonicalWord word = string_to_word(text);
  if (word.degree > degree)
    throw std::invalid_argument("word does not fit in degree " + std::to_string(degree));
  for (int j = word.degree; j <= degree - 1; ++j)
    word.factors.push_back(CanonicalFactor{j, j + 1});
  word.degree = degree;
  return word;
}

}  // namespace permstat
