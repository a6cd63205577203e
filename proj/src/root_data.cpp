#include "clusterseed/root_data.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace clusterseed {

namespace {

// roots in simple-root coordinates; s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
Weight reflect_root(const RootDatum& rd, int i, const Weight& beta)
{
  Rational pairing = 0;
  for (int j = 0; j < rd.rank; ++j)
    pairing += beta[j] * rd.cartan[i][j];
  Weight out = beta;
  out[i] -= pairing;
  return out;
}

bool is_positive(const Weight& beta)
{
  bool nonzero = false;
  for (const auto& c : beta) {
    if (c < 0)
      return false;
    if (c != 0)
      nonzero = true;
  }
  return nonzero;
}

void finish(RootDatum& rd)
{
  std::set<Weight> seen;
  std::deque<Weight> todo;
  for (int i = 0; i < rd.rank; ++i) {
    Weight e(rd.rank, Rational(0));
    e[i] = 1;
    todo.push_back(e);
    seen.insert(e);
  }
  while (!todo.empty()) {
    Weight b = todo.front();
    todo.pop_front();
    for (int i = 0; i < rd.rank; ++i) {
      Weight c = reflect_root(rd, i, b);
      if (is_positive(c) && seen.insert(c).second)
        todo.push_back(c);
    }
  }
  rd.positive_roots.assign(seen.begin(), seen.end());
  rd.positive_root_count = static_cast<int>(rd.positive_roots.size());
  for (int i = 0; i < rd.rank; ++i) {
    if (rd.cartan[i][i] != 2)
      throw std::logic_error("cartan diagonal");
    for (int j = 0; j < rd.rank; ++j) {
      if (i != j && rd.cartan[i][j] > 0)
        throw std::logic_error("cartan off-diagonal");
      if (rd.d[i] * rd.cartan[i][j] != rd.d[j] * rd.cartan[j][i])
        throw std::logic_error("cartan not symmetrizable by d");
    }
  }
}

} // namespace

RootDatum type_a(int rank)
{
  if (rank < 1)
    throw std::invalid_argument("type A needs rank >= 1");
  RootDatum rd;
  rd.family = Family::A;
  rd.rank = rank;
  rd.cartan.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) {
    rd.cartan[i][i] = 2;
    if (i + 1 < rank)
      rd.cartan[i][i + 1] = rd.cartan[i + 1][i] = -1;
    rd.node_names.push_back(std::to_string(i + 1));
  }
  rd.d.assign(rank, 1);
  finish(rd);
  return rd;
}

RootDatum type_d4()
{
  RootDatum rd;
  rd.family = Family::D;
  rd.rank = 4;
  // a1, a2, a3 around the central node b
  rd.cartan = {{2, 0, 0, -1}, {0, 2, 0, -1}, {0, 0, 2, -1}, {-1, -1, -1, 2}};
  rd.d = {1, 1, 1, 1};
  rd.node_names = {"a1", "a2", "a3", "b"};
  finish(rd);
  return rd;
}

RootDatum type_g2()
{
  RootDatum rd;
  rd.family = Family::G;
  rd.rank = 2;
  rd.cartan = {{2, -3}, {-1, 2}};
  rd.d = {1, 3};
  rd.node_names = {"a", "b"};
  finish(rd);
  return rd;
}

RootDatum cartan_matrix(const std::string& kind)
{
  std::string k;
  for (char c : kind)
    k.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (k == "g2")
    return type_g2();
  if (k == "d4")
    return type_d4();
  if (k.size() >= 2 && k[0] == 'a' &&
      std::all_of(k.begin() + 1, k.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return type_a(std::stoi(k.substr(1)));
  throw std::invalid_argument("unsupported root datum kind '" + kind + "'");
}

std::string RootDatum::kind_name() const
{
  switch (family) {
  case Family::A: return "a" + std::to_string(rank);
  case Family::D: return "d4";
  case Family::G: return "g2";
  }
  return "?";
}

bool RootDatum::simply_laced() const
{
  return std::all_of(d.begin(), d.end(), [](int x) { return x == 1; });
}

std::vector<int> RootDatum::neighbours(int i) const
{
  std::vector<int> out;
  for (int j = 0; j < rank; ++j)
    if (adjacent(i, j))
      out.push_back(j);
  return out;
}

Weight RootDatum::omega(int i) const
{
  Weight w = zero();
  w.at(i) = 1;
  return w;
}

Weight RootDatum::alpha(int i) const
{
  Weight w = zero();
  for (int j = 0; j < rank; ++j)
    w[j] = cartan[j][i];
  return w;
}

int RootDatum::max_d() const { return *std::max_element(d.begin(), d.end()); }

int RootDatum::node_index(const std::string& name) const
{
  for (int i = 0; i < rank; ++i)
    if (node_names[i] == name)
      return i;
  throw std::invalid_argument("no node named '" + name + "' in " + kind_name());
}

int RootDatum::dual_node(int k) const
{
  Weight w = w0_dual(*this, omega(k));
  for (int j = 0; j < rank; ++j)
    if (w == omega(j))
      return j;
  throw std::logic_error("-w0 does not permute fundamental weights");
}

Word RootDatum::canonical_word() const
{
  Word w;
  switch (family) {
  case Family::A:
    // s1 (s2 s1) (s3 s2 s1) ...
    for (int k = 0; k < rank; ++k)
      for (int j = k; j >= 0; --j)
        w.push_back(j);
    break;
  case Family::D:
    for (int r = 0; r < 3; ++r)
      for (int x : {3, 0, 1, 2})
        w.push_back(x);
    break;
  case Family::G:
    w = {1, 0, 1, 0, 1, 0};
    break;
  }
  return w;
}

std::vector<std::vector<int>> RootDatum::diagram_automorphisms() const
{
  std::vector<int> id(rank);
  for (int i = 0; i < rank; ++i)
    id[i] = i;
  std::vector<std::vector<int>> out{id};
  if (family == Family::A && rank > 1) {
    std::vector<int> rev(id.rbegin(), id.rend());
    out.push_back(rev);
  } else if (family == Family::D) {
    std::vector<int> p = {0, 1, 2};
    while (std::next_permutation(p.begin(), p.end()))
      out.push_back({p[0], p[1], p[2], 3});
  }
  return out;
}

Weight reflect(const RootDatum& rd, int i, const Weight& w)
{
  if (i < 0 || i >= rd.rank)
    throw std::out_of_range("node index");
  Weight out = w;
  Weight a = rd.alpha(i);
  for (int j = 0; j < rd.rank; ++j)
    out[j] -= w[i] * a[j];
  return out;
}

Weight reflect_word(const RootDatum& rd, const Word& word, const Weight& w)
{
  Weight out = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = reflect(rd, *it, out);
  return out;
}

bool is_reduced(const RootDatum& rd, const Word& word)
{
  // beta_l = s_{i_K} ... s_{i_{l+1}} (alpha_{i_l}) must be positive and new
  std::set<Weight> inverted;
  for (std::size_t l = 0; l < word.size(); ++l) {
    if (word[l] < 0 || word[l] >= rd.rank)
      return false;
    Weight beta(rd.rank, Rational(0));
    beta[word[l]] = 1;
    for (std::size_t m = l + 1; m < word.size(); ++m)
      beta = reflect_root(rd, word[m], beta);
    if (!is_positive(beta) || !inverted.insert(beta).second)
      return false;
  }
  return true;
}

bool is_longest_word(const RootDatum& rd, const Word& word)
{
  return static_cast<int>(word.size()) == rd.positive_root_count && is_reduced(rd, word);
}

Weight w0(const RootDatum& rd, const Weight& w)
{
  return reflect_word(rd, rd.canonical_word(), w);
}

Weight w0_dual(const RootDatum& rd, const Weight& w)
{
  Weight out = w0(rd, w);
  for (auto& c : out)
    c = -c;
  return out;
}

Weight langlands_weight(const RootDatum& rd, const Weight& w)
{
  if (rd.family != Family::G)
    return w;
  // x a + y b  ->  x b + 3 y a
  return {3 * w[1], w[0]};
}

Word parse_word(const RootDatum& rd, const std::string& text)
{
  std::vector<std::string> tokens;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string t;
    while (std::getline(ss, t, ','))
      tokens.push_back(t);
  } else {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c)))
        tokens.emplace_back(1, c);
  }
  Word w;
  for (const auto& t : tokens) {
    std::string name = t;
    if (rd.family == Family::D && name != "b")
      name = "a" + name;
    w.push_back(rd.node_index(name));
  }
  return w;
}

std::string format_word(const RootDatum& rd, const Word& w)
{
  std::string out;
  bool commas = rd.family == Family::A && rd.rank > 9;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (commas && i)
      out += ',';
    const std::string& n = rd.node_names.at(w[i]);
    out += (rd.family == Family::D && n != "b") ? n.substr(1) : n;
  }
  return out;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

std::vector<std::string> fold_d4_word(const std::vector<std::string>& word)
{
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < word.size()) {
    if (word[i] == "b") {
      out.push_back("b");
      ++i;
      continue;
    }
    std::set<std::string> block;
    for (std::size_t j = i; j < i + 3 && j < word.size(); ++j)
      block.insert(word[j]);
    if (block != std::set<std::string>{"a1", "a2", "a3"})
      throw std::invalid_argument("word does not split into a1a2a3 blocks at position " +
                                  std::to_string(i + 1));
    out.push_back("a");
    i += 3;
  }
  return out;
}

std::vector<Word> commutation_class(const RootDatum& rd, const Word& w)
{
  std::set<Word> seen{w};
  std::deque<Word> todo{w};
  while (!todo.empty()) {
    Word cur = todo.front();
    todo.pop_front();
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      if (cur[p] == cur[p + 1] || rd.adjacent(cur[p], cur[p + 1]))
        continue;
      Word nxt = cur;
      std::swap(nxt[p], nxt[p + 1]);
      if (seen.insert(nxt).second)
        todo.push_back(nxt);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Word> braid_neighbours(const RootDatum& rd, const Word& w)
{
  std::vector<Word> out;
  for (std::size_t p = 0; p < w.size(); ++p) {
    for (std::size_t q = p + 1; q < w.size(); ++q) {
      int i = w[p], j = w[q];
      if (i == j)
        break;
      int prod = rd.cartan[i][j] * rd.cartan[j][i];
      std::size_t m = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
      if (p + m > w.size())
        break;
      bool ok = true;
      for (std::size_t t = 0; t < m; ++t)
        ok = ok && w[p + t] == (t % 2 ? j : i);
      if (ok) {
        Word nxt = w;
        for (std::size_t t = 0; t < m; ++t)
          nxt[p + t] = t % 2 ? i : j;
        out.push_back(nxt);
      }
      break;
    }
  }
  return out;
}

namespace {

std::string weight_symbol(const RootDatum& rd, int i)
{
  return rd.family == Family::A ? "w" + rd.node_names[i] : rd.node_names[i];
}

} // namespace

std::string format_weight(const RootDatum& rd, const Weight& w)
{
  std::string out;
  for (int i = 0; i < rd.rank; ++i) {
    const Rational& c = w.at(i);
    if (c == 0)
      continue;
    Rational a = abs(c);
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (a.get_num() != 1)
      out += a.get_num().get_str();
    out += weight_symbol(rd, i);
    if (a.get_den() != 1)
      out += "/" + a.get_den().get_str();
  }
  return out.empty() ? "0" : out;
}

Weight parse_weight(const RootDatum& rd, const std::string& text)
{
  Weight w = rd.zero();
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  if (s.empty() || s == "0")
    return w;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    Rational coef = start == pos ? Rational(1) : Rational(s.substr(start, pos - start));
    int node = -1;
    std::size_t best = 0;
    for (int i = 0; i < rd.rank; ++i) {
      std::string sym = weight_symbol(rd, i);
      if (s.compare(pos, sym.size(), sym) == 0 && sym.size() > best) {
        // longest match so that "w1" does not swallow the prefix of "w10"
        std::size_t end = pos + sym.size();
        if (rd.family == Family::A && end < s.size() && std::isdigit(static_cast<unsigned char>(s[end])))
          continue;
        node = i;
        best = sym.size();
      }
    }
    if (node < 0)
      throw std::invalid_argument("bad weight '" + text + "'");
    pos += best;
    if (pos < s.size() && s[pos] == '/') {
      std::size_t ds = ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
      if (ds == pos)
        throw std::invalid_argument("bad weight '" + text + "'");
      coef /= Rational(s.substr(ds, pos - ds));
    }
    w[node] += sign * coef;
  }
  return w;
}

} // namespace clusterseed
