#include "galdef/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "galdef/errors.hpp"

namespace galdef {

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  // (p*q)(x) = p(q(x)): apply q first.
  std::vector<int> r(p.size());
  for (size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
  return r;
}

}  // namespace

std::string cycle_label(const std::vector<int>& images) {
  const int degree = static_cast<int>(images.size());
  std::vector<char> seen(degree, 0);
  std::ostringstream out;
  bool any = false;
  for (int start = 0; start < degree; ++start) {
    if (seen[start] || images[start] == start) continue;
    any = true;
    out << '(';
    int x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first && degree > 10) out << ',';  // compact digit run for degree <= 10
      first = false;
      out << x;
      x = images[x];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::vector<int> parse_cycles(int degree, const std::string& text) {
  std::string s = text;
  // Identity spellings.
  if (strip_spaces(s).empty() || strip_spaces(s) == "()" || strip_spaces(s) == "e")
    return [&] { std::vector<int> id(degree); std::iota(id.begin(), id.end(), 0); return id; }();

  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  skip_ws();
  while (i < s.size()) {
    if (s[i] != '(') throw ParseError("expected '(' in cycle notation: " + text);
    size_t close = s.find(')', i);
    if (close == std::string::npos) throw ParseError("unbalanced '(' in cycle notation: " + text);
    std::string body = s.substr(i + 1, close - i - 1);
    i = close + 1;
    skip_ws();

    std::vector<int> cyc;
    if (body.find(',') != std::string::npos ||
        body.find(' ') != std::string::npos || body.find('\t') != std::string::npos) {
      std::string tok;
      std::istringstream in(body);
      while (std::getline(in, tok, ',')) {
        std::istringstream sub(tok);
        std::string w;
        while (sub >> w) cyc.push_back(std::stoi(w));
      }
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw ParseError("bad point '" + std::string(1, c) + "' in cycle: " + text);
        cyc.push_back(c - '0');
      }
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }

  std::vector<int> perm(degree);
  std::iota(perm.begin(), perm.end(), 0);
  // Product of the listed cycles, rightmost applied first.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cyc = *it;
    std::vector<int> c(degree);
    std::iota(c.begin(), c.end(), 0);
    std::vector<char> used(degree, 0);
    for (size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw ParseError("cycle point out of range in: " + text);
      if (used[from]) throw ParseError("repeated point in cycle: " + text);
      used[from] = 1;
      c[from] = to;
    }
    perm = compose(perm, c);
  }
  return perm;
}

void FiniteGroup::finish_tables() {
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] < 0) throw std::invalid_argument("element without inverse in group table");
  }
  label_index_.clear();
  label_index_.reserve(n_);
  for (int a = 0; a < n_; ++a) label_index_.emplace_back(strip_spaces(labels_[a]), a);
  std::sort(label_index_.begin(), label_index_.end());
  for (size_t k = 1; k < label_index_.size(); ++k)
    if (label_index_[k].first == label_index_[k - 1].first)
      throw std::invalid_argument("duplicate element label: " + label_index_[k].first);
}

GroupPtr FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                 std::vector<std::string> labels,
                                 std::string name) {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup);
  const int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("empty group table");
  if (labels.size() != static_cast<size_t>(n))
    throw std::invalid_argument("label count does not match group order");
  g->n_ = n;
  g->mul_.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    if (table[a].size() != static_cast<size_t>(n))
      throw std::invalid_argument("ragged group table");
    for (int b = 0; b < n; ++b) {
      int v = table[a][b];
      if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
      g->mul_[static_cast<size_t>(a) * n + b] = v;
    }
  }
  for (int a = 0; a < n; ++a)
    if (g->mul(0, a) != a || g->mul(a, 0) != a)
      throw std::invalid_argument("index 0 is not an identity in group table");
  g->labels_ = std::move(labels);
  g->name_ = std::move(name);
  g->finish_tables();
  if (!verify_group_axioms(*g)) throw std::invalid_argument("table is not a group");
  return g;
}

GroupPtr FiniteGroup::from_generators(int degree,
                                      const std::vector<std::vector<int>>& gens,
                                      std::string name, int max_order) {
  if (degree <= 0) throw std::invalid_argument("permutation degree must be positive");
  for (const auto& p : gens) {
    if (p.size() != static_cast<size_t>(degree))
      throw std::invalid_argument("generator degree mismatch");
    std::vector<char> hit(degree, 0);
    for (int x : p) {
      if (x < 0 || x >= degree || hit[x]) throw std::invalid_argument("generator is not a permutation");
      hit[x] = 1;
    }
  }

  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};

  for (size_t i = 0; i < elems.size(); ++i) {
    for (const auto& gen : gens) {
      auto next = compose(elems[i], gen);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (static_cast<int>(elems.size()) > max_order)
          throw SizeLimitError("generated group exceeds the order cap (" +
                               std::to_string(max_order) + ")");
      }
    }
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup);
  const int n = static_cast<int>(elems.size());
  g->n_ = n;
  g->mul_.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g->mul_[static_cast<size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
  g->labels_.reserve(n);
  for (const auto& p : elems) g->labels_.push_back(cycle_label(p));
  g->name_ = name.empty() ? ("perm group of degree " + std::to_string(degree)) : std::move(name);
  g->perm_degree_ = degree;
  g->perm_images_ = std::move(elems);
  for (const auto& gen : gens) g->gens_.push_back(index.at(gen));
  g->finish_tables();
  return g;
}

GroupPtr FiniteGroup::cyclic(int n, int max_order) {
  if (n <= 0) throw std::invalid_argument("cyclic order must be positive");
  if (n > max_order)
    throw SizeLimitError("cyclic group exceeds the order cap (" +
                         std::to_string(max_order) + ")");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup);
  g->n_ = n;
  g->mul_.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g->mul_[static_cast<size_t>(a) * n + b] = (a + b) % n;
  g->labels_.resize(n);
  for (int a = 0; a < n; ++a)
    g->labels_[a] = a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a));
  g->name_ = "cyclic:" + std::to_string(n);
  if (n > 1) g->gens_ = {1};
  g->finish_tables();
  return g;
}

GroupPtr FiniteGroup::dihedral(int n, int max_order) {
  if (n <= 0) throw std::invalid_argument("dihedral parameter must be positive");
  if (2LL * n > max_order)
    throw SizeLimitError("dihedral group exceeds the order cap (" +
                         std::to_string(max_order) + ")");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup);
  const int order = 2 * n;
  g->n_ = order;
  g->mul_.assign(static_cast<size_t>(order) * order, 0);
  // index = j*n + i for r^i f^j
  auto at = [n](int i, int j) { return j * n + ((i % n) + n) % n; };
  for (int j1 = 0; j1 < 2; ++j1)
    for (int i1 = 0; i1 < n; ++i1)
      for (int j2 = 0; j2 < 2; ++j2)
        for (int i2 = 0; i2 < n; ++i2) {
          int i = j1 == 0 ? i1 + i2 : i1 - i2;
          g->mul_[static_cast<size_t>(at(i1, j1)) * order + at(i2, j2)] = at(i, (j1 + j2) % 2);
        }
  g->labels_.resize(order);
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < n; ++i) {
      std::string rot = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
      std::string l = rot + (j == 1 ? "f" : "");
      g->labels_[at(i, j)] = l.empty() ? "e" : l;
    }
  g->name_ = "dihedral:" + std::to_string(n);
  g->gens_ = n > 1 ? std::vector<int>{at(1, 0), at(0, 1)} : std::vector<int>{at(0, 1)};
  g->finish_tables();
  return g;
}

GroupPtr FiniteGroup::symmetric(int n, int max_order) {
  if (n <= 0) throw std::invalid_argument("symmetric degree must be positive");
  std::vector<std::vector<int>> gens;
  if (n >= 2) {
    std::vector<int> t(n);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    gens.push_back(t);
  }
  if (n >= 3) {
    // the n-cycle (0 1 2 ... n-1): i -> i+1
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    gens.push_back(cyc);
  }
  return from_generators(n, gens, "sym:" + std::to_string(n), max_order);
}

GroupPtr FiniteGroup::alternating(int n, int max_order) {
  if (n <= 0) throw std::invalid_argument("alternating degree must be positive");
  std::vector<std::vector<int>> gens;
  for (int k = 2; k < n; ++k) {
    // 3-cycle (0 1 k)
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    p[0] = 1;
    p[1] = k;
    p[k] = 0;
    gens.push_back(std::move(p));
  }
  return from_generators(n, gens, "alt:" + std::to_string(n), max_order);
}

GroupPtr FiniteGroup::direct_product(const GroupPtr& g1, const GroupPtr& g2,
                                     int max_order) {
  const long long n = static_cast<long long>(g1->order()) * g2->order();
  if (n > max_order)
    throw SizeLimitError("direct product exceeds the order cap (" +
                         std::to_string(max_order) + ")");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup);
  const int n1 = g1->order(), n2 = g2->order(), nn = static_cast<int>(n);
  g->n_ = nn;
  g->mul_.assign(static_cast<size_t>(nn) * nn, 0);
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b)
      for (int c = 0; c < n1; ++c)
        for (int d = 0; d < n2; ++d)
          g->mul_[static_cast<size_t>(a * n2 + b) * nn + (c * n2 + d)] =
              g1->mul(a, c) * n2 + g2->mul(b, d);
  g->labels_.resize(nn);
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b)
      g->labels_[a * n2 + b] = "(" + g1->label(a) + "," + g2->label(b) + ")";
  g->name_ = "product:(" + g1->name() + ")x(" + g2->name() + ")";
  g->factor_left_ = g1;
  g->factor_right_ = g2;
  for (int a : g1->construction_generators()) g->gens_.push_back(a * n2);
  for (int b : g2->construction_generators()) g->gens_.push_back(b);
  g->finish_tables();
  return g;
}

GroupPtr FiniteGroup::semidirect_product(const GroupPtr& ng, const GroupPtr& hg,
                                         const std::vector<std::vector<int>>& action,
                                         int max_order) {
  const int nn = ng->order(), nh = hg->order();
  if (action.size() != static_cast<size_t>(nh))
    throw HypothesisError("semidirect action must have one row per element of H");
  for (const auto& row : action)
    if (row.size() != static_cast<size_t>(nn))
      throw HypothesisError("semidirect action row size must equal |N|");
  // Each row an automorphism of N.
  for (int h = 0; h < nh; ++h) {
    std::vector<char> hit(nn, 0);
    for (int x = 0; x < nn; ++x) {
      int y = action[h][x];
      if (y < 0 || y >= nn || hit[y])
        throw HypothesisError("semidirect action row is not a bijection");
      hit[y] = 1;
    }
    if (action[h][0] != 0)
      throw HypothesisError("semidirect action must fix the identity of N");
    for (int x = 0; x < nn; ++x)
      for (int y = 0; y < nn; ++y)
        if (action[h][ng->mul(x, y)] != ng->mul(action[h][x], action[h][y]))
          throw HypothesisError("semidirect action row is not an automorphism of N");
  }
  // h -> action[h] a homomorphism.
  for (int h1 = 0; h1 < nh; ++h1)
    for (int h2 = 0; h2 < nh; ++h2)
      for (int x = 0; x < nn; ++x)
        if (action[hg->mul(h1, h2)][x] != action[h1][action[h2][x]])
          throw HypothesisError("semidirect action is not a homomorphism H -> Aut(N)");
  for (int x = 0; x < nn; ++x)
    if (action[0][x] != x)
      throw HypothesisError("semidirect action of the identity must be trivial");

  const long long total = static_cast<long long>(nn) * nh;
  if (total > max_order)
    throw SizeLimitError("semidirect product exceeds the order cap (" +
                         std::to_string(max_order) + ")");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup);
  const int n = static_cast<int>(total);
  g->n_ = n;
  g->mul_.assign(static_cast<size_t>(n) * n, 0);
  for (int x1 = 0; x1 < nn; ++x1)
    for (int h1 = 0; h1 < nh; ++h1)
      for (int x2 = 0; x2 < nn; ++x2)
        for (int h2 = 0; h2 < nh; ++h2)
          g->mul_[static_cast<size_t>(x1 * nh + h1) * n + (x2 * nh + h2)] =
              ng->mul(x1, action[h1][x2]) * nh + hg->mul(h1, h2);
  g->labels_.resize(n);
  for (int x = 0; x < nn; ++x)
    for (int h = 0; h < nh; ++h)
      g->labels_[x * nh + h] = "(" + ng->label(x) + "," + hg->label(h) + ")";
  g->name_ = "semidirect:(" + ng->name() + ")x(" + hg->name() + ")";
  g->factor_left_ = ng;
  g->factor_right_ = hg;
  for (int a : ng->construction_generators()) g->gens_.push_back(a * nh);
  for (int b : hg->construction_generators()) g->gens_.push_back(b);
  g->finish_tables();
  return g;
}

int FiniteGroup::element_order(int a) const {
  int k = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::optional<int> FiniteGroup::find_element(const std::string& raw) const {
  std::string key = strip_spaces(raw);
  if (key.empty()) return std::nullopt;
  if (key[0] == '#') {
    try {
      size_t used = 0;
      int idx = std::stoi(key.substr(1), &used);
      if (used == key.size() - 1 && idx >= 0 && idx < n_) return idx;
    } catch (const std::exception&) {}
    return std::nullopt;
  }
  auto it = std::lower_bound(label_index_.begin(), label_index_.end(),
                             std::make_pair(key, -1));
  if (it != label_index_.end() && it->first == key) return it->second;

  if (perm_degree_) {
    try {
      auto p = parse_cycles(*perm_degree_, raw);
      std::string canon = strip_spaces(cycle_label(p));
      auto jt = std::lower_bound(label_index_.begin(), label_index_.end(),
                                 std::make_pair(canon, -1));
      if (jt != label_index_.end() && jt->first == canon) return jt->second;
    } catch (const ParseError&) {}
    return std::nullopt;
  }

  if (factor_left_ && key.size() >= 2 && key.front() == '(' && key.back() == ')') {
    // split "(left,right)" at the top-level comma
    std::string body = key.substr(1, key.size() - 2);
    int depth = 0;
    for (size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      else if (body[i] == ')') --depth;
      else if (body[i] == ',' && depth == 0) {
        auto a = factor_left_->find_element(body.substr(0, i));
        auto b = factor_right_->find_element(body.substr(i + 1));
        if (a && b) return *a * factor_right_->order() + *b;
        // The first top-level comma may not be the factor boundary when the
        // left label itself contains top-level commas; keep scanning.
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elements)
    : parent_(std::move(parent)) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const int n = parent_->order();
  pos_.assign(n, -1);
  for (size_t k = 0; k < elements.size(); ++k) {
    int g = elements[k];
    if (g < 0 || g >= n) throw std::invalid_argument("subgroup element out of range");
    pos_[g] = static_cast<int>(k);
  }
  elements_ = std::move(elements);
  if (elements_.empty() || elements_[0] != 0)
    throw std::invalid_argument("subgroup must contain the identity");
  for (int a : elements_) {
    if (pos_[parent_->inv(a)] < 0)
      throw std::invalid_argument("subgroup not closed under inverse");
    for (int b : elements_)
      if (pos_[parent_->mul(a, b)] < 0)
        throw std::invalid_argument("subgroup not closed under multiplication");
  }
}

Subgroup Subgroup::generated(GroupPtr parent, const std::vector<int>& gens) {
  const int n = parent->order();
  std::vector<char> member(n, 0);
  std::vector<int> elems{0};
  member[0] = 1;
  for (int g : gens) {
    if (g < 0 || g >= n) throw std::invalid_argument("generator out of range");
    if (!member[g]) {
      member[g] = 1;
      elems.push_back(g);
    }
  }
  for (size_t i = 0; i < elems.size(); ++i)
    for (int g : gens) {
      int x = parent->mul(elems[i], g);
      if (!member[x]) {
        member[x] = 1;
        elems.push_back(x);
      }
    }
  return Subgroup(std::move(parent), std::move(elems));
}

Subgroup Subgroup::trivial(GroupPtr parent) { return Subgroup(std::move(parent), {0}); }

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<int> all(parent->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(std::move(parent), std::move(all));
}

bool Subgroup::is_normal() const {
  const auto& g = group();
  for (int x = 0; x < g.order(); ++x)
    for (int s : elements_)
      if (!contains(g.conj(x, s))) return false;
  return true;
}

bool Subgroup::subset_of(const Subgroup& other) const {
  for (int s : elements_)
    if (!other.contains(s)) return false;
  return true;
}

Subgroup Subgroup::conjugated_by(int g) const {
  std::vector<int> elems;
  elems.reserve(elements_.size());
  for (int s : elements_) elems.push_back(group().conj(g, s));
  return Subgroup(parent_, std::move(elems));
}

Subgroup Subgroup::intersect(const Subgroup& other) const {
  std::vector<int> elems;
  for (int s : elements_)
    if (other.contains(s)) elems.push_back(s);
  return Subgroup(parent_, std::move(elems));
}

std::vector<int> Subgroup::small_generating_set() const {
  std::vector<int> gens;
  Subgroup cur = trivial(parent_);
  for (int g : elements_) {
    if (cur.contains(g)) continue;
    gens.push_back(g);
    cur = generated(parent_, gens);
    if (cur.order() == order()) break;
  }
  return gens;
}

// ---------------------------------------------------------------------------
// Cosets

CosetDecomposition::CosetDecomposition(Subgroup s) : s_(std::move(s)) {
  const auto& g = s_.group();
  const int n = g.order();
  where_.assign(n, {-1, -1});
  for (int x = 0; x < n; ++x) {
    if (where_[x].first >= 0) continue;
    const int i = static_cast<int>(reps_.size());
    reps_.push_back(x);  // x is the least element of its coset: smaller ones are taken
    for (int t : s_.elements()) where_[g.mul(x, t)] = {i, t};
  }
}

// ---------------------------------------------------------------------------
// Derived structure

Subgroup centralizer(const Subgroup& within, int s) {
  const auto& g = within.group();
  std::vector<int> elems;
  for (int x : within.elements())
    if (g.commute(x, s)) elems.push_back(x);
  return Subgroup(within.group_ptr(), std::move(elems));
}

Subgroup whole_centralizer(const GroupPtr& g, int s) {
  return centralizer(Subgroup::whole(g), s);
}

Subgroup center(const GroupPtr& g) {
  std::vector<int> elems;
  for (int x = 0; x < g->order(); ++x) {
    bool central = true;
    for (int y = 0; y < g->order() && central; ++y) central = g->commute(x, y);
    if (central) elems.push_back(x);
  }
  return Subgroup(g, std::move(elems));
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<int> cls;
    for (int y = 0; y < n; ++y) {
      int z = g.conj(y, x);
      if (!seen[z]) {
        seen[z] = 1;
        cls.push_back(z);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

namespace {

std::vector<Subgroup> sort_subgroups(const GroupPtr& g,
                                     std::set<std::vector<int>> element_sets) {
  std::vector<std::vector<int>> sorted(element_sets.begin(), element_sets.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Subgroup> out;
  out.reserve(sorted.size());
  for (auto& e : sorted) out.emplace_back(g, std::move(e));
  return out;
}

}  // namespace

std::vector<Subgroup> normal_subgroups(const GroupPtr& g, size_t max_count) {
  // Every normal subgroup is a union of conjugacy classes, hence the join of
  // the normal closures of the classes it contains. Closing the set of those
  // closures under pairwise join therefore yields exactly the normal lattice.
  std::set<std::vector<int>> found;
  found.insert({0});
  std::vector<std::vector<int>> work;
  for (const auto& cls : conjugacy_classes(*g)) {
    auto closure = Subgroup::generated(g, cls).elements();
    if (found.insert(closure).second) work.push_back(std::move(closure));
  }
  for (size_t i = 0; i < work.size(); ++i) {
    for (size_t j = 0; j < work.size(); ++j) {
      if (i == j) continue;
      std::vector<int> both = work[i];
      both.insert(both.end(), work[j].begin(), work[j].end());
      auto join = Subgroup::generated(g, both).elements();
      if (found.insert(join).second) {
        work.push_back(std::move(join));
        if (found.size() > max_count)
          throw SizeLimitError("normal subgroup lattice exceeds the size cap");
      }
    }
  }
  return sort_subgroups(g, std::move(found));
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g, size_t max_count) {
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> work{{0}};
  found.insert(work[0]);
  for (size_t i = 0; i < work.size(); ++i) {
    for (int x = 1; x < g->order(); ++x) {
      if (std::binary_search(work[i].begin(), work[i].end(), x)) continue;
      std::vector<int> gens = work[i];
      gens.push_back(x);
      auto bigger = Subgroup::generated(g, gens).elements();
      if (found.insert(bigger).second) {
        work.push_back(std::move(bigger));
        if (found.size() > max_count)
          throw SizeLimitError("subgroup enumeration exceeds the size cap");
      }
    }
  }
  return sort_subgroups(g, std::move(found));
}

bool verify_group_axioms(const FiniteGroup& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    if (g.mul(0, a) != a || g.mul(a, 0) != a) return false;
  for (int a = 0; a < n; ++a)
    if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0) return false;
  // Rows and columns are permutations.
  for (int a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < n; ++b) {
      if (row[g.mul(a, b)]) return false;
      row[g.mul(a, b)] = 1;
      if (col[g.mul(b, a)]) return false;
      col[g.mul(b, a)] = 1;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  return true;
}

}  // namespace galdef
