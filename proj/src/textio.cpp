#include "galdef/textio.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "galdef/errors.hpp"

namespace galdef {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    int v = std::stoi(trim(s), &used);
    if (used != trim(s).size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer for " + what + ", got '" + s + "'");
  }
}

// "(A)x(B)" -> {A, B, rest-after}, used by product/semidirect specs.
struct PairSpec {
  std::string left, right, rest;
};

PairSpec split_pair_spec(const std::string& body, const std::string& ctx) {
  if (body.empty() || body[0] != '(')
    throw ParseError(ctx + " expects the form (spec)x(spec)");
  int depth = 0;
  size_t i = 0;
  for (; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    else if (body[i] == ')' && --depth == 0) break;
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in " + ctx);
  std::string left = body.substr(1, i - 1);
  if (i + 1 >= body.size() || body[i + 1] != 'x')
    throw ParseError(ctx + " expects 'x' between the factors");
  size_t j = i + 2;
  if (j >= body.size() || body[j] != '(')
    throw ParseError(ctx + " expects the form (spec)x(spec)");
  int depth2 = 0;
  size_t k = j;
  for (; k < body.size(); ++k) {
    if (body[k] == '(') ++depth2;
    else if (body[k] == ')' && --depth2 == 0) break;
  }
  if (depth2 != 0) throw ParseError("unbalanced parentheses in " + ctx);
  return {left, body.substr(j + 1, k - j - 1), body.substr(k + 1)};
}

// Extends generator images to a full automorphism of N by breadth-first
// closure; rejects inconsistent or non-bijective assignments.
std::vector<int> extend_automorphism(const FiniteGroup& n,
                                     const std::vector<int>& gens,
                                     const std::vector<int>& images) {
  std::vector<int> img(n.order(), -1);
  img[0] = 0;
  std::vector<int> known{0};
  for (size_t i = 0; i < gens.size(); ++i) {
    if (img[gens[i]] >= 0 && img[gens[i]] != images[i])
      throw HypothesisError("conflicting generator images in semidirect action");
    if (img[gens[i]] < 0) {
      img[gens[i]] = images[i];
      known.push_back(gens[i]);
    }
  }
  for (size_t i = 0; i < known.size(); ++i)
    for (size_t k = 0; k < gens.size(); ++k) {
      int x = n.mul(known[i], gens[k]);
      int y = n.mul(img[known[i]], images[k]);
      if (img[x] < 0) {
        img[x] = y;
        known.push_back(x);
      } else if (img[x] != y) {
        throw HypothesisError("generator images do not define a homomorphism of N");
      }
    }
  for (int x : img)
    if (x < 0)
      throw HypothesisError(
          "construction generators do not generate N; cannot extend the action");
  return img;
}

std::vector<std::vector<int>> build_action(const GroupPtr& n, const GroupPtr& h,
                                           const std::string& action_spec) {
  // All forms define the image of H's first construction generator and
  // extend along powers, so H must be cyclic around that generator.
  const auto& hgens = h->construction_generators();
  if (hgens.empty() || Subgroup::generated(h, {hgens[0]}).order() != h->order())
    throw HypothesisError("semidirect action syntax requires a cyclic H");
  const int h1 = hgens[0];

  std::vector<int> phi;  // image table of the generator's automorphism
  if (action_spec.rfind("pow:", 0) == 0) {
    const int k = parse_int(action_spec.substr(4), "pow exponent");
    const int nn = n->order();
    for (int a = 0; a < nn; ++a)
      for (int b = 0; b < nn; ++b)
        if (n->mul(a, b) != (a + b) % nn)
          throw HypothesisError("action pow:k requires a cyclic:n group for N");
    phi.resize(nn);
    for (int x = 0; x < nn; ++x) phi[x] = static_cast<int>((static_cast<long long>(x) * k) % nn);
  } else if (action_spec.rfind("conj:", 0) == 0) {
    auto x = n->find_element(action_spec.substr(5));
    if (!x) throw ParseError("unknown element of N in conj action: " + action_spec.substr(5));
    phi.resize(n->order());
    for (int y = 0; y < n->order(); ++y) phi[y] = n->conj(*x, y);
  } else {
    const auto& ngens = n->construction_generators();
    auto image_labels = split_top_level(action_spec);
    if (ngens.empty())
      throw HypothesisError("N records no construction generators; use pow: or conj:");
    if (image_labels.size() != ngens.size())
      throw ParseError("expected " + std::to_string(ngens.size()) +
                       " generator images, got " + std::to_string(image_labels.size()));
    std::vector<int> images;
    for (const auto& l : image_labels) {
      auto e = n->find_element(l);
      if (!e) throw ParseError("unknown element of N in action images: " + l);
      images.push_back(*e);
    }
    phi = extend_automorphism(*n, ngens, images);
  }

  // Fill rows along the cyclic order h1^k; semidirect_product re-verifies
  // everything (automorphism, homomorphism) afterwards.
  std::vector<std::vector<int>> action(h->order());
  std::vector<int> power(n->order());
  for (int x = 0; x < n->order(); ++x) power[x] = x;  // identity
  int hh = 0;
  for (int k = 0; k < h->order(); ++k) {
    action[hh] = power;
    std::vector<int> next(n->order());
    for (int x = 0; x < n->order(); ++x) next[x] = phi[power[x]];
    power = std::move(next);
    hh = h->mul(hh, h1);
  }
  return action;
}

}  // namespace

std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      if (!trim(cur).empty()) out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

std::vector<std::string> balanced_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
      if (!cur.empty()) {
        out.push_back(cur);
        cur.clear();
      }
      continue;
    }
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    cur.push_back(c);
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

GroupPtr parse_group_spec(const std::string& raw, int max_order) {
  const std::string spec = trim(raw);
  const size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw ParseError("group spec needs a constructor prefix: " + spec);
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);

  if (kind == "cyclic") return FiniteGroup::cyclic(parse_int(rest, "cyclic order"), max_order);
  if (kind == "dihedral")
    return FiniteGroup::dihedral(parse_int(rest, "dihedral parameter"), max_order);
  if (kind == "sym") return FiniteGroup::symmetric(parse_int(rest, "symmetric degree"), max_order);
  if (kind == "alt") return FiniteGroup::alternating(parse_int(rest, "alternating degree"), max_order);

  if (kind == "perm") {
    const size_t c2 = rest.find(':');
    if (c2 == std::string::npos)
      throw ParseError("perm spec is perm:<degree>:<gen>,<gen>,...");
    const int degree = parse_int(rest.substr(0, c2), "permutation degree");
    std::vector<std::vector<int>> gens;
    for (const auto& tok : split_top_level(rest.substr(c2 + 1)))
      gens.push_back(parse_cycles(degree, tok));
    if (gens.empty()) throw ParseError("perm spec needs at least one generator");
    return FiniteGroup::from_generators(degree, gens, spec, max_order);
  }

  if (kind == "product") {
    auto parts = split_pair_spec(rest, "product");
    if (!trim(parts.rest).empty())
      throw ParseError("unexpected trailing text after product spec: " + parts.rest);
    return FiniteGroup::direct_product(parse_group_spec(parts.left, max_order),
                                       parse_group_spec(parts.right, max_order),
                                       max_order);
  }

  if (kind == "semidirect") {
    auto parts = split_pair_spec(rest, "semidirect");
    const std::string tail = trim(parts.rest);
    if (tail.rfind(":action=", 0) != 0)
      throw ParseError("semidirect spec needs :action=<action>");
    auto n = parse_group_spec(parts.left, max_order);
    auto h = parse_group_spec(parts.right, max_order);
    return FiniteGroup::semidirect_product(n, h, build_action(n, h, tail.substr(8)),
                                           max_order);
  }

  throw ParseError("unknown group constructor: " + kind);
}

std::vector<int> parse_element_list(const FiniteGroup& g, const std::string& text) {
  std::vector<int> out;
  for (const auto& tok : split_top_level(text)) {
    auto e = g.find_element(tok);
    if (!e)
      throw ParseError("unknown element '" + tok + "' of group " + g.name());
    out.push_back(*e);
  }
  return out;
}

InstanceSpec load_instance_text(const std::string& text, int max_order) {
  std::map<std::string, std::string> keys;
  bool in_cocycle = false;
  std::string builtin, iso_text;
  int modulus = 0;
  std::vector<std::array<std::string, 3>> table_lines;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t == "[cocycle]") {
      in_cocycle = true;
      continue;
    }
    const size_t eq = t.find('=');
    if (!in_cocycle) {
      if (eq == std::string::npos)
        throw ParseError("line " + std::to_string(lineno) + ": expected key = value");
      keys[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
      continue;
    }
    // Inside [cocycle]: builtin/iso/modulus keys or a table entry.
    std::string key = eq == std::string::npos ? "" : trim(t.substr(0, eq));
    if (key == "builtin") {
      builtin = trim(t.substr(eq + 1));
    } else if (key == "iso") {
      iso_text = trim(t.substr(eq + 1));
    } else if (key == "modulus") {
      modulus = parse_int(t.substr(eq + 1), "cocycle modulus");
    } else {
      auto toks = balanced_tokens(t);
      if (toks.size() != 3)
        throw ParseError("line " + std::to_string(lineno) +
                         ": cocycle entry must be '<s> <t> <exponent>'");
      table_lines.push_back({toks[0], toks[1], toks[2]});
    }
  }

  if (!keys.count("group")) throw ParseError("missing 'group =' line");
  if (!keys.count("s_generators")) throw ParseError("missing 's_generators =' line");

  InstanceSpec spec;
  spec.group_spec = keys["group"];
  spec.g = parse_group_spec(spec.group_spec, max_order);
  spec.s = Subgroup::generated(spec.g, parse_element_list(*spec.g, keys["s_generators"]));
  if (keys.count("f_generators"))
    spec.f = Subgroup::generated(spec.g, parse_element_list(*spec.g, keys["f_generators"]));

  if (!builtin.empty() && (modulus > 0 || !table_lines.empty()))
    throw ParseError("give either 'builtin =' or an explicit cocycle table, not both");

  if (!builtin.empty()) {
    if (builtin.rfind("bilinear:", 0) != 0)
      throw ParseError("unknown builtin cocycle: " + builtin);
    const int q = parse_int(builtin.substr(9), "bilinear parameter");
    std::vector<int> iso;
    if (!iso_text.empty()) {
      auto uv = parse_element_list(*spec.g, iso_text);
      if (uv.size() != 2)
        throw ParseError("iso needs exactly two elements (images of (1,0) and (0,1))");
      iso.resize(static_cast<size_t>(q) * q);
      int up = 0;
      for (int i = 0; i < q; ++i) {
        int cur = up;
        for (int j = 0; j < q; ++j) {
          iso[static_cast<size_t>(i) * q + j] = cur;
          cur = spec.g->mul(cur, uv[1]);
        }
        up = spec.g->mul(up, uv[0]);
      }
    } else {
      iso = default_bilinear_iso(spec.s, q);
    }
    spec.alpha = standard_nondegenerate(q, spec.s, iso);
    spec.cocycle_desc = builtin;
    spec.input_modulus = q;
    spec.modulus_doubled = spec.alpha.modulus != q;
    return spec;
  }

  if (modulus <= 0)
    throw ParseError("cocycle section needs 'builtin =' or 'modulus =' plus a table");
  const int ns = spec.s.order();
  TwoCocycle raw;
  raw.s = spec.s;
  raw.modulus = modulus;
  raw.table.assign(static_cast<size_t>(ns) * ns, 0);
  std::vector<char> filled(static_cast<size_t>(ns) * ns, 0);
  for (const auto& [ls, lt, le] : table_lines) {
    auto es = spec.g->find_element(ls);
    auto et = spec.g->find_element(lt);
    if (!es || !spec.s.contains(*es))
      throw ParseError("cocycle entry element not in S: " + ls);
    if (!et || !spec.s.contains(*et))
      throw ParseError("cocycle entry element not in S: " + lt);
    int e = parse_int(le, "cocycle exponent");
    size_t idx = static_cast<size_t>(spec.s.pos(*es)) * ns + spec.s.pos(*et);
    if (filled[idx]) throw ParseError("duplicate cocycle entry for (" + ls + ", " + lt + ")");
    filled[idx] = 1;
    raw.table[idx] = ((e % modulus) + modulus) % modulus;
  }
  for (char f : filled)
    if (!f)
      throw ParseError("cocycle table incomplete: all |S|^2 pairs must be given");

  auto diag = validate(raw);
  if (!diag.ok) throw HypothesisError("cocycle rejected: " + diag.message);
  auto [beta, phi] = normalize_inverse_pairs(raw);
  spec.alpha = std::move(beta);
  spec.cocycle_desc = "table (modulus " + std::to_string(modulus) + ")";
  spec.input_modulus = modulus;
  spec.modulus_doubled = spec.alpha.modulus != modulus;
  return spec;
}

InstanceSpec load_instance_file(const std::string& path, int max_order) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_instance_text(buf.str(), max_order);
}

}  // namespace galdef
