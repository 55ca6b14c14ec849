#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galdef/cocycle.hpp"
#include "galdef/group.hpp"

namespace galdef {

// Group construction grammar:
//   cyclic:n | dihedral:n | sym:n | alt:n
//   perm:<degree>:<gen>,<gen>,...            cycle notation, e.g. (01)(23)
//   product:(<spec>)x(<spec>)
//   semidirect:(<specN>)x(<specH>):action=<action>
// where <action> is one of
//   pow:k          N must be cyclic; the generator of H maps x -> x^k
//   conj:<label>   H cyclic acting by conjugation by the named element of N
//   <label>,...    images of N's construction generators under the first
//                  generator of H (H cyclic)
GroupPtr parse_group_spec(const std::string& spec,
                          int max_order = FiniteGroup::default_max_order);

// Comma-separated element labels; commas nested in parentheses do not split.
std::vector<int> parse_element_list(const FiniteGroup& g, const std::string& text);

// Splits on top-level commas only.
std::vector<std::string> split_top_level(const std::string& text);

// Whitespace-separated tokens, except that whitespace inside parentheses is
// kept (element labels such as "(0 1)" stay single tokens).
std::vector<std::string> balanced_tokens(const std::string& line);

// A loaded instance file. The cocycle has been validated and inverse-pair
// normalized; the Galois object itself is built by the caller (which is
// where degeneracy is rejected).
struct InstanceSpec {
  std::string group_spec;
  GroupPtr g;
  Subgroup s;
  TwoCocycle alpha;
  std::optional<Subgroup> f;
  std::string cocycle_desc;
  int input_modulus = 1;
  bool modulus_doubled = false;
};

// Instance file format (line-oriented; '#' starts a comment line):
//   group = <group spec>
//   s_generators = <element list>
//   f_generators = <element list>        (optional)
//   [cocycle]
//   builtin = bilinear:q                 (optionally: iso = <u>, <v>)
// or, instead of builtin, an explicit table at fixed modulus:
//   modulus = m
//   <s> <t> <exponent>                   (|S|^2 lines, every pair once)
InstanceSpec load_instance_text(const std::string& text,
                                int max_order = FiniteGroup::default_max_order);
InstanceSpec load_instance_file(const std::string& path,
                                int max_order = FiniteGroup::default_max_order);

}  // namespace galdef
