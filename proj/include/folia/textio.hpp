#pragma once

#include <string>
#include <string_view>

#include "folia/elements.hpp"
#include "folia/groups.hpp"
#include "folia/surface.hpp"

namespace folia {

// Surface DSL:
//   surface := "(" "strip" pattern ")"
//   pattern := "(" "fin" slot* ")"
//            | "(" "nat" "(" "pre" slot* ")" "(" "cyc" slot+ ")" ")"
//            | "(" "neg" "(" "pre" slot* ")" "(" "cyc" slot+ ")" ")"
//            | "(" "int" "(" "cyc" slot+ ")" ")"
//            | "(" "int" "(" "sup" ("(" integer surface ")")* ")" ")"
//   slot    := "_" | surface
TreePtr parse_surface(std::string_view text);
std::string print_surface(const TreePtr& tree);

// Group DSL:
//   group := "1" | "Z" | "(" "x" gslot+ ")" | "(" "xpat" gpattern ")"
//          | "(" "wr" group ")"
//   gslot := group ("^" (integer | "w"))?
// "Z" is sugar for (wr 1); "^n" repeats a factor, "^w" repeats it over N.
// gpattern follows the surface pattern grammar with group slots.
GroupPtr parse_group(std::string_view text);
std::string print_group(const GroupPtr& e);
std::string print_normal_form(const NfPtr& nf);

// Element literals, read against a group shape:
//   elem := "e" | "(" "p" ("(" integer elem ")")* ")"
//         | "(" "w" "(" ("(" integer elem ")")* ")" integer ")"
ElemPtr parse_element(const GroupPtr& shape, std::string_view text);
std::string print_element(const ElemPtr& e);

// JSON mirror, schema "folia/1"; omega multiplicities encode as "w".
std::string to_json(const TreePtr& tree);
std::string to_json(const GroupPtr& e);
std::string to_json(const NfPtr& nf);
std::string to_json(const ElemPtr& e);

TreePtr surface_from_json(std::string_view text);
GroupPtr group_from_json(std::string_view text);
NfPtr nf_from_json(std::string_view text);
ElemPtr element_from_json(const GroupPtr& shape, std::string_view text);

}  // namespace folia
