#include <json.hpp>

#include "folia/errors.hpp"
#include "folia/textio.hpp"

namespace folia {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "folia/1";

// Recursion cap for the JSON-to-value walks (json::parse itself is
// iterative and needs none).
constexpr int kMaxNesting = 1024;

thread_local int depth = 0;

struct DepthGuard {
  DepthGuard() {
    if (++depth > kMaxNesting) {
      --depth;
      throw SchemaError("nesting deeper than " + std::to_string(kMaxNesting));
    }
  }
  ~DepthGuard() { --depth; }
};

json wrap(const char* field, json body) {
  return json{{"v", kSchema}, {field, std::move(body)}};
}

// Returns the whole document (moved, never copied: the payload may be deep
// and json copies recurse); callers read the payload through a reference.
json parse_document(std::string_view text, const char* field) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& err) {
    throw SyntaxError(SourcePos{1, 1, 0}, std::string("invalid JSON: ") + err.what());
  }
  if (!j.is_object() || !j.contains("v")) throw SchemaError("missing schema version field 'v'");
  if (j["v"] != kSchema)
    throw SchemaError("unsupported schema version (expected \"" + std::string(kSchema) + "\")");
  if (!j.contains(field)) throw SchemaError(std::string("missing field '") + field + "'");
  return j;
}

// --- surfaces --------------------------------------------------------------

json tree_to_json(const TreePtr& t);

json tree_slot_to_json(const TreePtr& s) { return s ? tree_to_json(s) : json(nullptr); }

json tree_pattern_to_json(const TreePattern& pat) {
  return std::visit(
      [&](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        auto slots = [](const std::vector<TreePtr>& v) {
          json a = json::array();
          for (const TreePtr& s : v) a.push_back(tree_slot_to_json(s));
          return a;
        };
        if constexpr (std::is_same_v<T, FinPat<TreePtr>>) {
          return json{{"fin", slots(p.slots)}};
        } else if constexpr (std::is_same_v<T, NatPat<TreePtr>>) {
          return json{{"nat", {{"pre", slots(p.prefix)}, {"cyc", slots(p.cycle)}}}};
        } else if constexpr (std::is_same_v<T, NegPat<TreePtr>>) {
          return json{{"neg", {{"pre", slots(p.prefix)}, {"cyc", slots(p.cycle)}}}};
        } else if constexpr (std::is_same_v<T, IntCycPat<TreePtr>>) {
          return json{{"int", {{"cyc", slots(p.cycle)}}}};
        } else {
          json entries = json::array();
          for (const auto& [k, s] : p.entries) entries.push_back(json::array({k, tree_to_json(s)}));
          return json{{"int", {{"sup", entries}}}};
        }
      },
      pat);
}

json tree_to_json(const TreePtr& t) { return json{{"strip", tree_pattern_to_json(t->children)}}; }

TreePtr tree_from_json_value(const json& j);

TreePtr tree_slot_from_json(const json& j) {
  if (j.is_null()) return nullptr;
  return tree_from_json_value(j);
}

std::vector<TreePtr> tree_slots_from_json(const json& j, const char* where) {
  if (!j.is_array()) throw SchemaError(std::string(where) + " must be an array");
  std::vector<TreePtr> out;
  out.reserve(j.size());
  for (const json& s : j) out.push_back(tree_slot_from_json(s));
  return out;
}

TreePattern tree_pattern_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) throw SchemaError("pattern must be a single-key object");
  const std::string tag = j.begin().key();
  const json& body = j.begin().value();
  if (tag == "fin") return FinPat<TreePtr>{tree_slots_from_json(body, "fin")};
  if (tag == "nat" || tag == "neg") {
    if (!body.is_object() || !body.contains("pre") || !body.contains("cyc"))
      throw SchemaError(tag + " needs 'pre' and 'cyc'");
    auto prefix = tree_slots_from_json(body["pre"], "pre");
    auto cycle = tree_slots_from_json(body["cyc"], "cyc");
    if (tag == "nat") return NatPat<TreePtr>{std::move(prefix), std::move(cycle)};
    return NegPat<TreePtr>{std::move(prefix), std::move(cycle)};
  }
  if (tag == "int") {
    if (body.is_object() && body.contains("cyc"))
      return IntCycPat<TreePtr>{tree_slots_from_json(body["cyc"], "cyc")};
    if (body.is_object() && body.contains("sup")) {
      const json& sup = body["sup"];
      if (!sup.is_array()) throw SchemaError("sup must be an array of [key, strip] pairs");
      std::vector<std::pair<std::int64_t, TreePtr>> entries;
      for (const json& pair : sup) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer())
          throw SchemaError("sup entries must be [integer, strip] pairs");
        entries.emplace_back(pair[0].get<std::int64_t>(), tree_from_json_value(pair[1]));
      }
      return IntSupPat<TreePtr>{std::move(entries)};
    }
    throw SchemaError("int needs 'cyc' or 'sup'");
  }
  throw SchemaError("unknown pattern tag '" + tag + "'");
}

TreePtr tree_from_json_value(const json& j) {
  DepthGuard guard;
  if (!j.is_object() || !j.contains("strip")) throw SchemaError("expected a {\"strip\": ...} object");
  return make_tree(tree_pattern_from_json(j["strip"]));
}

// --- groups ----------------------------------------------------------------

json group_to_json_value(const GroupPtr& e);

json group_slot_to_json(const GroupPtr& g) { return g ? group_to_json_value(g) : json(nullptr); }

json group_pattern_to_json(const GroupPattern& pat) {
  return std::visit(
      [&](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        auto slots = [](const std::vector<GroupPtr>& v) {
          json a = json::array();
          for (const GroupPtr& s : v) a.push_back(group_slot_to_json(s));
          return a;
        };
        if constexpr (std::is_same_v<T, FinPat<GroupPtr>>) {
          return json{{"fin", slots(p.slots)}};
        } else if constexpr (std::is_same_v<T, NatPat<GroupPtr>>) {
          return json{{"nat", {{"pre", slots(p.prefix)}, {"cyc", slots(p.cycle)}}}};
        } else if constexpr (std::is_same_v<T, NegPat<GroupPtr>>) {
          return json{{"neg", {{"pre", slots(p.prefix)}, {"cyc", slots(p.cycle)}}}};
        } else if constexpr (std::is_same_v<T, IntCycPat<GroupPtr>>) {
          return json{{"int", {{"cyc", slots(p.cycle)}}}};
        } else {
          json entries = json::array();
          for (const auto& [k, g] : p.entries)
            entries.push_back(json::array({k, group_to_json_value(g)}));
          return json{{"int", {{"sup", entries}}}};
        }
      },
      pat);
}

json group_to_json_value(const GroupPtr& e) {
  if (std::holds_alternative<OneExpr>(e->node)) return json("1");
  if (const auto* w = std::get_if<WrExpr>(&e->node))
    return json{{"wr", group_to_json_value(w->inner)}};
  return json{{"prod", group_pattern_to_json(std::get<ProdExpr>(e->node).factors)}};
}

GroupPtr group_from_json_value(const json& j);

GroupPtr group_slot_from_json(const json& j) {
  if (j.is_null()) return nullptr;
  return group_from_json_value(j);
}

std::vector<GroupPtr> group_slots_from_json(const json& j, const char* where) {
  if (!j.is_array()) throw SchemaError(std::string(where) + " must be an array");
  std::vector<GroupPtr> out;
  out.reserve(j.size());
  for (const json& s : j) out.push_back(group_slot_from_json(s));
  return out;
}

GroupPattern group_pattern_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) throw SchemaError("pattern must be a single-key object");
  const std::string tag = j.begin().key();
  const json& body = j.begin().value();
  if (tag == "fin") return FinPat<GroupPtr>{group_slots_from_json(body, "fin")};
  if (tag == "nat" || tag == "neg") {
    if (!body.is_object() || !body.contains("pre") || !body.contains("cyc"))
      throw SchemaError(tag + " needs 'pre' and 'cyc'");
    auto prefix = group_slots_from_json(body["pre"], "pre");
    auto cycle = group_slots_from_json(body["cyc"], "cyc");
    if (tag == "nat") return NatPat<GroupPtr>{std::move(prefix), std::move(cycle)};
    return NegPat<GroupPtr>{std::move(prefix), std::move(cycle)};
  }
  if (tag == "int") {
    if (body.is_object() && body.contains("cyc"))
      return IntCycPat<GroupPtr>{group_slots_from_json(body["cyc"], "cyc")};
    if (body.is_object() && body.contains("sup")) {
      const json& sup = body["sup"];
      if (!sup.is_array()) throw SchemaError("sup must be an array of [key, group] pairs");
      std::vector<std::pair<std::int64_t, GroupPtr>> entries;
      for (const json& pair : sup) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer())
          throw SchemaError("sup entries must be [integer, group] pairs");
        entries.emplace_back(pair[0].get<std::int64_t>(), group_from_json_value(pair[1]));
      }
      return IntSupPat<GroupPtr>{std::move(entries)};
    }
    throw SchemaError("int needs 'cyc' or 'sup'");
  }
  throw SchemaError("unknown pattern tag '" + tag + "'");
}

GroupPtr group_from_json_value(const json& j) {
  DepthGuard guard;
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "1") return one();
    if (s == "Z") return z_group();
    throw SchemaError("unknown group literal \"" + s + "\"");
  }
  if (j.is_object() && j.contains("wr")) return wr(group_from_json_value(j["wr"]));
  if (j.is_object() && j.contains("prod")) return prod(group_pattern_from_json(j["prod"]));
  throw SchemaError("expected \"1\", {\"wr\": ...} or {\"prod\": ...}");
}

// --- normal forms ----------------------------------------------------------

json nf_to_json_value(const NfPtr& nf) {
  if (std::holds_alternative<NfOne>(nf->node)) return json("1");
  if (const auto* w = std::get_if<NfWr>(&nf->node)) return json{{"wr", nf_to_json_value(w->inner)}};
  json factors = json::array();
  for (const NfFactor& f : std::get<NfProd>(nf->node).factors) {
    json m = f.mult.omega ? json("w") : json(f.mult.count);
    factors.push_back(json{{"f", nf_to_json_value(f.factor)}, {"m", std::move(m)}});
  }
  return json{{"x", std::move(factors)}};
}

NfPtr nf_from_json_value(const json& j) {
  DepthGuard guard;
  if (j.is_string() && j.get<std::string>() == "1") return nf_one();
  if (j.is_object() && j.contains("wr")) return nf_wr(nf_from_json_value(j["wr"]));
  if (j.is_object() && j.contains("x")) {
    const json& arr = j["x"];
    if (!arr.is_array()) throw SchemaError("'x' must be an array of factors");
    std::vector<NfFactor> factors;
    for (const json& f : arr) {
      if (!f.is_object() || !f.contains("f") || !f.contains("m"))
        throw SchemaError("factors need 'f' and 'm'");
      Mult m;
      if (f["m"].is_string() && f["m"].get<std::string>() == "w")
        m = Mult::w();
      else if (f["m"].is_number_unsigned() && f["m"].get<std::uint64_t>() >= 1)
        m = Mult::finite(f["m"].get<std::uint64_t>());
      else
        throw SchemaError("'m' must be a positive integer or \"w\"");
      factors.push_back(NfFactor{nf_from_json_value(f["f"]), m});
    }
    return nf_prod(std::move(factors));
  }
  throw SchemaError("expected \"1\", {\"wr\": ...} or {\"x\": ...}");
}

// --- elements --------------------------------------------------------------

json elem_to_json_value(const ElemPtr& e) {
  if (is_identity(e)) return json("e");
  if (const auto* p = std::get_if<ProdElem>(&e->node)) {
    json entries = json::array();
    for (const auto& [i, child] : p->entries)
      entries.push_back(json::array({i, elem_to_json_value(child)}));
    return json{{"p", std::move(entries)}};
  }
  const auto& w = std::get<WrElem>(e->node);
  json entries = json::array();
  for (const auto& [j, child] : w.decorations)
    entries.push_back(json::array({j, elem_to_json_value(child)}));
  return json{{"w", {{"map", std::move(entries)}, {"shift", w.shift}}}};
}

ElemPtr elem_from_json_value(const GroupPtr& shape, const json& j) {
  DepthGuard guard;
  if (j.is_string() && j.get<std::string>() == "e") return identity(shape);
  if (j.is_object() && j.contains("p")) {
    const auto* p = std::get_if<ProdExpr>(&shape->node);
    if (!p) throw ShapeError("product element against a non-product shape");
    const json& arr = j["p"];
    if (!arr.is_array()) throw SchemaError("'p' must be an array of [index, elem] pairs");
    std::map<std::int64_t, ElemPtr> entries;
    for (const json& pair : arr) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer())
        throw SchemaError("'p' entries must be [integer, elem] pairs");
      std::int64_t index = pair[0].get<std::int64_t>();
      SlotShape slot = prod_slot_shape(p->factors, index);
      if (!slot.valid)
        throw ShapeError("index " + std::to_string(index) + " outside the pattern's index set");
      ElemPtr child = elem_from_json_value(slot.shape ? slot.shape : one(), pair[1]);
      if (!entries.emplace(index, child).second)
        throw SchemaError("duplicate index " + std::to_string(index));
      if (is_identity(child)) entries.erase(index);
    }
    return make_prod_elem(std::move(entries));
  }
  if (j.is_object() && j.contains("w")) {
    const auto* w = std::get_if<WrExpr>(&shape->node);
    if (!w) throw ShapeError("wreath element against a non-wreath shape");
    const json& body = j["w"];
    if (!body.is_object() || !body.contains("map") || !body.contains("shift") ||
        !body["shift"].is_number_integer())
      throw SchemaError("'w' needs 'map' and an integer 'shift'");
    std::map<std::int64_t, ElemPtr> decorations;
    for (const json& pair : body["map"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer())
        throw SchemaError("'map' entries must be [integer, elem] pairs");
      std::int64_t pos = pair[0].get<std::int64_t>();
      ElemPtr child = elem_from_json_value(w->inner, pair[1]);
      if (!decorations.emplace(pos, child).second)
        throw SchemaError("duplicate position " + std::to_string(pos));
      if (is_identity(child)) decorations.erase(pos);
    }
    return make_wr_elem(std::move(decorations), body["shift"].get<std::int64_t>());
  }
  throw SchemaError("expected \"e\", {\"p\": ...} or {\"w\": ...}");
}

}  // namespace

std::string to_json(const TreePtr& tree) { return wrap("strip", tree_pattern_to_json(tree->children)).dump(); }

std::string to_json(const GroupPtr& e) { return wrap("group", group_to_json_value(e)).dump(); }

std::string to_json(const NfPtr& nf) { return wrap("nf", nf_to_json_value(nf)).dump(); }

std::string to_json(const ElemPtr& e) { return wrap("elem", elem_to_json_value(e)).dump(); }

TreePtr surface_from_json(std::string_view text) {
  json doc = parse_document(text, "strip");
  return make_tree(tree_pattern_from_json(doc.at("strip")));
}

GroupPtr group_from_json(std::string_view text) {
  json doc = parse_document(text, "group");
  return group_from_json_value(doc.at("group"));
}

NfPtr nf_from_json(std::string_view text) {
  json doc = parse_document(text, "nf");
  return nf_from_json_value(doc.at("nf"));
}

ElemPtr element_from_json(const GroupPtr& shape, std::string_view text) {
  json doc = parse_document(text, "elem");
  return elem_from_json_value(shape, doc.at("elem"));
}

}  // namespace folia
