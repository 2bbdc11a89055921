#include "folia/textio.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>

#include "folia/errors.hpp"

namespace folia {

// ---------------------------------------------------------------------------
// tokenizer

namespace {

enum class Tok { LParen, RParen, Atom, Caret, End };

struct Token {
  Tok kind = Tok::End;
  std::string_view text;
  SourcePos pos;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  int& depth() { return depth_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(current_.pos, msg + (current_.kind == Tok::End
                                               ? " (at end of input)"
                                               : " (found '" + std::string(current_.text) + "')"));
  }

private:
  void advance() {
    while (offset_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[offset_])))
      bump();
    current_.pos = SourcePos{line_, col_, offset_};
    if (offset_ >= text_.size()) {
      current_.kind = Tok::End;
      current_.text = {};
      return;
    }
    char c = text_[offset_];
    if (c == '(' || c == ')' || c == '^') {
      current_.kind = c == '(' ? Tok::LParen : c == ')' ? Tok::RParen : Tok::Caret;
      current_.text = text_.substr(offset_, 1);
      bump();
      return;
    }
    std::size_t start = offset_;
    while (offset_ < text_.size()) {
      char d = text_[offset_];
      if (d == '(' || d == ')' || d == '^' || std::isspace(static_cast<unsigned char>(d))) break;
      bump();
    }
    current_.kind = Tok::Atom;
    current_.text = text_.substr(start, offset_ - start);
  }

  void bump() {
    if (text_[offset_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++offset_;
  }

  std::string_view text_;
  std::size_t offset_ = 0;
  int line_ = 1;
  int col_ = 1;
  int depth_ = 0;
  Token current_;
};

// Recursion cap for the recursive-descent parsers. Far beyond any sensible
// input, well within stack limits for the downstream tree walks.
constexpr int kMaxNesting = 1024;

struct DepthGuard {
  Lexer& lx;
  explicit DepthGuard(Lexer& lx) : lx(lx) {
    if (++lx.depth() > kMaxNesting)
      throw SyntaxError(lx.peek().pos, "nesting deeper than " + std::to_string(kMaxNesting));
  }
  ~DepthGuard() { --lx.depth(); }
};

void expect_lparen(Lexer& lx) {
  if (lx.peek().kind != Tok::LParen) lx.fail("expected '('");
  lx.next();
}

void expect_rparen(Lexer& lx) {
  if (lx.peek().kind != Tok::RParen) lx.fail("expected ')'");
  lx.next();
}

std::string_view expect_atom(Lexer& lx, const char* what) {
  if (lx.peek().kind != Tok::Atom) lx.fail(std::string("expected ") + what);
  return lx.next().text;
}

void expect_keyword(Lexer& lx, std::string_view kw) {
  if (lx.peek().kind != Tok::Atom || lx.peek().text != kw)
    lx.fail("expected '" + std::string(kw) + "'");
  lx.next();
}

void expect_end(Lexer& lx) {
  if (lx.peek().kind != Tok::End) lx.fail("expected end of input");
}

std::int64_t expect_integer(Lexer& lx) {
  Token t = lx.peek();
  if (t.kind != Tok::Atom) lx.fail("expected an integer");
  std::int64_t value = 0;
  const char* first = t.text.data();
  const char* last = t.text.data() + t.text.size();
  auto [p, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || p != last) lx.fail("expected an integer");
  lx.next();
  return value;
}

}  // namespace

// ---------------------------------------------------------------------------
// surface DSL

namespace {

TreePtr parse_strip(Lexer& lx);

TreePtr parse_tree_slot(Lexer& lx) {
  if (lx.peek().kind == Tok::Atom && lx.peek().text == "_") {
    lx.next();
    return nullptr;
  }
  return parse_strip(lx);
}

std::vector<TreePtr> parse_tree_slots(Lexer& lx) {
  std::vector<TreePtr> out;
  while (lx.peek().kind != Tok::RParen) out.push_back(parse_tree_slot(lx));
  return out;
}

// "(" "pre" slot* ")" "(" "cyc" slot+ ")"
std::pair<std::vector<TreePtr>, std::vector<TreePtr>> parse_pre_cyc(Lexer& lx) {
  expect_lparen(lx);
  expect_keyword(lx, "pre");
  std::vector<TreePtr> prefix = parse_tree_slots(lx);
  expect_rparen(lx);
  expect_lparen(lx);
  expect_keyword(lx, "cyc");
  if (lx.peek().kind == Tok::RParen) lx.fail("empty cycle: 'cyc' needs at least one slot");
  std::vector<TreePtr> cycle = parse_tree_slots(lx);
  expect_rparen(lx);
  return {std::move(prefix), std::move(cycle)};
}

TreePattern parse_tree_pattern(Lexer& lx) {
  expect_lparen(lx);
  std::string_view tag = expect_atom(lx, "a pattern tag (fin/nat/neg/int)");
  TreePattern out;
  if (tag == "fin") {
    out = FinPat<TreePtr>{parse_tree_slots(lx)};
  } else if (tag == "nat" || tag == "neg") {
    auto [prefix, cycle] = parse_pre_cyc(lx);
    if (tag == "nat")
      out = NatPat<TreePtr>{std::move(prefix), std::move(cycle)};
    else
      out = NegPat<TreePtr>{std::move(prefix), std::move(cycle)};
  } else if (tag == "int") {
    expect_lparen(lx);
    std::string_view sub = expect_atom(lx, "'cyc' or 'sup'");
    if (sub == "cyc") {
      if (lx.peek().kind == Tok::RParen) lx.fail("empty cycle: 'cyc' needs at least one slot");
      out = IntCycPat<TreePtr>{parse_tree_slots(lx)};
      expect_rparen(lx);
    } else if (sub == "sup") {
      std::vector<std::pair<std::int64_t, TreePtr>> entries;
      while (lx.peek().kind != Tok::RParen) {
        expect_lparen(lx);
        std::int64_t key = expect_integer(lx);
        entries.emplace_back(key, parse_strip(lx));
        expect_rparen(lx);
      }
      expect_rparen(lx);
      out = IntSupPat<TreePtr>{std::move(entries)};
    } else {
      lx.fail("expected 'cyc' or 'sup'");
    }
  } else {
    lx.fail("expected a pattern tag (fin/nat/neg/int)");
  }
  expect_rparen(lx);
  return out;
}

TreePtr parse_strip(Lexer& lx) {
  DepthGuard guard(lx);
  expect_lparen(lx);
  expect_keyword(lx, "strip");
  TreePattern pat = parse_tree_pattern(lx);
  expect_rparen(lx);
  return make_tree(std::move(pat));
}

void print_tree_rec(const TreePtr& t, std::ostream& os);

void print_tree_slot(const TreePtr& s, std::ostream& os) {
  if (s)
    print_tree_rec(s, os);
  else
    os << '_';
}

void print_tree_slots(const std::vector<TreePtr>& slots, std::ostream& os) {
  for (const TreePtr& s : slots) {
    os << ' ';
    print_tree_slot(s, os);
  }
}

void print_tree_rec(const TreePtr& t, std::ostream& os) {
  os << "(strip ";
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FinPat<TreePtr>>) {
          os << "(fin";
          print_tree_slots(p.slots, os);
          os << ')';
        } else if constexpr (std::is_same_v<T, NatPat<TreePtr>> ||
                             std::is_same_v<T, NegPat<TreePtr>>) {
          os << (std::is_same_v<T, NatPat<TreePtr>> ? "(nat (pre" : "(neg (pre");
          print_tree_slots(p.prefix, os);
          os << ") (cyc";
          print_tree_slots(p.cycle, os);
          os << "))";
        } else if constexpr (std::is_same_v<T, IntCycPat<TreePtr>>) {
          os << "(int (cyc";
          print_tree_slots(p.cycle, os);
          os << "))";
        } else {
          os << "(int (sup";
          for (const auto& [k, s] : p.entries) {
            os << " (" << k << ' ';
            print_tree_rec(s, os);
            os << ')';
          }
          os << "))";
        }
      },
      t->children);
  os << ')';
}

}  // namespace

TreePtr parse_surface(std::string_view text) {
  Lexer lx(text);
  TreePtr t = parse_strip(lx);
  expect_end(lx);
  return t;
}

std::string print_surface(const TreePtr& tree) {
  std::ostringstream os;
  print_tree_rec(tree, os);
  return os.str();
}

// ---------------------------------------------------------------------------
// group DSL

namespace {

GroupPtr parse_group_rec(Lexer& lx);

GroupPtr parse_group_slot(Lexer& lx) {
  if (lx.peek().kind == Tok::Atom && lx.peek().text == "_") {
    lx.next();
    return nullptr;
  }
  return parse_group_rec(lx);
}

std::vector<GroupPtr> parse_group_slots(Lexer& lx) {
  std::vector<GroupPtr> out;
  while (lx.peek().kind != Tok::RParen) out.push_back(parse_group_slot(lx));
  return out;
}

GroupPattern parse_group_pattern(Lexer& lx) {
  expect_lparen(lx);
  std::string_view tag = expect_atom(lx, "a pattern tag (fin/nat/neg/int)");
  GroupPattern out;
  if (tag == "fin") {
    out = FinPat<GroupPtr>{parse_group_slots(lx)};
  } else if (tag == "nat" || tag == "neg") {
    expect_lparen(lx);
    expect_keyword(lx, "pre");
    std::vector<GroupPtr> prefix = parse_group_slots(lx);
    expect_rparen(lx);
    expect_lparen(lx);
    expect_keyword(lx, "cyc");
    if (lx.peek().kind == Tok::RParen) lx.fail("empty cycle: 'cyc' needs at least one slot");
    std::vector<GroupPtr> cycle = parse_group_slots(lx);
    expect_rparen(lx);
    if (tag == "nat")
      out = NatPat<GroupPtr>{std::move(prefix), std::move(cycle)};
    else
      out = NegPat<GroupPtr>{std::move(prefix), std::move(cycle)};
  } else if (tag == "int") {
    expect_lparen(lx);
    std::string_view sub = expect_atom(lx, "'cyc' or 'sup'");
    if (sub == "cyc") {
      if (lx.peek().kind == Tok::RParen) lx.fail("empty cycle: 'cyc' needs at least one slot");
      out = IntCycPat<GroupPtr>{parse_group_slots(lx)};
      expect_rparen(lx);
    } else if (sub == "sup") {
      std::vector<std::pair<std::int64_t, GroupPtr>> entries;
      while (lx.peek().kind != Tok::RParen) {
        expect_lparen(lx);
        std::int64_t key = expect_integer(lx);
        entries.emplace_back(key, parse_group_rec(lx));
        expect_rparen(lx);
      }
      expect_rparen(lx);
      out = IntSupPat<GroupPtr>{std::move(entries)};
    } else {
      lx.fail("expected 'cyc' or 'sup'");
    }
  } else {
    lx.fail("expected a pattern tag (fin/nat/neg/int)");
  }
  expect_rparen(lx);
  return out;
}

// One factor of an "(x ...)" product; "^n" inlines n copies and "^w" wraps
// the factor in a constant N-indexed product.
void parse_product_factor(Lexer& lx, std::vector<GroupPtr>& out) {
  GroupPtr g = parse_group_rec(lx);
  if (lx.peek().kind != Tok::Caret) {
    out.push_back(std::move(g));
    return;
  }
  lx.next();
  Token t = lx.peek();
  if (t.kind == Tok::Atom && t.text == "w") {
    lx.next();
    out.push_back(prod(NatPat<GroupPtr>{{}, {std::move(g)}}));
    return;
  }
  std::int64_t n = expect_integer(lx);
  if (n < 1) lx.fail("multiplicity must be positive");
  for (std::int64_t i = 0; i < n; ++i) out.push_back(g);
}

GroupPtr parse_group_rec(Lexer& lx) {
  DepthGuard guard(lx);
  Token t = lx.peek();
  if (t.kind == Tok::Atom) {
    if (t.text == "1") {
      lx.next();
      return one();
    }
    if (t.text == "Z") {
      lx.next();
      return z_group();
    }
    lx.fail("expected a group ('1', 'Z' or a parenthesized form)");
  }
  expect_lparen(lx);
  std::string_view head = expect_atom(lx, "'x', 'xpat' or 'wr'");
  if (head == "wr") {
    GroupPtr inner = parse_group_rec(lx);
    expect_rparen(lx);
    return wr(std::move(inner));
  }
  if (head == "x") {
    std::vector<GroupPtr> slots;
    if (lx.peek().kind == Tok::RParen) lx.fail("'x' needs at least one factor");
    while (lx.peek().kind != Tok::RParen) parse_product_factor(lx, slots);
    lx.next();
    return prod(FinPat<GroupPtr>{std::move(slots)});
  }
  if (head == "xpat") {
    GroupPattern pat = parse_group_pattern(lx);
    expect_rparen(lx);
    return prod(std::move(pat));
  }
  lx.fail("expected 'x', 'xpat' or 'wr'");
}

void print_group_rec(const GroupPtr& e, std::ostream& os);

void print_group_slot(const GroupPtr& g, std::ostream& os) {
  if (g)
    print_group_rec(g, os);
  else
    os << '_';
}

void print_group_pattern(const GroupPattern& pat, std::ostream& os) {
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        auto slots = [&](const std::vector<GroupPtr>& v) {
          for (const GroupPtr& s : v) {
            os << ' ';
            print_group_slot(s, os);
          }
        };
        if constexpr (std::is_same_v<T, FinPat<GroupPtr>>) {
          os << "(fin";
          slots(p.slots);
          os << ')';
        } else if constexpr (std::is_same_v<T, NatPat<GroupPtr>> ||
                             std::is_same_v<T, NegPat<GroupPtr>>) {
          os << (std::is_same_v<T, NatPat<GroupPtr>> ? "(nat (pre" : "(neg (pre");
          slots(p.prefix);
          os << ") (cyc";
          slots(p.cycle);
          os << "))";
        } else if constexpr (std::is_same_v<T, IntCycPat<GroupPtr>>) {
          os << "(int (cyc";
          slots(p.cycle);
          os << "))";
        } else {
          os << "(int (sup";
          for (const auto& [k, g] : p.entries) {
            os << " (" << k << ' ';
            print_group_rec(g, os);
            os << ')';
          }
          os << "))";
        }
      },
      pat);
}

void print_group_rec(const GroupPtr& e, std::ostream& os) {
  if (std::holds_alternative<OneExpr>(e->node)) {
    os << '1';
    return;
  }
  if (const auto* w = std::get_if<WrExpr>(&e->node)) {
    if (std::holds_alternative<OneExpr>(w->inner->node)) {
      os << 'Z';
      return;
    }
    os << "(wr ";
    print_group_rec(w->inner, os);
    os << ')';
    return;
  }
  const auto& p = std::get<ProdExpr>(e->node);
  // A nonempty gap-free finite list of factors reads best as "(x ...)".
  if (const auto* fin = std::get_if<FinPat<GroupPtr>>(&p.factors)) {
    bool plain = !fin->slots.empty();
    for (const GroupPtr& s : fin->slots) plain = plain && s != nullptr;
    if (plain) {
      os << "(x";
      for (const GroupPtr& s : fin->slots) {
        os << ' ';
        print_group_rec(s, os);
      }
      os << ')';
      return;
    }
  }
  os << "(xpat ";
  print_group_pattern(p.factors, os);
  os << ')';
}

void print_nf_rec(const NfPtr& nf, std::ostream& os) {
  if (std::holds_alternative<NfOne>(nf->node)) {
    os << '1';
    return;
  }
  if (const auto* w = std::get_if<NfWr>(&nf->node)) {
    if (std::holds_alternative<NfOne>(w->inner->node)) {
      os << 'Z';
      return;
    }
    os << "(wr ";
    print_nf_rec(w->inner, os);
    os << ')';
    return;
  }
  const auto& p = std::get<NfProd>(nf->node);
  os << "(x";
  for (const NfFactor& f : p.factors) {
    os << ' ';
    print_nf_rec(f.factor, os);
    if (f.mult.omega)
      os << "^w";
    else if (f.mult.count > 1)
      os << '^' << f.mult.count;
  }
  os << ')';
}

}  // namespace

GroupPtr parse_group(std::string_view text) {
  Lexer lx(text);
  GroupPtr g = parse_group_rec(lx);
  expect_end(lx);
  return g;
}

std::string print_group(const GroupPtr& e) {
  std::ostringstream os;
  print_group_rec(e, os);
  return os.str();
}

std::string print_normal_form(const NfPtr& nf) {
  std::ostringstream os;
  print_nf_rec(nf, os);
  return os.str();
}

// ---------------------------------------------------------------------------
// element literals

namespace {

ElemPtr parse_element_rec(const GroupPtr& shape, Lexer& lx);

std::map<std::int64_t, ElemPtr> parse_indexed_children(
    Lexer& lx, const std::function<GroupPtr(std::int64_t)>& child_shape) {
  std::map<std::int64_t, ElemPtr> out;
  std::set<std::int64_t> seen;
  while (lx.peek().kind != Tok::RParen) {
    expect_lparen(lx);
    Token at = lx.peek();
    std::int64_t index = expect_integer(lx);
    GroupPtr shape = child_shape(index);
    ElemPtr child = parse_element_rec(shape, lx);
    expect_rparen(lx);
    if (!seen.insert(index).second)
      throw SyntaxError(at.pos, "duplicate index " + std::to_string(index));
    if (!is_identity(child)) out.emplace(index, std::move(child));
  }
  return out;
}

ElemPtr parse_element_rec(const GroupPtr& shape, Lexer& lx) {
  DepthGuard guard(lx);
  Token t = lx.peek();
  if (t.kind == Tok::Atom && t.text == "e") {
    lx.next();
    return identity(shape);
  }
  expect_lparen(lx);
  std::string_view head = expect_atom(lx, "'p' or 'w'");
  if (head == "p") {
    const auto* p = std::get_if<ProdExpr>(&shape->node);
    if (!p) throw ShapeError("product literal against a non-product shape");
    auto entries = parse_indexed_children(lx, [&](std::int64_t index) {
      SlotShape slot = prod_slot_shape(p->factors, index);
      if (!slot.valid)
        throw ShapeError("index " + std::to_string(index) + " outside the pattern's index set");
      return slot.shape ? slot.shape : one();
    });
    expect_rparen(lx);
    return make_prod_elem(std::move(entries));
  }
  if (head == "w") {
    const auto* w = std::get_if<WrExpr>(&shape->node);
    if (!w) throw ShapeError("wreath literal against a non-wreath shape");
    expect_lparen(lx);
    auto decorations = parse_indexed_children(lx, [&](std::int64_t) { return w->inner; });
    expect_rparen(lx);
    std::int64_t shift = expect_integer(lx);
    expect_rparen(lx);
    return make_wr_elem(std::move(decorations), shift);
  }
  lx.fail("expected 'p' or 'w'");
}

void print_element_rec(const ElemPtr& e, std::ostream& os) {
  if (is_identity(e)) {
    os << 'e';
    return;
  }
  if (const auto* p = std::get_if<ProdElem>(&e->node)) {
    os << "(p";
    for (const auto& [i, child] : p->entries) {
      os << " (" << i << ' ';
      print_element_rec(child, os);
      os << ')';
    }
    os << ')';
    return;
  }
  const auto& w = std::get<WrElem>(e->node);
  os << "(w (";
  bool first = true;
  for (const auto& [j, child] : w.decorations) {
    if (!first) os << ' ';
    first = false;
    os << '(' << j << ' ';
    print_element_rec(child, os);
    os << ')';
  }
  os << ") " << w.shift << ')';
}

}  // namespace

ElemPtr parse_element(const GroupPtr& shape, std::string_view text) {
  Lexer lx(text);
  ElemPtr e = parse_element_rec(shape, lx);
  expect_end(lx);
  return e;
}

std::string print_element(const ElemPtr& e) {
  std::ostringstream os;
  print_element_rec(e, os);
  return os.str();
}

}  // namespace folia
