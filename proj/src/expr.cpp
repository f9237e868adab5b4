#include "nrt/expr.hpp"

#include <cctype>
#include <limits>

#include "nrt/error.hpp"
#include "nrt/word_core.hpp"

namespace nrt {

namespace {

class Parser {
 public:
  Parser(std::string_view text, Variant v) : text_(text), variant_(v) {}

  ExprNode parse() {
    ExprNode e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(pos_, what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    return end == text_.size() ||
           !std::isalnum(static_cast<unsigned char>(text_[end]));
  }

  std::int64_t number() {
    skip_space();
    const std::size_t start = pos_;
    std::int64_t n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int d = text_[pos_] - '0';
      if (n > (std::numeric_limits<std::int64_t>::max() - d) / 10) {
        pos_ = start;
        fail("integer literal out of range");
      }
      n = n * 10 + d;
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return n;
  }

  ExprNode expr() {
    ExprNode sum;
    sum.kind = ExprNode::Kind::Sum;
    skip_space();
    sum.position = pos_;
    sum.children.push_back(term());
    sum.signs.push_back(1);
    while (true) {
      if (accept('+')) {
        sum.signs.push_back(1);
      } else if (accept('-')) {
        sum.signs.push_back(-1);
      } else {
        break;
      }
      sum.children.push_back(term());
    }
    if (sum.children.size() == 1) return std::move(sum.children.front());
    return sum;
  }

  ExprNode atom_call(ExprNode::Kind kind) {
    skip_space();
    ExprNode n;
    n.kind = kind;
    n.position = pos_;
    if (kind == ExprNode::Kind::Pi && variant_ != Variant::B) {
      throw Error(ErrorKind::WrongVariant, "pi(..) is only available under variant B");
    }
    if (kind == ExprNode::Kind::Omega && variant_ != Variant::C) {
      throw Error(ErrorKind::WrongVariant, "om(..) is only available under variant C");
    }
    pos_ += 2;
    expect('(');
    n.value = number();
    if (n.value > std::numeric_limits<std::int32_t>::max() - 1) fail("index too large");
    expect(')');
    return n;
  }

  ExprNode term() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      ExprNode n;
      n.kind = ExprNode::Kind::Negate;
      n.position = start;
      n.children.push_back(term());
      return n;
    }
    if (c == '(') {
      ++pos_;
      ExprNode inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::int64_t value = number();
      if (accept('*')) {
        ExprNode n;
        n.kind = ExprNode::Kind::Scale;
        n.value = value;
        n.position = start;
        n.children.push_back(term());
        return n;
      }
      if (variant_ == Variant::B && value != 0) {
        throw Error(ErrorKind::WrongVariant,
                    "bare integers are not elements under variant B");
      }
      ExprNode n;
      n.kind = ExprNode::Kind::Integer;
      n.value = value;
      n.position = start;
      return n;
    }
    if (peek_word("pi")) return atom_call(ExprNode::Kind::Pi);
    if (peek_word("om")) return atom_call(ExprNode::Kind::Omega);
    if (c == 't') {
      ++pos_;
      ExprNode n;
      n.kind = ExprNode::Kind::Stable;
      n.position = start;
      expect('[');
      n.children.push_back(expr());
      expect(',');
      n.children.push_back(expr());
      expect(']');
      return n;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  Variant variant_;
  std::size_t pos_ = 0;
};

void push_atom(std::vector<std::string>& atoms, bool negative, std::int64_t count,
               const std::string& body) {
  std::string s = negative ? "-" : "";
  if (count != 1) s += std::to_string(count) + "*";
  atoms.push_back(s + body);
}

void flatten(const Element& e, std::vector<std::string>& atoms) {
  switch (e.kind()) {
    case Element::Kind::Zero: return;
    case Element::Kind::Integer: atoms.push_back(std::to_string(e.integer())); return;
    case Element::Kind::Word: {
      auto w = e.word();
      for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        const auto index = (w[i] < 0 ? -w[i] : w[i]) - 1;
        push_atom(atoms, w[i] < 0, static_cast<std::int64_t>(j - i),
                  "pi(" + std::to_string(index) + ")");
        i = j;
      }
      return;
    }
    case Element::Kind::Sequence: break;
  }
  auto cs = e.coeffs();
  auto ls = e.letters();
  flatten(cs[0], atoms);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    push_atom(atoms, ls[i].sign < 0, 1,
              "t[" + render(ls[i].letter->alpha()) + "," +
                  render(ls[i].letter->beta()) + "]");
    flatten(cs[i + 1], atoms);
  }
  if (const auto m = e.omega(); m != 0) {
    push_atom(atoms, m < 0, m < 0 ? -m : m,
              "om(" + std::to_string(e.level() - 1) + ")");
  }
}

}  // namespace

ExprNode parse_expr(std::string_view text, Variant v) {
  return Parser(text, v).parse();
}

Element elaborate(const ExprNode& ast, Variant v) {
  switch (ast.kind) {
    case ExprNode::Kind::Integer:
      return make_int(v, ast.value);
    case ExprNode::Kind::Pi:
      return make_pi(v, static_cast<std::uint32_t>(ast.value));
    case ExprNode::Kind::Omega:
      return make_omega(v, static_cast<std::uint32_t>(ast.value));
    case ExprNode::Kind::Stable:
      return make_stable(elaborate(ast.children[0], v), elaborate(ast.children[1], v));
    case ExprNode::Kind::Negate:
      return neg(elaborate(ast.children[0], v));
    case ExprNode::Kind::Scale:
      return scalar(ast.value, elaborate(ast.children[0], v));
    case ExprNode::Kind::Sum: {
      std::vector<Element> items;
      items.reserve(ast.children.size());
      for (std::size_t i = 0; i < ast.children.size(); ++i) {
        Element x = elaborate(ast.children[i], v);
        items.push_back(ast.signs[i] < 0 ? neg(x) : x);
      }
      return sum(items);
    }
  }
  return Element(v);
}

Element parse_element(std::string_view text, Variant v) {
  return elaborate(parse_expr(text, v), v);
}

std::string render(const Element& e) {
  std::vector<std::string> atoms;
  flatten(e, atoms);
  if (atoms.empty()) return "0";
  std::string out = atoms.front();
  for (std::size_t i = 1; i < atoms.size(); ++i) {
    if (atoms[i].front() != '-') out += '+';
    out += atoms[i];
  }
  return out;
}

}  // namespace nrt
