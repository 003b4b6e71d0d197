#include "dicelab/dsl.hpp"

#include <cctype>

#include "dicelab/errors.hpp"

namespace dicelab {

std::string cmp_op_text(CmpOp op) {
  switch (op) {
  case CmpOp::Lt: return "<";
  case CmpOp::Le: return "<=";
  case CmpOp::Gt: return ">";
  case CmpOp::Ge: return ">=";
  case CmpOp::Eq: return "==";
  case CmpOp::Ne: return "!=";
  }
  return "?";
}

std::vector<Token> tokenize(const std::string &text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      tokens.push_back({TokenKind::Integer, text.substr(start, i - start), start});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      std::string word = text.substr(start, i - start);
      TokenKind kind = (word == "and" || word == "or" || word == "not")
                           ? TokenKind::Keyword
                           : TokenKind::Identifier;
      tokens.push_back({kind, word, start});
    } else if (c == '<' || c == '>') {
      ++i;
      std::string op(1, c);
      if (i < text.size() && text[i] == '=') {
        op += '=';
        ++i;
      }
      tokens.push_back({TokenKind::Comparator, op, start});
    } else if (c == '=' || c == '!') {
      if (i + 1 < text.size() && text[i + 1] == '=') {
        tokens.push_back({TokenKind::Comparator, text.substr(i, 2), start});
        i += 2;
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", start,
                         {c == '=' ? "==" : "!="});
      }
    } else if (c == '+' || c == '-' || c == '*') {
      tokens.push_back({TokenKind::Operator, std::string(1, c), start});
      ++i;
    } else if (c == '(') {
      tokens.push_back({TokenKind::LParen, "(", start});
      ++i;
    } else if (c == ')') {
      tokens.push_back({TokenKind::RParen, ")", start});
      ++i;
    } else if (c == ',') {
      tokens.push_back({TokenKind::Comma, ",", start});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  tokens.push_back({TokenKind::End, "", text.size()});
  return tokens;
}

// ---------------------------------------------------------------------------
// AST construction

namespace {

ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

void require_int(const ExprPtr &e, const std::string &where) {
  if (e->is_boolean())
    throw TypeError(where + " requires an integer-valued operand, got a boolean one");
}

void require_bool(const ExprPtr &e, const std::string &where) {
  if (!e->is_boolean())
    throw TypeError(where + " requires a boolean-valued operand, got an integer one");
}

} // namespace

ExprPtr make_int(long long v) {
  Expr e{Expr::Kind::IntLit};
  e.int_value = v;
  return node(std::move(e));
}

ExprPtr make_var(const std::string &name) {
  Expr e{Expr::Kind::Var};
  e.name = name;
  return node(std::move(e));
}

ExprPtr make_die_index(unsigned i) {
  Expr e{Expr::Kind::DieIndex};
  e.die_index = i;
  return node(std::move(e));
}

ExprPtr make_count(const std::string &arg, bool arg_is_integer) {
  Expr e{Expr::Kind::Count};
  e.name = arg;
  e.count_arg_is_integer = arg_is_integer;
  return node(std::move(e));
}

ExprPtr make_binary(char op, ExprPtr lhs, ExprPtr rhs) {
  require_int(lhs, std::string("operator '") + op + "'");
  require_int(rhs, std::string("operator '") + op + "'");
  Expr e{Expr::Kind::Binary};
  e.bin_op = op;
  e.children = {std::move(lhs), std::move(rhs)};
  return node(std::move(e));
}

ExprPtr make_neg(ExprPtr child) {
  require_int(child, "unary minus");
  Expr e{Expr::Kind::Neg};
  e.children = {std::move(child)};
  return node(std::move(e));
}

ExprPtr make_chain(std::vector<ExprPtr> operands, std::vector<CmpOp> comparators) {
  if (operands.size() < 2 || comparators.size() != operands.size() - 1)
    throw TypeError("comparison chain needs n operands and n-1 comparators");
  for (const ExprPtr &op : operands)
    require_int(op, "comparison");
  Expr e{Expr::Kind::CompareChain};
  e.children = std::move(operands);
  e.comparators = std::move(comparators);
  return node(std::move(e));
}

ExprPtr make_bool(BoolOp op, ExprPtr lhs, ExprPtr rhs) {
  const char *name = op == BoolOp::And ? "'and'" : "'or'";
  require_bool(lhs, name);
  require_bool(rhs, name);
  Expr e{Expr::Kind::Bool};
  e.bool_op = op;
  e.children = {std::move(lhs), std::move(rhs)};
  return node(std::move(e));
}

ExprPtr make_not(ExprPtr child) {
  require_bool(child, "'not'");
  Expr e{Expr::Kind::Not};
  e.children = {std::move(child)};
  return node(std::move(e));
}

bool Expr::operator==(const Expr &other) const {
  if (kind != other.kind)
    return false;
  switch (kind) {
  case Kind::IntLit:
    return int_value == other.int_value;
  case Kind::Var:
    return name == other.name;
  case Kind::DieIndex:
    return die_index == other.die_index;
  case Kind::Count:
    return name == other.name && count_arg_is_integer == other.count_arg_is_integer;
  case Kind::Binary:
    if (bin_op != other.bin_op)
      return false;
    break;
  case Kind::Bool:
    if (bool_op != other.bool_op)
      return false;
    break;
  case Kind::CompareChain:
    if (comparators != other.comparators)
      return false;
    break;
  default:
    break;
  }
  if (children.size() != other.children.size())
    return false;
  for (std::size_t i = 0; i < children.size(); ++i)
    if (!(*children[i] == *other.children[i]))
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

CmpOp cmp_from_text(const std::string &t) {
  if (t == "<") return CmpOp::Lt;
  if (t == "<=") return CmpOp::Le;
  if (t == ">") return CmpOp::Gt;
  if (t == ">=") return CmpOp::Ge;
  if (t == "==") return CmpOp::Eq;
  return CmpOp::Ne;
}

class Parser {
public:
  explicit Parser(const std::string &text) : tokens_(tokenize(text)) {}

  ExprPtr run() {
    ExprPtr e = parse_or();
    if (peek().kind != TokenKind::End)
      throw ParseError("unexpected trailing input '" + peek().text + "'",
                       peek().position, {"end of input"});
    return e;
  }

private:
  const Token &peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  bool at_keyword(const char *kw) const {
    return peek().kind == TokenKind::Keyword && peek().text == kw;
  }

  void expect(TokenKind kind, const char *what) {
    if (peek().kind != kind)
      throw ParseError(std::string("expected ") + what + ", got '" +
                           (peek().kind == TokenKind::End ? "end of input" : peek().text) + "'",
                       peek().position, {what});
    ++pos_;
  }

  ExprPtr parse_or() {
    ExprPtr lhs = parse_and();
    while (at_keyword("or")) {
      take();
      lhs = make_bool(BoolOp::Or, std::move(lhs), parse_and());
    }
    return lhs;
  }

  ExprPtr parse_and() {
    ExprPtr lhs = parse_not();
    while (at_keyword("and")) {
      take();
      lhs = make_bool(BoolOp::And, std::move(lhs), parse_not());
    }
    return lhs;
  }

  ExprPtr parse_not() {
    if (at_keyword("not")) {
      take();
      return make_not(parse_not());
    }
    return parse_chain();
  }

  ExprPtr parse_chain() {
    ExprPtr first = parse_add();
    if (peek().kind != TokenKind::Comparator)
      return first;
    std::vector<ExprPtr> operands{std::move(first)};
    std::vector<CmpOp> cmps;
    while (peek().kind == TokenKind::Comparator) {
      cmps.push_back(cmp_from_text(take().text));
      operands.push_back(parse_add());
    }
    return make_chain(std::move(operands), std::move(cmps));
  }

  ExprPtr parse_add() {
    ExprPtr lhs = parse_mul();
    while (peek().kind == TokenKind::Operator &&
           (peek().text == "+" || peek().text == "-")) {
      char op = take().text[0];
      lhs = make_binary(op, std::move(lhs), parse_mul());
    }
    return lhs;
  }

  ExprPtr parse_mul() {
    ExprPtr lhs = parse_unary();
    while (peek().kind == TokenKind::Operator && peek().text == "*") {
      take();
      lhs = make_binary('*', std::move(lhs), parse_unary());
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (peek().kind == TokenKind::Operator && peek().text == "-") {
      take();
      return make_neg(parse_unary());
    }
    return parse_atom();
  }

  ExprPtr parse_atom() {
    const Token &t = peek();
    switch (t.kind) {
    case TokenKind::Integer:
      return make_int(std::stoll(take().text));
    case TokenKind::LParen: {
      take();
      ExprPtr inner = parse_or();
      expect(TokenKind::RParen, ")");
      return inner;
    }
    case TokenKind::Identifier:
      return parse_identifier();
    default:
      throw ParseError("expected an expression, got '" +
                           (t.kind == TokenKind::End ? "end of input" : t.text) + "'",
                       t.position,
                       {"integer", "sum", "min", "max", "count", "d<i>", "("});
    }
  }

  ExprPtr parse_identifier() {
    Token t = take();
    const std::string &word = t.text;
    if (word == "sum" || word == "min" || word == "max")
      return make_var(word);
    if (word == "count") {
      expect(TokenKind::LParen, "(");
      const Token &arg = peek();
      if (arg.kind != TokenKind::Integer && arg.kind != TokenKind::Identifier)
        throw ParseError("count() takes a face label or a face value", arg.position,
                         {"label", "integer"});
      Token taken = take();
      ExprPtr e = make_count(taken.text, taken.kind == TokenKind::Integer);
      expect(TokenKind::RParen, ")");
      return e;
    }
    if (word.size() >= 2 && word[0] == 'd' &&
        word.find_first_not_of("0123456789", 1) == std::string::npos) {
      // d0 or indices beyond d are rejected at binding time, not here.
      return make_die_index(static_cast<unsigned>(std::stoul(word.substr(1))));
    }
    throw ParseError("unknown identifier '" + word + "'", t.position,
                     {"sum", "min", "max", "count", "d<i>"});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

} // namespace

ExprPtr parse(const std::string &text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Pretty printing

namespace {

// Precedence levels, loosest to tightest.
enum Prec { kOr = 1, kAnd, kNot, kChain, kAdd, kMul, kNeg, kAtom };

int precedence(const Expr &e) {
  switch (e.kind) {
  case Expr::Kind::Bool:
    return e.bool_op == BoolOp::Or ? kOr : kAnd;
  case Expr::Kind::Not:
    return kNot;
  case Expr::Kind::CompareChain:
    return kChain;
  case Expr::Kind::Binary:
    return e.bin_op == '*' ? kMul : kAdd;
  case Expr::Kind::Neg:
    return kNeg;
  default:
    return kAtom;
  }
}

void render(const Expr &e, int min_prec, std::string &out) {
  int prec = precedence(e);
  bool parens = prec < min_prec;
  if (parens)
    out += "(";
  switch (e.kind) {
  case Expr::Kind::IntLit:
    out += std::to_string(e.int_value);
    break;
  case Expr::Kind::Var:
    out += e.name;
    break;
  case Expr::Kind::DieIndex:
    out += "d" + std::to_string(e.die_index);
    break;
  case Expr::Kind::Count:
    out += "count(" + e.name + ")";
    break;
  case Expr::Kind::Neg:
    out += "-";
    render(*e.children[0], kNeg, out);
    break;
  case Expr::Kind::Binary:
    render(*e.children[0], prec, out);
    out += std::string(" ") + e.bin_op + " ";
    render(*e.children[1], prec + 1, out);
    break;
  case Expr::Kind::CompareChain:
    render(*e.children[0], kAdd, out);
    for (std::size_t i = 0; i < e.comparators.size(); ++i) {
      out += " " + cmp_op_text(e.comparators[i]) + " ";
      render(*e.children[i + 1], kAdd, out);
    }
    break;
  case Expr::Kind::Bool:
    render(*e.children[0], prec, out);
    out += e.bool_op == BoolOp::Or ? " or " : " and ";
    render(*e.children[1], prec + 1, out);
    break;
  case Expr::Kind::Not:
    out += "not ";
    render(*e.children[0], kNot, out);
    break;
  }
  if (parens)
    out += ")";
}

} // namespace

std::string pretty(const Expr &e) {
  std::string out;
  render(e, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

bool apply_cmp(CmpOp op, long long a, long long b) {
  switch (op) {
  case CmpOp::Lt: return a < b;
  case CmpOp::Le: return a <= b;
  case CmpOp::Gt: return a > b;
  case CmpOp::Ge: return a >= b;
  case CmpOp::Eq: return a == b;
  case CmpOp::Ne: return a != b;
  }
  return false;
}

} // namespace

long long eval_int(const Expr &e, const EvalContext &ctx) {
  const DieSpec &die = ctx.space.die();
  switch (e.kind) {
  case Expr::Kind::IntLit:
    return e.int_value;
  case Expr::Kind::Var: {
    long long acc = e.name == "sum" ? 0 : ctx.space.value_at(ctx.outcome, 1);
    for (std::size_t i = 0; i < ctx.outcome.indices.size(); ++i) {
      long long v = die.faces()[ctx.outcome.indices[i]].value;
      if (e.name == "sum")
        acc += v;
      else if (e.name == "min")
        acc = std::min(acc, v);
      else
        acc = std::max(acc, v);
    }
    return acc;
  }
  case Expr::Kind::DieIndex: {
    unsigned d = ctx.space.dice_count();
    if (e.die_index == 0 || e.die_index > d)
      throw BindError("die index " + std::to_string(e.die_index) +
                      " out of range for " + std::to_string(d) + " dice");
    return ctx.space.value_at(ctx.outcome, e.die_index);
  }
  case Expr::Kind::Count: {
    // Labels win on label/value ambiguity.
    bool by_label = false;
    for (const Face &f : die.faces())
      if (f.label == e.name)
        by_label = true;
    long long wanted = 0;
    if (!by_label) {
      if (!e.count_arg_is_integer)
        return 0; // unknown label never matches
      wanted = std::stoll(e.name);
    }
    long long n = 0;
    for (std::uint32_t idx : ctx.outcome.indices) {
      const Face &f = die.faces()[idx];
      if (by_label ? f.label == e.name : f.value == wanted)
        ++n;
    }
    return n;
  }
  case Expr::Kind::Binary: {
    long long a = eval_int(*e.children[0], ctx);
    long long b = eval_int(*e.children[1], ctx);
    switch (e.bin_op) {
    case '+': return a + b;
    case '-': return a - b;
    default: return a * b;
    }
  }
  case Expr::Kind::Neg:
    return -eval_int(*e.children[0], ctx);
  default:
    throw TypeError("boolean expression where an integer value is required");
  }
}

bool eval_bool(const Expr &e, const EvalContext &ctx) {
  switch (e.kind) {
  case Expr::Kind::CompareChain: {
    long long prev = eval_int(*e.children[0], ctx);
    for (std::size_t i = 0; i < e.comparators.size(); ++i) {
      long long next = eval_int(*e.children[i + 1], ctx);
      if (!apply_cmp(e.comparators[i], prev, next))
        return false;
      prev = next;
    }
    return true;
  }
  case Expr::Kind::Bool: {
    bool lhs = eval_bool(*e.children[0], ctx);
    if (e.bool_op == BoolOp::And)
      return lhs && eval_bool(*e.children[1], ctx);
    return lhs || eval_bool(*e.children[1], ctx);
  }
  case Expr::Kind::Not:
    return !eval_bool(*e.children[0], ctx);
  default:
    throw TypeError("integer expression where a boolean value is required");
  }
}

namespace {

void check_rec(const Expr &e, const DieSpec &die, unsigned d,
               std::vector<std::string> &warnings) {
  if (e.kind == Expr::Kind::DieIndex) {
    if (e.die_index == 0 || e.die_index > d)
      throw BindError("die index " + std::to_string(e.die_index) +
                      " out of range for " + std::to_string(d) + " dice");
  }
  if (e.kind == Expr::Kind::Count && e.count_arg_is_integer) {
    // Warn only when the label and value interpretations select different
    // face sets (labels win at evaluation time).
    bool any_label = false, differ = false;
    long long v = std::stoll(e.name);
    for (const Face &f : die.faces()) {
      bool by_label = f.label == e.name;
      any_label |= by_label;
      differ |= by_label != (f.value == v);
    }
    if (any_label && differ)
      warnings.push_back("count(" + e.name +
                         "): argument matches both a face label and a face value; "
                         "the label interpretation is used");
  }
  for (const ExprPtr &c : e.children)
    check_rec(*c, die, d, warnings);
}

} // namespace

std::vector<std::string> check_bindings(const Expr &e, const DieSpec &die, unsigned d) {
  std::vector<std::string> warnings;
  check_rec(e, die, d, warnings);
  return warnings;
}

} // namespace dicelab
