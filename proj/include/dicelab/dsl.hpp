#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dicelab/space.hpp"

namespace dicelab {

enum class TokenKind { Integer, Identifier, Operator, Comparator, Keyword, LParen, RParen, Comma, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position; // character offset into the source
};

std::vector<Token> tokenize(const std::string &text);

enum class CmpOp { Lt, Le, Gt, Ge, Eq, Ne };
enum class BoolOp { And, Or };

std::string cmp_op_text(CmpOp op);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// AST of the event / random-variable language.
//
//   bool-valued: CompareChain, Bool, Not
//   int-valued:  IntLit, Var (sum/min/max), DieIndex (d1, d2, ...),
//                Count (count(K), count(3)), Binary (+ - *), Neg
struct Expr {
  enum class Kind { IntLit, Var, DieIndex, Count, Binary, Neg, CompareChain, Bool, Not };

  Kind kind;
  long long int_value = 0;        // IntLit
  std::string name;               // Var name, or the count() argument text
  bool count_arg_is_integer = false;
  unsigned die_index = 0;         // DieIndex, 1-based as written
  char bin_op = 0;                // '+', '-', '*'
  BoolOp bool_op = BoolOp::And;
  std::vector<ExprPtr> children;  // operands
  std::vector<CmpOp> comparators; // CompareChain: |children| - 1 entries

  bool is_boolean() const {
    return kind == Kind::CompareChain || kind == Kind::Bool || kind == Kind::Not;
  }
  bool operator==(const Expr &other) const;
};

// Node builders (shared, immutable).
ExprPtr make_int(long long v);
ExprPtr make_var(const std::string &name);
ExprPtr make_die_index(unsigned i);
ExprPtr make_count(const std::string &arg, bool arg_is_integer);
ExprPtr make_binary(char op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_neg(ExprPtr e);
ExprPtr make_chain(std::vector<ExprPtr> operands, std::vector<CmpOp> comparators);
ExprPtr make_bool(BoolOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_not(ExprPtr e);

// Precedence, loosest to tightest: or, and, not, comparison chain, +/-, *,
// unary minus, atoms. Chains follow Python: a <= b <= c is one chain.
ExprPtr parse(const std::string &text);

// Canonical source form with minimal parentheses; parse(pretty(e)) == *e.
std::string pretty(const Expr &e);
inline std::string pretty(const ExprPtr &e) { return pretty(*e); }

struct EvalContext {
  const SampleSpace &space;
  const Outcome &outcome;
};

long long eval_int(const Expr &e, const EvalContext &ctx);
bool eval_bool(const Expr &e, const EvalContext &ctx);

// Validates die indices against d and reports count() label/value
// ambiguities. Throws BindError for d0 or index > d.
std::vector<std::string> check_bindings(const Expr &e, const DieSpec &die, unsigned d);

} // namespace dicelab
