#pragma once

// Exact-constant expression language and the curated identity database.
//
// Expressions form a small closed vocabulary: integers, the four arithmetic
// operations, unary minus, sqrt/root, pi, i, zeta(3), and Dirichlet L-values
// L(k,t).  Every stored constant lives as an AST (never a pre-rendered
// decimal), so a record evaluates correctly at any working precision.
//
// A FormulaRecord captures one verifiable identity.  The five kinds share a
// JSON schema; fields that do not apply to a kind hold "0":
//
//   companion    weighted series sum_{n>=1} (a - b n) z^{-n} / n^3 with the
//                inverted Pochhammer ratio.  lhs_scale carries the printed
//                normalization (the display often pulls a constant out of
//                (a - b n), e.g. 2 (1/2 - 2n) = -(4n - 1)).
//   ramanujan    the 1/pi side: sum_{n>=0} (a + b n) z^n.
//   F-value      trilogarithmic F(q) at the nome given by tau.
//   S-formula    lhs_scale * S(form; 2) against an L-combination plus
//                companion_coeff * Re(companion series).
//   L-reduction  S(form; t) [+ S(form2; t)] against a product combination of
//                L-values; s holds the exponent t.
//
// The cut convention for divergent rows is the limit from below (-i delta);
// `side` records it explicitly.

#include <rforge/hyper.hpp>
#include <rforge/lattice.hpp>
#include <rforge/mpnum.hpp>

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rforge {

struct ConstExpr;
using ExprPtr = std::shared_ptr<const ConstExpr>;

struct ConstExpr {
  enum class Node {
    integer,    // value
    add,        // lhs + rhs
    sub,        // lhs - rhs
    mul,        // lhs * rhs
    div,        // lhs / rhs
    neg,        // -lhs
    sqrt_of,    // sqrt(lhs)
    root_of,    // root(lhs, index)
    pi_const,   // pi
    imag_unit,  // i
    zeta3_const,  // zeta3
    l_value,    // L(k, t)
  };

  Node node;
  mpz_class value;  // integer
  long index = 0;   // root_of
  long k = 0;       // l_value character
  long t = 0;       // l_value exponent
  ExprPtr lhs, rhs;
};

// Standard precedence grammar over the vocabulary above; whitespace-free
// tokens, error messages carry a character position.
ExprPtr parse_expr(const std::string& text);

// Inverse of parse_expr: render(e) reparses to a structurally equal AST.
std::string render_expr(const ExprPtr& e);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

// Evaluates at context precision.  sqrt and root of positive reals take the
// positive branch; root of anything else is an error, as is division by zero.
Complex eval_expr(const ExprPtr& e, const PrecisionContext& ctx);

enum class RecordKind { companion, ramanujan, f_value, s_formula, l_reduction };

std::string kind_name(RecordKind k);
RecordKind kind_from_name(const std::string& name);

// One additive term of a record's closed form.  The atom vocabulary is fixed:
// L(k,2), pi^2, i*pi^2, 1.  Coefficients are full expressions.
struct RhsTerm {
  enum class Atom { l_value, pi_squared, i_pi_squared, one };
  ExprPtr coeff;
  Atom atom = Atom::one;
  long atom_k = 0;  // character when atom == l_value (exponent fixed at 2)
};

std::string atom_name(const RhsTerm& term);

struct FormulaRecord {
  std::string id;
  RecordKind kind = RecordKind::companion;
  mpq_class s;      // hypergeometric parameter; exponent t for L-reduction
  mpq_class tau_x;  // tau = tau_x + i * eval(tau_y)
  ExprPtr tau_y;
  ExprPtr a, b, z;
  std::vector<RhsTerm> rhs;
  std::string source;

  ExprPtr lhs_scale;        // printed normalization, default 1
  ExprPtr companion_coeff;  // S-formula correction weight, default -1
  std::optional<QuadraticForm> form;   // lattice side (S-formula, L-reduction)
  std::optional<QuadraticForm> form2;  // second form of a two-class genus sum
  CutSide side = CutSide::below;
};

Tau record_tau(const FormulaRecord& rec, const PrecisionContext& ctx);

// Sum of coeff * atom over the record's terms.
Complex eval_rhs(const FormulaRecord& rec, const PrecisionContext& ctx);

// Parses a JSON registry document (an array of record objects).  Throws
// std::invalid_argument naming the offending record and field.
std::vector<FormulaRecord> parse_registry(const std::string& json_text);

// The built-in database, parsed once: Table 1 F-values, the rational
// companion formulas with their (a,b,z) table, the divergent z<0 and z>0
// tables, the irrational table, the Catalan and golden-ratio identities, the
// S(1,0,36)/S(1,0,20)/S(1,0,52) hypergeometric resolutions, and the genus
// reductions backing them.
const std::vector<FormulaRecord>& builtin_registry();

// Raw JSON text of the built-in database (what parse_registry consumed).
const char* builtin_registry_text();

}  // namespace rforge
