#pragma once

#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tanglerep/scalar.hpp"

namespace tanglerep {

enum class TangleKind { Gen, Compose, Tensor, Scale, Sum };

/// Elementary diagrams. Id0 is the empty diagram (arity 0 -> 0); Cup creates
/// a strand pair from nothing (0 -> 2, written 'A'), Cap closes one (2 -> 0,
/// written 'U').
enum class GenKind { Id, Cross, CrossInv, Cup, Cap, Id0 };

class TangleExpr;
using TanglePtr = std::shared_ptr<const TangleExpr>;

/// Immutable arity-checked expression in the diagram category: every node
/// records how many strand endpoints enter at the top (src) and leave at the
/// bottom (dst), and constructors refuse ill-typed combinations, so no
/// ill-typed tree is representable.
class TangleExpr {
public:
  TangleKind kind;
  GenKind gen = GenKind::Id;        // kind == Gen
  TanglePtr a, b;                   // Compose (a drawn first, on top), Tensor
  Scalar coeff;                     // kind == Scale
  TanglePtr sub;                    // kind == Scale
  std::vector<TanglePtr> summands;  // kind == Sum
  long src = 0, dst = 0;
};

TanglePtr t_gen(GenKind g);
TanglePtr t_id0();
/// Id tensored with itself n times; n = 0 gives the empty diagram.
TanglePtr t_id_pow(long n);
/// Diagrammatic composition, a first: requires a->dst == b->src.
TanglePtr t_compose(const TanglePtr& a, const TanglePtr& b);
TanglePtr t_tensor(const TanglePtr& a, const TanglePtr& b);
TanglePtr t_scale(Scalar c, const TanglePtr& e);
/// Sum of expressions with equal arities; a single summand collapses to it.
TanglePtr t_sum(std::vector<TanglePtr> parts);

bool t_equal(const TanglePtr& a, const TanglePtr& b);

enum class ChainKind { CapChain, CupChain };
/// CapChain: the nested cap diagram of arity 2n -> 0, outermost layer first;
/// CupChain: its mirror of arity 0 -> 2n, innermost cup first.
TanglePtr cap_cup_chain(long n, ChainKind kind);

/// The dual diagram: bends both boundaries around with cup and cap chains,
/// turning an s -> t expression into a t -> s one.
TanglePtr dual(const TanglePtr& d);

struct BmwLetter {
  enum Kind { T, Tinv, E } kind;
  long i; // strand position, 1-based, 1 <= i <= n-1
};

/// Diagram of a word in the braid-and-contraction generators on n strands:
/// T_i is a crossing of strands i, i+1; E_i a cap followed by a cup there.
/// Letters compose in diagrammatic order; the empty word is the identity.
TanglePtr bmw_word(long n, const std::vector<BmwLetter>& word);

/// Parse the textual syntax:
///   expr   := seq (('+'|'-') seq)*
///   seq    := term (';' term)*
///   term   := factor ('*' factor)*
///   factor := 'I' | 'X' | 'Xi' | 'A' | 'U' | gen '^' int
///           | scalar-literal '.' factor | '(' expr ')'
/// ';' composes top-to-bottom, '*' is tensor, '^' iterates tensor of one
/// generator, and a scalar literal (the scalar syntax) before '.' scales the
/// following factor. Scale nodes need the field to hold their coefficient.
TanglePtr parse_tangle(const Field& f, std::string_view text);

/// Emit the same grammar; parsing the output reproduces the tree exactly.
std::string print_tangle(const TanglePtr& e);

/// Uniformly sampled well-typed expression with the given boundary arities
/// (src + dst must be even) for property tests.
TanglePtr random_tangle(std::mt19937& rng, const Field& f, long src, long dst,
                        int depth);

} // namespace tanglerep
