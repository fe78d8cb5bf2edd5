#pragma once

// Generator actions on the bimodule of normalized basis symbols.  The left
// action is the case-by-case pivot-statistics formula; the right action is
// shipped in two independent implementations that must agree:
//   * act_right: direct transcription of the mirrored case formulas (with a
//     small set of documented corrections, see printed_right_corrections),
//   * act_right_by_transpose: conjugation of the left action by matrix
//     transposition, with basis-weight adjustments.

#include "mirabolic/decorated_matrix.hpp"
#include "mirabolic/module_element.hpp"

namespace mirabolic {

// formula branch used for one (token, basis symbol) pair; exposed so tests
// can audit that the dispatch is total and unambiguous
enum class ActionCase {
  diagonal,        // H^+/H^-
  vector_plain,    // L, no decoration
  vector_free,     // L, top row (left) / first column (right) undecorated
  vector_pinned,   // L, decoration present in the acted-on line
  move_free,       // E/F, neither acted-on line decorated
  move_first,      // E/F, only the first acted-on line decorated
  move_second,     // E/F, only the second acted-on line decorated
  move_both,       // E/F, both acted-on lines decorated (adjacent)
};
const char* action_case_name(ActionCase c);

ActionCase left_case(const GeneratorToken& t, const DecoratedMatrix& x);
ActionCase right_case(const GeneratorToken& t, const DecoratedMatrix& x);

// pivot statistics for the move formulas
int beta(const DecoratedMatrix& A, int h, int p);        // rows h/h+1, col >= p
int beta_prime(const DecoratedMatrix& A, int h, int p);  // rows h/h+1, col <= p
int xi(const DecoratedMatrix& A, int h, int p);          // cols h/h+1, row <= p
int xi_prime(const DecoratedMatrix& A, int h, int p);    // cols h/h+1, row >= p

ModuleElement act_left_basis(const GeneratorToken& t, Context ctx,
                             const DecoratedMatrix& x);
ModuleElement act_left(const GeneratorToken& t, const ModuleElement& x);

ModuleElement act_right_basis(Context ctx, const DecoratedMatrix& x,
                              const GeneratorToken& t);
ModuleElement act_right(const ModuleElement& x, const GeneratorToken& t);

ModuleElement act_right_by_transpose(
    const ModuleElement& x, const GeneratorToken& t,
    WeightConvention conv = default_convention());

// human-readable list of the transcription fixes baked into act_right
std::vector<std::string> printed_right_corrections();

// token applied on which side of the bimodule
struct SidedToken {
  bool left = true;
  GeneratorToken token;
};

// applies the word entries in sequence: left entries multiply on the left,
// right entries on the right
ModuleElement act_word(const std::vector<SidedToken>& word, ModuleElement x);

GeneratorToken mirror_token(const GeneratorToken& t);

// the generator as an element of the convolution algebra on `size` steps,
// degree d, in the normalized basis
ModuleElement generator_element(const GeneratorToken& t, int size, int d);

}  // namespace mirabolic
