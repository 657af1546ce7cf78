#ifndef FITL_KB_PARSER_HPP
#define FITL_KB_PARSER_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "fitl/kb/ast.hpp"

// Line-oriented constraint language. '#' starts a comment.
//
//   event <name> fixed trapezoid(a,b,c,d) [happ <v>]
//   event <name> trainable [init logits(l0,l1,l2,l3,l4)]
//   scalar <name> trainable [init <v>]
//   horizon <T>
//   constraint <expr>
//
//   expr := term (bf|af|mt|ol|st|dr|fin|eq|in) term
//         | duration(<name>) ~= <number>
//         | term at <number | scalar-name>
//         | happ(<name>)
//         | not <expr> | <expr> and <expr> | ( <expr> )
//   term := <name> | Start(term) | End(term) | Before(term) | After(term)
//
// 'not' binds tighter than 'and'; 'and' is left-associative.

namespace fitl::kb {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { kLexical, kSyntax, kSemantic };

  ParseError(Kind kind, SourcePos pos, const std::string& message);

  Kind kind() const { return kind_; }
  SourcePos pos() const { return pos_; }

 private:
  Kind kind_;
  SourcePos pos_;
};

/// Parses and semantically validates a knowledge base. Throws ParseError
/// with a 1-based line/column position on the first problem found.
Program parse_kb(std::string_view text);

}  // namespace fitl::kb

#endif  // FITL_KB_PARSER_HPP
