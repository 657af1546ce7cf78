#ifndef FITL_KB_AST_HPP
#define FITL_KB_AST_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fitl::kb {

struct SourcePos {
  int line = 0;    // 1-based
  int column = 0;  // 1-based
};

enum class RelationKind { kBf, kAf, kMt, kOl, kSt, kDr, kFin, kEq, kIn };

const char* relation_name(RelationKind kind);

/// Interval-valued term: an event reference or Start/End/Before/After of a
/// nested term.
struct Term {
  enum class Op { kRef, kStart, kEnd, kBefore, kAfter };

  Op op = Op::kRef;
  std::string name;           // kRef
  std::unique_ptr<Term> arg;  // operators
  SourcePos pos;
};

/// A time point in a membership atom: a literal or a declared scalar.
struct TimeExpr {
  bool is_ref = false;
  double value = 0.0;
  std::string name;
  SourcePos pos;
};

struct Formula {
  enum class Kind {
    kRelation,        // lhs REL rhs
    kDurationApprox,  // duration(event) ~= target
    kMembershipAt,    // lhs at time
    kHapp,            // happ(event)
    kNot,
    kAnd,
  };

  Kind kind = Kind::kRelation;
  RelationKind relation = RelationKind::kIn;
  std::unique_ptr<Term> lhs;
  std::unique_ptr<Term> rhs;
  std::string event_name;  // kDurationApprox, kHapp
  double target = 0.0;     // kDurationApprox
  TimeExpr time;           // kMembershipAt
  std::unique_ptr<Formula> child1;  // kNot, kAnd
  std::unique_ptr<Formula> child2;  // kAnd
  SourcePos pos;
};

struct EventDecl {
  std::string name;
  bool trainable = false;
  // fixed groundings
  double a = 0, b = 0, c = 0, d = 0;
  double happ = 1.0;
  // trainable groundings: happening logit followed by the four gap logits
  std::array<double, 5> logits{};
  SourcePos pos;
};

struct ScalarDecl {
  std::string name;
  double init = 0.0;
  SourcePos pos;
};

struct Program {
  std::vector<EventDecl> events;
  std::vector<ScalarDecl> scalars;
  std::optional<double> horizon;
  std::vector<std::unique_ptr<Formula>> constraints;
};

bool equal(const Term& a, const Term& b);
bool equal(const Formula& a, const Formula& b);
bool equal(const Program& a, const Program& b);

/// Canonical text forms; parsing the printed text reproduces the AST
/// exactly (doubles print in shortest round-trip form).
std::string to_text(const Term& term);
std::string to_text(const Formula& formula);
std::string to_text(const Program& program);

}  // namespace fitl::kb

#endif  // FITL_KB_AST_HPP
