#ifndef FITL_KB_GROUNDING_HPP
#define FITL_KB_GROUNDING_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "fitl/kb/ast.hpp"
#include "fitl/smooth.hpp"

namespace fitl::kb {

struct EvalConfig {
  smooth::SmoothConfig smooth;
  rel::Config relation;
};

/// Flat parameter vector layout: each trainable event contributes five slots
/// (happening logit, then the four gap logits for a, b-a, c-b, d-c); each
/// scalar contributes one. Order follows the declarations.
struct ParamLayout {
  struct Entry {
    std::string name;
    bool is_event = false;
    std::size_t offset = 0;
  };
  std::vector<Entry> entries;
  std::size_t size = 0;
};

ParamLayout layout_of(const Program& program);

/// Initial parameter vector from the declared init logits / scalar inits.
std::vector<double> initial_theta(const Program& program);

/// Tape-recorded groundings of all declared names.
struct Realized {
  std::map<std::string, smooth::DiffInterval> intervals;
  std::map<std::string, ad::DiffScalar> happs;
  std::map<std::string, ad::DiffScalar> scalars;
  std::vector<ad::DiffScalar> params;  // tape variables, aligned with theta
};

/// Records the groundings on the tape. Trainable events realize their
/// interval as a = softplus(l1), b = a + softplus(l2), c = b + softplus(l3),
/// d = c + softplus(l4) (unit-beta softplus), which keeps a <= b <= c <= d by
/// construction; the happening degree is sigmoid(l0).
Realized realize(const Program& program, std::span<const double> theta,
                 ad::Tape& tape);

struct Evaluation {
  ad::DiffScalar satisfaction;
  std::vector<ad::DiffScalar> constraints;
};

/// Evaluates every constraint and their conjunction. Forward values are the
/// exact crisp semantics; recorded partials use the smooth surrogates.
Evaluation evaluate(const Program& program, const Realized& realized,
                    ad::Tape& tape, const EvalConfig& cfg);

smooth::DiffInterval eval_term(const Term& term, const Realized& realized,
                               const EvalConfig& cfg);

}  // namespace fitl::kb

#endif  // FITL_KB_GROUNDING_HPP
