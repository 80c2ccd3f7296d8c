#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "koszulkit/error.hpp"
#include "koszulkit/poset.hpp"

namespace koszulkit {

// The frontier fails (dagger) for adjoin_above or (ddagger) for adjoin_below.
class DaggerViolationError : public Error {
 public:
  DaggerViolationError(bool dual, FrontierFailure reason, std::string first, std::string second);
  bool dual() const { return dual_; }
  FrontierFailure reason() const { return reason_; }
  const std::string& first() const { return first_; }
  const std::string& second() const { return second_; }

 private:
  bool dual_;
  FrontierFailure reason_;
  std::string first_, second_;
};

class GradednessViolationError : public Error {
 public:
  GradednessViolationError(std::string lower, std::string upper, int shortest, int longest);
  const std::string& lower() const { return lower_; }
  const std::string& upper() const { return upper_; }

 private:
  std::string lower_, upper_;
};

class NameCollisionError : public Error {
 public:
  explicit NameCollisionError(const std::string& id);
};

// Adjoins t as a successor of every frontier element and of nothing else.
// Requires a graded p and a fresh t; the frontier must satisfy (dagger) and
// the result must be graded.
Poset adjoin_above(const Poset& p, const std::string& t, std::span<const std::string> frontier);
// dual(adjoin_above(dual(p), t, frontier)), reporting (ddagger) failures.
Poset adjoin_below(const Poset& p, const std::string& t, std::span<const std::string> frontier);

// Construction kinds 1 and 3 adjoin above, 2 and 4 below; 1 and 2 take a
// singleton frontier.
struct BuildStep {
  int kind = 1;
  std::string new_element;
  std::vector<std::string> frontier;
};

struct BuildScript {
  Poset start;
  std::vector<BuildStep> steps;
};

// Throws InvalidParameterError for a bad kind or a non-singleton frontier
// on kinds 1/2, otherwise whatever adjoin_above / adjoin_below throws.
Poset apply_step(const Poset& p, const BuildStep& step);

struct BuildResult {
  Poset poset;
  std::vector<std::string> log;
  // The start poset was verified Koszul (antichain, or the Tor criterion
  // over Q); every step then preserves Koszulity.
  bool certified = false;
};

// A failing step aborts the run; the error keeps the log written so far.
class ScriptError : public Error {
 public:
  ScriptError(std::size_t step, std::string message, std::vector<std::string> log);
  // 1-based index of the failing step.
  std::size_t step() const { return step_; }
  const std::vector<std::string>& log() const { return log_; }

 private:
  std::size_t step_;
  std::vector<std::string> log_;
};

BuildResult run_script(const BuildScript& script);

// {"start": <poset JSON> | {"gen": name, "args": [...]},
//  "steps": [{"kind": 3, "new": "t", "frontier": ["u", "v"]}, ...]}
BuildScript script_from_json(std::string_view text);
std::string script_to_json(const BuildScript& script);

}  // namespace koszulkit
