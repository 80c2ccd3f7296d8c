#include "koszulkit/builder.hpp"

#include <sstream>

#include "json_internal.hpp"
#include "koszulkit/bar_complex.hpp"
#include "koszulkit/generators.hpp"

namespace koszulkit {

namespace {

std::string condition_name(bool dual) { return dual ? "(ddagger)" : "(dagger)"; }

std::string braced(std::span<const std::string> ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? ", " : "") + ids[i];
  return out + "}";
}

// The shared half of adjoin_above / adjoin_below. Returns the new poset and
// the log fragment describing the frontier check.
Poset adjoin_up(const Poset& p, const std::string& t, std::span<const std::string> frontier,
                bool dual, std::string* note) {
  p.require_graded();
  if (p.find(t)) throw NameCollisionError(t);
  std::vector<Index> ids = resolve(p, frontier);
  FrontierCheck check = check_dagger(p, ids);
  if (!check.satisfied) {
    auto [a, b] = *check.offending;
    throw DaggerViolationError(dual, *check.failure, p.name(a), p.name(b));
  }
  if (note) {
    *note = condition_name(dual) + " holds";
    *note += check.pivot ? " with pivot " + p.name(*check.pivot) : std::string(" (singleton)");
  }
  std::vector<std::string> elements = p.elements();
  elements.push_back(t);
  std::vector<NamedPair> covers = p.cover_names();
  for (const auto& u : frontier) covers.emplace_back(u, t);
  Poset out = Poset::from_covers(std::move(elements), covers);
  if (!out.is_graded()) {
    const auto& w = out.graded_report();
    throw GradednessViolationError(out.name(*w.lower), out.name(*w.upper), w.shortest, w.longest);
  }
  return out;
}

Poset adjoin(const Poset& p, const std::string& t, std::span<const std::string> frontier,
             bool below, std::string* note) {
  if (!below) return adjoin_up(p, t, frontier, false, note);
  // Gradedness witnesses are reported in the orientation of p.
  try {
    return dual(adjoin_up(dual(p), t, frontier, true, note));
  } catch (const GradednessViolationError& e) {
    throw GradednessViolationError(e.upper(), e.lower(), 0, 0);
  }
}

}  // namespace

DaggerViolationError::DaggerViolationError(bool dual, FrontierFailure reason, std::string first,
                                           std::string second)
    : Error("frontier violates condition " + condition_name(dual) + ": " +
            std::string(to_string(reason)) + " at (" + first + ", " + second + ")"),
      dual_(dual),
      reason_(reason),
      first_(std::move(first)),
      second_(std::move(second)) {}

GradednessViolationError::GradednessViolationError(std::string lower, std::string upper,
                                                   int shortest, int longest)
    : Error("adjoining breaks gradedness: interval [" + lower + "," + upper + "]" +
            (shortest || longest ? " has maximal chains of lengths " + std::to_string(shortest) +
                                       " and " + std::to_string(longest)
                                 : std::string(" has maximal chains of different lengths"))),
      lower_(std::move(lower)),
      upper_(std::move(upper)) {}

NameCollisionError::NameCollisionError(const std::string& id)
    : Error("element '" + id + "' already exists") {}

ScriptError::ScriptError(std::size_t step, std::string message, std::vector<std::string> log)
    : Error("step " + std::to_string(step) + ": " + message), step_(step), log_(std::move(log)) {}

Poset adjoin_above(const Poset& p, const std::string& t, std::span<const std::string> frontier) {
  return adjoin(p, t, frontier, false, nullptr);
}

Poset adjoin_below(const Poset& p, const std::string& t, std::span<const std::string> frontier) {
  return adjoin(p, t, frontier, true, nullptr);
}

namespace {

Poset apply_logged(const Poset& p, const BuildStep& step, std::string* note) {
  if (step.kind < 1 || step.kind > 4) {
    throw InvalidParameterError("construction kind must be 1, 2, 3 or 4");
  }
  if (step.kind <= 2 && step.frontier.size() != 1) {
    throw InvalidParameterError("constructions 1 and 2 take exactly one frontier element");
  }
  const bool below = step.kind == 2 || step.kind == 4;
  return adjoin(p, step.new_element, step.frontier, below, note);
}

}  // namespace

Poset apply_step(const Poset& p, const BuildStep& step) { return apply_logged(p, step, nullptr); }

BuildResult run_script(const BuildScript& script) {
  BuildResult result;
  const Poset& start = script.start;
  start.require_graded();
  std::ostringstream head;
  head << "start: " << start.size() << " elements, " << start.covers().size() << " covers, ";
  if (start.covers().empty()) {
    result.certified = true;
    head << "koszul (antichain)";
  } else {
    result.certified = tor_table(start, FieldSpec::rationals()).koszul;
    head << (result.certified ? "koszul" : "not koszul") << " (Tor criterion over Q)";
  }
  result.log.push_back(head.str());

  Poset current = start;
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const BuildStep& step = script.steps[i];
    const bool below = step.kind == 2 || step.kind == 4;
    std::string line = "step " + std::to_string(i + 1) + ": kind " + std::to_string(step.kind) +
                       " adjoin " + step.new_element + (below ? " below " : " above ") +
                       braced(step.frontier) + ": ";
    std::string note;
    try {
      current = apply_logged(current, step, &note);
    } catch (const Error& e) {
      result.log.push_back(line + "rejected: " + e.what());
      throw ScriptError(i + 1, e.what(), std::move(result.log));
    }
    result.log.push_back(line + note + "; graded");
  }
  result.log.push_back(std::string("result: ") + std::to_string(current.size()) + " elements, " +
                       (result.certified ? "koszul by construction"
                                         : "no certificate (start not koszul)"));
  result.poset = std::move(current);
  return result;
}

BuildScript script_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedPosetError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw MalformedPosetError("build script must be an object");
  for (const auto& [key, _] : j.items()) {
    if (key != "start" && key != "steps") {
      throw MalformedPosetError("unknown key \"" + key + "\" in build script");
    }
  }
  if (!j.contains("start")) throw MalformedPosetError("build script lacks \"start\"");
  BuildScript script;
  const auto& start = j.at("start");
  if (start.is_object() && start.contains("gen")) {
    GeneratorSpec spec;
    if (!start.at("gen").is_string()) throw MalformedPosetError("\"gen\" must be a string");
    spec.family = start.at("gen").get<std::string>();
    if (start.contains("args")) {
      for (const auto& a : start.at("args")) {
        if (a.is_array()) {
          for (const auto& b : a) spec.args.push_back(b.is_string() ? b.get<std::string>() : b.dump());
        } else {
          spec.args.push_back(a.is_string() ? a.get<std::string>() : a.dump());
        }
      }
    }
    for (const auto& [key, _] : start.items()) {
      if (key != "gen" && key != "args") {
        throw MalformedPosetError("unknown key \"" + key + "\" in generator start");
      }
    }
    script.start = generate(spec);
  } else {
    script.start = detail::poset_from_json_value(start);
  }
  if (j.contains("steps")) {
    if (!j.at("steps").is_array()) throw MalformedPosetError("\"steps\" must be an array");
    for (const auto& s : j.at("steps")) {
      if (!s.is_object()) throw MalformedPosetError("each step must be an object");
      for (const auto& [key, _] : s.items()) {
        if (key != "kind" && key != "new" && key != "frontier") {
          throw MalformedPosetError("unknown key \"" + key + "\" in build step");
        }
      }
      if (!s.contains("kind") || !s.at("kind").is_number_integer() || !s.contains("new") ||
          !s.at("new").is_string() || !s.contains("frontier") || !s.at("frontier").is_array()) {
        throw MalformedPosetError("a step needs integer \"kind\", string \"new\", array \"frontier\"");
      }
      BuildStep step;
      step.kind = s.at("kind").get<int>();
      step.new_element = s.at("new").get<std::string>();
      for (const auto& f : s.at("frontier")) {
        if (!f.is_string()) throw MalformedPosetError("frontier entries must be strings");
        step.frontier.push_back(f.get<std::string>());
      }
      script.steps.push_back(std::move(step));
    }
  }
  return script;
}

std::string script_to_json(const BuildScript& script) {
  nlohmann::ordered_json j;
  j["start"] = detail::poset_to_json_value(script.start);
  auto steps = nlohmann::ordered_json::array();
  for (const auto& s : script.steps) {
    nlohmann::ordered_json step;
    step["kind"] = s.kind;
    step["new"] = s.new_element;
    step["frontier"] = s.frontier;
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  return j.dump();
}

}  // namespace koszulkit
