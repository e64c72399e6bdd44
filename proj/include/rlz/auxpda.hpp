#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "rlz/errors.hpp"
#include "rlz/graph.hpp"

#include "json.hpp"

// Small-scale auxiliary pushdown automata: the machine model with peeking
// triples, transition inversion and symmetric closure, the configuration
// graph whose vertices are surface configurations, and a direct
// full-configuration simulator used as the oracle.

namespace rlz::auxpda {

// A triple (before, move, after). move 0 rewrites in place (one symbol per
// side); move +1/-1 shifts the head right/left (two symbols per side, stack
// triples push/pop instead with 1/2 or 2/1 symbols).
struct Triple {
  std::vector<std::string> before;
  int move = 0;
  std::vector<std::string> after;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;

  Triple inverse() const { return Triple{after, -move, before}; }
};

struct Transition {
  std::string from, to;
  Triple stack;
  Triple input;  // read-only tape: after == before
  Triple work;

  friend bool operator==(const Transition&, const Transition&) = default;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

// delta^{-1}: reversed endpoints, every triple inverted.
inline Transition inverse_transition(const Transition& t) {
  return Transition{t.to, t.from, t.stack.inverse(), t.input.inverse(), t.work.inverse()};
}

inline constexpr const char* kBottom = "$";
inline constexpr const char* kBlank = "_";
inline constexpr const char* kLeftMarker = "<";
inline constexpr const char* kRightMarker = ">";

struct AuxPdaSpec {
  std::vector<std::string> states;
  std::string initial;
  std::vector<std::string> finals;
  std::vector<std::string> input_alphabet;  // word symbols, excluding the end markers
  std::vector<std::string> stack_alphabet;  // includes the bottom marker "$"
  std::vector<std::string> work_alphabet;   // includes the blank "_"
  int work_tape_length = 1;
  std::vector<Transition> transitions;
};

inline void check_triple_arity(const Triple& t, bool is_stack, const std::string& ctx) {
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("auxpda: " + ctx + ": " + msg);
  };
  if (t.move == 0) {
    if (t.before.size() != 1 || t.after.size() != 1) fail("0-move triple needs one symbol per side");
  } else if (t.move == 1) {
    std::size_t b = is_stack ? 1 : 2, a = 2;
    if (t.before.size() != b || t.after.size() != a) fail("+1 triple has wrong arity");
  } else if (t.move == -1) {
    std::size_t b = 2, a = is_stack ? 1 : 2;
    if (t.before.size() != b || t.after.size() != a) fail("-1 triple has wrong arity");
  } else {
    fail("move must be -1, 0 or +1");
  }
}

inline void validate_spec(const AuxPdaSpec& m) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("auxpda: " + msg); };
  auto has = [](const std::vector<std::string>& v, const std::string& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  if (!has(m.states, m.initial)) fail("initial state not in state set");
  for (const auto& f : m.finals)
    if (!has(m.states, f)) fail("final state not in state set");
  if (!has(m.stack_alphabet, kBottom)) fail("stack alphabet must contain the bottom marker $");
  if (!has(m.work_alphabet, kBlank)) fail("work alphabet must contain the blank _");
  for (const auto& s : m.work_alphabet)
    if (s.size() != 1) fail("work alphabet symbols must be single characters");
  if (m.work_tape_length < 1) fail("work tape length must be >= 1");
  for (const auto& t : m.transitions) {
    if (!has(m.states, t.from) || !has(m.states, t.to)) fail("transition uses unknown state");
    check_triple_arity(t.stack, true, "stack triple");
    check_triple_arity(t.input, false, "input triple");
    check_triple_arity(t.work, false, "work triple");
    if (t.input.before != t.input.after) fail("input tape is read-only");
    // the bottom marker is never popped, overwritten, or pushed again
    if (t.stack.move == -1 && t.stack.before[1] == kBottom) fail("transition pops $");
    if (t.stack.move == 1 && t.stack.after[1] == kBottom) fail("transition pushes $");
    if (t.stack.before[0] == kBottom && t.stack.after[0] != kBottom) fail("transition rewrites $");
  }
}

inline bool is_symmetric(const AuxPdaSpec& m) {
  std::set<Transition> have(m.transitions.begin(), m.transitions.end());
  for (const auto& t : m.transitions)
    if (!have.count(inverse_transition(t))) return false;
  return true;
}

// Delta union Delta^{-1}; idempotent, and a symmetric machine is its own
// symmetric closure.
inline AuxPdaSpec symmetric_closure(const AuxPdaSpec& m) {
  AuxPdaSpec out = m;
  std::set<Transition> have(m.transitions.begin(), m.transitions.end());
  for (const auto& t : m.transitions) {
    Transition inv = inverse_transition(t);
    if (have.insert(inv).second) out.transitions.push_back(inv);
  }
  return out;
}

// state, input head, work tape contents and head, top stack symbol.
struct SurfaceConfig {
  int state = 0;
  int input_pos = 0;
  std::string work;
  int work_pos = 0;
  int top = 0;  // index into stack_alphabet

  friend bool operator==(const SurfaceConfig&, const SurfaceConfig&) = default;
  friend auto operator<=>(const SurfaceConfig&, const SurfaceConfig&) = default;
};

namespace detail {

struct Resolver {
  const AuxPdaSpec& m;
  std::map<std::string, int> state_id, stack_id;
  std::vector<std::string> input_tape;  // with end markers

  Resolver(const AuxPdaSpec& spec, const std::vector<std::string>& word) : m(spec) {
    validate_spec(spec);
    for (std::size_t i = 0; i < spec.states.size(); ++i) state_id[spec.states[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < spec.stack_alphabet.size(); ++i)
      stack_id[spec.stack_alphabet[i]] = static_cast<int>(i);
    input_tape.push_back(kLeftMarker);
    for (const auto& s : word) input_tape.push_back(s);
    input_tape.push_back(kRightMarker);
  }

  SurfaceConfig initial() const {
    return SurfaceConfig{state_id.at(m.initial), 0,
                         std::string(static_cast<std::size_t>(m.work_tape_length), kBlank[0]), 0,
                         stack_id.at(kBottom)};
  }

  bool is_final_state(int s) const {
    return std::find(m.finals.begin(), m.finals.end(), m.states[static_cast<std::size_t>(s)]) !=
           m.finals.end();
  }

  // Surface-level applicability of everything except the below-top stack
  // symbol; fills the successor surface configuration.
  bool surface_step(const SurfaceConfig& c, const Transition& t, SurfaceConfig& out) const {
    if (state_id.at(t.from) != c.state) return false;
    int len = static_cast<int>(input_tape.size());
    int ip = c.input_pos;
    // input triple (read-only)
    if (t.input.move == 0) {
      if (t.input.before[0] != input_tape[static_cast<std::size_t>(ip)]) return false;
    } else if (t.input.move == 1) {
      if (ip + 1 >= len) return false;
      if (t.input.before[0] != input_tape[static_cast<std::size_t>(ip)] ||
          t.input.before[1] != input_tape[static_cast<std::size_t>(ip + 1)])
        return false;
      ip += 1;
    } else {
      if (ip - 1 < 0) return false;
      if (t.input.before[0] != input_tape[static_cast<std::size_t>(ip - 1)] ||
          t.input.before[1] != input_tape[static_cast<std::size_t>(ip)])
        return false;
      ip -= 1;
    }
    // work triple (single-character symbols on the work tape)
    std::string work = c.work;
    int wp = c.work_pos;
    auto sym = [&](int pos) { return std::string(1, work[static_cast<std::size_t>(pos)]); };
    if (t.work.move == 0) {
      if (t.work.before[0] != sym(wp)) return false;
      work[static_cast<std::size_t>(wp)] = t.work.after[0][0];
    } else if (t.work.move == 1) {
      if (wp + 1 >= static_cast<int>(work.size())) return false;
      if (t.work.before[0] != sym(wp) || t.work.before[1] != sym(wp + 1)) return false;
      work[static_cast<std::size_t>(wp)] = t.work.after[0][0];
      work[static_cast<std::size_t>(wp + 1)] = t.work.after[1][0];
      wp += 1;
    } else {
      if (wp - 1 < 0) return false;
      if (t.work.before[0] != sym(wp - 1) || t.work.before[1] != sym(wp)) return false;
      work[static_cast<std::size_t>(wp - 1)] = t.work.after[0][0];
      work[static_cast<std::size_t>(wp)] = t.work.after[1][0];
      wp -= 1;
    }
    // stack triple at surface level: the top symbol only
    int top = c.top;
    if (t.stack.move == 0) {
      if (stack_id.at(t.stack.before[0]) != top) return false;
      top = stack_id.at(t.stack.after[0]);
    } else if (t.stack.move == 1) {
      if (stack_id.at(t.stack.before[0]) != top) return false;
      top = stack_id.at(t.stack.after[1]);
    } else {
      if (stack_id.at(t.stack.before[1]) != top) return false;
      top = stack_id.at(t.stack.after[0]);
    }
    out = SurfaceConfig{state_id.at(t.to), ip, work, wp, top};
    return true;
  }
};

}  // namespace detail

struct ConfigGraph {
  LabeledGraph graph;
  ProblemVariant variant;
  int s = 0, t = 0;
  std::vector<SurfaceConfig> configs;  // vertex -> surface configuration; t has none
};

// The reduction from machine acceptance to realizability: vertices are the
// surface configurations reachable from the start, labeled with the top stack
// symbol; an edge gets push/pop/eps from the transition's stack move. All
// final-state configurations with bare-bottom stacks drain through eps edges
// into one canonical accept vertex, so acceptance is exactly (s ~> t).
//
// Faithfulness requires that push/pop transitions do not rewrite the adjacent
// stack symbol and that 0-moves do not rewrite the top; offending machines
// are rejected.
inline ConfigGraph config_graph(const AuxPdaSpec& m, const std::vector<std::string>& word,
                                int max_configs = 4096) {
  for (const auto& t : m.transitions) {
    if (t.stack.move != 0 && t.stack.before[0] != t.stack.after[0])
      throw std::invalid_argument(
          "config_graph: push/pop transitions must preserve the adjacent stack symbol");
    if (t.stack.move == 0 && t.stack.before[0] != t.stack.after[0])
      throw std::invalid_argument("config_graph: stack 0-moves must not rewrite the top");
  }
  detail::Resolver rs(m, word);
  bool symmetric = is_symmetric(m);

  std::map<SurfaceConfig, int> index;
  std::vector<SurfaceConfig> configs;
  std::deque<int> queue;
  auto intern = [&](const SurfaceConfig& c) {
    auto it = index.find(c);
    if (it != index.end()) return it->second;
    if (static_cast<int>(configs.size()) >= max_configs)
      throw budget_error("config_graph: configuration budget exceeded");
    int id = static_cast<int>(configs.size());
    index.emplace(c, id);
    configs.push_back(c);
    queue.push_back(id);
    return id;
  };
  intern(rs.initial());

  struct Arc {
    int from, to;
    EdgeKind kind;
  };
  std::vector<Arc> arcs;
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    SurfaceConfig cur = configs[static_cast<std::size_t>(id)];  // copy: configs may reallocate
    for (const auto& t : m.transitions) {
      SurfaceConfig nxt;
      if (!rs.surface_step(cur, t, nxt)) continue;
      EdgeKind kind = t.stack.move == 1   ? EdgeKind::Push
                      : t.stack.move == -1 ? EdgeKind::Pop
                                           : EdgeKind::Eps;
      arcs.push_back({id, intern(nxt), kind});
    }
  }

  int n = static_cast<int>(configs.size()) + 1;  // plus the accept vertex
  int accept = n - 1;
  int k = static_cast<int>(m.stack_alphabet.size());
  LabeledGraph g(n, k, !symmetric);
  for (int v = 0; v + 1 < n; ++v) g.set_label(v, configs[static_cast<std::size_t>(v)].top + 1);
  std::map<std::string, int> stack_id;
  for (int i = 0; i < k; ++i) stack_id[m.stack_alphabet[static_cast<std::size_t>(i)]] = i;
  g.set_label(accept, stack_id.at(kBottom) + 1);

  for (const Arc& a : arcs) {
    if (a.from == a.to && a.kind != EdgeKind::Eps)
      throw std::invalid_argument("config_graph: degenerate push/pop self-transition");
    if (!g.add_edge(a.from, a.to, a.kind))
      throw std::invalid_argument("config_graph: conflicting edge labels between configurations");
  }
  int bottom = stack_id.at(kBottom);
  for (int v = 0; v + 1 < n; ++v) {
    const SurfaceConfig& c = configs[static_cast<std::size_t>(v)];
    if (rs.is_final_state(c.state) && c.top == bottom) {
      if (!g.add_edge(v, accept, EdgeKind::Eps))
        throw std::invalid_argument("config_graph: accept drain conflicts with an edge");
      if (symmetric) g.add_edge(accept, v, EdgeKind::Eps);
    }
  }
  g.add_reflexive_eps();

  ProblemVariant variant = symmetric ? (k == 1 ? ProblemVariant::OneSLogCfl : ProblemVariant::SLogCfl)
                                     : (k == 1 ? ProblemVariant::OneLogCfl : ProblemVariant::LogCfl);
  return ConfigGraph{std::move(g), variant, 0, accept, std::move(configs)};
}

enum class SimOutcome { Accept, Reject, Budget };

inline const char* to_string(SimOutcome o) {
  switch (o) {
    case SimOutcome::Accept: return "accept";
    case SimOutcome::Reject: return "reject";
    case SimOutcome::Budget: return "budget";
  }
  return "?";
}

// BFS over full configurations (surface configuration + entire stack).
// Accepts when a final-state configuration with stack exactly "$" appears
// within the step bound; reports Budget when the search was truncated by
// either bound without finding acceptance.
inline SimOutcome direct_simulate(const AuxPdaSpec& m, const std::vector<std::string>& word,
                                  int step_bound, int stack_bound) {
  if (step_bound < 0 || stack_bound < 1)
    throw std::invalid_argument("direct_simulate: bounds must be positive");
  detail::Resolver rs(m, word);

  using Full = std::pair<SurfaceConfig, std::vector<int>>;  // stack bottom-first, top last
  std::set<Full> seen;
  std::vector<Full> frontier;
  Full start{rs.initial(), {rs.stack_id.at(kBottom)}};
  seen.insert(start);
  frontier.push_back(start);
  bool truncated = false;

  auto is_accepting = [&](const Full& f) {
    return rs.is_final_state(f.first.state) && f.second.size() == 1;
  };
  if (is_accepting(start)) return SimOutcome::Accept;

  for (int depth = 0; depth < step_bound && !frontier.empty(); ++depth) {
    std::vector<Full> next;
    for (const Full& f : frontier) {
      for (const auto& t : m.transitions) {
        SurfaceConfig nxt;
        if (!rs.surface_step(f.first, t, nxt)) continue;
        std::vector<int> stack = f.second;
        if (t.stack.move == 1) {
          if (static_cast<int>(stack.size()) >= stack_bound) {
            truncated = true;
            continue;
          }
          stack.back() = rs.stack_id.at(t.stack.after[0]);
          stack.push_back(rs.stack_id.at(t.stack.after[1]));
        } else if (t.stack.move == -1) {
          if (stack.size() < 2) continue;
          if (stack[stack.size() - 2] != rs.stack_id.at(t.stack.before[0])) continue;
          stack.pop_back();
          stack.back() = rs.stack_id.at(t.stack.after[0]);
        } else {
          stack.back() = rs.stack_id.at(t.stack.after[0]);
        }
        Full g{nxt, std::move(stack)};
        if (is_accepting(g)) return SimOutcome::Accept;
        if (seen.insert(g).second) next.push_back(std::move(g));
      }
    }
    frontier.swap(next);
  }
  if (!frontier.empty()) truncated = true;
  return truncated ? SimOutcome::Budget : SimOutcome::Reject;
}

// --- JSON machine description ------------------------------------------

inline void to_json(nlohmann::json& j, const Triple& t) {
  j = nlohmann::json{{"before", t.before}, {"move", t.move}, {"after", t.after}};
}
inline void from_json(const nlohmann::json& j, Triple& t) {
  j.at("before").get_to(t.before);
  j.at("move").get_to(t.move);
  j.at("after").get_to(t.after);
}
inline void to_json(nlohmann::json& j, const Transition& t) {
  j = nlohmann::json{{"from", t.from},
                     {"to", t.to},
                     {"stack", t.stack},
                     {"tapes", std::vector<Triple>{t.input, t.work}}};
}
inline void from_json(const nlohmann::json& j, Transition& t) {
  j.at("from").get_to(t.from);
  j.at("to").get_to(t.to);
  j.at("stack").get_to(t.stack);
  std::vector<Triple> tapes;
  j.at("tapes").get_to(tapes);
  if (tapes.size() != 2)
    throw std::invalid_argument("auxpda json: expected [input, work] tape triples");
  t.input = tapes[0];
  t.work = tapes[1];
}
inline void to_json(nlohmann::json& j, const AuxPdaSpec& m) {
  j = nlohmann::json{{"states", m.states},
                     {"initial", m.initial},
                     {"finals", m.finals},
                     {"inputAlphabet", m.input_alphabet},
                     {"stackAlphabet", m.stack_alphabet},
                     {"workAlphabet", m.work_alphabet},
                     {"workTapeLength", m.work_tape_length},
                     {"transitions", m.transitions}};
}
inline void from_json(const nlohmann::json& j, AuxPdaSpec& m) {
  j.at("states").get_to(m.states);
  j.at("initial").get_to(m.initial);
  j.at("finals").get_to(m.finals);
  j.at("inputAlphabet").get_to(m.input_alphabet);
  j.at("stackAlphabet").get_to(m.stack_alphabet);
  j.at("workAlphabet").get_to(m.work_alphabet);
  j.at("workTapeLength").get_to(m.work_tape_length);
  j.at("transitions").get_to(m.transitions);
}

}  // namespace rlz::auxpda
