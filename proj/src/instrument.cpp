#include "subst/instrument.hpp"

#include <string>

#include "subst/syntax.hpp"

namespace subst::instrument {

namespace detail {
State& state() {
  thread_local State s;
  return s;
}
}  // namespace detail

void set_depth_checking(bool on) { detail::state().check = on; }
bool depth_checking() { return detail::state().check; }

void set_visit_counting(bool on) { detail::state().count = on; }
void reset_visits() { detail::state().visits = 0; }
std::uint64_t visits() { return detail::state().visits; }

int current_depth() { return detail::state().depth; }
int max_depth_seen() { return detail::state().max_depth; }
void reset_max_depth() { detail::state().max_depth = 0; }

CallScope::CallScope() {
  auto& s = detail::state();
  ++s.depth;
  if (s.depth > s.max_depth) s.max_depth = s.depth;
  if (s.count) ++s.visits;
  if (s.budget >= 0 && s.depth > s.budget)
    contract_fail("depth-monitor",
                  "recursion depth " + std::to_string(s.depth) +
                      " exceeds budget " + std::to_string(s.budget));
}

CallScope::~CallScope() { --detail::state().depth; }

BudgetScope::BudgetScope(long input_nodes) {
  auto& s = detail::state();
  if (s.check && s.depth == 0 && s.budget < 0) {
    s.budget = 2 * input_nodes;
    armed_ = true;
  }
}

BudgetScope::~BudgetScope() {
  if (armed_) detail::state().budget = -1;
}

}  // namespace subst::instrument
