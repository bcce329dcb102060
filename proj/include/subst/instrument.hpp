#pragma once

#include <cstdint>

namespace subst::instrument {

// Recursion-depth monitor and node-visit counter, shared by the factored and
// naive engines. The monitor is armed per thread; when armed, the outermost
// public engine call fixes a depth budget of 2x its total input node count
// and every nested call checks against it (throwing ContractError past it).
// Visit counting is independent and used by the benchmark.

void set_depth_checking(bool on);
bool depth_checking();

void set_visit_counting(bool on);
void reset_visits();
std::uint64_t visits();

int current_depth();
int max_depth_seen();
void reset_max_depth();

namespace detail {
struct State {
  int depth = 0;
  long budget = -1;  // <0: no budget armed
  int max_depth = 0;
  bool check = false;
  bool count = false;
  std::uint64_t visits = 0;
};
State& state();
}  // namespace detail

// RAII: one engine call frame.
struct CallScope {
  CallScope();
  ~CallScope();
};

// RAII: arms the budget at the outermost call when checking is enabled.
struct BudgetScope {
  explicit BudgetScope(long input_nodes);
  ~BudgetScope();

 private:
  bool armed_ = false;
};

}  // namespace subst::instrument
