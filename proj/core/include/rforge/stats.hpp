#pragma once
// Call accounting.  The verification harness audits that dual-route checks
// really exercise independent machinery (series evaluation vs lattice sums),
// so the expensive entry points bump a counter here.

#include <atomic>

namespace rforge::stats {

struct Counters {
  std::atomic<unsigned long> hyper{0};     // pfq_series / pfq_continue entries
  std::atomic<unsigned long> f_series{0};  // big_F evaluations
  std::atomic<unsigned long> lattice{0};   // Epstein lattice sums

  void reset() {
    hyper = 0;
    f_series = 0;
    lattice = 0;
  }
};

Counters& counters();

}  // namespace rforge::stats
