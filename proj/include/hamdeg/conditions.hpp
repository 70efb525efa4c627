#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamdeg/digraph.hpp"
#include "hamdeg/rational.hpp"

namespace hamdeg {

enum class Clause { I, II, III };
const char* clause_name(Clause c);

struct ConditionFailure {
  int index;  // 1-based sorted-sequence index the clause failed at
  Clause clause;
};

struct ConditionReport {
  bool holds;
  std::optional<ConditionFailure> first_failure;  // smallest index, then clause order
  std::string checked_range;
};

// Undirected: for i < n/2, d_i >= i+1 or d_{n-i} >= n-i. Takes the degree
// list directly so it can be applied to any graph's degree data.
ConditionReport chvatal_undirected(std::vector<int> degrees);

// For i < n/2: (I) d+_i >= i+1 or d-_{n-i} >= n-i, (II) mirrored.
ConditionReport nash_williams(const Digraph& g);

// Relaxed variant: (I) d+_i >= i+eta*n or d-_{n-i-ceil(eta*n)} >= n-i,
// (II) mirrored. Out-of-range second index counts as a failed disjunct.
ConditionReport approx_nw(const Digraph& g, Frac eta);

// d+_i, d-_i >= i+1 for i < (n-1)/2; for odd n also d+_, d-_ at ceil(n/2)
// must reach ceil(n/2).
ConditionReport posa_digraph(const Digraph& g);

// d+_i, d-_i >= i+eta*n for i < n/2.
ConditionReport approx_posa(const Digraph& g, Frac eta);

// nash_williams plus, for even n, (III) d+_{n/2} >= n/2 or d-_{n/2} >= n/2.
ConditionReport nw3(const Digraph& g);

// approx_nw with the first disjunct threshold capped at n/2:
// d+_i >= min(i+eta*n, n/2) or d-_{n-i-ceil(eta*n)} >= n-i, mirrored.
ConditionReport capped_approx_nw(const Digraph& g, Frac eta);

// Same-sign pairing (a false sufficient condition, kept for the
// counterexample family): (I) d+_i >= i+1 or d+_{n-i} >= n-i,
// (II) the in-degree analogue.
ConditionReport bermond_thomassen_false(const Digraph& g);

// Strengthening that forces pancyclicity together with 2-connectivity:
// (I) d+_i >= i+2 or d-_{n-i-1} >= n-i, (II) mirrored.
ConditionReport pancyclic_2conn_condition(const Digraph& g);

}  // namespace hamdeg
