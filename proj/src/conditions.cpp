#include "hamdeg/conditions.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamdeg {

const char* clause_name(Clause c) {
  switch (c) {
    case Clause::I: return "i";
    case Clause::II: return "ii";
    case Clause::III: return "iii";
  }
  return "?";
}

namespace {

struct ReportBuilder {
  std::optional<ConditionFailure> failure;
  void fail(int index, Clause clause) {
    if (!failure || index < failure->index ||
        (index == failure->index && clause < failure->clause))
      failure = ConditionFailure{index, clause};
  }
  ConditionReport finish(std::string range) const {
    return ConditionReport{!failure.has_value(), failure, std::move(range)};
  }
};

void check_eta(const Frac& eta) {
  if (!(Frac(0) < eta && eta < Frac(1)))
    throw std::invalid_argument("eta must lie in (0,1), got " + eta.str());
}

// d >= i + eta*n
bool meets_relaxed(int d, int i, const Frac& eta, int n) {
  return Frac(d) >= Frac(i) + eta * Frac(n);
}

std::string range_str(int lo, int hi) {
  if (hi < lo) return "i in {} (empty range)";
  return "i=" + std::to_string(lo) + ".." + std::to_string(hi);
}

}  // namespace

ConditionReport chvatal_undirected(std::vector<int> degrees) {
  int n = (int)degrees.size();
  std::sort(degrees.begin(), degrees.end());
  auto d = [&](int i) { return degrees[i - 1]; };
  int hi = (n + 1) / 2 - 1;  // i < n/2
  ReportBuilder rb;
  for (int i = 1; i <= hi; ++i)
    if (!(d(i) >= i + 1 || d(n - i) >= n - i)) rb.fail(i, Clause::I);
  return rb.finish(range_str(1, hi));
}

ConditionReport nash_williams(const Digraph& g) {
  auto ds = degree_sequences(g);
  int n = ds.n();
  int hi = (n + 1) / 2 - 1;
  ReportBuilder rb;
  for (int i = 1; i <= hi; ++i) {
    if (!(ds.out(i) >= i + 1 || ds.in(n - i) >= n - i)) rb.fail(i, Clause::I);
    if (!(ds.in(i) >= i + 1 || ds.out(n - i) >= n - i)) rb.fail(i, Clause::II);
  }
  return rb.finish(range_str(1, hi));
}

ConditionReport approx_nw(const Digraph& g, Frac eta) {
  check_eta(eta);
  auto ds = degree_sequences(g);
  int n = ds.n();
  int hi = (n + 1) / 2 - 1;
  long long ceil_eta_n = eta.ceil_mul(n);
  auto second = [&](auto&& seq_at, int i) {
    long long j = n - i - ceil_eta_n;
    if (j < 1 || j > n) return false;
    return seq_at((int)j) >= n - i;
  };
  ReportBuilder rb;
  for (int i = 1; i <= hi; ++i) {
    if (!(meets_relaxed(ds.out(i), i, eta, n) ||
          second([&](int j) { return ds.in(j); }, i)))
      rb.fail(i, Clause::I);
    if (!(meets_relaxed(ds.in(i), i, eta, n) ||
          second([&](int j) { return ds.out(j); }, i)))
      rb.fail(i, Clause::II);
  }
  return rb.finish(range_str(1, hi));
}

ConditionReport posa_digraph(const Digraph& g) {
  auto ds = degree_sequences(g);
  int n = ds.n();
  int hi = n / 2 - 1;  // i < (n-1)/2
  ReportBuilder rb;
  for (int i = 1; i <= hi; ++i) {
    if (!(ds.out(i) >= i + 1)) rb.fail(i, Clause::I);
    if (!(ds.in(i) >= i + 1)) rb.fail(i, Clause::II);
  }
  std::string range = range_str(1, hi);
  if (n % 2 == 1 && n >= 2) {
    int med = (n + 1) / 2;
    if (!(ds.out(med) >= med)) rb.fail(med, Clause::I);
    if (!(ds.in(med) >= med)) rb.fail(med, Clause::II);
    range += "; median at i=" + std::to_string(med);
  }
  return rb.finish(range);
}

ConditionReport approx_posa(const Digraph& g, Frac eta) {
  check_eta(eta);
  auto ds = degree_sequences(g);
  int n = ds.n();
  int hi = (n + 1) / 2 - 1;
  ReportBuilder rb;
  for (int i = 1; i <= hi; ++i) {
    if (!meets_relaxed(ds.out(i), i, eta, n)) rb.fail(i, Clause::I);
    if (!meets_relaxed(ds.in(i), i, eta, n)) rb.fail(i, Clause::II);
  }
  return rb.finish(range_str(1, hi));
}

ConditionReport nw3(const Digraph& g) {
  auto ds = degree_sequences(g);
  int n = ds.n();
  int hi = (n + 1) / 2 - 1;
  ReportBuilder rb;
  for (int i = 1; i <= hi; ++i) {
    if (!(ds.out(i) >= i + 1 || ds.in(n - i) >= n - i)) rb.fail(i, Clause::I);
    if (!(ds.in(i) >= i + 1 || ds.out(n - i) >= n - i)) rb.fail(i, Clause::II);
  }
  std::string range = range_str(1, hi);
  if (n % 2 == 0 && n >= 2) {
    int h = n / 2;
    if (!(ds.out(h) >= h || ds.in(h) >= h)) rb.fail(h, Clause::III);
    range += "; iii at i=" + std::to_string(h);
  }
  return rb.finish(range);
}

ConditionReport capped_approx_nw(const Digraph& g, Frac eta) {
  check_eta(eta);
  auto ds = degree_sequences(g);
  int n = ds.n();
  int hi = (n + 1) / 2 - 1;
  long long ceil_eta_n = eta.ceil_mul(n);
  Frac half(n, 2);
  auto first = [&](int d, int i) {
    Frac thr = Frac(i) + eta * Frac(n);
    if (half < thr) thr = half;
    return Frac(d) >= thr;
  };
  auto second = [&](auto&& seq_at, int i) {
    long long j = n - i - ceil_eta_n;
    if (j < 1 || j > n) return false;
    return seq_at((int)j) >= n - i;
  };
  ReportBuilder rb;
  for (int i = 1; i <= hi; ++i) {
    if (!(first(ds.out(i), i) || second([&](int j) { return ds.in(j); }, i)))
      rb.fail(i, Clause::I);
    if (!(first(ds.in(i), i) || second([&](int j) { return ds.out(j); }, i)))
      rb.fail(i, Clause::II);
  }
  return rb.finish(range_str(1, hi));
}

ConditionReport bermond_thomassen_false(const Digraph& g) {
  auto ds = degree_sequences(g);
  int n = ds.n();
  int hi = (n + 1) / 2 - 1;
  ReportBuilder rb;
  for (int i = 1; i <= hi; ++i) {
    if (!(ds.out(i) >= i + 1 || ds.out(n - i) >= n - i)) rb.fail(i, Clause::I);
    if (!(ds.in(i) >= i + 1 || ds.in(n - i) >= n - i)) rb.fail(i, Clause::II);
  }
  return rb.finish(range_str(1, hi));
}

ConditionReport pancyclic_2conn_condition(const Digraph& g) {
  auto ds = degree_sequences(g);
  int n = ds.n();
  int hi = (n + 1) / 2 - 1;
  auto second = [&](auto&& seq_at, int i) {
    int j = n - i - 1;
    if (j < 1 || j > n) return false;
    return seq_at(j) >= n - i;
  };
  ReportBuilder rb;
  for (int i = 1; i <= hi; ++i) {
    if (!(ds.out(i) >= i + 2 || second([&](int j) { return ds.in(j); }, i)))
      rb.fail(i, Clause::I);
    if (!(ds.in(i) >= i + 2 || second([&](int j) { return ds.out(j); }, i)))
      rb.fail(i, Clause::II);
  }
  return rb.finish(range_str(1, hi));
}

}  // namespace hamdeg
