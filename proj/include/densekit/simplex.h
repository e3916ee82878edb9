#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace densekit {

// Dense simplex over an ordered field (double or an exact rational type).
//
// Problem form: maximise c^T x subject to A x (<=|=|>=) b, x >= 0.
// Solved via the big-M-free two-phase tableau method with Bland's rule, which
// cannot cycle. Sized for the small systems arising from per-class rate LPs.
template <typename Scalar>
class SimplexSolver {
 public:
  enum class Rel { Le, Eq, Ge };
  enum class PivotRule { Bland, Dantzig };

  void set_pivot_rule(PivotRule rule) { rule_ = rule; }

  void add_constraint(std::vector<Scalar> row, Rel rel, Scalar rhs) {
    if (!rows_.empty() && row.size() != rows_.front().size())
      throw std::invalid_argument("constraint arity mismatch");
    rows_.push_back(std::move(row));
    rels_.push_back(rel);
    rhs_.push_back(std::move(rhs));
  }

  struct Solution {
    Scalar objective;
    std::vector<Scalar> x;
  };

  // Returns nullopt when infeasible; throws on an unbounded objective.
  std::optional<Solution> maximize(const std::vector<Scalar>& objective) {
    const std::size_t nvar = objective.size();
    const std::size_t m = rows_.size();

    // Normalise to equalities with slack/surplus variables, rhs >= 0.
    std::size_t nslack = 0;
    for (auto rel : rels_)
      if (rel != Rel::Eq) ++nslack;
    std::size_t total = nvar + nslack + m;  // structural + slack + artificial
    std::vector<std::vector<Scalar>> a(m, std::vector<Scalar>(total, Scalar(0)));
    std::vector<Scalar> b = rhs_;
    std::vector<std::size_t> basis(m);

    std::size_t slack_at = nvar;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < nvar; ++j) a[i][j] = rows_[i][j];
      Scalar slack_sign(0);
      if (rels_[i] == Rel::Le) slack_sign = Scalar(1);
      if (rels_[i] == Rel::Ge) slack_sign = Scalar(-1);
      if (rels_[i] != Rel::Eq) a[i][slack_at++] = slack_sign;
      if (b[i] < Scalar(0)) {
        for (auto& v : a[i]) v = -v;
        b[i] = -b[i];
      }
      a[i][nvar + nslack + i] = Scalar(1);
      basis[i] = nvar + nslack + i;
    }

    // Phase 1: minimise the sum of artificials.
    std::vector<Scalar> cost1(total, Scalar(0));
    for (std::size_t i = 0; i < m; ++i) cost1[nvar + nslack + i] = Scalar(-1);
    run(a, b, basis, cost1, total);
    Scalar art_sum(0);
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] >= nvar + nslack) art_sum += b[i];
    if (art_sum != Scalar(0)) return std::nullopt;

    // Drive lingering artificials out of the basis; rows where that is
    // impossible are redundant and get dropped.
    for (std::size_t i = m; i-- > 0;) {
      if (basis[i] < nvar + nslack) continue;
      std::size_t enter = total;
      for (std::size_t j = 0; j < nvar + nslack; ++j)
        if (a[i][j] != Scalar(0)) {
          enter = j;
          break;
        }
      if (enter < total) {
        pivot(a, b, basis, i, enter);
      } else {
        a.erase(a.begin() + i);
        b.erase(b.begin() + i);
        basis.erase(basis.begin() + i);
      }
    }

    // Phase 2 on the real objective (artificials forbidden from entering).
    std::vector<Scalar> cost2(total, Scalar(0));
    for (std::size_t j = 0; j < nvar; ++j) cost2[j] = objective[j];
    run(a, b, basis, cost2, nvar + nslack);

    Solution s;
    s.x.assign(nvar, Scalar(0));
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i] < nvar) s.x[basis[i]] = b[i];
    s.objective = Scalar(0);
    for (std::size_t j = 0; j < nvar; ++j) s.objective += objective[j] * s.x[j];
    return s;
  }

 private:
  static void pivot(std::vector<std::vector<Scalar>>& a, std::vector<Scalar>& b,
                    std::vector<std::size_t>& basis, std::size_t r, std::size_t c) {
    Scalar piv = a[r][c];
    for (auto& v : a[r]) v = v / piv;
    b[r] = b[r] / piv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == Scalar(0)) continue;
      Scalar f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    basis[r] = c;
  }

  // Tableau simplex restricted to columns < limit. Bland's rule cannot cycle;
  // Dantzig's rule is offered so tests can confirm the recovered rates do not
  // depend on the pivot order.
  void run(std::vector<std::vector<Scalar>>& a, std::vector<Scalar>& b, std::vector<std::size_t>& basis,
           const std::vector<Scalar>& cost, std::size_t limit) {
    const std::size_t m = a.size();
    std::size_t guard = 0;
    for (;;) {
      if (++guard > 200000) throw std::runtime_error("simplex: iteration limit");
      // reduced costs: cost_j - cost_B . column_j
      std::size_t enter = limit;
      Scalar best_red(0);
      for (std::size_t j = 0; j < limit; ++j) {
        Scalar red = cost[j];
        for (std::size_t i = 0; i < m; ++i)
          if (cost[basis[i]] != Scalar(0)) red -= cost[basis[i]] * a[i][j];
        if (red > Scalar(0)) {
          bool in_basis = false;
          for (std::size_t i = 0; i < m; ++i)
            if (basis[i] == j) in_basis = true;
          if (in_basis) continue;
          if (rule_ == PivotRule::Bland) {
            enter = j;
            break;  // first improving column
          }
          if (enter == limit || red > best_red) {
            enter = j;
            best_red = red;
          }
        }
      }
      if (enter == limit) return;
      std::size_t leave = m;
      for (std::size_t i = 0; i < m; ++i) {
        if (a[i][enter] <= Scalar(0)) continue;
        if (leave == m) {
          leave = i;
          continue;
        }
        Scalar lhs = b[i] * a[leave][enter];
        Scalar rhs = b[leave] * a[i][enter];
        if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
      }
      if (leave == m) throw std::runtime_error("simplex: unbounded objective");
      pivot(a, b, basis, leave, enter);
    }
  }

  std::vector<std::vector<Scalar>> rows_;
  std::vector<Rel> rels_;
  std::vector<Scalar> rhs_;
  PivotRule rule_ = PivotRule::Bland;
};

}  // namespace densekit
