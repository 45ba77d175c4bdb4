// Copyright 2026 The minimax-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "minimax/rational.hpp"

namespace minimax::lp {

enum class Status { kOptimal, kUnbounded, kInfeasible };

enum class PivotRule {
  /// Lowest-index entering variable; never cycles.
  kBland,
  /// Largest reduced cost (lowest index on ties), switching to Bland for
  /// good after a run of degenerate pivots.
  kDantzig,
};

template <typename Scalar>
struct Result {
  Status status = Status::kOptimal;
  Scalar objective{0};
  VectorX<Scalar> primal;  // x, one entry per column of A
  VectorX<Scalar> dual;    // y, one entry per row of A
  std::size_t iterations = 0;
};

namespace detail {

/// Dense simplex tableau for  max c'x  s.t.  Ax <= b, x >= 0.
///
/// Columns 0..n-1 are structural, n..n+m-1 slacks, then an optional phase-one
/// auxiliary column; the last column is the right-hand side. The last row
/// holds reduced costs d (objective = z0 + d'x_N) and -z0.
template <typename Scalar>
class Tableau {
 public:
  Tableau(const MatrixX<Scalar>& A, const VectorX<Scalar>& b, bool with_aux)
      : m_(A.rows()), n_(A.cols()), width_(n_ + m_ + (with_aux ? 1 : 0)) {
    T_ = MatrixX<Scalar>::Zero(m_ + 1, width_ + 1);
    T_.topLeftCorner(m_, n_) = A;
    for (std::size_t i = 0; i < m_; ++i) {
      T_(i, n_ + i) = Scalar(1);
      T_(i, width_) = b(i);
      if (with_aux) T_(i, n_ + m_) = Scalar(-1);
      basis_.push_back(n_ + i);
    }
    banned_.assign(width_, false);
  }

  std::size_t rows() const { return m_; }
  std::size_t structural() const { return n_; }
  std::size_t aux() const { return n_ + m_; }
  std::size_t rhs_col() const { return width_; }
  const MatrixX<Scalar>& table() const { return T_; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  std::size_t iterations() const { return iterations_; }

  Scalar& cost(std::size_t j) { return T_(m_, j); }
  Scalar& rhs(std::size_t i) { return T_(i, width_); }

  void ban(std::size_t j) { banned_[j] = true; }

  void set_objective(const std::vector<Scalar>& c_full) {
    // Reduced costs of c in the current basis.
    for (std::size_t j = 0; j <= width_; ++j) T_(m_, j) = Scalar(0);
    for (std::size_t j = 0; j < width_; ++j) T_(m_, j) = c_full[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const Scalar& cb = c_full[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= width_; ++j) {
        if (T_(i, j) != 0) T_(m_, j) -= cb * T_(i, j);
      }
    }
    // T_(m_, width_) now equals -c_B' b, i.e. -z0.
  }

  void pivot(std::size_t r, std::size_t c) {
    const Scalar inv = Scalar(1) / T_(r, c);
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= width_; ++j) {
      if (T_(r, j) != 0) {
        T_(r, j) *= inv;
        nz.push_back(j);
      }
    }
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r || T_(i, c) == 0) continue;
      const Scalar f = T_(i, c);
      for (std::size_t j : nz) T_(i, j) -= f * T_(r, j);
    }
    basis_[r] = c;
    ++iterations_;
  }

  /// Runs primal simplex on the current objective row.
  Status optimize(PivotRule rule) {
    constexpr std::size_t kDegenerateRunLimit = 50;
    std::size_t degenerate_run = 0;
    bool bland = rule == PivotRule::kBland;
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < width_; ++j) {
        if (banned_[j] || T_(m_, j) <= 0) continue;
        if (bland) {
          enter = j;
          break;
        }
        if (!enter || T_(m_, j) > T_(m_, *enter)) enter = j;
      }
      if (!enter) return Status::kOptimal;
      const std::size_t c = *enter;
      std::optional<std::size_t> leave;
      Scalar best_ratio{0};
      for (std::size_t i = 0; i < m_; ++i) {
        if (T_(i, c) <= 0) continue;
        Scalar ratio = T_(i, width_) / T_(i, c);
        if (!leave || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leave) return Status::kUnbounded;
      if (best_ratio == 0) {
        if (++degenerate_run > kDegenerateRunLimit) bland = true;
      } else {
        degenerate_run = 0;
      }
      pivot(*leave, c);
    }
  }

 private:
  std::size_t m_, n_, width_;
  MatrixX<Scalar> T_;
  std::vector<std::size_t> basis_;
  std::vector<bool> banned_;
  std::size_t iterations_ = 0;
};

}  // namespace detail

/// Solves  max c'x  s.t.  Ax <= b, x >= 0  exactly (for exact Scalar).
///
/// An infeasible origin is handled with a single auxiliary variable in a
/// first phase. At an optimum, dual holds y >= 0 with A'y >= c and b'y equal
/// to the objective.
template <typename Scalar>
Result<Scalar> maximize(const MatrixX<Scalar>& A, const VectorX<Scalar>& b,
                        const VectorX<Scalar>& c, PivotRule rule = PivotRule::kBland) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  Result<Scalar> out;
  out.primal = VectorX<Scalar>::Zero(n);
  out.dual = VectorX<Scalar>::Zero(m);

  std::optional<std::size_t> most_negative;
  for (std::size_t i = 0; i < m; ++i) {
    if (b(i) < 0 && (!most_negative || b(i) < b(*most_negative))) most_negative = i;
  }
  detail::Tableau<Scalar> tab(A, b, most_negative.has_value());
  const std::size_t width = n + m + (most_negative ? 1 : 0);

  if (most_negative) {
    std::vector<Scalar> phase_one(width, Scalar(0));
    phase_one[tab.aux()] = Scalar(-1);
    tab.set_objective(phase_one);
    tab.pivot(*most_negative, tab.aux());
    tab.optimize(rule);
    if (tab.table()(m, tab.rhs_col()) != 0) {  // max of -aux is below zero
      out.status = Status::kInfeasible;
      out.iterations = tab.iterations();
      return out;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis()[i] != tab.aux()) continue;
      for (std::size_t j = 0; j < tab.aux(); ++j) {
        if (tab.table()(i, j) != 0) {
          tab.pivot(i, j);
          break;
        }
      }
    }
    tab.ban(tab.aux());
  }

  std::vector<Scalar> objective(width, Scalar(0));
  for (std::size_t j = 0; j < n; ++j) objective[j] = c(j);
  tab.set_objective(objective);
  out.status = tab.optimize(rule);
  out.iterations = tab.iterations();
  if (out.status != Status::kOptimal) return out;

  const auto& T = tab.table();
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis()[i] < n) out.primal(tab.basis()[i]) = T(i, tab.rhs_col());
  }
  for (std::size_t i = 0; i < m; ++i) out.dual(i) = -T(m, n + i);
  out.objective = -T(m, tab.rhs_col());
  return out;
}

}  // namespace minimax::lp
