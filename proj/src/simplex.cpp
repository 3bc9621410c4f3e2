#include <stdexcept>

#include "stackprice/error.hpp"
#include "stackprice/oracle.hpp"

namespace stackprice {

namespace {

// Simplex dictionary: basic[r] = b[r] - sum_j a[r][j] * nonbasic[j],
// z = v + sum_j c[j] * nonbasic[j]. Variable ids: 0..n-1 structural,
// n..n+m-1 slacks, n+m the phase-one auxiliary.
class Dictionary {
 public:
  std::vector<std::vector<mpq_class>> a;
  std::vector<mpq_class> b;
  std::vector<mpq_class> c;
  mpq_class v = 0;
  std::vector<std::size_t> basic;
  std::vector<std::size_t> nonbasic;
  std::size_t pivots = 0;

  void pivot(std::size_t r, std::size_t col) {
    const mpq_class inv = 1 / a[r][col];
    auto& row = a[r];
    b[r] *= inv;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j != col) row[j] *= inv;
    }
    row[col] = inv;

    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][col]) == 0) continue;
      const mpq_class f = a[i][col];
      b[i] -= f * b[r];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j != col) a[i][j] -= f * row[j];
      }
      a[i][col] = -f * inv;
    }
    if (sgn(c[col]) != 0) {
      const mpq_class f = c[col];
      v += f * b[r];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j != col) c[j] -= f * row[j];
      }
      c[col] = -f * inv;
    }
    std::swap(basic[r], nonbasic[col]);
    ++pivots;
  }

  // Bland's rule. Returns false when the objective is unbounded.
  bool optimize() {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (sgn(c[j]) > 0 && (!enter || nonbasic[j] < nonbasic[*enter])) enter = j;
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      mpq_class best_ratio;
      for (std::size_t r = 0; r < a.size(); ++r) {
        if (sgn(a[r][*enter]) <= 0) continue;
        mpq_class ratio = b[r] / a[r][*enter];
        if (!leave || ratio < best_ratio || (ratio == best_ratio && basic[r] < basic[*leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  void drop_column(std::size_t col) {
    for (auto& row : a) row.erase(row.begin() + static_cast<std::ptrdiff_t>(col));
    c.erase(c.begin() + static_cast<std::ptrdiff_t>(col));
    nonbasic.erase(nonbasic.begin() + static_cast<std::ptrdiff_t>(col));
  }

  void drop_row(std::size_t r) {
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(r));
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(r));
    basic.erase(basic.begin() + static_cast<std::ptrdiff_t>(r));
  }
};

}  // namespace

LpResult lp_solve(const LinearProgram& lp) {
  const std::size_t n = lp.variables.size();
  const std::size_t m = lp.constraints.size();
  if (lp.objective.size() != n) throw ValidationError("objective size does not match the variable count");

  Dictionary d;
  d.a.assign(m, std::vector<mpq_class>(n));
  d.b.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    const auto& con = lp.constraints[r];
    if (con.coefficients.size() != n) throw ValidationError("constraint size does not match the variable count");
    for (std::size_t j = 0; j < n; ++j) d.a[r][j] = con.coefficients[j].rational();
    d.b[r] = con.rhs.rational();
    d.basic.push_back(n + r);
  }
  for (std::size_t j = 0; j < n; ++j) d.nonbasic.push_back(j);
  d.c.assign(n, 0);

  LpResult result;
  const std::size_t aux = n + m;

  std::optional<std::size_t> most_negative;
  for (std::size_t r = 0; r < m; ++r) {
    if (sgn(d.b[r]) < 0 && (!most_negative || d.b[r] < d.b[*most_negative])) most_negative = r;
  }
  if (most_negative) {
    for (auto& row : d.a) row.push_back(-1);
    d.nonbasic.push_back(aux);
    d.c.push_back(-1);
    d.pivot(*most_negative, n);
    if (!d.optimize()) throw std::logic_error("phase one of the simplex cannot be unbounded");
    if (sgn(d.v) < 0) {
      result.status = LpStatus::infeasible;
      result.pivots = d.pivots;
      return result;
    }
    for (std::size_t r = 0; r < d.basic.size(); ++r) {
      if (d.basic[r] != aux) continue;
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < d.nonbasic.size(); ++j) {
        if (sgn(d.a[r][j]) != 0 && (!col || d.nonbasic[j] < d.nonbasic[*col])) col = j;
      }
      if (col) {
        d.pivot(r, *col);
      } else {
        d.drop_row(r);
      }
      break;
    }
    for (std::size_t j = 0; j < d.nonbasic.size(); ++j) {
      if (d.nonbasic[j] == aux) {
        d.drop_column(j);
        break;
      }
    }
  }

  d.v = 0;
  d.c.assign(d.nonbasic.size(), 0);
  for (std::size_t k = 0; k < n; ++k) {
    const mpq_class& ck = lp.objective[k].rational();
    if (sgn(ck) == 0) continue;
    bool placed = false;
    for (std::size_t j = 0; j < d.nonbasic.size() && !placed; ++j) {
      if (d.nonbasic[j] == k) {
        d.c[j] += ck;
        placed = true;
      }
    }
    for (std::size_t r = 0; r < d.basic.size() && !placed; ++r) {
      if (d.basic[r] == k) {
        d.v += ck * d.b[r];
        for (std::size_t j = 0; j < d.nonbasic.size(); ++j) d.c[j] -= ck * d.a[r][j];
        placed = true;
      }
    }
  }

  if (!d.optimize()) {
    result.status = LpStatus::unbounded;
    result.pivots = d.pivots;
    return result;
  }
  result.status = LpStatus::optimal;
  result.value = ExactNumber(d.v);
  result.solution.assign(n, ExactNumber(0));
  for (std::size_t r = 0; r < d.basic.size(); ++r) {
    if (d.basic[r] < n) result.solution[d.basic[r]] = ExactNumber(d.b[r]);
  }
  result.pivots = d.pivots;
  return result;
}

}  // namespace stackprice
