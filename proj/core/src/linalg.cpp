#include "pommiez/linalg.hpp"

#include <algorithm>

#include "pommiez/errors.hpp"

namespace pommiez {

namespace {

std::vector<GaussianInteger> integerize(const std::vector<GaussianRational>& row) {
  mpz_class l = 1;
  for (const auto& x : row) {
    l = lcm(l, x.re().get_den());
    l = lcm(l, x.im().get_den());
  }
  std::vector<GaussianInteger> v;
  v.reserve(row.size());
  for (const auto& x : row) {
    mpq_class a = x.re() * l, b = x.im() * l;
    v.emplace_back(a.get_num(), b.get_num());
  }
  return v;
}

void normalize_content(std::vector<GaussianInteger>& v) {
  GaussianInteger g;
  for (const auto& x : v) g = gi_gcd(g, x);
  if (g.is_zero() || g == GaussianInteger{1, 0}) return;
  for (auto& x : v) x = gi_div_exact(x, g);
}

int leading_index(const std::vector<GaussianInteger>& v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) return static_cast<int>(k);
  }
  return -1;
}

}  // namespace

std::vector<GaussianInteger> RowSpan::reduce(const std::vector<GaussianRational>& row) const {
  if (static_cast<int>(row.size()) != cols_) throw InternalError("row span: column mismatch");
  std::vector<GaussianInteger> v = integerize(row);
  normalize_content(v);
  for (const Row& pivot : rows_) {
    if (v[pivot.lead].is_zero()) continue;
    GaussianInteger a = pivot.v[pivot.lead];
    GaussianInteger b = v[pivot.lead];
    for (int k = 0; k < cols_; ++k) v[k] = v[k] * a - pivot.v[k] * b;
    normalize_content(v);
  }
  return v;
}

bool RowSpan::insert(const std::vector<GaussianRational>& row) {
  std::vector<GaussianInteger> v = reduce(row);
  int lead = leading_index(v);
  if (lead < 0) return false;
  Row r{lead, std::move(v)};
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), r,
                              [](const Row& x, const Row& y) { return x.lead < y.lead; });
  rows_.insert(pos, std::move(r));
  return true;
}

bool RowSpan::contains(const std::vector<GaussianRational>& row) const {
  return leading_index(reduce(row)) < 0;
}

std::optional<std::vector<GaussianRational>> solve_exact(
    const std::vector<std::vector<GaussianRational>>& columns,
    const std::vector<GaussianRational>& rhs) {
  const std::size_t n = columns.size();
  const std::size_t m = rhs.size();
  for (const auto& c : columns) {
    if (c.size() != m) throw InternalError("solve: column height mismatch");
  }
  // augmented matrix, rows = equations
  std::vector<std::vector<GaussianRational>> a(m, std::vector<GaussianRational>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = columns[j][i];
    a[i][n] = rhs[i];
  }
  std::vector<int> pivot_col_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t sel = row;
    while (sel < m && a[sel][col].is_zero()) ++sel;
    if (sel == m) continue;
    std::swap(a[sel], a[row]);
    GaussianRational inv = a[row][col].inverse();
    for (std::size_t j = col; j <= n; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      GaussianRational f = a[i][col];
      for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++row;
  }
  for (std::size_t i = row; i < m; ++i) {
    if (!a[i][n].is_zero()) return std::nullopt;  // inconsistent
  }
  std::vector<GaussianRational> x(n);
  for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) x[pivot_col_of_row[i]] = a[i][n];
  return x;
}

}  // namespace pommiez
