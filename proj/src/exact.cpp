#include "bpa/exact.hpp"

#include <mutex>
#include <vector>

namespace bpa {
namespace {

// One triangle per number family, grown row by row under a mutex and read
// back by value. Rows are only appended, never rewritten, so a value handed
// out once stays valid forever.
template <typename Cell>
class Triangle {
 public:
  using Filler = void (*)(std::vector<std::vector<Cell>>&, index_t row);

  explicit Triangle(Filler fill) : fill_(fill) {}

  Cell at(index_t n, index_t k) {
    std::lock_guard<std::mutex> lock(mu_);
    while (rows_.size() <= n) fill_(rows_, rows_.size());
    if (k >= rows_[n].size()) return Cell(0);
    return rows_[n][k];
  }

 private:
  std::mutex mu_;
  std::vector<std::vector<Cell>> rows_;
  Filler fill_;
};

void fill_pascal(std::vector<std::vector<Nat>>& rows, index_t n) {
  std::vector<Nat> row(n + 1, Nat(1));
  for (index_t k = 1; k < n; ++k) row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
  rows.push_back(std::move(row));
}

void fill_stirling2(std::vector<std::vector<Nat>>& rows, index_t n) {
  std::vector<Nat> row(n + 1, Nat(0));
  if (n == 0) {
    row[0] = 1;
  } else {
    for (index_t k = 1; k <= n; ++k) {
      row[k] = rows[n - 1][k - 1];
      if (k < rows[n - 1].size())
        row[k] += Nat(static_cast<unsigned long>(k)) * rows[n - 1][k];
    }
  }
  rows.push_back(std::move(row));
}

void fill_stirling1(std::vector<std::vector<Int>>& rows, index_t m) {
  std::vector<Int> row(m + 1, Int(0));
  if (m == 0) {
    row[0] = 1;
  } else {
    // s(m, t) = s(m-1, t-1) - (m-1) * s(m-1, t)
    for (index_t t = 1; t <= m; ++t) {
      row[t] = rows[m - 1][t - 1];
      if (t < rows[m - 1].size())
        row[t] -= Int(static_cast<unsigned long>(m - 1)) * rows[m - 1][t];
    }
  }
  rows.push_back(std::move(row));
}

void fill_factorial(std::vector<std::vector<Nat>>& rows, index_t n) {
  // Degenerate one-cell rows; reuses the triangle cache machinery.
  Nat value = (n == 0) ? Nat(1)
                       : rows[n - 1][0] * Nat(static_cast<unsigned long>(n));
  rows.push_back({std::move(value)});
}

}  // namespace

Nat binomial(index_t n, index_t k) {
  static Triangle<Nat> cache(&fill_pascal);
  return cache.at(n, k);
}

Nat factorial(index_t n) {
  static Triangle<Nat> cache(&fill_factorial);
  return cache.at(n, 0);
}

Nat stirling2(index_t n, index_t k) {
  static Triangle<Nat> cache(&fill_stirling2);
  return cache.at(n, k);
}

Int stirling1_signed(index_t m, index_t t) {
  static Triangle<Int> cache(&fill_stirling1);
  return cache.at(m, t);
}

Nat rising_factorial(const Nat& x, index_t m) {
  Nat result(1);
  Nat factor(x);
  for (index_t i = 0; i < m; ++i, ++factor) result *= factor;
  return result;
}

Nat power(const Nat& base, index_t exp) {
  Nat result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(),
             static_cast<unsigned long>(exp));
  return result;  // mpz_pow_ui(_, 0, 0) == 1, matching the 0^0 = 1 convention
}

}  // namespace bpa
