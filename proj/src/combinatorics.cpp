#include "starsep/combinatorics.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace starsep {

namespace {

std::mutex g_table_mutex;
int g_cap = 64;

// Row-by-row table of a_m^(n), indexed [n][m], built under g_table_mutex.
std::vector<std::vector<Int>>& coeff_rows() {
  static std::vector<std::vector<Int>> rows;
  return rows;
}

}  // namespace

Int stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) return Int(0);
  if (n == 0) return Int(1);  // k == 0 here
  if (k == 0) return Int(0);
  std::vector<Int> prev(static_cast<size_t>(n) + 1, Int(0)), cur;
  prev[0] = 1;  // row n = 0
  for (int i = 1; i <= n; ++i) {
    cur.assign(static_cast<size_t>(n) + 1, Int(0));
    for (int j = 1; j <= i; ++j)
      cur[static_cast<size_t>(j)] =
          Int(j) * prev[static_cast<size_t>(j)] + prev[static_cast<size_t>(j) - 1];
    prev = cur;
  }
  return prev[static_cast<size_t>(k)];
}

int coeff_table_cap() {
  std::lock_guard<std::mutex> lock(g_table_mutex);
  return g_cap;
}

void set_coeff_table_cap(int cap) {
  std::lock_guard<std::mutex> lock(g_table_mutex);
  if (cap < 2) throw error("coefficient table cap must be at least 2");
  g_cap = cap;
  if (static_cast<int>(coeff_rows().size()) > cap + 1) coeff_rows().resize(static_cast<size_t>(cap) + 1);
}

Int coeff_a(int n, int m) {
  if (m < 2 || m > n) throw error("coeff_a requires 2 <= m <= n");
  std::lock_guard<std::mutex> lock(g_table_mutex);
  if (n > g_cap)
    throw error("coeff_a table capped at n <= " + std::to_string(g_cap));
  auto& rows = coeff_rows();
  if (rows.empty()) rows.resize(3);  // rows[2] seeds the recursion
  if (rows.size() < 3 || rows[2].empty()) {
    rows.resize(std::max<size_t>(rows.size(), 3));
    rows[2] = {Int(0), Int(0), Int(1)};  // a_2^(2) = 1
  }
  for (int i = static_cast<int>(rows.size()); i <= n; ++i) {
    std::vector<Int> row(static_cast<size_t>(i) + 1, Int(0));
    const auto& prev = rows[static_cast<size_t>(i) - 1];
    row[2] = 1;
    for (int j = 3; j <= i; ++j) {
      Int left = prev[static_cast<size_t>(j) - 1];
      Int right = (j <= i - 1) ? prev[static_cast<size_t>(j)] : Int(0);
      row[static_cast<size_t>(j)] = left + Int(j - 1) * right;
    }
    rows.push_back(std::move(row));
  }
  return rows[static_cast<size_t>(n)][static_cast<size_t>(m)];
}

RationalH alpha(int m) {
  if (m < 0) throw error("alpha requires m >= 0");
  if (m == 0) return RationalH(Rat(1));
  Poly den{Rat(1)};
  for (int n = 1; n <= m - 1; ++n)
    den = den * Poly(std::vector<Rat>{Rat(1), Rat(-n)});  // 1 - n h
  return RationalH(Poly::h().pow(static_cast<unsigned>(m)), den);
}

RationalH beta(int m) {
  if (m < 0) throw error("beta requires m >= 0");
  if (m == 0) return RationalH(Rat(1));
  Poly den{Rat(1)};
  for (int n = 1; n <= m - 1; ++n)
    den = den * Poly(std::vector<Rat>{Rat(1), Rat(n)});  // 1 + n h
  return RationalH(Poly::h().pow(static_cast<unsigned>(m)), den);
}

RationalH c_covariant(int n, SpaceKind space) {
  if (n < 0) throw error("c_covariant requires n >= 0");
  RationalH a = space == SpaceKind::CPN ? alpha(n) : beta(n);
  return a * RationalH(1 / factorial(n));
}

Rat factorial(int n) {
  Rat r(1);
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace starsep
