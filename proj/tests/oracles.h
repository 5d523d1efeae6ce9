#ifndef FSX_TESTS_ORACLES_H_
#define FSX_TESTS_ORACLES_H_

// Brute-force references for the unit and acceptance tests. Nothing here
// calls into the library's rank tables, DPs or oracle grid.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace fsx::testing {

using Multiset = std::vector<std::uint64_t>;  // nonincreasing

inline std::vector<std::uint64_t> powers_upto(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 1; x <= n; x *= 2) out.push_back(x);
  return out;
}

inline std::vector<std::uint64_t> fibonacci_upto(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  std::uint64_t a = 1, b = 2;
  while (a <= n) {
    out.push_back(a);
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return out;
}

// Every representation of n (repetitions allowed) as a nonincreasing list.
inline std::vector<Multiset> all_representations(const std::vector<std::uint64_t>& elements,
                                                 std::uint64_t n) {
  std::vector<Multiset> out;
  Multiset cur;
  std::function<void(std::uint64_t, std::size_t)> rec = [&](std::uint64_t rest,
                                                              std::size_t limit) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = limit; i-- > 0;) {
      if (elements[i] > rest) continue;
      cur.push_back(elements[i]);
      rec(rest - elements[i], i + 1);
      cur.pop_back();
    }
  };
  rec(n, elements.size());
  return out;
}

inline std::size_t brute_rank(const std::vector<std::uint64_t>& elements, std::uint64_t n) {
  std::size_t best = SIZE_MAX;
  for (const auto& r : all_representations(elements, n)) best = std::min(best, r.size());
  return best;
}

inline bool has_distinct(const Multiset& m) {
  return std::adjacent_find(m.begin(), m.end()) == m.end();
}

// Regular at n: some shortest representation has no repeated element.
inline bool brute_regular_at(const std::vector<std::uint64_t>& elements, std::uint64_t n) {
  const auto reps = all_representations(elements, n);
  std::size_t best = SIZE_MAX;
  for (const auto& r : reps) best = std::min(best, r.size());
  for (const auto& r : reps) {
    if (r.size() == best && has_distinct(r)) return true;
  }
  return false;
}

// FS(A x B) restricted to the box [0, p1] x [0, p2], by set expansion.
inline std::set<std::pair<std::uint64_t, std::uint64_t>> brute_fs_box(
    const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
    std::uint64_t p1, std::uint64_t p2) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> reach{{0, 0}};
  for (std::uint64_t x : a) {
    if (x > p1) continue;
    for (std::uint64_t y : b) {
      if (y > p2) continue;
      std::vector<std::pair<std::uint64_t, std::uint64_t>> add;
      for (const auto& [u, v] : reach) {
        if (u + x <= p1 && v + y <= p2) add.emplace_back(u + x, v + y);
      }
      reach.insert(add.begin(), add.end());
    }
  }
  return reach;
}

inline bool brute_fs_member(const std::vector<std::uint64_t>& a,
                            const std::vector<std::uint64_t>& b, std::uint64_t p1,
                            std::uint64_t p2) {
  return brute_fs_box(a, b, p1, p2).count({p1, p2}) > 0;
}

// Distinct subset sums of `elements` up to n, by set expansion.
inline std::set<std::uint64_t> brute_subset_sums(const std::vector<std::uint64_t>& elements,
                                                 std::uint64_t n) {
  std::set<std::uint64_t> reach{0};
  for (std::uint64_t e : elements) {
    std::vector<std::uint64_t> add;
    for (std::uint64_t s : reach) {
      if (s + e <= n) add.push_back(s + e);
    }
    reach.insert(add.begin(), add.end());
  }
  return reach;
}

}  // namespace fsx::testing

#endif  // FSX_TESTS_ORACLES_H_
