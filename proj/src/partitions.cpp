#include "qtrunc/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "qtrunc/errors.hpp"
#include "qtrunc/series.hpp"

namespace qtrunc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw ParameterError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw ParameterError("partition parts must be non-increasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (int i = 0; i < p.length(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p.parts()[static_cast<std::size_t>(i)]);
  }
  return out + ")";
}

nlohmann::json to_json(const Partition& p) {
  return nlohmann::json(std::vector<int>(p.parts().begin(), p.parts().end()));
}

Partition partition_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParameterError("partition JSON must be an array of parts");
  std::vector<int> parts;
  for (const auto& item : j) {
    if (!item.is_number_integer()) throw ParameterError("partition parts must be integers");
    parts.push_back(item.get<int>());
  }
  return Partition(std::move(parts));
}

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
  if (n < 0) return;
  if (n == 0) {
    visit(Partition());
    return;
  }
  std::vector<int> a{n};
  for (;;) {
    visit(Partition(a));
    // Rightmost part larger than 1.
    int ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) return;
    const int v = --a.back();
    int rest = ones + 1;
    while (rest >= v) {
      a.push_back(v);
      rest -= v;
    }
    if (rest > 0) a.push_back(rest);
  }
}

std::vector<Partition> enumerate(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::int64_t gpn(std::int64_t j) { return j * (3 * j + 1) / 2; }

namespace {

void extend_partition_numbers(std::vector<BigInt>& table, std::int64_t nmax) {
  if (table.empty()) table.emplace_back(1);
  for (std::int64_t n = static_cast<std::int64_t>(table.size()); n <= nmax; ++n) {
    BigInt acc = 0;
    for (std::int64_t j = 1;; ++j) {
      const std::int64_t b1 = gpn(j);
      const std::int64_t b2 = gpn(-j);
      if (b2 > n) break;
      const bool plus = (j % 2) == 1;
      const BigInt& t2 = table[static_cast<std::size_t>(n - b2)];
      if (plus) acc += t2; else acc -= t2;
      if (b1 <= n) {
        const BigInt& t1 = table[static_cast<std::size_t>(n - b1)];
        if (plus) acc += t1; else acc -= t1;
      }
    }
    table.push_back(acc);
  }
}

}  // namespace

BigInt p_euler(std::int64_t n) {
  if (n < 0) return 0;
  static std::mutex mutex;
  static std::vector<BigInt> table;
  std::lock_guard lock(mutex);
  extend_partition_numbers(table, n);
  return table[static_cast<std::size_t>(n)];
}

std::vector<BigInt> partition_numbers(std::int64_t nmax) {
  std::vector<BigInt> table;
  if (nmax < 0) return table;
  extend_partition_numbers(table, nmax);
  return table;
}

int rank(const Partition& p) { return p.largest() - p.length(); }

Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p.parts()) {
    for (int i = 0; i < part; ++i) ++out[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(out));
}

namespace {

void require_variant(int variant) {
  if (variant != 1 && variant != 2) throw ParameterError("A-set variant must be 1 or 2");
}

bool rank_matches(int variant, std::int64_t j, const Partition& p) {
  const std::int64_t r = rank(p);
  return variant == 1 ? r <= 3 * j : r > 3 * j;
}

template <typename Visit>
void for_each_in_A(int variant, std::int64_t j, std::int64_t n, Visit&& visit) {
  require_variant(variant);
  if (n < 1) throw ParameterError("A-sets are defined for n >= 1");
  const std::int64_t m = n - gpn(j);
  if (m < 0) return;
  for_each_partition(static_cast<int>(m), [&](const Partition& p) {
    if (rank_matches(variant, j, p)) visit(p);
  });
}

}  // namespace

std::vector<Partition> set_A(int variant, std::int64_t j, std::int64_t n) {
  std::vector<Partition> out;
  for_each_in_A(variant, j, n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::size_t set_A_size(int variant, std::int64_t j, std::int64_t n) {
  std::size_t count = 0;
  for_each_in_A(variant, j, n, [&](const Partition&) { ++count; });
  return count;
}

bool in_set_A(int variant, std::int64_t j, std::int64_t n, const Partition& p) {
  require_variant(variant);
  return p.weight() == n - gpn(j) && rank_matches(variant, j, p);
}

std::uint64_t m_k(int k, int n) {
  if (k < 1 || n < 1) throw ParameterError("m_k needs k >= 1 and n >= 1");
  std::uint64_t count = 0;
  std::vector<int> seen(static_cast<std::size_t>(k) + 1);
  for_each_partition(n, [&](const Partition& p) {
    std::fill(seen.begin(), seen.end(), 0);
    int above = 0;
    int below = 0;
    for (int part : p.parts()) {
      if (part > k) {
        ++above;
      } else {
        seen[static_cast<std::size_t>(part)] = 1;
        if (part < k) ++below;
      }
    }
    if (seen[static_cast<std::size_t>(k)]) return;
    for (int i = 1; i < k; ++i) {
      if (!seen[static_cast<std::size_t>(i)]) return;
    }
    if (above > below) ++count;
  });
  return count;
}

std::int64_t divisor_diff(std::int64_t n, std::int64_t R, std::int64_t S) {
  if (n < 1) throw ParameterError("divisor_diff needs n >= 1");
  if (!(1 <= S && S < R)) throw ParameterError("divisor_diff needs 1 <= S < R");
  std::int64_t diff = 0;
  auto tally = [&](std::int64_t d) {
    const std::int64_t r = d % R;
    if (r == S) ++diff;
    if (r == R - S) --diff;
  };
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    tally(d);
    if (d != n / d) tally(n / d);
  }
  return diff;
}

std::vector<BigInt> product_counts(std::int64_t R, std::int64_t S, std::int64_t N) {
  const auto inv = invert(triple_product(R, S, N));
  return {inv.coefficients().begin(), inv.coefficients().end()};
}

std::vector<BigInt> t_counts(std::int64_t N) {
  const auto inv = invert(power(pochhammer(1, 1, N), 3));
  return {inv.coefficients().begin(), inv.coefficients().end()};
}

}  // namespace qtrunc
