#include "qtrunc/bijections.hpp"

#include <set>
#include <string>
#include <vector>

#include "qtrunc/errors.hpp"

namespace qtrunc {

IndexedPartition IndexedPartition::make(Partition lambda, std::int64_t j, std::int64_t n) {
  if (lambda.weight() != n - gpn(j)) {
    throw ParameterError("partition " + to_string(lambda) + " does not have weight n - gpn(j) = " +
                         std::to_string(n - gpn(j)));
  }
  return {std::move(lambda), j, n};
}

PhiResult phi(const IndexedPartition& x) {
  const auto& lam = x.lambda;
  const std::int64_t j = x.j;
  if (lam.weight() != x.n - gpn(j)) throw ParameterError("phi: weight does not match n - gpn(j)");
  if (lam.empty()) {
    if (j == 0) throw ParameterError("phi is undefined on (empty, 0), i.e. n = 0");
    if (j >= 1) {
      return {{Partition({static_cast<int>(3 * j - 1)}), j - 1, x.n}, 1};
    }
    return {{Partition(std::vector<int>(static_cast<std::size_t>(-3 * j - 2), 1)), j + 1, x.n}, 2};
  }

  const auto parts = lam.parts();
  const std::int64_t t = lam.length();
  const std::int64_t l1 = lam.largest();
  std::vector<int> out;
  if (t + 3 * j >= l1) {
    if (t + 3 * j - 1 > 0) out.push_back(static_cast<int>(t + 3 * j - 1));
    for (int part : parts) {
      if (part > 1) out.push_back(part - 1);
    }
    return {{Partition(std::move(out)), j - 1, x.n}, 1};
  }
  for (std::size_t i = 1; i < parts.size(); ++i) out.push_back(parts[i] + 1);
  out.insert(out.end(), static_cast<std::size_t>(l1 - (t + 3 * j) - 1), 1);
  return {{Partition(std::move(out)), j + 1, x.n}, 2};
}

Partition psi(const Partition& lambda, int k) {
  if (k < 1) throw ParameterError("psi needs k >= 1");
  if (rank(lambda) > -3 * k) {
    throw ParameterError("psi needs rank(lambda) <= -3k; rank" + to_string(lambda) + " = " +
                         std::to_string(rank(lambda)) + " > " + std::to_string(-3 * k));
  }
  const Partition conj = conjugate(lambda);
  std::vector<int> parts(conj.parts().begin(), conj.parts().end());
  parts.front() += 2 * k - 1;
  return Partition(std::move(parts));
}

namespace {

std::string describe(const IndexedPartition& x) {
  return to_string(x.lambda) + " j=" + std::to_string(x.j);
}

}  // namespace

CheckReport verify_phi(std::int64_t n) {
  if (n < 1) throw ParameterError("verify_phi needs n >= 1");
  CheckReport report("phi");
  report.set_param("n", n);
  report.add_note("convention: rank(empty) = 0");
  report.add_note("convention: phi extended to the empty partition at n = gpn(j)");

  // j ranges over every index with gpn(j) <= n; gpn grows with |j| on each side.
  std::int64_t jmin = 0;
  while (gpn(jmin - 1) <= n) --jmin;
  std::int64_t jmax = 0;
  while (gpn(jmax + 1) <= n) ++jmax;

  std::size_t even_total = 0;
  std::size_t odd_total = 0;
  std::size_t visited = 0;
  for (std::int64_t j = jmin; j <= jmax; ++j) {
    for_each_partition(static_cast<int>(n - gpn(j)), [&](const Partition& lam) {
      ++visited;
      ((j % 2 == 0) ? even_total : odd_total) += 1;
      const IndexedPartition x{lam, j, n};
      const PhiResult once = phi(x);
      const auto& y = once.image;
      if (y.lambda.weight() != n - gpn(y.j)) {
        report.add_violation({"weight of phi(" + describe(x) + ")", std::to_string(n - gpn(y.j)),
                              std::to_string(y.lambda.weight()), std::nullopt});
        return;
      }
      if ((y.j - j) != 1 && (y.j - j) != -1) {
        report.add_violation({"index parity of phi(" + describe(x) + ")", "j +- 1",
                              std::to_string(y.j), std::nullopt});
      }
      const PhiResult twice = phi(y);
      if (!(twice.image == x)) {
        report.add_violation({"phi^2(" + describe(x) + ")", describe(x), describe(twice.image), std::nullopt});
      }
      // A_j^(1) <-> A_{j-1}^(2) exchange.
      const bool low = in_set_A(1, j, n, lam);
      if (low) {
        if (!(once.case_id == 1 && in_set_A(2, j - 1, n, y.lambda))) {
          report.add_violation({"phi(" + describe(x) + ") from A_j^(1)", "element of A_{j-1}^(2)",
                                describe(y), std::nullopt});
        }
      } else if (!(once.case_id == 2 && in_set_A(1, j + 1, n, y.lambda))) {
        report.add_violation({"phi(" + describe(x) + ") from A_j^(2)", "element of A_{j+1}^(1)",
                              describe(y), std::nullopt});
      }
    });
  }
  if (even_total != odd_total) {
    report.add_violation({"sum_{j even} p(n-b(j)) vs sum_{j odd}", std::to_string(even_total),
                          std::to_string(odd_total), n});
  }
  report.add_value("pairs", std::to_string(visited));
  report.add_value("even_total", std::to_string(even_total));
  report.add_value("odd_total", std::to_string(odd_total));
  return report;
}

CheckReport verify_psi(std::int64_t n, int k) {
  if (n < 1 || k < 1) throw ParameterError("verify_psi needs n >= 1 and k >= 1");
  CheckReport report("psi");
  report.set_param("n", n).set_param("k", k);
  const auto source = set_A(1, -k, n);
  std::set<Partition> images;
  for (const auto& lam : source) {
    const Partition img = psi(lam, k);
    if (!in_set_A(2, k - 1, n, img)) {
      report.add_violation({"psi(" + to_string(lam) + ")", "element of A_{k-1}^(2)(n)", to_string(img),
                            std::nullopt});
    }
    if (!images.insert(img).second) {
      report.add_violation({"psi(" + to_string(lam) + ")", "image not hit before", to_string(img),
                            std::nullopt});
    }
  }
  const std::size_t target = set_A_size(2, k - 1, n);
  report.add_value("source_size", std::to_string(source.size()));
  report.add_value("target_size", std::to_string(target));
  report.add_value("images", std::to_string(images.size()));
  return report;
}

}  // namespace qtrunc
