#include "qtrunc/trunclab.hpp"

#include <vector>

#include "qtrunc/partitions.hpp"
#include "qtrunc/qbinomial.hpp"

namespace qtrunc {

namespace {

BigInt sign_pow(Degree e) { return (e % 2 == 0) ? BigInt(1) : BigInt(-1); }

void require_k(Degree k) {
  if (k < 1) throw ParameterError("truncation depth k must be >= 1, got " + std::to_string(k));
}

void require_N(Degree N) {
  if (N < 0) throw ParameterError("order N must be nonnegative, got " + std::to_string(N));
}

CheckReport with_params(CheckReport report, const TruncParams& p, const char* depth = "k") {
  report.set_param("R", p.R).set_param("S", p.S).set_param(depth, p.k).set_param("N", p.N);
  return report;
}

// acc += q^shift * a * b, touching only degrees shift..order(acc).
void addmul_shifted(IntSeries& acc, const IntSeries& a, const IntSeries& b, Degree shift) {
  const Degree top = acc.order() - shift;
  if (top < 0) return;
  std::vector<BigInt> tmp(static_cast<std::size_t>(top) + 1);
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  for (Degree i = 0; i <= top && i <= a.order(); ++i) {
    if (sgn(ca[static_cast<std::size_t>(i)]) == 0) continue;
    for (Degree j = 0; i + j <= top && j <= b.order(); ++j) {
      mpz_addmul(tmp[static_cast<std::size_t>(i + j)].get_mpz_t(), ca[static_cast<std::size_t>(i)].get_mpz_t(),
                 cb[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  for (Degree d = 0; d <= top; ++d) acc.add_term(d + shift, tmp[static_cast<std::size_t>(d)]);
}

// 1 / prod over e in {first, first+step, ...} \ {skip} of (1 - q^e).
IntSeries inverse_product_skipping(Degree first, Degree step, Degree skip, Degree N) {
  IntSeries out = IntSeries::one(N);
  for (Degree e = first; e <= N; e += step) {
    if (e != skip) out.div_one_minus(e);
  }
  return out;
}

IntSeries inverse_pochhammer(Degree a, Degree step, Degree N) {
  return inverse_product_skipping(a, step, -1, N);
}

void append_comparison(CheckReport& report, const std::string& label, const IntSeries& expected,
                       const IntSeries& actual) {
  const auto diff = compare_series(expected, actual);
  for (auto v : diff.violations()) {
    v.witness = label + ": " + v.witness;
    report.add_violation(std::move(v));
  }
}

void append_nonneg(CheckReport& report, const std::string& label, const IntSeries& s, Degree from) {
  const auto check = nonneg_from(s, from);
  for (auto v : check.violations()) {
    v.witness = label + ": " + v.witness;
    report.add_violation(std::move(v));
  }
}

}  // namespace

void validate_theorem_params(const TruncParams& p) {
  if (!(1 <= p.S && p.S < p.R)) {
    throw ParameterError("need 1 <= S < R, got R=" + std::to_string(p.R) + " S=" + std::to_string(p.S));
  }
  require_k(p.k);
  require_N(p.N);
}

std::string conjecture_regime(const TruncParams& p) { return 2 * p.S < p.R ? "conjectured" : "extended"; }

// Truncated pentagonal series -----------------------------------------------

IntSeries am_lhs(Degree k, Degree N) {
  require_k(k);
  require_N(N);
  IntSeries partial(N);
  for (Degree j = 0; j < k; ++j) {
    const Degree e = j * (3 * j + 1) / 2;
    if (e > N) break;
    const BigInt s = sign_pow(j);
    partial.add_term(e, s);
    partial.add_term(e + 2 * j + 1, -s);
  }
  return mul(invert(pochhammer(1, 1, N)), partial);
}

IntSeries am_rhs(Degree k, Degree N) {
  require_k(k);
  require_N(N);
  const Degree base = k * (k - 1) / 2;
  Degree nmax = k - 1;
  while (base + (k + 1) * (nmax + 1) <= N) ++nmax;
  IntSeries sum(N);
  if (nmax >= k) {
    const auto column = q_binomial_column(nmax - 1, k - 1);
    IntSeries inv = invert(pochhammer_finite(1, 1, k - 1, N));  // 1/(q;q)_n, advanced per n
    for (Degree n = k; n <= nmax; ++n) {
      if (n <= N) inv.div_one_minus(n);
      const IntSeries binom = column[static_cast<std::size_t>(n - 1)].to_series(N);
      addmul_shifted(sum, binom, inv, base + (k + 1) * n);
    }
  }
  sum *= sign_pow(k - 1);
  sum.add_term(0, BigInt(1));
  return sum;
}

CheckReport am_check(Degree k, Degree N) {
  CheckReport report("am-identity");
  report.set_param("k", k).set_param("N", N);
  append_comparison(report, "am_lhs vs am_rhs", am_lhs(k, N), am_rhs(k, N));
  return report;
}

CheckReport mk_identity_check(Degree n, Degree k) {
  require_k(k);
  if (n < 1) throw ParameterError("mk-identity needs n >= 1");
  CheckReport report("mk-identity");
  report.set_param("n", n).set_param("k", k);
  const std::uint64_t direct = m_k(static_cast<int>(k), static_cast<int>(n));
  IntSeries lhs = am_lhs(k, n);
  const BigInt from_series = sign_pow(k - 1) * lhs.coeff(n);
  const auto a2 = set_A_size(2, k - 1, n);
  const auto a1 = set_A_size(1, -k, n);
  const BigInt from_sets = BigInt(static_cast<unsigned long>(a2)) - BigInt(static_cast<unsigned long>(a1));
  const BigInt counted(static_cast<unsigned long>(direct));
  if (from_series != counted) {
    report.add_violation({"M_k(n) vs (-1)^{k-1} [q^n] am_lhs", to_string(counted), to_string(from_series), n});
  }
  if (from_sets != counted) {
    report.add_violation({"M_k(n) vs |A_{k-1}^(2)| - |A_{-k}^(1)|", to_string(counted), to_string(from_sets), n});
  }
  report.add_value("M_k", to_string(counted));
  report.add_value("series_coefficient", to_string(from_series));
  report.add_value("A_{k-1}^(2)", std::to_string(a2));
  report.add_value("A_{-k}^(1)", std::to_string(a1));
  report.add_note("convention: rank(empty) = 0");
  return report;
}

CheckReport theorem12_check(Degree n, Degree k) {
  require_k(k);
  if (n < 1) throw ParameterError("theorem12 needs n >= 1");
  CheckReport report("theorem12");
  report.set_param("n", n).set_param("k", k);
  BigInt lhs = 0;
  for (Degree j = 0; j < k; ++j) {
    lhs += sign_pow(j) * (p_euler(n - j * (3 * j + 1) / 2) - p_euler(n - j * (3 * j + 5) / 2 - 1));
  }
  lhs *= sign_pow(k - 1);
  const auto a2 = set_A_size(2, k - 1, n);
  const auto a1neg = set_A_size(1, -k, n);
  const auto a1k = set_A_size(1, k, n);
  const BigInt diff = BigInt(static_cast<unsigned long>(a2)) - BigInt(static_cast<unsigned long>(a1neg));
  if (lhs != diff) {
    report.add_violation({"partial p-sum vs |A_{k-1}^(2)| - |A_{-k}^(1)|", to_string(lhs), to_string(diff), n});
  }
  if (a1k != a2) {
    report.add_violation({"|A_k^(1)| vs |A_{k-1}^(2)|", std::to_string(a2), std::to_string(a1k), n});
  }
  if (a2 < a1neg) {
    report.add_violation({"|A_{k-1}^(2)| >= |A_{-k}^(1)|", ">= " + std::to_string(a1neg), std::to_string(a2), n});
  }
  report.add_value("A_{k-1}^(2)", std::to_string(a2));
  report.add_value("A_{-k}^(1)", std::to_string(a1neg));
  report.add_value("difference", to_string(diff));
  report.add_value("A_k^(1)", std::to_string(a1k));
  report.add_value("partial_sum", to_string(lhs));
  report.add_note("convention: rank(empty) = 0");
  return report;
}

// Truncated Jacobi triple product -------------------------------------------

IntSeries conjecture_series(const TruncParams& p) {
  validate_theorem_params(p);
  IntSeries partial(p.N);
  for (Degree j = 0; j < p.k; ++j) {
    const Degree e = p.R * j * (j + 1) / 2 - p.S * j;
    if (e > p.N) break;
    const BigInt s = sign_pow(j);
    partial.add_term(e, s);
    partial.add_term(e + (2 * j + 1) * p.S, -s);
  }
  IntSeries out = mul(invert(triple_product(p.R, p.S, p.N)), partial);
  out *= sign_pow(p.k - 1);
  return out;
}

CheckReport conjecture_check(const TruncParams& p) {
  auto report = with_params(nonneg_from(conjecture_series(p), std::min<Degree>(1, p.N), "conjecture"), p);
  report.add_note("regime: " + conjecture_regime(p));
  return report;
}

IntSeries d_series(const TruncParams& p) {
  validate_theorem_params(p);
  const IntSeries theta = signed_theta_sum(p.R, p.S, -p.k, p.k - 1, [](Degree j) { return big(j); }, p.N);
  return mul(invert(triple_product(p.R, p.S, p.N)), theta) - lambert_diff(p.R, p.S, p.N);
}

IntSeries theorem13_series(const TruncParams& p) {
  IntSeries out = d_series(p);
  out *= sign_pow(p.k - 1);
  return out;
}

CheckReport theorem13_check(const TruncParams& p) {
  return with_params(nonneg_from(theorem13_series(p), std::min<Degree>(1, p.N), "theorem13"), p);
}

CheckReport corollary14_report(Degree k, Degree nmax, Degree nmin) {
  require_k(k);
  if (nmin < 1) throw ParameterError("corollary14 needs n >= 1");
  CheckReport report("corollary14");
  report.set_param("k", k).set_param("nmin", nmin).set_param("nmax", nmax);
  const auto p = partition_numbers(std::max<Degree>(nmax, 0));
  const bool odd = k % 2 == 1;
  for (Degree n = nmin; n <= nmax; ++n) {
    BigInt lhs = 0;
    for (Degree j = -k; j <= k - 1; ++j) {
      const Degree m = n - gpn(j);
      if (m < 0) continue;
      lhs += sign_pow(j) * big(j) * p[static_cast<std::size_t>(m)];
    }
    const BigInt rhs = big(divisor_diff(n, 3, 1));
    if (odd ? lhs < rhs : lhs > rhs) {
      report.add_violation({"n=" + std::to_string(n), (odd ? ">= " : "<= ") + to_string(rhs), to_string(lhs), n});
    }
  }
  return report;
}

BigInt recurrence117_lhs(Degree n) {
  BigInt lhs = 0;
  for (Degree j = 0; gpn(j) <= n; ++j) lhs += sign_pow(j) * big(j) * p_euler(n - gpn(j));
  for (Degree j = -1; gpn(j) <= n; --j) lhs += sign_pow(j) * big(j) * p_euler(n - gpn(j));
  return lhs;
}

CheckReport recurrence117_check(Degree nmax, Degree nmin) {
  if (nmin < 1) throw ParameterError("recurrence117 needs n >= 1");
  CheckReport report("recurrence117");
  report.set_param("nmin", nmin).set_param("nmax", nmax);
  for (Degree n = nmin; n <= nmax; ++n) {
    const BigInt lhs = recurrence117_lhs(n);
    const BigInt rhs = big(divisor_diff(n, 3, 1));
    if (lhs != rhs) report.add_violation({"n=" + std::to_string(n), to_string(rhs), to_string(lhs), n});
  }
  return report;
}

// The f-series and the D_k decomposition ------------------------------------

IntSeries f_series(Degree R, Degree S, Degree k, Degree N) {
  require_k(k);
  require_N(N);
  if (R < 1) throw ParameterError("f_series needs R >= 1");
  const Degree b = R * k - S;
  if (b < 1) throw ParameterError("f_series needs Rk - S >= 1, got " + std::to_string(b));
  IntSeries sum(N);
  IntSeries inv = IntSeries::one(N);  // 1 / (q^R, q^b; q^R)_n
  for (Degree n = 0; R * n <= N; ++n) {
    if (n > 0) {
      inv.div_one_minus(R * n);
      if (b + R * (n - 1) <= N) inv.div_one_minus(b + R * (n - 1));
    }
    sum += inv.shifted(R * n);
  }
  return mul(mul(pochhammer(R, R, N), pochhammer(b, R, N)), sum);
}

IntSeries mao_theta_side(Degree R, Degree S, Degree k, Degree N) {
  require_k(k);
  const Degree b = R * k - S;
  if (b < 1) throw ParameterError("mao_theta_side needs Rk - S >= 1");
  IntSeries out(N);
  for (Degree j = 1;; ++j) {
    const Degree e = R * j * (j - 1) / 2 + b * j;
    if (e > N) break;
    out.add_term(e, sign_pow(j + 1));
  }
  return out;
}

CheckReport mao_check(const TruncParams& p) {
  validate_theorem_params(p);
  CheckReport report = with_params(CheckReport("mao"), p);
  const IntSeries one = IntSeries::one(p.N);
  append_comparison(report, "1 - f_{R,S,k}", mao_theta_side(p.R, p.S, p.k, p.N),
                    one - f_series(p.R, p.S, p.k, p.N));
  append_comparison(report, "1 - f_{R,-S,k}", mao_theta_side(p.R, -p.S, p.k, p.N),
                    one - f_series(p.R, -p.S, p.k, p.N));
  return report;
}

IntSeries i_series(int idx, const TruncParams& p) {
  validate_theorem_params(p);
  if (idx < 1 || idx > 4) throw ParameterError("I-series index must be 1..4");
  const Degree R = p.R, S = p.S, k = p.k;
  // Exponent R j(j+1)/2 + lin*j + offset, weight 1 or (j+1).
  const Degree lin = (idx == 1 || idx == 3) ? k * R - S : k * R + S;
  const Degree offset = (idx == 1 || idx == 3) ? 0 : S * (2 * k + 1);
  const bool weighted = idx >= 3;
  IntSeries out(p.N);
  for (Degree j = 0;; ++j) {
    const Degree e = R * j * (j + 1) / 2 + lin * j + offset;
    if (e > p.N) break;
    out.add_term(e, sign_pow(j) * (weighted ? big(j + 1) : BigInt(1)));
  }
  return out;
}

IntSeries mao_key_sum_side(Degree R, Degree a_exp, Degree N) {
  require_N(N);
  IntSeries out(N);
  for (Degree j = 0;; ++j) {
    const Degree e = R * j * (j + 1) / 2 + a_exp * j;
    if (e > N) break;
    out.add_term(e, sign_pow(j) * big(j + 1));
  }
  return out;
}

namespace {

// sum_{n,m>=0} q^{R(2n+m)} / ((a, q^R; q^R)_n (1 - a q^{R(n+m)})), a = q^{a_exp}.
IntSeries mao_key_double_sum(Degree R, Degree a_exp, Degree N) {
  if (R < 1 || a_exp < 1) throw ParameterError("key product identity needs R >= 1 and a = q^e with e >= 1");
  IntSeries total(N);
  IntSeries inv = IntSeries::one(N);  // 1 / (a, q^R; q^R)_n
  for (Degree n = 0; 2 * R * n <= N; ++n) {
    if (n > 0) {
      inv.div_one_minus(R * n);
      if (a_exp + R * (n - 1) <= N) inv.div_one_minus(a_exp + R * (n - 1));
    }
    // Inner sum over m expanded geometrically: q^{R(2n+m)} sum_r q^{r(a_exp + R(n+m))}.
    IntSeries inner(N);
    for (Degree m = 0; R * (2 * n + m) <= N; ++m) {
      const Degree step = a_exp + R * (n + m);
      for (Degree e = R * (2 * n + m); e <= N; e += step) inner.add_term(e, BigInt(1));
    }
    addmul_shifted(total, inv, inner, 0);
  }
  return total;
}

}  // namespace

IntSeries mao_key_product_side(Degree R, Degree a_exp, Degree N) {
  const IntSeries sum = mao_key_double_sum(R, a_exp, N);
  return mul(mul(pochhammer(a_exp, R, N), pochhammer(R, R, N)), sum);
}

Degree decomposition_prefactor_exponent(const TruncParams& p) {
  const Degree twice = p.R * p.k * p.k + (p.R - 2 * p.S) * p.k;
  if (twice % 2 != 0) {
    throw ParameterError("decomposition prefactor exponent (Rk^2 + (R-2S)k)/2 is not an integer for R=" +
                         std::to_string(p.R) + " S=" + std::to_string(p.S) + " k=" + std::to_string(p.k));
  }
  return twice / 2;
}

CheckReport decomposition_check(const TruncParams& p) {
  validate_theorem_params(p);
  CheckReport report = with_params(CheckReport("decomposition"), p);
  const Degree R = p.R, S = p.S, k = p.k, N = p.N;

  const Degree twice = R * k * k + (R - 2 * S) * k;
  if (twice % 2 != 0) {
    report.add_violation({"prefactor exponent (Rk^2+(R-2S)k)/2", "integer", std::to_string(twice) + "/2",
                          std::nullopt});
    return report;
  }
  const Degree pre = twice / 2;

  const IntSeries triple = triple_product(R, S, N);
  const IntSeries inv_triple = invert(triple);
  const IntSeries i1 = i_series(1, p), i2 = i_series(2, p), i3 = i_series(3, p), i4 = i_series(4, p);

  // Main split.
  IntSeries lhs = mul(triple, d_series(p));
  lhs *= sign_pow(k - 1);
  IntSeries bracket = scale(i1, big(k - 1)) + scale(i2, big(k)) + i3 + i4;
  append_comparison(report, "(-1)^{k-1} triple * D_k vs q^e((k-1)I1+kI2+I3+I4)", lhs, bracket.shifted(pre));

  // Closed forms via The f-series.
  const IntSeries one = IntSeries::one(N);
  const IntSeries one_minus_f_plus = one - f_series(R, S, k, N);
  const IntSeries one_minus_f_minus = one - f_series(R, -S, k, N);
  append_comparison(report, "q^{kR-S} I1 vs 1 - f_{R,S,k}", i1.shifted(k * R - S), one_minus_f_plus);
  const Degree i2_shift = (2 * S - R) * k;  // I2 = q^{i2_shift} (1 - f_{R,-S,k})
  append_comparison(report, "I2 vs q^{(2S-R)k}(1 - f_{R,-S,k})", i2.shifted(std::max<Degree>(0, -i2_shift)),
                    one_minus_f_minus.shifted(std::max<Degree>(0, i2_shift)));
  append_comparison(report, "I3 vs product form (a = q^{kR-S})", i3, mao_key_product_side(R, k * R - S, N));
  IntSeries i4_closed = mao_key_product_side(R, k * R + S, N).shifted(S * (2 * k + 1));
  append_comparison(report, "I4 vs product form (a = q^{kR+S})", i4, i4_closed);

  // Nonnegative factorizations of each I_i divided by the triple product.
  const IntSeries inv_qR = inverse_pochhammer(R, R, N);
  {
    // (1 - f_{R,S,k}) / triple.
    IntSeries factored(N);
    const IntSeries head = mul(inv_qR, inverse_pochhammer(S, R, N));
    for (Degree j = 0;; ++j) {
      const Degree e = (2 * j + 1) * (R * j + R * k - S);
      if (e > N) break;
      const Degree cancelled = R * (2 * j + 1) + R * k - S;
      addmul_shifted(factored, head, inverse_product_skipping(R - S, R, cancelled, N), e);
    }
    const IntSeries direct = mul(one_minus_f_plus, inv_triple);
    append_comparison(report, "(1 - f_{R,S,k})/triple factorization", direct, factored);
    append_nonneg(report, "(1 - f_{R,S,k})/triple", factored, 0);
    append_comparison(report, "q^{kR-S} I1/triple", mul(i1, inv_triple).shifted(k * R - S), factored);
  }
  {
    // (1 - f_{R,-S,k}) / triple.
    IntSeries factored(N);
    const IntSeries head = mul(inv_qR, inverse_pochhammer(R - S, R, N));
    for (Degree j = 0;; ++j) {
      const Degree e = (2 * j + 1) * (R * j + R * k + S);
      if (e > N) break;
      const Degree cancelled = R * (2 * j + 1) + R * k + S;
      addmul_shifted(factored, head, inverse_product_skipping(S, R, cancelled, N), e);
    }
    const IntSeries direct = mul(one_minus_f_minus, inv_triple);
    append_comparison(report, "(1 - f_{R,-S,k})/triple factorization", direct, factored);
    append_nonneg(report, "(1 - f_{R,-S,k})/triple", factored, 0);
    append_comparison(report, "I2/triple vs shifted factorization",
                      mul(i2, inv_triple).shifted(std::max<Degree>(0, -i2_shift)),
                      factored.shifted(std::max<Degree>(0, i2_shift)));
  }
  {
    // I3 / triple = 1/((q^S;q^R)_inf (q^{R-S};q^R)_{k-1}) * double sum with a = q^{kR-S}.
    IntSeries head = mul(inverse_pochhammer(S, R, N), invert(pochhammer_finite(R - S, R, k - 1, N)));
    const IntSeries factored = mul(head, mao_key_double_sum(R, k * R - S, N));
    append_comparison(report, "I3/triple factorization", mul(i3, inv_triple), factored);
    append_nonneg(report, "I3/triple", factored, 0);
  }
  {
    // I4 / triple = q^{S(2k+1)}/((q^{R-S};q^R)_inf (q^S;q^R)_k) * double sum with a = q^{kR+S}.
    IntSeries head = mul(inverse_pochhammer(R - S, R, N), invert(pochhammer_finite(S, R, k, N)));
    const IntSeries factored = mul(head, mao_key_double_sum(R, k * R + S, N)).shifted(S * (2 * k + 1));
    append_comparison(report, "I4/triple factorization", mul(i4, inv_triple), factored);
    append_nonneg(report, "I4/triple", factored, 0);
  }
  report.add_value("prefactor_exponent", std::to_string(pre));
  return report;
}

// Truncated cube series and the finite q-binomial identity ------------------

namespace {

IntSeries jacobi_cube_sum(Degree kmax, Degree N) {
  IntSeries out(N);
  for (Degree j = 0; j <= kmax; ++j) {
    const Degree e = j * (j + 1) / 2;
    if (e > N) break;
    out.add_term(e, sign_pow(j) * big(2 * j + 1));
  }
  return out;
}

}  // namespace

IntSeries gz_series(Degree k, Degree N) {
  require_k(k);
  require_N(N);
  IntSeries out = mul(invert(power(pochhammer(1, 1, N), 3)), jacobi_cube_sum(k, N));
  out *= sign_pow(k);
  return out;
}

CheckReport gz_check(Degree k, Degree N) {
  auto report = nonneg_from(gz_series(k, N), std::min<Degree>(1, N), "gz");
  report.set_param("k", k).set_param("N", N);
  return report;
}

CheckReport jacobi_cube_check(Degree N) {
  require_N(N);
  CheckReport report("jacobi-cube");
  report.set_param("N", N);
  append_comparison(report, "(q;q)^3 vs Jacobi sum", jacobi_cube_sum(N, N), power(pochhammer(1, 1, N), 3));
  const auto t = t_counts(N);
  for (Degree n = 1; n <= N; ++n) {
    BigInt acc = 0;
    for (Degree j = 0; j * (j + 1) / 2 <= n; ++j) {
      acc += sign_pow(j) * big(2 * j + 1) * t[static_cast<std::size_t>(n - j * (j + 1) / 2)];
    }
    if (acc != 0) report.add_violation({"t(n) recurrence", "0", to_string(acc), n});
  }
  return report;
}

CheckReport pentagonal_check(Degree R, Degree S, Degree N) {
  CheckReport report("pentagonal");
  report.set_param("R", R).set_param("S", S).set_param("N", N);
  const IntSeries theta = bilateral_theta(R, S, N);
  append_comparison(report, "triple_product vs bilateral_theta", theta, triple_product(R, S, N));
  if (R == 3 && S == 1) append_comparison(report, "(q;q) vs bilateral_theta", theta, pochhammer(1, 1, N));
  return report;
}

namespace {

void validate_wang_yee(Degree R, Degree S, Degree m, Degree N) {
  if (!(1 <= S && 2 * S <= R)) {
    throw ParameterError("finite q-binomial identity needs 1 <= S <= R/2, got R=" + std::to_string(R) +
                         " S=" + std::to_string(S));
  }
  if (m < 1) throw ParameterError("finite q-binomial identity needs m >= 1");
  require_N(N);
}

}  // namespace

IntSeries wang_yee_lhs(Degree R, Degree S, Degree m, Degree N) {
  validate_wang_yee(R, S, m, N);
  IntSeries partial(N);
  for (Degree n = 0; n < m; ++n) {
    const Degree e = n * (n + 1) / 2 * R - n * S;
    if (e > N) break;
    partial.add_term(e, sign_pow(n));
    partial.add_term(e + (2 * n + 1) * S, -sign_pow(n));
  }
  return mul(invert(triple_product(R, S, N)), partial);
}

IntSeries wang_yee_rhs(Degree R, Degree S, Degree m, Degree N) {
  validate_wang_yee(R, S, m, N);
  const Degree base = m * (m - 1) / 2 * R;
  // Smallest exponent of the n-th term is base + n(R - S).
  Degree nmax = m - 1;
  while (base + (nmax + 1) * (R - S) <= N) ++nmax;

  IntSeries total(N);
  if (nmax >= m) {
    std::vector<IntSeries> inv;  // 1/(q^R;q^R)_i
    inv.push_back(IntSeries::one(N));
    for (Degree i = 1; i <= nmax; ++i) {
      inv.push_back(inv.back());
      if (R * i <= N) inv.back().div_one_minus(R * i);
    }
    std::vector<std::vector<IntSeries>> pair(static_cast<std::size_t>(nmax) + 1);
    for (Degree i = 0; i <= nmax; ++i) {
      for (Degree j = 0; i + j <= nmax; ++j) {
        pair[static_cast<std::size_t>(i)].push_back(mul(inv[static_cast<std::size_t>(i)], inv[static_cast<std::size_t>(j)]));
      }
    }
    const auto column = q_binomial_column(nmax - 1, m - 1, R);
    for (Degree n = m; n <= nmax; ++n) {
      IntSeries inner(N);
      for (Degree j = 0; j <= n; ++j) {
        for (Degree h = 0; j + h <= n; ++h) {
          for (Degree kk = 0; j + h + kk <= n; ++kk) {
            const Degree i = n - j - h - kk;
            const Degree e = base + (m * j + h * kk) * R + (h - kk) * S + n * R;
            if (e > N) continue;
            addmul_shifted(inner, pair[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                           pair[static_cast<std::size_t>(h)][static_cast<std::size_t>(kk)], e);
          }
        }
      }
      const IntSeries binom = column[static_cast<std::size_t>(n - 1)].to_series(N);
      total += mul(inner, binom);
    }
  }
  total *= sign_pow(m - 1);
  total.add_term(0, BigInt(1));
  return total;
}

CheckReport wang_yee_check(Degree R, Degree S, Degree m, Degree N) {
  CheckReport report("wang-yee");
  report.set_param("R", R).set_param("S", S).set_param("m", m).set_param("N", N);
  append_comparison(report, "LHS vs RHS", wang_yee_lhs(R, S, m, N), wang_yee_rhs(R, S, m, N));
  return report;
}

}  // namespace qtrunc
