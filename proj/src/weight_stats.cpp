#include "f2q/weight_stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace f2q {

std::string convention_name(AvgConvention c) {
  return c == AvgConvention::majoranas2n ? "majoranas2n" : "extended2n+1";
}

AvgConvention convention_from_name(const std::string& name) {
  if (name == "majoranas2n") return AvgConvention::majoranas2n;
  if (name == "extended2n+1") return AvgConvention::extended2n1;
  throw Error("unknown averaging convention '" + name + "'");
}

std::vector<std::size_t> majorana_weights(const Encoding& e) {
  std::vector<std::size_t> out;
  out.reserve(2 * e.n);
  if (e.g_based()) {
    for (const IndexSetQuad& q : e.sets) {
      auto uw = q.update_mask.words();
      auto pw = q.parity_mask.words();
      auto rw = q.remainder_mask.words();
      std::size_t even = 0, odd = 0;
      for (std::size_t w = 0; w < uw.size(); ++w) {
        even += std::popcount(uw[w] | pw[w]);
        odd += std::popcount(uw[w] | rw[w]);
      }
      out.push_back(even);
      out.push_back(odd);
    }
    return out;
  }
  for (std::size_t k = 0; k < 2 * e.n; ++k) out.push_back(e.paths[k].size());
  return out;
}

std::size_t product_weight(const Encoding& e) {
  if (e.g_based()) {
    // Gamma_{2i} Gamma_{2i+1} ~ Z_{F(i)}, so the full product is Z on the
    // xor of all flip sets.
    BitVector acc(e.n);
    for (const IndexSetQuad& q : e.sets) acc ^= q.flip_mask;
    return acc.popcount();
  }
  PauliString prod(e.n);
  for (std::size_t k = 0; k < 2 * e.n; ++k) prod = prod * majorana(e, k);
  return prod.weight();
}

Rational average_weight(const Encoding& e, AvgConvention convention) {
  std::vector<std::size_t> ws = majorana_weights(e);
  long long total = std::accumulate(ws.begin(), ws.end(), 0LL);
  if (convention == AvgConvention::majoranas2n)
    return Rational(total, 2 * static_cast<long long>(e.n));
  return Rational(total + static_cast<long long>(product_weight(e)),
                  2 * static_cast<long long>(e.n) + 1);
}

namespace {

/// Largest k with 3^k <= m.
unsigned log3_floor(long long m) {
  unsigned k = 0;
  long long p = 3;
  while (p <= m) {
    ++k;
    p *= 3;
  }
  return k;
}

}  // namespace

Rational ternary_average(std::size_t n) {
  if (n < 1) throw Error("ternary_average: n must be >= 1");
  long long nn = static_cast<long long>(n);
  unsigned k = log3_floor(2 * nn + 1);
  long long p3k = 1;
  for (unsigned i = 0; i < k; ++i) p3k *= 3;
  long long num = (2 * k + 3) * nn + k - 3 * (p3k - 1) / 2;
  return Rational(num, 2 * nn + 1);
}

Rational ternary_average_recurrence(std::size_t n) {
  if (n < 1) throw Error("ternary_average_recurrence: n must be >= 1");
  long long total = 3;  // T_1: three weight-1 strings
  for (long long m = 2; m <= static_cast<long long>(n); ++m)
    total += 2 * log3_floor(2 * m - 1) + 3;
  return Rational(total, 2 * static_cast<long long>(n) + 1);
}

std::size_t worst_case_weight(const Encoding& e, std::size_t i) {
  if (!e.g_based()) throw UnsupportedScheme("worst_case_weight: needs a G-based scheme");
  if (i >= e.n) throw IndexOutOfRange("worst_case_weight: mode out of range");
  const IndexSetQuad& q = e.sets[i];
  auto uw = q.update_mask.words();
  auto pw = q.parity_mask.words();
  std::size_t c = 0;
  for (std::size_t w = 0; w < uw.size(); ++w) c += std::popcount(uw[w] | pw[w]);
  return c + 1;
}

double weight_lower_bound(std::size_t n) {
  if (n < 1) throw Error("weight_lower_bound: n must be >= 1");
  return std::log(2.0 * static_cast<double>(n)) / std::log(3.0);
}

WeightReport weight_report(const Encoding& e) {
  WeightReport r;
  r.scheme = e.scheme;
  r.n = e.n;
  r.weights = majorana_weights(e);
  long long total = std::accumulate(r.weights.begin(), r.weights.end(), 0LL);
  r.avg_majoranas = Rational(total, 2 * static_cast<long long>(e.n));
  r.avg_extended = Rational(total + static_cast<long long>(product_weight(e)),
                            2 * static_cast<long long>(e.n) + 1);
  r.max_weight = *std::max_element(r.weights.begin(), r.weights.end());
  if (e.g_based()) {
    r.worst_case.reserve(e.n);
    for (std::size_t i = 0; i < e.n; ++i) r.worst_case.push_back(worst_case_weight(e, i));
  }
  r.lower_bound = weight_lower_bound(e.n);
  return r;
}

std::vector<WeightReport> compare_table(const std::vector<Scheme>& schemes, std::size_t n_min,
                                        std::size_t n_max) {
  if (n_min < 1 || n_max < n_min) throw Error("compare_table: empty n range");
  const std::size_t span = n_max - n_min + 1;
  std::vector<WeightReport> out(schemes.size() * span);
  const std::int64_t total = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::size_t s = static_cast<std::size_t>(idx) / span;
    std::size_t n = n_min + static_cast<std::size_t>(idx) % span;
    out[static_cast<std::size_t>(idx)] = weight_report(make_encoding(schemes[s], n));
  }
  return out;
}

namespace {

std::string real6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

std::string table_csv(const std::vector<WeightReport>& reports, AvgConvention convention) {
  std::ostringstream out;
  out << "scheme,n,avg_num,avg_den,avg_real,max,bound\n";
  for (const WeightReport& r : reports) {
    const Rational& avg =
        convention == AvgConvention::majoranas2n ? r.avg_majoranas : r.avg_extended;
    out << scheme_name(r.scheme) << ',' << r.n << ',' << avg.numerator() << ','
        << avg.denominator() << ',' << real6(rational_real(avg)) << ',' << r.max_weight << ','
        << real6(r.lower_bound) << '\n';
  }
  return out.str();
}

std::string table_text(const std::vector<WeightReport>& reports) {
  std::ostringstream out;
  out << "# scheme n avg2n avg2n_real avg_ext avg_ext_real max bound\n";
  for (const WeightReport& r : reports) {
    out << scheme_name(r.scheme) << ' ' << r.n << ' ' << rational_str(r.avg_majoranas) << ' '
        << real6(rational_real(r.avg_majoranas)) << ' ' << rational_str(r.avg_extended) << ' '
        << real6(rational_real(r.avg_extended)) << ' ' << r.max_weight << ' '
        << real6(r.lower_bound) << '\n';
  }
  return out.str();
}

}  // namespace f2q
