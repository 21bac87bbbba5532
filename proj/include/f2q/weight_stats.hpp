#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "f2q/encoding.hpp"
#include "f2q/rational.hpp"

namespace f2q {

/// Two averaging conventions: the plain mean over the 2n Majorana strings,
/// and the extended form that appends the weight of the normalized product
/// of all 2n Majoranas (the (2n+1)-th anticommuting operator) before
/// averaging. Tree-to-tree weight comparisons are convention-sensitive, so
/// both are exposed.
enum class AvgConvention { majoranas2n, extended2n1 };

std::string convention_name(AvgConvention c);
AvgConvention convention_from_name(const std::string& name);

/// Per-operator Pauli weights, exact.
std::vector<std::size_t> majorana_weights(const Encoding& e);

/// Weight of prod_k Gamma_k over k = 0..2n-1.
std::size_t product_weight(const Encoding& e);

Rational average_weight(const Encoding& e, AvgConvention convention);

/// Piecewise closed form for the complete/extended ternary tree: with k the
/// largest integer such that 3^k <= 2n+1, the average over the 2n+1 strings
/// is ((2k+3)n + k - 3(3^k-1)/2) / (2n+1).
Rational ternary_average(std::size_t n);
/// Same value via the total-weight recurrence T_n = T_{n-1} + 2k + 3.
Rational ternary_average_recurrence(std::size_t n);

/// w_n(i) = |U(i) union P(i)| + 1, an upper bound on the weights of the two
/// Majoranas of mode i. G-based schemes only.
std::size_t worst_case_weight(const Encoding& e, std::size_t i);

/// log_3(2n), the information-theoretic floor on the average weight of any
/// one-to-one encoding.
double weight_lower_bound(std::size_t n);

struct WeightReport {
  Scheme scheme = Scheme::jw;
  std::size_t n = 0;
  std::vector<std::size_t> weights;       // per k, 2n entries
  Rational avg_majoranas;                 // mean over the 2n Majoranas
  Rational avg_extended;                  // mean over 2n+1 (product appended)
  std::size_t max_weight = 0;
  std::vector<std::size_t> worst_case;    // w_n(i) per mode; empty for ternary
  double lower_bound = 0.0;
};

WeightReport weight_report(const Encoding& e);

/// One report per (scheme, n), n ascending within each scheme; rows are
/// independent and computed in parallel.
std::vector<WeightReport> compare_table(const std::vector<Scheme>& schemes, std::size_t n_min,
                                        std::size_t n_max);

/// CSV with the frozen header "scheme,n,avg_num,avg_den,avg_real,max,bound";
/// the avg columns carry the selected convention.
std::string table_csv(const std::vector<WeightReport>& reports, AvgConvention convention);

/// Text table carrying both averaging conventions.
std::string table_text(const std::vector<WeightReport>& reports);

}  // namespace f2q
