// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include "f2q/dense.hpp"
#include "f2q/encoding.hpp"
#include "f2q/weight_stats.hpp"
#include "run_cli.hpp"

using namespace f2q;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int id, bool pass, const std::string& label, double secs) {
  std::printf("%s criterion %2d: %s (%.3fs)\n", pass ? "PASS" : "FAIL", id, label.c_str(), secs);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::size_t ceil_log3(std::size_t n) {
  std::size_t k = 0, p = 1;
  while (p < n) {
    p *= 3;
    ++k;
  }
  return k;
}

BitMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rng() & 1) m.set(i, j, true);
    try {
      gf2_invert(m);
      return m;
    } catch (const NotInvertible&) {
    }
  }
}

const char* kFenwick7G =
    "1000000\n1100000\n0010000\n1111000\n0000100\n0000110\n1111111\n";
const char* kFenwick7Ginv =
    "1000000\n1100000\n0010000\n0111000\n0000100\n0000110\n0001011\n";

void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  double best = 1e9;
  for (int rep = 0; rep < 5; ++rep) {
    auto r0 = std::chrono::steady_clock::now();
    BitMatrix g = completion_matrix(build_fenwick(7));
    BitMatrix ginv = gf2_invert(g);
    pass = g == BitMatrix::parse(kFenwick7G) && ginv == BitMatrix::parse(kFenwick7Ginv);
    best = std::min(best, seconds_since(r0));
    if (!pass) break;
  }
  pass = pass && best < 1e-3;
  std::ostringstream label;
  label << "fenwick-7 G and G^-1 match the published matrices bit-for-bit, built in "
        << best * 1e6 << "us";
  report(1, pass, label.str(), seconds_since(t0));
}

void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  Encoding fen = make_encoding(Scheme::fenwick, 7);

  PauliPolynomial a2_expect = PauliPolynomial::from_terms(
      7, {{Dyadic(1, 0, 1), PauliString::from_z_x_sets(7, {1}, {2, 3, 6})},
          {Dyadic(0, -1, 1),
           PauliString::from_z_x_sets(7, {1, 2}, {2, 3, 6}, Phase::minus_i())}});
  PauliPolynomial a3_expect = PauliPolynomial::from_terms(
      7, {{Dyadic(1, 0, 1), PauliString::from_z_x_sets(7, {1, 2}, {3, 6})},
          {Dyadic(0, -1, 1), PauliString::from_z_x_sets(7, {3}, {3, 6}, Phase::minus_i())}});
  bool pass = creation(fen, 2) == a2_expect && creation(fen, 3) == a3_expect;

  // A_3+ : |q> -> (-1)^{q1+q2} |q0 q1 q2 ~q3 q4 q5 ~q6> on the q1+q2+q3=0
  // subspace, zero elsewhere, on all 2^7 basis states.
  PauliPolynomial a3 = creation(fen, 3);
  for (std::uint64_t b = 0; b < 128 && pass; ++b) {
    BitVector q = bits_from_index(7, b);
    StateVector expect = StateVector::zero(7);
    if (!(q.get(1) ^ q.get(2) ^ q.get(3))) {
      BitVector q2 = q;
      q2.flip(3);
      q2.flip(6);
      expect.amp[basis_index(q2)] = Dyadic((q.get(1) ^ q.get(2)) ? -1 : 1, 0, 0);
    }
    pass = apply_polynomial(a3, StateVector::basis(7, b)) == expect;
  }
  double secs = seconds_since(t0);
  pass = pass && secs < 1.0;
  report(2, pass, "A2+ and A3+ match the published operators; A3+ basis action exact on all 128 states",
         secs);
}

void criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::string note;
  const std::vector<Scheme> all{Scheme::jw,         Scheme::parity,
                                Scheme::fenwick,    Scheme::sierpinski,
                                Scheme::sierpinski_pruned, Scheme::ternary};
  for (Scheme s : all)
    for (std::size_t n = 1; n <= 10 && pass; ++n) {
      if (!check_car(make_encoding(s, n)).pass) {
        pass = false;
        note = " dense CAR failed for " + scheme_name(s) + " n=" + std::to_string(n);
      }
    }
  std::vector<std::size_t> grid;
  for (std::size_t n = 1; n <= 32; ++n) grid.push_back(n);
  for (std::size_t n : {64u, 81u, 128u, 243u, 364u, 500u, 729u}) grid.push_back(n);
  for (Scheme s : {Scheme::fenwick, Scheme::sierpinski})
    for (std::size_t n : grid) {
      if (!pass) break;
      auto strings = majoranas(make_encoding(s, n));
      bool hermitian = true;
      for (const PauliString& p : strings) hermitian = hermitian && p.phase().is_real();
      if (!hermitian || find_commuting_pair(strings).has_value()) {
        pass = false;
        note = " symplectic check failed for " + scheme_name(s) + " n=" + std::to_string(n);
      }
    }
  double secs = seconds_since(t0);
  pass = pass && secs < 120.0;
  report(3, pass,
         "anticommutation: dense CAR for 6 schemes at n=1..10, symplectic pairwise to n=729" + note,
         secs);
}

void criterion4() {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::string note;
  for (Scheme s : {Scheme::jw, Scheme::parity, Scheme::fenwick, Scheme::sierpinski,
                   Scheme::sierpinski_pruned})
    for (std::size_t n = 1; n <= 8 && pass; ++n) {
      VerificationReport rep = check_fock_action(make_encoding(s, n));
      if (!rep.pass) {
        pass = false;
        note = " " + rep.text();
      }
    }
  double secs = seconds_since(t0);
  pass = pass && secs < 120.0;
  report(4, pass,
         "fock action: ladder operators reproduce the fermionic phases exactly, n<=8, all G-based schemes" +
             note,
         secs);
}

void criterion5() {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::string note;
  for (Scheme s : {Scheme::jw, Scheme::parity, Scheme::fenwick, Scheme::sierpinski,
                   Scheme::sierpinski_pruned})
    for (std::size_t n = 1; n <= 8 && pass; ++n) {
      if (!check_conjugation(make_encoding(s, n)).pass) {
        pass = false;
        note = " conjugation failed for " + scheme_name(s) + " n=" + std::to_string(n);
      }
    }

  auto lemma2_holds = [](const Encoding& e) {
    for (const IndexSetQuad& q : e.sets) {
      std::size_t uf = 0, up = 0, ur = 0;
      auto uw = q.update_mask.words();
      auto fw = q.flip_mask.words();
      auto pw = q.parity_mask.words();
      auto rw = q.remainder_mask.words();
      for (std::size_t w = 0; w < uw.size(); ++w) {
        uf += std::popcount(uw[w] & fw[w]);
        up += std::popcount(uw[w] & pw[w]);
        ur += std::popcount(uw[w] & rw[w]);
      }
      if (uf % 2 != 1 || up % 2 != 0 || ur % 2 != 1) return false;
    }
    return true;
  };
  std::vector<std::size_t> grid;
  for (std::size_t n = 1; n <= 16; ++n) grid.push_back(n);
  for (std::size_t n : {27u, 64u, 81u, 128u, 243u, 729u}) grid.push_back(n);
  for (Scheme s : {Scheme::jw, Scheme::parity, Scheme::fenwick, Scheme::sierpinski})
    for (std::size_t n : grid)
      if (pass && !lemma2_holds(make_encoding(s, n))) {
        pass = false;
        note = " lemma-2 parity failed for " + scheme_name(s) + " n=" + std::to_string(n);
      }
  for (std::size_t n : {1u, 2u, 4u, 8u, 16u, 27u, 64u, 81u})
    if (pass && !lemma2_holds(make_encoding(Scheme::sierpinski_pruned, n))) {
      pass = false;
      note = " lemma-2 parity failed for sierpinski_pruned n=" + std::to_string(n);
    }
  std::mt19937_64 rng(64646464);
  for (int t = 0; t < 100 && pass; ++t)
    if (!lemma2_holds(encoding_from_matrix(random_invertible(64, rng)))) {
      pass = false;
      note = " lemma-2 parity failed on a random invertible matrix";
    }
  report(5, pass,
         "lemma 1 conjugation exact for n<=8; lemma 2 parities on built schemes to n=729 and 100 random G at n=64" +
             note,
         seconds_since(t0));
}

void criterion6() {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::string note;
  std::size_t formula_violations = 0;
  for (std::size_t n = 1; n <= 729 && pass; ++n) {
    Encoding e = make_encoding(Scheme::sierpinski, n);
    std::size_t bound = ceil_log3(n) + 1;
    for (std::size_t w : majorana_weights(e))
      if (w > bound) {
        pass = false;
        note = " weight bound violated at n=" + std::to_string(n);
      }
    bool formula_ok = true;
    for (std::size_t i = 0; i < n; ++i)
      if (worst_case_weight(e, i) > bound) formula_ok = false;
    if (!formula_ok) ++formula_violations;
  }
  for (std::size_t n = 1; n <= 729 && pass; ++n) {
    std::size_t lo = 0, p = 1;
    while (p * 3 <= 2 * n + 1) {
      p *= 3;
      ++lo;
    }
    std::size_t hi = (p == 2 * n + 1) ? lo : lo + 1;
    for (const TreePath& path : enumerate_paths(build_ternary_tree(n)))
      if (path.size() < lo || path.size() > hi) {
        pass = false;
        note = " ternary weight outside band at n=" + std::to_string(n);
      }
  }
  std::ostringstream label;
  label << "sierpinski Majorana weights <= ceil(log3 n)+1 and ternary weights in the "
           "floor/ceil band for all n<=729"
        << note << "; literal |U cup P|+1 formula exceeds that bound at " << formula_violations
        << "/729 sizes (documented upper-bound slack)";
  report(6, pass, label.str(), seconds_since(t0));
}

void criterion7() {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = ternary_average(1) == Rational(1) && ternary_average(4) == Rational(2) &&
              ternary_average(13) == Rational(3);
  long long total = 3;
  for (std::size_t n = 1; n <= 10000 && pass; ++n) {
    if (n >= 2) {
      std::size_t k = 0, p = 3;
      while (p <= 2 * n - 1) {
        p *= 3;
        ++k;
      }
      total += 2 * static_cast<long long>(k) + 3;
    }
    pass = ternary_average(n) == Rational(total, 2 * static_cast<long long>(n) + 1);
  }
  report(7, pass,
         "ternary average: exact 1,2,3 at n=1,4,13 and closed form == recurrence for n<=10000",
         seconds_since(t0));
}

void criterion8() {
  auto t0 = std::chrono::steady_clock::now();
  const std::size_t kMax = 200;
  std::vector<Rational> avg2(kMax + 1), avgx(kMax + 1);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t n = 1; n <= static_cast<std::int64_t>(kMax); ++n) {
    Encoding e = make_encoding(Scheme::sierpinski_pruned, static_cast<std::size_t>(n));
    avg2[static_cast<std::size_t>(n)] = average_weight(e, AvgConvention::majoranas2n);
    avgx[static_cast<std::size_t>(n)] = average_weight(e, AvgConvention::extended2n1);
  }
  std::size_t m2 = 0, mx = 0;
  bool pass = true;
  std::string note;
  for (std::size_t n = 1; n <= kMax; ++n) {
    Rational tt = ternary_average(n);
    bool hit2 = avg2[n] == tt, hitx = avgx[n] == tt;
    if (hit2) ++m2;
    if (hitx) ++mx;
    if (!hit2 && !hitx && pass) {
      pass = false;
      note = " no convention matches at n=" + std::to_string(n) + " (pruned " +
             rational_str(avg2[n]) + " / " + rational_str(avgx[n]) + " vs ternary " +
             rational_str(tt) + ")";
    }
    if (rational_real(avgx[n]) < weight_lower_bound(n) - 1e-12 && pass) {
      pass = false;
      note = " pruned average below the information bound at n=" + std::to_string(n);
    }
  }
  double secs = seconds_since(t0);
  pass = pass && secs < 600.0;
  std::ostringstream label;
  label << "pruned-sierpinski average == ternary closed form for every n=1..200"
        << " (extended2n+1 matches " << mx << "/200, majoranas2n matches " << m2 << "/200)"
        << note;
  report(8, pass, label.str(), secs);
}

void criterion9() {
  auto t0 = std::chrono::steady_clock::now();
  using EdgeSet = std::set<std::pair<std::size_t, std::size_t>>;
  EdgeSet expect9{{1, 0}, {1, 2}, {4, 1}, {4, 3}, {4, 5}, {4, 7}, {7, 6}, {7, 8}};
  Forest s9 = build_sierpinski(9);
  bool pass = EdgeSet(s9.edges.begin(), s9.edges.end()) == expect9;

  EdgeSet expect18{{1, 0},   {1, 2},   {4, 1},   {4, 3},  {4, 5},
                   {4, 7},   {7, 6},   {7, 8},   {10, 9}, {10, 11},
                   {13, 10}, {13, 12}, {13, 14}, {16, 15}, {16, 17}};
  Encoding pruned = make_encoding(Scheme::sierpinski_pruned, 18);
  pass = pass && EdgeSet(pruned.forest->edges.begin(), pruned.forest->edges.end()) == expect18;
  report(9, pass, "published n=9 unpruned and n=18 pruned edge sets reproduced exactly",
         seconds_since(t0));
}

void criterion10() {
  auto t0 = std::chrono::steady_clock::now();
  PauliString xyz(3);
  xyz.set_letter(0, Letter::X);
  xyz.set_letter(1, Letter::Y);
  xyz.set_letter(2, Letter::Z);
  SymplecticVector v = phi(xyz);
  bool pass = v.x == BitVector{1, 1, 0} && v.z == BitVector{0, 1, 1};

  BitMatrix cnot(2, 2);
  cnot.set(0, 0, true);
  cnot.set(1, 0, true);
  cnot.set(1, 1, true);
  CliffordTableau t = tableau_from_G(cnot);
  pass = pass && t.columns.str() == "1000\n1100\n0011\n0001\n" &&
         t.signs == BitVector{1, 1, 1, 1};

  std::mt19937_64 rng(101010);
  for (int rep = 0; rep < 100 && pass; ++rep) {
    std::size_t n = 1 + rng() % 32;
    pass = is_symplectic(tableau_from_G(random_invertible(n, rng)).columns);
  }
  report(10, pass,
         "phi(X1 Y2 Z3) = (1,1,0,0,1,1); CNOT tableau matches; 100 random tableaux are symplectic",
         seconds_since(t0));
}

void criterion11() {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::string note;
  for (const std::string& args :
       {std::string("emit --scheme fenwick --n 7 --what creation --format json"),
        std::string("emit --scheme sierpinski_pruned --n 18 --what tree"),
        std::string("stats --schemes jw,parity,fenwick,sierpinski,sierpinski_pruned,ternary "
                    "--n-min 1 --n-max 20 --csv")}) {
    CliResult a = run_cli(args);
    CliResult b = run_cli(args);
    if (a.exit_code != 0 || a.out != b.out || a.out.empty()) {
      pass = false;
      note = " non-deterministic or failing: " + args;
    }
  }
  if (pass && run_cli("verify --scheme fenwick --n 7 --corrupt").exit_code != 1) {
    pass = false;
    note = " corrupted majorana set did not exit 1";
  }
  if (pass && run_cli("verify --scheme jw --n 0").exit_code != 2) {
    pass = false;
    note = " n=0 did not exit 2";
  }
  if (pass && run_cli("emit --scheme ternary --n 4 --what matrix").exit_code != 2) {
    pass = false;
    note = " ternary matrix emission did not exit 2";
  }
  report(11, pass, "CLI byte-determinism and exit-code contract (0 pass, 1 failure, 2 usage)" + note,
         seconds_since(t0));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  if (g_failures) std::printf("%d criterion(s) FAILED\n", g_failures);
  else std::printf("all 11 criteria passed\n");
  return g_failures ? 1 : 0;
}
