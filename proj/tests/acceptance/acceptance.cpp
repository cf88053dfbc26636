// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "arrfiber/arrangement.hpp"
#include "arrfiber/errors.hpp"
#include "arrfiber/hjcf.hpp"
#include "arrfiber/local.hpp"
#include "arrfiber/resolution.hpp"
#include "arrfiber/surface.hpp"
#include "arrfiber/verify.hpp"

using namespace arrfiber;

namespace {

// Collects failed expectations for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ |= !ok;
  }
  bool ok() const { return !failed_; }
  int count() const { return count_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  bool failed_ = false;
  int count_ = 0;
  std::vector<std::string> failures_;
};

std::string str(const mpz_class& x) { return x.get_str(); }

template <typename A, typename B>
void expect_eq(Check& c, const A& actual, const B& expected, const std::string& what) {
  const bool ok = actual == expected;
  std::ostringstream msg;
  if (!ok) msg << what << ": got " << actual << ", want " << expected;
  c.expect(ok, msg.str());
}

void hesse_regression(Check& c) {
  const CatalogEntry e = catalog_profile("hesse");
  expect_eq(c, mpz_class(*e.q), mpz_class(3), "q");
  const GlobalInvariants g = global_invariants(e.profile);
  expect_eq(c, g.k2_bar, mpz_class(768), "K_bar^2");
  expect_eq(c, g.chi_bar, mpz_class(201), "chi_bar");
  expect_eq(c, g.c1sq, mpz_class(336), "c1^2");
  expect_eq(c, g.c2, mpz_class(360), "c2");
  const HodgeDiamond h = hodge_diamond(e.profile, *e.q);
  expect_eq(c, h.pg, mpz_class(60), "pg");
  expect_eq(c, h.h11, mpz_class(250), "h11");
  expect_eq(c, *g.chern_ratio, mpq_class(14, 15), "ratio");
}

void ceva_regressions(Check& c) {
  struct Row {
    std::int64_t m, q, c1sq, c2, pg, h11;
  };
  for (const Row& row : {Row{2, 1, 0, 36, 3, 32}, Row{3, 2, 117, 135, 22, 97}}) {
    const CatalogEntry e = catalog_profile("ceva", row.m);
    const std::string tag = "ceva(" + std::to_string(row.m) + ") ";
    expect_eq(c, mpz_class(*e.q), mpz_class(row.q), tag + "q");
    const ChernNumbers ch = chern_numbers(e.profile);
    expect_eq(c, ch.c1sq, mpz_class(row.c1sq), tag + "c1^2");
    expect_eq(c, ch.c2, mpz_class(row.c2), tag + "c2");
    const HodgeDiamond h = hodge_diamond(e.profile, row.q);
    expect_eq(c, h.pg, mpz_class(row.pg), tag + "pg");
    expect_eq(c, h.h11, mpz_class(row.h11), tag + "h11");
  }
  for (std::int64_t m = 4; m <= 12; ++m) {
    const ChernNumbers ch = chern_numbers(catalog_profile("ceva", m).profile);
    const std::string tag = "ceva(" + std::to_string(m) + ") ";
    expect_eq(c, ch.c1sq, mpz_class(3 * m * (m - 2) * (5 * m - 2)), tag + "c1^2");
    expect_eq(c, ch.c2, mpz_class(9 * m * (m * m - 2 * m + 2)), tag + "c2");
  }
}

void braid_regressions(Check& c) {
  for (std::int64_t n = 2; n <= 10; ++n) {
    const mpz_class N = n;
    mpz_class c1sq, c2;
    if (n % 3 == 1) {
      c1sq = N * (N + 1) * (3 * N * N * (N * N - 15) + 2 * N * (2 * N * N - 21) + 188) / 24;
      c2 = N * (N + 1) * (N * N * N * N - 7 * N * N - 2 * N + 20) / 8;
    } else {
      c1sq = N * (N + 1) * (N - 2) * (N - 3) * (3 * N * N + 19 * N + 32) / 24;
      c2 = N * (N + 1) * (N - 2) * (N * N * N + 2 * N * N - 3 * N - 12) / 8;
    }
    const Profile p = catalog_profile("braid", n).profile;
    // Direct aggregation over the local table.
    mpz_class agg1 = mpz_class(p.d()) * (p.d() - 4) * (p.d() - 4);
    mpz_class agg2 = base_invariants(p).chi_bar;
    for (const auto& term : local_table(p)) {
      agg1 += term.local.dci * term.count;
      agg2 += term.local.dcii * term.count;
    }
    const std::string tag = "braid(" + std::to_string(n) + ") ";
    expect_eq(c, agg1, c1sq, tag + "c1^2 aggregation vs closed form");
    expect_eq(c, agg2, c2, tag + "c2 aggregation vs closed form");
    const ChernNumbers ch = chern_numbers(p);
    expect_eq(c, ch.c1sq, agg1, tag + "c1^2");
    expect_eq(c, ch.c2, agg2, tag + "c2");
    if (n == 4) {
      expect_eq(c, ch.c1sq, mpz_class(270), "braid(4) c1^2");
      expect_eq(c, ch.c2, mpz_class(390), "braid(4) c2");
    }
  }
}

void local_table_check(Check& c) {
  for (std::int64_t d = 2; d <= 120; ++d) {
    const LocalInvariants inv = local_invariants(2, d);
    expect_eq(c, inv.dci, mpz_class(0), "(2," + std::to_string(d) + ") DCI");
    expect_eq(c, inv.dcii, mpz_class(d - 1), "(2," + std::to_string(d) + ") DCII");
  }
  for (std::int64_t r = 3; r <= 10; ++r) {
    const mpz_class s = (r - 2) * (r - 2);
    for (std::int64_t d = r; d <= 120; ++d) {
      const LocalInvariants inv = local_invariants(r, d);
      const std::string tag = "(" + std::to_string(r) + "," + std::to_string(d) + ") ";
      if (d % r == 0) {
        expect_eq(c, inv.dci, -d * s, tag + "DCI");
        expect_eq(c, inv.dcii, mpz_class(d - (r - 1) * (r - 1)), tag + "DCII");
      } else if (d % r == 1) {
        expect_eq(c, inv.dci, -(d - 1) * s, tag + "DCI");
        expect_eq(c, inv.dcii, mpz_class(d - 1), tag + "DCII");
      } else if (d % r == r - 1) {
        expect_eq(c, inv.dci, -d * s + (2 * r - 5) * (r - 1), tag + "DCI");
        expect_eq(c, inv.dcii, mpz_class(d + (r - 1) * (r - 2)), tag + "DCII");
      }
    }
  }
}

void oracle_equivalence(Check& c) {
  const auto reports = sweep_verify(10, 60);
  for (const auto& rep : reports) {
    const std::string tag = "(" + std::to_string(rep.r) + "," + std::to_string(rep.d) + ")";
    c.expect(rep.matches(), tag + " oracle mismatch");
    const ResolutionGraph g = build_resolution_graph(rep.r, rep.d);
    c.expect(check_negative_definite(intersection_matrix(g)), tag + " not negative definite");
    // Throws NonIntegralCoefficient otherwise.
    c.expect(coefficients_from_matrix(g).size() == g.vertex_count(), tag + " coefficient count");
  }
  c.expect(reports.size() >= 450, "pair count");
}

// Balanced profiles without points of multiplicity d or d-1, filtered by
// Hirzebruch's inequality (satisfied by every complex arrangement of this kind).
std::vector<Profile> random_profiles(std::size_t count) {
  std::mt19937_64 rng(0xA11CE);
  std::vector<Profile> out;
  while (out.size() < count) {
    const std::int64_t d = 4 + static_cast<std::int64_t>(rng() % 27);
    std::int64_t budget = d * (d - 1) / 2;
    Profile::Counts t;
    const int kinds = static_cast<int>(rng() % 4);
    for (int k = 0; k < kinds && d >= 5; ++k) {
      const std::int64_t r = 3 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d - 4));
      const std::int64_t pairs = r * (r - 1) / 2;
      if (budget / pairs == 0) continue;
      const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(std::min<std::int64_t>(budget / pairs, 12)));
      t[r] += n;
      budget -= n * pairs;
    }
    if (budget > 0) t[2] += budget;
    const Profile p = validate_profile(d, t);
    if (hirzebruch_diagnostic(p).holds) out.push_back(p);
  }
  return out;
}

void trichotomy(Check& c) {
  for (std::int64_t d = 4; d <= 40; ++d) {
    const Verdict v = verdict(catalog_profile("pencil", d).profile);
    expect_eq(c, v.my_tilde, mpz_class(2 * d * (3 - d)), "pencil(" + std::to_string(d) + ") MY");
    c.expect(v.my_sign < 0, "pencil sign");
  }
  for (std::int64_t d = 3; d <= 40; ++d) {
    const Verdict v = verdict(catalog_profile("near-pencil", d).profile);
    expect_eq(c, v.my_tilde, mpz_class(4 * d * (d - 1)), "near-pencil(" + std::to_string(d) + ") MY");
    c.expect(v.my_sign > 0, "near-pencil sign");
  }
  const Profile p3 = catalog_profile("pencil", 3).profile;
  const GlobalInvariants g3 = global_invariants(p3);
  expect_eq(c, g3.my_tilde, mpz_class(0), "d=3 pencil MY");
  expect_eq(c, g3.c1sq, mpz_class(0), "d=3 pencil c1^2");
  expect_eq(c, g3.c2, mpz_class(0), "d=3 pencil c2");
  for (const Profile& p : random_profiles(200)) {
    const Verdict v = verdict(p);
    c.expect(!v.pencil && v.my_tilde > 0, "random profile d=" + std::to_string(p.d()) + " MY=" + str(v.my_tilde));
  }
}

void structural_identities(Check& c) {
  for (std::int64_t r = 2; r <= 60; ++r) {
    for (std::int64_t d = r; d <= 60; ++d) {
      const WeightData w = weight_data(r, d);
      mpq_class closed(mpz_class((r - 2) * (w.g - 1)), 2);
      closed.canonicalize();
      c.expect(genus_from_weights(w) == closed, "genus (" + std::to_string(r) + "," + std::to_string(d) + ")");
    }
  }
  for (std::int64_t r = 3; r <= 120; ++r) {
    for (std::int64_t d = r; d <= 120; ++d) {
      if (d % r == 1) continue;
      const WeightData w = weight_data(r, d);
      const TwoByTwo G = g_product(hj_expand(w.alpha, w.beta).terms);
      const std::string tag = "G(" + std::to_string(r) + "," + std::to_string(d) + ")";
      c.expect(G.determinant() == 1, tag + " det");
      c.expect((1 + w.bprime * w.beta) % w.alpha == 0, tag + " divisibility");
      c.expect(G.m[0][1] == w.bprime - w.alpha, tag + " gamma");
      c.expect(G.m[1][1] == (1 + w.bprime * w.beta) / w.alpha - w.beta, tag + " delta");
    }
  }
  for (std::int64_t r = 2; r <= 120; ++r)
    for (std::int64_t d = r; d <= 120; ++d) c.expect(local_invariants(r, d).e > -2 * r * (r - 1), "E estimate");
  for (std::int64_t d = 4; d <= 500; ++d) c.expect(local_invariants(3, d).e >= 4 * (d - 3), "E_{3,d} floor");

  std::vector<CatalogEntry> entries{catalog_profile("hesse")};
  for (std::int64_t m = 2; m <= 20; ++m) entries.push_back(catalog_profile("ceva", m));
  for (std::int64_t n = 2; n <= 10; ++n) entries.push_back(catalog_profile("braid", n));
  for (const auto& e : entries) {
    const ChernNumbers ch = chern_numbers(e.profile);
    c.expect((ch.c1sq + ch.c2 + 12 * (*e.q - 1)) % 12 == 0, e.name + " Noether");
  }
}

void chern_ratio_family(Check& c) {
  for (std::int64_t d : {7, 10, 13}) {
    std::optional<mpq_class> previous;
    for (std::int64_t t3 = 0; t3 <= d * (d - 1) / 6; ++t3) {
      const Profile p = validate_profile(d, {{2, d * (d - 1) / 2 - 3 * t3}, {3, t3}});
      const GlobalInvariants g = global_invariants(p);
      const std::string tag = "d=" + std::to_string(d) + " t3=" + std::to_string(t3);
      c.expect(g.chern_ratio.has_value(), tag + " ratio");
      if (previous && g.chern_ratio) c.expect(*g.chern_ratio >= *previous, tag + " monotone");
      previous = g.chern_ratio;
      c.expect(verdict(p).general_type == GeneralType::Yes, tag + " general type");
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"Hesse regression", hesse_regression},
      {"Ceva regressions", ceva_regressions},
      {"Braid regressions", braid_regressions},
      {"Local-invariant table", local_table_check},
      {"Oracle equivalence", oracle_equivalence},
      {"Miyaoka-Yau trichotomy", trichotomy},
      {"Structural identities", structural_identities},
      {"Chern ratio monotonicity and general type", chern_ratio_family},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (check.ok() ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " ("
              << check.count() << " checks)\n";
    for (const auto& f : check.failures()) std::cout << "    " << f << "\n";
    failed += !check.ok();
  }
  return failed == 0 ? 0 : 1;
}
