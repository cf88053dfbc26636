#include "arrfiber/surface.hpp"

#include "arrfiber/errors.hpp"

namespace arrfiber {

namespace {

void require_balanced(const Profile& p) {
  if (!p.balanced()) fail(ErrorKind::UnbalancedProfile, "operation requires a balanced (realisable) profile");
}

int sign_of(const mpz_class& x) { return sgn(x); }

}  // namespace

std::string_view general_type_name(GeneralType g) noexcept {
  switch (g) {
    case GeneralType::Yes: return "Yes";
    case GeneralType::No: return "No";
    case GeneralType::Unknown: return "Unknown";
  }
  return "Unknown";
}

mpz_class HodgeDiamond::h(int p, int q_index) const {
  if (p < 0 || p > 2 || q_index < 0 || q_index > 2) fail(ErrorKind::BadParameter, "Hodge index out of range");
  if (p + q_index == 0 || p + q_index == 4) return 1;
  if (p + q_index == 1 || p + q_index == 3) return q;
  return p == 1 ? h11 : pg;
}

BaseInvariants base_invariants(const Profile& p) {
  require_balanced(p);
  const mpz_class d = p.d();
  mpz_class sum_sq = 0;
  mpz_class sum_my = 0;
  for (const auto& [r, count] : p.counts()) {
    sum_sq += mpz_class(count) * (r - 1) * (r - 1);
    sum_my += mpz_class(count) * (r - 1) * (3 - r);
  }
  BaseInvariants out;
  out.k2_bar = d * (d - 4) * (d - 4);
  out.chi_bar = d * (d * d - 4 * d + 6) - (d - 1) * sum_sq;
  out.my_bar = 3 * out.chi_bar - out.k2_bar;
  if (out.my_bar != (d - 1) * sum_my) fail(ErrorKind::InternalError, "MY of the singular surface disagrees");
  return out;
}

std::vector<LocalTerm> local_table(const Profile& p) {
  std::vector<LocalTerm> out;
  for (const auto& [r, count] : p.counts()) out.push_back({r, count, local_invariants(r, p.d())});
  return out;
}

ChernNumbers chern_numbers(const Profile& p) {
  const BaseInvariants base = base_invariants(p);
  ChernNumbers out{base.k2_bar, base.chi_bar};
  for (const auto& term : local_table(p)) {
    out.c1sq += term.count * term.local.dci;
    out.c2 += term.count * term.local.dcii;
  }
  return out;
}

GlobalInvariants global_invariants(const Profile& p) {
  const BaseInvariants base = base_invariants(p);
  const ChernNumbers chern = chern_numbers(p);
  GlobalInvariants out;
  out.k2_bar = base.k2_bar;
  out.chi_bar = base.chi_bar;
  out.my_bar = base.my_bar;
  out.c1sq = chern.c1sq;
  out.c2 = chern.c2;
  for (const auto& term : local_table(p)) out.my_tilde += term.count * term.local.e;
  if (out.my_tilde != 3 * out.c2 - out.c1sq) fail(ErrorKind::InternalError, "MY aggregation paths disagree");
  if (out.c2 != 0) {
    out.chern_ratio = mpq_class(out.c1sq, out.c2);
    out.chern_ratio->canonicalize();
  }
  return out;
}

Verdict verdict(const Profile& p) {
  const GlobalInvariants inv = global_invariants(p);
  const std::int64_t d = p.d();
  Verdict out;
  out.pencil = is_pencil(p);
  out.my_tilde = inv.my_tilde;
  out.my_sign = sign_of(inv.my_tilde);

  std::string case_tag;
  int expected_sign = 1;
  if (d == 2) {
    case_tag = "two-lines";
  } else if (out.pencil) {
    case_tag = d == 3 ? "pencil-d3" : "pencil";
    expected_sign = d == 3 ? 0 : -1;
  } else if (p.count(d - 1) != 0) {
    case_tag = "near-pencil";
  } else {
    case_tag = "no-dominant-point";
  }

  std::string source;
  if (inv.c1sq > 9) {
    out.general_type = GeneralType::Yes;
    source = "c1sq>9";
  } else if (out.pencil && d == 3) {
    out.general_type = GeneralType::No;
    source = "c2=0";
  } else if (d >= 7 && p.nodes_and_triples_only()) {
    out.general_type = GeneralType::Yes;
    source = "nodes-triples-d>=7";
  } else {
    out.general_type = GeneralType::Unknown;
    source = "undecided";
  }

  // Equality in Miyaoka-Yau needs MY = 0 on a surface of general type.
  out.ball_quotient_possible = out.my_sign == 0 && out.general_type != GeneralType::No;
  out.reason = case_tag + "/" + source;
  if (out.my_sign != expected_sign) out.reason += ",sign-law-violated";
  return out;
}

HodgeDiamond hodge_from_chern(const mpz_class& c1sq, const mpz_class& c2, std::int64_t q) {
  if (q < 0) fail(ErrorKind::BadParameter, "irregularity q must be nonnegative");
  const mpz_class Q = q;
  const mpz_class noether = c1sq + c2 + 12 * (Q - 1);
  if (noether % 12 != 0) {
    fail(ErrorKind::NoetherDivisibilityFailure, "c1^2 + c2 + 12(q-1) = " + noether.get_str() + " is not divisible by 12");
  }
  const mpz_class mixed = 5 * c2 - c1sq;
  if (mixed % 6 != 0) fail(ErrorKind::NoetherDivisibilityFailure, "5 c2 - c1^2 is not divisible by 6");

  HodgeDiamond out;
  out.q = Q;
  out.pg = noether / 12;
  out.h11 = mixed / 6 + 2 * Q;
  if (out.pg < 0 || out.h11 < 0) {
    fail(ErrorKind::NegativeHodgeNumber,
         "pg=" + out.pg.get_str() + ", h11=" + out.h11.get_str() + " for q=" + std::to_string(q));
  }
  if (2 - 4 * Q + 2 * out.pg + out.h11 != c2) fail(ErrorKind::InternalError, "Hodge numbers miss the Euler number");
  return out;
}

HodgeDiamond hodge_diamond(const Profile& p, std::int64_t q) {
  const ChernNumbers chern = chern_numbers(p);
  return hodge_from_chern(chern.c1sq, chern.c2, q);
}

ChernRatioAnalysis chern_ratio_analysis(const Profile& p) {
  const ChernNumbers chern = chern_numbers(p);
  if (chern.c2 == 0) fail(ErrorKind::ZeroSecondChern, "c2 = 0, the Chern ratio is undefined");
  ChernRatioAnalysis out;
  out.ratio = mpq_class(chern.c1sq, chern.c2);
  out.ratio.canonicalize();
  if (!p.nodes_and_triples_only()) return out;

  const mpz_class d = p.d();
  const mpz_class t3 = p.count(3);
  const mpz_class base = d * d - 4 * d + 6;
  NodesTriplesForm form;
  switch (p.d() % 3) {
    case 0:
      form.numer = (d - 3) * (d - 7);
      form.denom = base - 3 * t3;
      break;
    case 1:
      form.numer = d * (d - 3) * (d - 7);
      form.denom = d * base - 3 * (d - 1) * t3;
      break;
    default:
      form.numer = d * (d - 3) * (d - 7);
      form.denom = d * base - 3 * (d - 2) * t3;
      break;
  }
  mpq_class fraction(form.numer, form.denom);
  fraction.canonicalize();
  const mpq_class check = mpq_class(1, 3) * (1 + 2 * fraction);
  if (check != out.ratio) fail(ErrorKind::InternalError, "nodes/triples form disagrees with c1^2/c2");
  out.nodes_triples_form = form;
  return out;
}

}  // namespace arrfiber
