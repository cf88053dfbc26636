#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "arrfiber/arrangement.hpp"
#include "arrfiber/local.hpp"

namespace arrfiber {

// Invariants of the singular compactified Milnor fiber Q + t^d = 0 in P^3.
struct BaseInvariants {
  mpz_class k2_bar;
  mpz_class chi_bar;
  mpz_class my_bar;
};

struct ChernNumbers {
  mpz_class c1sq;
  mpz_class c2;
};

struct GlobalInvariants {
  mpz_class k2_bar;
  mpz_class chi_bar;
  mpz_class my_bar;
  mpz_class c1sq;
  mpz_class c2;
  mpz_class my_tilde;
  std::optional<mpq_class> chern_ratio;  // absent when c2 = 0
};

enum class GeneralType { Yes, No, Unknown };
std::string_view general_type_name(GeneralType g) noexcept;

struct Verdict {
  bool pencil = false;
  int my_sign = 0;
  mpz_class my_tilde;
  bool ball_quotient_possible = false;
  GeneralType general_type = GeneralType::Unknown;
  // "<case>/<general-type source>", e.g. "near-pencil/c1sq>9". A trailing
  // ",sign-law-violated" marks a balanced profile no arrangement can realise.
  std::string reason;
};

// h^{0,0} = h^{2,2} = 1, h^{0,1} = h^{1,0} = h^{1,2} = h^{2,1} = q,
// h^{0,2} = h^{2,0} = pg, h^{1,1}.
struct HodgeDiamond {
  mpz_class q;
  mpz_class pg;
  mpz_class h11;

  mpz_class h(int p, int q_index) const;
};

// ratio = (1/3) (1 + 2 numer / denom), the nodes-and-triple-points shape of c1^2/c2.
struct NodesTriplesForm {
  mpz_class numer;
  mpz_class denom;
};

struct ChernRatioAnalysis {
  mpq_class ratio;
  std::optional<NodesTriplesForm> nodes_triples_form;
};

struct LocalTerm {
  std::int64_t r = 0;
  std::int64_t count = 0;
  LocalInvariants local;
};

BaseInvariants base_invariants(const Profile& p);
ChernNumbers chern_numbers(const Profile& p);
GlobalInvariants global_invariants(const Profile& p);
std::vector<LocalTerm> local_table(const Profile& p);
Verdict verdict(const Profile& p);
HodgeDiamond hodge_diamond(const Profile& p, std::int64_t q);
HodgeDiamond hodge_from_chern(const mpz_class& c1sq, const mpz_class& c2, std::int64_t q);
ChernRatioAnalysis chern_ratio_analysis(const Profile& p);

}  // namespace arrfiber
