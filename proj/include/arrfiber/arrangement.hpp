#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace arrfiber {

using Integer = mpz_class;
using Rational = mpq_class;

// A projective line ax + by + cz = 0 over Q, scaled so the first nonzero
// coefficient is 1. Proportional triples compare equal.
class Line {
 public:
  Line(Rational a, Rational b, Rational c);

  const std::array<Rational, 3>& coefficients() const noexcept { return coef_; }
  Rational evaluate(const std::array<Rational, 3>& point) const;

  friend bool operator==(const Line& lhs, const Line& rhs) { return lhs.coef_ == rhs.coef_; }

 private:
  std::array<Rational, 3> coef_;
};

class Arrangement {
 public:
  // Validates distinctness and d >= 2; keeps the given order.
  explicit Arrangement(std::vector<Line> lines);

  const std::vector<Line>& lines() const noexcept { return lines_; }
  std::int64_t size() const noexcept { return static_cast<std::int64_t>(lines_.size()); }

 private:
  std::vector<Line> lines_;
};

// Combinatorial type: d lines and t_r points of multiplicity r (r >= 2).
// Only validate_profile / profile_of / the catalog build these.
class Profile {
 public:
  using Counts = std::map<std::int64_t, std::int64_t>;

  std::int64_t d() const noexcept { return d_; }
  const Counts& counts() const noexcept { return t_; }
  std::int64_t count(std::int64_t r) const;
  // False only for profiles admitted with allow_unbalanced; such profiles
  // cannot come from an arrangement and every verdict operation refuses them.
  bool balanced() const noexcept { return balanced_; }
  // Only t_2 and t_3 nonzero.
  bool nodes_and_triples_only() const;

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  Profile(std::int64_t d, Counts t, bool balanced) : d_(d), t_(std::move(t)), balanced_(balanced) {}
  friend Profile validate_profile(std::int64_t, const Counts&, bool);

  std::int64_t d_;
  Counts t_;
  bool balanced_;
};

// Parses the line-list text format: three rational tokens per line
// (integers or p/q), '#' comments, blank lines ignored.
Arrangement parse_arrangement(std::string_view text);

Profile profile_of(const Arrangement& arr);

// Zero counts are dropped. With allow_unbalanced the identity
// sum t_r r(r-1)/2 = d(d-1)/2 is not enforced and the result is flagged.
Profile validate_profile(std::int64_t d, const Profile::Counts& t, bool allow_unbalanced = false);

bool is_pencil(const Profile& p);

struct CatalogEntry {
  std::string name;
  Profile profile;
  std::optional<std::int64_t> q;
};

// name in {hesse, ceva, braid, pencil, near-pencil, generic}; every name but
// hesse takes one integer parameter (m, n or d).
CatalogEntry catalog_profile(std::string_view name, std::optional<std::int64_t> param = std::nullopt);

// Accepts "hesse", "ceva(3)", "braid(4)", ...
CatalogEntry catalog_lookup(std::string_view text);

struct CatalogInfo {
  std::string name;
  std::string parameter;  // empty when the entry takes none
  std::string description;
};
const std::vector<CatalogInfo>& catalog_listing();

struct HirzebruchDiagnostic {
  bool applicable = false;
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

// t_2 + 3/4 t_3 >= d + sum_{r>=5} (r-4) t_r, meaningful when t_d = t_{d-1} = 0.
HirzebruchDiagnostic hirzebruch_diagnostic(const Profile& p);

}  // namespace arrfiber
