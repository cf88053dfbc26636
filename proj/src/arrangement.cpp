#include "arrfiber/arrangement.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "arrfiber/errors.hpp"

namespace arrfiber {

namespace {

using Point = std::array<Rational, 3>;

// Scale so the first nonzero entry is 1.
template <typename Triple>
void normalize_projective(Triple& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) {
      const Rational lead = x;
      for (auto& y : v) y /= lead;
      return;
    }
  }
}

struct PointLess {
  bool operator()(const Point& a, const Point& b) const {
    for (std::size_t i = 0; i < 3; ++i) {
      const int c = cmp(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

Point cross(const std::array<Rational, 3>& u, const std::array<Rational, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

Rational parse_rational_token(std::string_view tok, std::size_t line_no) {
  std::string_view body = tok;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  const bool ok = is_digits(num) && (slash == std::string_view::npos || is_digits(den));
  if (!ok) {
    fail(ErrorKind::MalformedLine, "line " + std::to_string(line_no) + ": '" + std::string(tok) + "' is not a rational");
  }
  Integer n(std::string(num), 10);
  Integer q(1);
  if (slash != std::string_view::npos) {
    q = Integer(std::string(den), 10);
    if (q == 0) fail(ErrorKind::MalformedLine, "line " + std::to_string(line_no) + ": zero denominator");
  }
  if (tok.front() == '-') n = -n;
  Rational value(n, q);
  value.canonicalize();
  return value;
}

std::int64_t binomial2(std::int64_t n) { return n * (n - 1) / 2; }

void require_param(std::string_view name, const std::optional<std::int64_t>& param, std::int64_t min) {
  if (!param) fail(ErrorKind::BadParameter, std::string(name) + " requires an integer parameter");
  if (*param < min) {
    fail(ErrorKind::BadParameter,
         std::string(name) + " requires parameter >= " + std::to_string(min) + ", got " + std::to_string(*param));
  }
}

}  // namespace

Line::Line(Rational a, Rational b, Rational c) : coef_{std::move(a), std::move(b), std::move(c)} {
  for (auto& x : coef_) x.canonicalize();
  if (sgn(coef_[0]) == 0 && sgn(coef_[1]) == 0 && sgn(coef_[2]) == 0) {
    fail(ErrorKind::ZeroForm, "all three coefficients are zero");
  }
  normalize_projective(coef_);
}

Rational Line::evaluate(const std::array<Rational, 3>& point) const {
  return coef_[0] * point[0] + coef_[1] * point[1] + coef_[2] * point[2];
}

Arrangement::Arrangement(std::vector<Line> lines) : lines_(std::move(lines)) {
  if (lines_.size() < 2) fail(ErrorKind::TooFewLines, "an arrangement needs at least 2 lines");
  if (static_cast<long long>(lines_.size()) > kMaxLines) {
    fail(ErrorKind::LimitExceeded, "more than " + std::to_string(kMaxLines) + " lines");
  }
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (lines_[i] == lines_[j]) {
        fail(ErrorKind::DuplicateLine,
             "lines " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " are proportional");
      }
    }
  }
}

std::int64_t Profile::count(std::int64_t r) const {
  const auto it = t_.find(r);
  return it == t_.end() ? 0 : it->second;
}

bool Profile::nodes_and_triples_only() const {
  return std::all_of(t_.begin(), t_.end(), [](const auto& kv) { return kv.first == 2 || kv.first == 3; });
}

Arrangement parse_arrangement(std::string_view text) {
  std::vector<Line> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    std::istringstream in{std::string(raw)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      fail(ErrorKind::MalformedLine,
           "line " + std::to_string(line_no) + ": expected 3 tokens, got " + std::to_string(tokens.size()));
    }
    try {
      lines.emplace_back(parse_rational_token(tokens[0], line_no), parse_rational_token(tokens[1], line_no),
                         parse_rational_token(tokens[2], line_no));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ZeroForm) fail(ErrorKind::ZeroForm, "line " + std::to_string(line_no));
      throw;
    }
  }
  return Arrangement(std::move(lines));
}

Profile profile_of(const Arrangement& arr) {
  const auto& lines = arr.lines();
  std::map<Point, std::set<std::size_t>, PointLess> incidences;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      Point p = cross(lines[i].coefficients(), lines[j].coefficients());
      normalize_projective(p);
      auto& through = incidences[p];
      through.insert(i);
      through.insert(j);
    }
  }
  Profile::Counts t;
  for (const auto& [point, through] : incidences) ++t[static_cast<std::int64_t>(through.size())];
  return validate_profile(arr.size(), t);
}

Profile validate_profile(std::int64_t d, const Profile::Counts& t, bool allow_unbalanced) {
  if (d < 2) fail(ErrorKind::TooFewLines, "d must be at least 2, got " + std::to_string(d));
  if (d > kMaxLines) fail(ErrorKind::LimitExceeded, "d exceeds " + std::to_string(kMaxLines));
  Profile::Counts kept;
  Integer pairs = 0;
  for (const auto& [r, count] : t) {
    if (r < 2 || r > d) {
      fail(ErrorKind::MultiplicityOutOfRange,
           "multiplicity " + std::to_string(r) + " outside [2, " + std::to_string(d) + "]");
    }
    if (count < 0) fail(ErrorKind::InvalidCount, "t_" + std::to_string(r) + " is negative");
    if (count == 0) continue;
    kept[r] = count;
    pairs += Integer(count) * binomial2(r);
  }
  if (const auto it = kept.find(d); it != kept.end() && it->second > 1) {
    fail(ErrorKind::UnbalancedProfile, "at most one point can lie on all d lines");
  }
  const bool balanced = pairs == binomial2(d);
  if (!balanced && !allow_unbalanced) {
    fail(ErrorKind::UnbalancedProfile,
         "sum t_r r(r-1)/2 = " + pairs.get_str() + " but d(d-1)/2 = " + std::to_string(binomial2(d)));
  }
  return Profile(d, std::move(kept), balanced);
}

bool is_pencil(const Profile& p) { return p.count(p.d()) == 1; }

CatalogEntry catalog_profile(std::string_view name, std::optional<std::int64_t> param) {
  if (name == "hesse") {
    if (param) fail(ErrorKind::BadParameter, "hesse takes no parameter");
    return {"hesse", validate_profile(12, {{2, 12}, {4, 9}}), 3};
  }
  if (name == "ceva") {
    require_param(name, param, 2);
    const std::int64_t m = *param;
    if (m > kMaxLines / 3) fail(ErrorKind::LimitExceeded, "ceva parameter too large");
    Profile::Counts t;
    if (m == 3) {
      t[3] = 12;
    } else {
      t[3] += m * m;
      t[m] += 3;
    }
    return {"ceva(" + std::to_string(m) + ")", validate_profile(3 * m, t), m % 3 == 0 ? 2 : 1};
  }
  if (name == "braid") {
    require_param(name, param, 2);
    const std::int64_t n = *param;
    if (n > 1400) fail(ErrorKind::LimitExceeded, "braid parameter too large");
    Profile::Counts t;
    t[3] = (n + 1) * n * (n - 1) / 6;
    t[2] = (n + 1) * n * (n - 1) * (n - 2) / 8;
    return {"braid(" + std::to_string(n) + ")", validate_profile(n * (n + 1) / 2, t), (n == 2 || n == 3) ? 1 : 0};
  }
  if (name == "pencil") {
    require_param(name, param, 2);
    return {"pencil(" + std::to_string(*param) + ")", validate_profile(*param, {{*param, 1}}), std::nullopt};
  }
  if (name == "near-pencil") {
    require_param(name, param, 3);
    const std::int64_t d = *param;
    Profile::Counts t;
    t[d - 1] += 1;
    t[2] += d - 1;
    return {"near-pencil(" + std::to_string(d) + ")", validate_profile(d, t), std::nullopt};
  }
  if (name == "generic") {
    require_param(name, param, 2);
    return {"generic(" + std::to_string(*param) + ")", validate_profile(*param, {{2, binomial2(*param)}}),
            std::nullopt};
  }
  fail(ErrorKind::UnknownCatalogName, "no catalog entry named '" + std::string(name) + "'");
}

CatalogEntry catalog_lookup(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos) return catalog_profile(text);
  if (text.back() != ')') fail(ErrorKind::BadParameter, "malformed catalog reference '" + std::string(text) + "'");
  const std::string_view arg = text.substr(open + 1, text.size() - open - 2);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
  if (ec != std::errc{} || ptr != arg.data() + arg.size()) {
    fail(ErrorKind::BadParameter, "catalog parameter '" + std::string(arg) + "' is not an integer");
  }
  return catalog_profile(text.substr(0, open), value);
}

const std::vector<CatalogInfo>& catalog_listing() {
  static const std::vector<CatalogInfo> listing = {
      {"hesse", "", "Hesse arrangement: d=12, t_2=12, t_4=9, q=3"},
      {"ceva", "m>=2", "A(m,m,3): d=3m, q=2 if 3|m else 1"},
      {"braid", "n>=2", "generic plane section of the braid arrangement: d=n(n+1)/2, nodes and triple points"},
      {"pencil", "d>=2", "d concurrent lines"},
      {"near-pencil", "d>=3", "d-1 concurrent lines plus one general line"},
      {"generic", "d>=2", "d lines in general position"},
  };
  return listing;
}

HirzebruchDiagnostic hirzebruch_diagnostic(const Profile& p) {
  HirzebruchDiagnostic out;
  const std::int64_t d = p.d();
  out.applicable = p.count(d) == 0 && p.count(d - 1) == 0;
  if (!out.applicable) return out;
  out.lhs = Rational(p.count(2)) + Rational(3, 4) * p.count(3);
  out.lhs.canonicalize();
  Integer excess = 0;
  for (const auto& [r, count] : p.counts()) {
    if (r >= 5) excess += Integer(r - 4) * count;
  }
  out.rhs = Rational(Integer(d) + excess);
  out.holds = out.lhs >= out.rhs;
  return out;
}

}  // namespace arrfiber
