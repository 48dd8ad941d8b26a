#include "anglekit/abindex.hpp"

#include <bit>

namespace anglekit {

ABWord ABWord::parse(const std::string& letters) {
  if (letters.size() > 31) throw Error("ab-words are limited to 31 letters");
  ABWord w{static_cast<std::uint32_t>(letters.size()), 0};
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] == 'b') w.bits |= 1u << i;
    else if (letters[i] != 'a') throw Error("ab-words use only the letters a and b: " + letters);
  }
  return w;
}

std::string ABWord::str() const {
  std::string s;
  for (std::size_t i = 0; i < degree; ++i) s += letter_is_b(i) ? 'b' : 'a';
  return s;
}

ABWord ABWord::operator*(const ABWord& o) const {
  if (degree + o.degree > 31) throw Error("ab-word too long");
  return ABWord{degree + o.degree, bits | (o.bits << degree)};
}

ABWord ABWord::reversed() const {
  ABWord w{degree, 0};
  for (std::size_t i = 0; i < degree; ++i)
    if (letter_is_b(i)) w.bits |= 1u << (degree - 1 - i);
  return w;
}

ABPolynomial ABPolynomial::one() {
  ABPolynomial p;
  p.add_term(ABWord{}, 1);
  return p;
}

ABPolynomial ABPolynomial::word(const std::string& letters, Integer coefficient) {
  ABPolynomial p;
  p.add_term(ABWord::parse(letters), coefficient);
  return p;
}

Integer ABPolynomial::coefficient(const ABWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool ABPolynomial::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.degree == terms_.rbegin()->first.degree;
}

std::size_t ABPolynomial::degree() const {
  if (terms_.empty() || !is_homogeneous()) throw Error("degree needs a nonzero homogeneous polynomial");
  return terms_.begin()->first.degree;
}

void ABPolynomial::add_term(const ABWord& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

ABPolynomial ABPolynomial::operator+(const ABPolynomial& o) const {
  ABPolynomial r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

ABPolynomial ABPolynomial::operator-(const ABPolynomial& o) const {
  ABPolynomial r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

ABPolynomial ABPolynomial::operator*(const ABPolynomial& o) const {
  ABPolynomial r;
  for (const auto& [w, c] : terms_)
    for (const auto& [v, e] : o.terms_) r.add_term(w * v, c * e);
  return r;
}

ABPolynomial ABPolynomial::operator*(const Integer& c) const {
  ABPolynomial r;
  for (const auto& [w, e] : terms_) r.add_term(w, e * c);
  return r;
}

ABPolynomial ABPolynomial::reversed() const {
  ABPolynomial r;
  for (const auto& [w, c] : terms_) r.add_term(w.reversed(), c);
  return r;
}

std::string ABPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    std::string word = w.degree == 0 ? "1" : w.str();
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    Integer m = abs(c);
    if (m != 1 || w.degree == 0) s += m.get_str() + (w.degree == 0 ? "" : "*");
    if (w.degree > 0) s += word;
  }
  return s;
}

nlohmann::json ABPolynomial::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [w, c] : terms_) j[w.str()] = c.fits_slong_p() ? nlohmann::json(c.get_si()) : nlohmann::json(c.get_str());
  return j;
}

ABPolynomial ABPolynomial::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error("ab-polynomial JSON must be an object of word: coefficient");
  ABPolynomial p;
  for (const auto& [word, c] : j.items()) {
    Integer coeff = c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<long>());
    p.add_term(ABWord::parse(word), coeff);
  }
  return p;
}

std::map<RankSet, Integer> chain_counts(const GradedPoset& p) {
  const std::size_t r = p.rank();
  if (r > 31) throw Error("rank too large for chain counts");
  const RankSet interior = r >= 1 ? ((RankSet(1) << r) - 2) : 0;
  std::map<RankSet, Integer> out;
  for (RankSet s = 0;; s = (s - interior) & interior) {
    std::vector<std::size_t> level{p.bottom()};
    std::vector<Integer> count{1};
    auto step = [&](const std::vector<std::size_t>& next) {
      std::vector<Integer> c(next.size(), 0);
      for (std::size_t y = 0; y < next.size(); ++y)
        for (std::size_t x = 0; x < level.size(); ++x)
          if (p.leq(level[x], next[y])) c[y] += count[x];
      level = next;
      count = std::move(c);
    };
    for (auto k : ranks_of(s)) step(p.elements_of_rank(k));
    step({p.top()});
    out[s] = count[0];
    if (s == interior) break;
  }
  return out;
}

ABPolynomial ab_index_from_flags(const std::map<RankSet, Integer>& flags, std::size_t degree) {
  if (degree > 30) throw Error("degree too large");
  const std::uint32_t all = (std::uint32_t(1) << degree) - 1;
  ABPolynomial psi;
  for (const auto& [s, w] : flags) {
    std::uint32_t chosen = s >> 1;  // rank i sits at word position i - 1
    if (chosen & ~all) throw Error("flag entry outside the interior ranks");
    std::uint32_t free = all & ~chosen;
    for (std::uint32_t t = 0;; t = (t - free) & free) {
      psi.add_term(ABWord{static_cast<std::uint32_t>(degree), chosen | t}, std::popcount(t) % 2 ? Integer(-w) : w);
      if (t == free) break;
    }
  }
  return psi;
}

ABPolynomial ab_index(const GradedPoset& p) {
  if (p.rank() == 0) throw Error("ab-index needs rank at least 1");
  return ab_index_from_flags(chain_counts(p), p.rank() - 1);
}

std::map<RankSet, Integer> flags_from_ab_index(const ABPolynomial& psi, std::size_t degree) {
  for (const auto& [w, c] : psi.terms())
    if (w.degree != degree) throw Error("ab-index has a term of the wrong degree");
  const std::uint32_t all = (std::uint32_t(1) << degree) - 1;
  std::map<RankSet, Integer> out;
  for (std::uint32_t b = 0;; b = (b - all) & all) {
    Integer total = 0;
    for (std::uint32_t t = 0;; t = (t - b) & b) {
      total += psi.coefficient(ABWord{static_cast<std::uint32_t>(degree), t});
      if (t == b) break;
    }
    out[b << 1] = total;
    if (b == all) break;
  }
  return out;
}

ABPolynomial derive(const ABPolynomial& x, Derivation which) {
  const ABWord image = ABWord::parse(which == Derivation::right ? "ab" : "ba");
  ABPolynomial r;
  for (const auto& [w, c] : x.terms())
    for (std::uint32_t i = 0; i < w.degree; ++i) {
      ABWord prefix{i, w.bits & ((1u << i) - 1)};
      ABWord suffix{w.degree - i - 1, w.bits >> (i + 1)};
      r.add_term(prefix * image * suffix, c);
    }
  return r;
}

ABPolynomial extend(const ABPolynomial& x) {
  return x * ABPolynomial::a() + ABPolynomial::b() * x + derive(x, Derivation::right);
}

ABPolynomial extend_mirrored(const ABPolynomial& x) {
  return x * ABPolynomial::b() + ABPolynomial::a() * x + derive(x, Derivation::left);
}

ABPolynomial drop_last_a(const ABPolynomial& x) {
  ABPolynomial r;
  for (const auto& [w, c] : x.terms()) {
    if (w.degree == 0) throw Error("drop_last_a needs words of positive degree");
    if (w.letter_is_b(w.degree - 1)) continue;
    r.add_term(ABWord{w.degree - 1, w.bits & ((1u << (w.degree - 1)) - 1)}, c);
  }
  return r;
}

ABPolynomial prism_image(const ABPolynomial& x, bool mirrored) {
  return drop_last_a(mirrored ? extend_mirrored(x) : extend(x));
}

bool extensions_coincide(std::size_t max_degree) {
  for (std::uint32_t deg = 0; deg <= max_degree; ++deg)
    for (std::uint32_t bits = 0; bits < (1u << deg); ++bits) {
      ABPolynomial w;
      w.add_term(ABWord{deg, bits}, 1);
      if (!(extend(w) == extend_mirrored(w))) return false;
    }
  return true;
}

ProductFormulaOutcome product_formula_check(const GradedPoset& lattice) {
  ProductFormulaOutcome o;
  o.index = ab_index(lattice);
  o.direct = ab_index(pyramid_operator(lattice));
  o.extend_form = extend(o.index);
  o.mirrored_form = extend_mirrored(o.index);
  o.extend_matches = o.direct == o.extend_form;
  o.mirrored_matches = o.direct == o.mirrored_form;
  return o;
}

CheckReport product_formula_report(const std::vector<std::pair<std::string, GradedPoset>>& lattices) {
  CheckReport r{"ab-index of L x C_1 is one fixed operator applied to the ab-index of L", {}, {}};
  bool all_extend = true, all_mirrored = true;
  std::size_t distinguishing = 0;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [name, lattice] : lattices) {
    auto o = product_formula_check(lattice);
    all_extend = all_extend && o.extend_matches;
    all_mirrored = all_mirrored && o.mirrored_matches;
    if (!(o.extend_form == o.mirrored_form)) ++distinguishing;
    auto a = CheckResult::exact(name + ": x a + b x + R(x)", o.extend_matches, 1, o.extend_matches);
    auto b = CheckResult::exact(name + ": x b + a x + R'(x)", o.mirrored_matches, 1, o.mirrored_matches);
    a.informational = b.informational = true;
    r.add(a);
    r.add(b);
    rows.push_back({{"lattice", name},
                    {"index", o.index.str()},
                    {"direct", o.direct.str()},
                    {"extend_matches", o.extend_matches},
                    {"mirrored_matches", o.mirrored_matches}});
  }
  r.details["lattices"] = rows;
  r.details["distinguishing_lattices"] = distinguishing;
  r.details["supported"] = all_extend && all_mirrored ? "both" : all_extend ? "x a + b x + R(x)"
                           : all_mirrored            ? "x b + a x + R'(x)"
                                                     : "neither";
  r.add(CheckResult::exact("one formula matches every lattice", all_extend || all_mirrored, 1,
                           all_extend || all_mirrored));
  const std::size_t max_degree = 6;
  const bool same = extensions_coincide(max_degree);
  r.details["formulas_coincide_up_to_degree"] = same ? max_degree : 0;
  r.add(CheckResult::exact("both formulas agree on every word of degree <= " + std::to_string(max_degree), same, 1,
                           same));
  return r;
}

SpanningOutcome spanning_experiment(std::size_t d) {
  if (d < 1 || d > 5) throw Error("spanning experiment supports 1 <= d <= 5");
  SpanningOutcome out;
  out.degree = d;
  const std::size_t words = std::size_t(1) << d;
  for (std::size_t mask = 0; mask < words; ++mask) {
    GradedPoset p = GradedPoset::chain(1);
    ABPolynomial with_extend = ABPolynomial::one(), with_mirrored = ABPolynomial::one();
    std::string seq;
    for (std::size_t i = 0; i < d; ++i) {
      if ((mask >> i) & 1) {
        seq += 'M';
        p = prism_operator(pyramid_operator(p));
        with_extend = prism_image(extend(with_extend));
        with_mirrored = prism_image(extend_mirrored(with_mirrored), true);
      } else {
        seq += 'E';
        p = pyramid_operator(p);
        with_extend = extend(with_extend);
        with_mirrored = extend_mirrored(with_mirrored);
      }
    }
    ABPolynomial psi = ab_index(p);
    out.extend_agrees = out.extend_agrees && psi == with_extend;
    out.mirrored_agrees = out.mirrored_agrees && psi == with_mirrored;
    RationalVector row(words);
    for (std::size_t w = 0; w < words; ++w)
      row[w] = Rational(psi.coefficient(ABWord{static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(w)}));
    out.coefficients.push_back(std::move(row));
    out.sequences.push_back(seq);
  }
  out.rank = rank(out.coefficients);
  return out;
}

CheckReport spanning_report(std::size_t d) {
  auto o = spanning_experiment(d);
  const double full = static_cast<double>(std::size_t(1) << d);
  CheckReport r{"ab-indices of the E / M-after-E poset family span the degree-d ab-polynomials", {}, {}};
  r.add(CheckResult::exact("rank of the " + std::to_string(o.coefficients.size()) + " x " +
                               std::to_string(o.coefficients.size()) + " coefficient matrix, d=" + std::to_string(d),
                           static_cast<double>(o.rank), full, static_cast<double>(o.rank) == full));
  auto agree = CheckResult::exact("poset-side indices equal x a + b x + R(x) images", o.extend_agrees, 1, o.extend_agrees);
  auto mirrored =
      CheckResult::exact("poset-side indices equal x b + a x + R'(x) images", o.mirrored_agrees, 1, o.mirrored_agrees);
  agree.informational = mirrored.informational = true;
  r.add(agree);
  r.add(mirrored);
  r.details["sequences"] = o.sequences;
  return r;
}

}  // namespace anglekit
