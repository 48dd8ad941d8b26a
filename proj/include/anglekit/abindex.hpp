#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "anglekit/flags.hpp"
#include "anglekit/poset.hpp"
#include "anglekit/report.hpp"

namespace anglekit {

/// Word over {a, b}: letter i (from the left) is b iff bit i of `bits` is set.
struct ABWord {
  std::uint32_t degree = 0;
  std::uint32_t bits = 0;

  static ABWord parse(const std::string& letters);
  std::string str() const;
  bool letter_is_b(std::size_t i) const { return (bits >> i) & 1u; }
  ABWord operator*(const ABWord& o) const;
  ABWord reversed() const;
  auto operator<=>(const ABWord&) const = default;
};

/// Noncommutative polynomial in a and b with integer coefficients.
class ABPolynomial {
 public:
  ABPolynomial() = default;
  static ABPolynomial one();
  static ABPolynomial word(const std::string& letters, Integer coefficient = 1);
  static ABPolynomial a() { return word("a"); }
  static ABPolynomial b() { return word("b"); }

  const std::map<ABWord, Integer>& terms() const { return terms_; }
  Integer coefficient(const ABWord& w) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Degree of a homogeneous nonzero polynomial.
  std::size_t degree() const;

  void add_term(const ABWord& w, const Integer& c);
  ABPolynomial operator+(const ABPolynomial& o) const;
  ABPolynomial operator-(const ABPolynomial& o) const;
  ABPolynomial operator*(const ABPolynomial& o) const;
  ABPolynomial operator*(const Integer& c) const;
  bool operator==(const ABPolynomial& o) const { return terms_ == o.terms_; }
  ABPolynomial reversed() const;

  std::string str() const;
  nlohmann::json to_json() const;
  static ABPolynomial from_json(const nlohmann::json& j);

 private:
  std::map<ABWord, Integer> terms_;
};

/// Chain counts W_S for every S within the interior ranks 1..rank-1, as integers.
std::map<RankSet, Integer> chain_counts(const GradedPoset& p);

/// Sum over S of W_S x(S), x_i = b for i in S and a - b otherwise; degree rank - 1.
ABPolynomial ab_index(const GradedPoset& p);
ABPolynomial ab_index_from_flags(const std::map<RankSet, Integer>& flags, std::size_t degree);
std::map<RankSet, Integer> flags_from_ab_index(const ABPolynomial& psi, std::size_t degree);

enum class Derivation { right, left };  // right: letters map to ab; left: letters map to ba
ABPolynomial derive(const ABPolynomial& x, Derivation which);

/// x a + b x + R(x) with R mapping both letters to ab.
ABPolynomial extend(const ABPolynomial& x);
/// x b + a x + R'(x) with R' mapping both letters to ba.
ABPolynomial extend_mirrored(const ABPolynomial& x);
/// x a -> x, x b -> 0, extended linearly.
ABPolynomial drop_last_a(const ABPolynomial& x);
/// drop_last_a after extend, or after extend_mirrored.
ABPolynomial prism_image(const ABPolynomial& x, bool mirrored = false);

/// Whether extend and extend_mirrored agree on every word up to the given degree.
bool extensions_coincide(std::size_t max_degree);

struct ProductFormulaOutcome {
  ABPolynomial index;         // of L
  ABPolynomial direct;        // of L x C_1, from chain counts
  ABPolynomial extend_form;   // extend(index)
  ABPolynomial mirrored_form; // extend_mirrored(index)
  bool extend_matches = false;
  bool mirrored_matches = false;
};
ProductFormulaOutcome product_formula_check(const GradedPoset& lattice);

/// Runs product_formula_check on every lattice; passes when one formula matches all of them.
/// Also compares the two formulas word by word.
CheckReport product_formula_report(const std::vector<std::pair<std::string, GradedPoset>>& lattices);

struct SpanningOutcome {
  std::size_t degree = 0;
  std::vector<std::string> sequences;  // letters E (pyramid) or M (prism after pyramid), applied left to right
  RationalMatrix coefficients;         // rows: posets, columns: words of the given degree
  std::size_t rank = 0;
  // Poset-side indices against the polynomial images under each candidate extension.
  bool extend_agrees = true;
  bool mirrored_agrees = true;
};
/// The 2^d posets obtained from C_1 by applying E or M∘E d times.
SpanningOutcome spanning_experiment(std::size_t d);
CheckReport spanning_report(std::size_t d);

}  // namespace anglekit
