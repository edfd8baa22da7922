#include "alexcalc/corpus.hpp"

#include <algorithm>

#include "alexcalc/balance.hpp"
#include "alexcalc/errors.hpp"
#include "alexcalc/invariants.hpp"
#include "alexcalc/skein.hpp"

namespace alexcalc {

namespace {

class Expectations {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }

  void require_equal(const LaurentPoly& actual, const LaurentPoly& expected,
                     const std::string& what) {
    require(actual == expected,
            what + ": got " + to_string(actual) + ", expected " + to_string(expected));
  }

  CorpusResult result() const {
    if (failures_.empty()) return {true, "ok"};
    std::string detail;
    for (const auto& f : failures_) detail += (detail.empty() ? "" : "; ") + f;
    return {false, detail};
  }

 private:
  std::vector<std::string> failures_;
};

IntMatrix ints(const std::vector<std::vector<Integer>>& rows) { return IntMatrix::from_rows(rows); }

AlexanderMatrix polys(const std::vector<std::vector<LaurentPoly>>& rows) {
  return AlexanderMatrix::from_rows(rows);
}

LaurentPoly t_power(const Integer& c, std::int64_t power) { return LaurentPoly::power(c, power); }

// Knot-level pass-move triple with Alexander polynomials t, 2t - 1, -1.
CorpusEntry knot_pass_triple() {
  const LaurentPoly t = t_power(1, 1);
  return {"knot-pass-triple",
          "2-knot pass-move triple: Delta+ = t, Delta- = 2t-1, Delta0 = -1",
          {},
          {t, t_power(2, 1) - LaurentPoly(1), LaurentPoly(-1)},
          [](const CorpusEntry& e) {
            Expectations x;
            const auto& d = e.polynomials;
            const SkeinVerdict v = check_pass_move(d[0], d[1], d[2]);
            x.require(v.holds, "pass-move residual " + to_string(v.residual));
            const RepresentativeWitness w =
                find_representatives(BalancedClass(d[0], RingTag::Z),
                                     BalancedClass(d[1], RingTag::Z),
                                     BalancedClass(d[2], RingTag::Z));
            x.require(w.found, "no representative witness from the balanced classes");
            if (w.found) {
              for (std::size_t i = 0; i < 3; ++i)
                x.require_equal(w.representatives[i], d[i], "witness representative");
            }
            return x.result();
          }};
}

std::vector<NamedPair> twist_pairs() {
  return {{"V+", SeifertPair(ints({{0, -1}, {0, -1}}), ints({{0, 0}, {-1, -1}}), 1, 1)},
          {"V-", SeifertPair(ints({{-1, -1}, {0, -1}}), ints({{-1, 0}, {-1, -1}}), 1, 1)},
          {"V0", SeifertPair(ints({{-1}}), ints({{-1}}), 1, 1)}};
}

std::vector<LaurentPoly> twist_polynomials() {
  return {LaurentPoly(1), LaurentPoly{{-2, 1}, {0, -1}, {2, 1}}, LaurentPoly{{-1, 1}, {1, -1}}};
}

// Twist-move triple of 1-knots given by explicit middle-dimensional Seifert pairs.
CorpusEntry twist_triple() {
  return {"twist-triple",
          "twist-move triple of (4k+1)-knots from explicit Seifert pairs V+, V-, V0",
          twist_pairs(),
          twist_polynomials(),
          [](const CorpusEntry& e) {
            Expectations x;
            std::vector<LaurentPoly> normalized;
            for (std::size_t i = 0; i < 3; ++i) {
              const SeifertPair& pair = e.pairs[i].pair;
              x.require(check_duality(pair, pair), e.pairs[i].label + ": N is not S^T");
              normalized.push_back(normalized_alexander({pair, true}));
              x.require_equal(normalized.back(), e.polynomials[i],
                              "normalized polynomial of " + e.pairs[i].label);
            }
            const SkeinVerdict v = check_twist_move(normalized[0], normalized[1], normalized[2]);
            x.require(v.holds, "twist-move residual " + to_string(v.residual));
            return x.result();
          }};
}

// Second-order jump of the normalized polynomial versus the pseudo-twinkling number.
CorpusEntry twist_jump() {
  return {"twist-jump",
          "(D+ - D-)/(t^1/2 - t^-1/2)^2 at 1 and D0/(t^1/2 - t^-1/2) at 1 equal s(tau,tau) = -1",
          twist_pairs(),
          twist_polynomials(),
          [](const CorpusEntry& e) {
            Expectations x;
            std::vector<LaurentPoly> normalized;
            for (std::size_t i = 0; i < 3; ++i) {
              const SeifertPair& pair = e.pairs[i].pair;
              x.require(check_duality(pair, pair), e.pairs[i].label + ": N is not S^T");
              normalized.push_back(normalized_alexander({pair, true}));
              x.require_equal(normalized.back(), e.polynomials[i],
                              "normalized polynomial of " + e.pairs[i].label);
            }
            const LaurentPoly& plus = normalized[0];
            const LaurentPoly& minus = normalized[1];
            const LaurentPoly& zero = normalized[2];
            const Integer twinkling = pseudo_twinkling_from_pair(e.pairs[2].pair);
            x.require(twinkling == -1, "pseudo-twinkling of V0 is " + twinkling.get_str());
            const Integer jump = second_order_at_one(plus - minus);
            x.require(jump == twinkling, "second-order jump " + jump.get_str());
            const Integer first = first_order_at_one(zero);
            x.require(first == twinkling, "first-order value of D0 " + first.get_str());
            return x.result();
          }};
}

// Pass-move triple of (S^2, T^2)-links with displayed 1-Alexander matrices.
CorpusEntry link_pass_triple() {
  return {"link-pass-triple",
          "(S^2,T^2)-link pass-move triple with Alexander matrices [[t,t-1],[0,t]], [[t,0],[0,t]], (0)",
          {{"L+", SeifertPair(ints({{1, 1}, {0, 1}}), ints({{0, 1}, {0, 0}}), 1, 2)},
           {"L-", SeifertPair(ints({{1, 0}, {0, 1}}), ints({{0, 0}, {0, 0}}), 1, 2)},
           {"L0", SeifertPair(ints({{0}}), ints({{0}}), 1, 2)}},
          {t_power(1, 2), t_power(1, 2), LaurentPoly()},
          [](const CorpusEntry& e) {
            Expectations x;
            const LaurentPoly t = t_power(1, 1);
            const std::vector<AlexanderMatrix> displayed{
                polys({{t, t - LaurentPoly(1)}, {LaurentPoly(), t}}),
                polys({{t, LaurentPoly()}, {LaurentPoly(), t}}),
                polys({{LaurentPoly()}})};
            std::vector<LaurentPoly> dets;
            for (std::size_t i = 0; i < 3; ++i) {
              const AlexanderMatrix m = alexander_matrix(e.pairs[i].pair);
              x.require(m == displayed[i], "Alexander matrix of " + e.pairs[i].label);
              dets.push_back(det(m));
              x.require_equal(dets.back(), e.polynomials[i], "determinant of " + e.pairs[i].label);
            }
            const SkeinVerdict v = check_pass_move(dets[0], dets[1], dets[2]);
            x.require(v.holds, "pass-move residual " + to_string(v.residual));
            return x.result();
          }};
}

// Knot triple whose zero member bounds a 3-ball (empty matrix).
CorpusEntry ball_pass_triple() {
  return {"ball-pass-triple",
          "2-knot pass-move triple with Alexander matrices (t), (1) and the empty matrix",
          {{"L'+", SeifertPair(ints({{1}}), ints({{0}}), 1, 2)},
           {"L'-", SeifertPair(ints({{0}}), ints({{-1}}), 1, 2)},
           {"L'0", SeifertPair(IntMatrix(), IntMatrix(), 1, 2)}},
          {t_power(1, 1), LaurentPoly(1), LaurentPoly(1)},
          [](const CorpusEntry& e) {
            Expectations x;
            const std::vector<AlexanderMatrix> displayed{
                polys({{t_power(1, 1)}}), polys({{LaurentPoly(1)}}), AlexanderMatrix()};
            std::vector<LaurentPoly> dets;
            for (std::size_t i = 0; i < 3; ++i) {
              const AlexanderMatrix m = alexander_matrix(e.pairs[i].pair);
              x.require(m == displayed[i], "Alexander matrix of " + e.pairs[i].label);
              dets.push_back(det(m));
              x.require_equal(dets.back(), e.polynomials[i], "determinant of " + e.pairs[i].label);
            }
            const SkeinVerdict v = check_pass_move(dets[0], dets[1], dets[2]);
            x.require(v.holds, "pass-move residual " + to_string(v.residual));
            return x.result();
          }};
}

// 1x1 Seifert pairs (4), (3), (2), (1): Q-balanced but pairwise not Z-balanced.
CorpusEntry scaled_classes() {
  std::vector<NamedPair> pairs;
  std::vector<LaurentPoly> expected;
  for (int k : {4, 3, 2, 1}) {
    pairs.push_back({"(" + std::to_string(k) + ")", SeifertPair(ints({{k}}), ints({{k}}), 1, 2)});
    expected.push_back(Integer(k) * t_minus_one());
  }
  pairs.push_back({"trivial", SeifertPair(IntMatrix(), IntMatrix(), 1, 2)});
  return {"scaled-classes",
          "(S^2,T^2)-links with 1x1 Seifert matrices (4),(3),(2),(1) and trivial L0",
          pairs,
          expected,
          [](const CorpusEntry& e) {
            Expectations x;
            std::vector<LaurentPoly> dets;
            for (std::size_t i = 0; i < 4; ++i) {
              const SeifertPair& pair = e.pairs[i].pair;
              dets.push_back(det(alexander_matrix(pair)));
              x.require(z_alexander(pair) == BalancedClass(e.polynomials[i], RingTag::Z),
                        "Z-class of " + e.pairs[i].label + " is " +
                            to_string(z_alexander(pair).representative()));
              x.require(q_alexander(pair) == BalancedClass(t_minus_one(), RingTag::Q),
                        "Q-class of " + e.pairs[i].label);
              const Integer by_pair = pseudo_alinking_from_pair(pair);
              const Integer by_poly = pseudo_alinking_from_poly(dets.back());
              x.require(by_pair == by_poly && by_pair == Integer(4 - static_cast<int>(i)),
                        "pseudo-alinking of " + e.pairs[i].label);
            }
            for (std::size_t i = 0; i < 4; ++i) {
              for (std::size_t j = i + 1; j < 4; ++j) {
                x.require(!z_balanced_eq(dets[i], dets[j]),
                          e.pairs[i].label + " ~Z " + e.pairs[j].label);
                x.require(q_balanced_eq(dets[i], dets[j]),
                          e.pairs[i].label + " !~Q " + e.pairs[j].label);
              }
            }
            const LaurentPoly trivial = det(alexander_matrix(e.pairs[4].pair));
            for (auto [plus, minus] : {std::pair{0, 1}, std::pair{2, 3}}) {
              const SkeinVerdict v = check_pass_move(dets[plus], dets[minus], trivial);
              x.require(v.holds, "pass-move residual " + to_string(v.residual));
              const RepresentativeWitness w = find_representatives(
                  BalancedClass(dets[plus], RingTag::Z), BalancedClass(dets[minus], RingTag::Z),
                  BalancedClass(trivial, RingTag::Z));
              x.require(w.found && std::all_of(w.shifts.begin(), w.shifts.end(),
                                               [](const UnitShift& s) { return s == UnitShift{}; }),
                        "representative witness is not the identity");
            }
            return x.result();
          }};
}

}  // namespace

CorpusResult CorpusEntry::evaluate() const {
  try {
    return check(*this);
  } catch (const Error& err) {
    return {false, std::string("error: ") + err.what()};
  }
}

bool CorpusReport::all_passed() const {
  return std::all_of(lines.begin(), lines.end(),
                     [](const Line& line) { return line.result.passed; });
}

std::vector<CorpusEntry> bundled_corpus() {
  return {knot_pass_triple(), twist_triple(),     twist_jump(),
          link_pass_triple(), ball_pass_triple(), scaled_classes()};
}

CorpusReport run_corpus(const std::vector<CorpusEntry>& entries) {
  CorpusReport report;
  for (const CorpusEntry& entry : entries) {
    report.lines.push_back({entry.id, entry.description, entry.evaluate()});
  }
  return report;
}

CorpusReport run_corpus() { return run_corpus(bundled_corpus()); }

}  // namespace alexcalc
