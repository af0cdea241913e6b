#include "templink/kneading.hpp"

#include <algorithm>

namespace templink {

namespace {

void append(Word& w, Letter l, int times) {
  for (int i = 0; i < times; ++i) w.push_back(l);
}

void append(Word& w, const Word& block, int times) {
  for (int i = 0; i < times; ++i) w.insert(w.end(), block.begin(), block.end());
}

// x^n y
Word syllable(Letter x, int n, Letter y) {
  Word w;
  append(w, x, n);
  w.push_back(y);
  return w;
}

// y x^n
Word syllable_rev(Letter y, Letter x, int n) {
  Word w{y};
  append(w, x, n);
  return w;
}

KneadingData close_up(PeriodicSequence u_left, PeriodicSequence v_right) {
  Word vl_pre{Letter::b};
  vl_pre.insert(vl_pre.end(), u_left.preperiod().begin(), u_left.preperiod().end());
  Word ur_pre{Letter::a};
  ur_pre.insert(ur_pre.end(), v_right.preperiod().begin(), v_right.preperiod().end());
  PeriodicSequence v_left(std::move(vl_pre), u_left.period());
  PeriodicSequence u_right(std::move(ur_pre), v_right.period());
  return KneadingData{std::move(u_left), std::move(u_right), std::move(v_left), std::move(v_right)};
}

bool within(const PeriodicSequence& s, const PeriodicSequence& lo, const PeriodicSequence& hi) {
  return compare(lo, s) <= 0 && compare(s, hi) <= 0;
}

}  // namespace

bool is_hyperbolic(int p, int q, int r) {
  const long long P = p, Q = q, R = r;
  return P * Q * R - P * Q - Q * R - P * R >= 1;
}

Triple::Triple(int p, int q, int r) : p_(p), q_(q), r_(r) {
  if (p < 2 || q < 2 || r < 2) {
    throw DomainError("cone orders must be >= 2, got " + str());
  }
  if (!(p <= q && q <= r)) {
    throw DomainError("cone orders must satisfy p <= q <= r, got " + str());
  }
  if (!is_hyperbolic(p, q, r)) {
    throw DomainError("triple " + str() + " is not hyperbolic (1/p + 1/q + 1/r >= 1)");
  }
}

long long Triple::delta() const {
  const long long P = p_, Q = q_, R = r_;
  return P * Q * R - P * Q - Q * R - P * R;
}

std::string Triple::str() const {
  return "(" + std::to_string(p_) + "," + std::to_string(q_) + "," + std::to_string(r_) + ")";
}

bool in_table_domain(const Triple& t) {
  if (t.p() >= 3) return true;
  return t.q() > 2 && t.r() > 4;
}

KneadingData kneading(const Triple& t) {
  if (!in_table_domain(t)) {
    throw DomainError("triple " + t.str() +
                      " is outside the kneading table domain (p = 2 needs q > 2 and r > 4)");
  }
  const int p = t.p(), q = t.q(), r = t.r();
  const Letter a = Letter::a, b = Letter::b;
  Word ul, vr_pre, vr;

  if (p > 2) {
    const Word pa = syllable(a, p - 1, b);  // a^{p-1} b
    const Word qb = syllable(b, q - 1, a);  // b^{q-1} a
    if (r % 2 == 1) {
      const int m = (r - 3) / 2;
      append(ul, pa, m);
      append(ul, a, p - 1);
      append(ul, b, 2);
      append(vr, qb, m);
      append(vr, b, q - 1);
      append(vr, a, 2);
    } else {
      const int m = (r - 2) / 2;
      append(ul, pa, m);
      append(ul, a, p - 2);
      append(ul, syllable_rev(b, a, p - 1), m);
      append(ul, b, 2);
      append(vr, qb, m);
      append(vr, b, q - 2);
      append(vr, syllable_rev(a, b, q - 1), m);
      append(vr, a, 2);
    }
  } else {
    const Word ab{a, b};
    const Word abq = syllable_rev(a, b, q - 1);  // a b^{q-1}
    const int m_u = r % 2 == 1 ? (r - 3) / 2 : (r - 4) / 2;
    const int m_v = r % 2 == 1 ? (r - 5) / 2 : (r - 4) / 2;
    append(ul, ab, m_u);
    ul.push_back(a);
    append(ul, b, 2);
    append(vr_pre, b, q - 1);
    append(vr, abq, m_v);
    vr.push_back(a);
    append(vr, b, q - 2);
  }
  return close_up(PeriodicSequence(std::move(ul)), PeriodicSequence(std::move(vr_pre), std::move(vr)));
}

KneadingData lorenz_kneading() {
  return close_up(PeriodicSequence(Word{Letter::a}), PeriodicSequence(Word{Letter::b}));
}

KneadingData kneading_open(int p, int q) {
  if (p < 2 || q < p || (p == 2 && q == 2)) {
    throw DomainError("open kneading data needs 2 <= p <= q and (p,q) != (2,2)");
  }
  return close_up(PeriodicSequence(syllable(Letter::a, p - 1, Letter::b)),
                  PeriodicSequence(syllable(Letter::b, q - 1, Letter::a)));
}

bool is_admissible(std::span<const Letter> word, const KneadingData& k) {
  if (word.empty()) return false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const PeriodicSequence s(rotate(word, i));
    const bool ok = s.front() == Letter::a ? within(s, k.u_left, k.u_right)
                                           : within(s, k.v_left, k.v_right);
    if (!ok) return false;
  }
  return true;
}

bool is_admissible(const CyclicWord& w, const KneadingData& k) {
  return is_admissible(w.letters(), k);
}

BlockConstraints max_block_constraints(const Triple& t) {
  return BlockConstraints{t.p() - 1, t.q() - 1, (t.r() - 2) / 2};
}

std::size_t longest_cyclic_run(std::span<const Letter> word, Letter l) {
  const std::size_t n = word.size();
  std::size_t best = 0, run = 0;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    run = word[i % n] == l ? run + 1 : 0;
    best = std::max(best, run);
  }
  return std::min(best, n);
}

}  // namespace templink
