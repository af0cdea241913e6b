#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "templink/census.hpp"

namespace templink {

namespace {

Word syllable(int i, int j) {
  Word w(static_cast<std::size_t>(i), Letter::a);
  w.resize(w.size() + static_cast<std::size_t>(j), Letter::b);
  return w;
}

Word blocks_then(const Word& block, int k, const Word& tail) {
  Word w;
  for (int n = 0; n < k; ++n) w.insert(w.end(), block.begin(), block.end());
  w.insert(w.end(), tail.begin(), tail.end());
  return w;
}

bool is_primitive(const Word& w) { return canonicalize(w).power == 1; }

std::string tuple_str(std::initializer_list<int> xs) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (int x : xs) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << ')';
  return os.str();
}

// Δ·lk of two formal words through the crossing pipeline.
Rational scaled_linking(const Triple& t, const Word& x, const Word& y) {
  return word_linking(t, x, y) * Rational(t.delta());
}

struct Grid {
  int ea, eb, k;
};

Grid grid_for(const Triple& t, const LemmaGrid& g) {
  return Grid{g.max_exponent > 0 ? g.max_exponent : t.p() - 1,
              g.max_exponent > 0 ? g.max_exponent : t.q() - 1,
              g.max_blocks >= 0 ? g.max_blocks : (t.r() - 2) / 2};
}

void record(InequalityResult& res, long long slack, const std::string& where) {
  ++res.checked;
  if (res.checked == 1 || slack < res.min_slack) res.min_slack = slack;
  if (slack < 0) {
    if (res.violations == 0) res.first_violation = where;
    ++res.violations;
  }
}

void record_equal(InequalityResult& res, long long got, long long want, const std::string& where) {
  ++res.checked;
  const long long diff = got - want;
  if (res.checked == 1 || diff < res.min_slack) res.min_slack = diff;
  if (diff != 0) {
    if (res.violations == 0)
      res.first_violation = where + ": got " + std::to_string(got) + ", expected " + std::to_string(want);
    ++res.violations;
  }
}

InequalityResult fig8_lower(const Grid& g) {
  InequalityResult res;
  res.name = "cr(a^i b^j, a^i' b^j') = 2(i+j) for i<i', j<j'";
  for (int i = 1; i <= g.ea; ++i)
    for (int i2 = i + 1; i2 <= g.ea; ++i2)
      for (int j = 1; j <= g.eb; ++j)
        for (int j2 = j + 1; j2 <= g.eb; ++j2)
          record_equal(res, word_crossing(syllable(i, j), syllable(i2, j2)), 2LL * (i + j),
                       tuple_str({i, j, i2, j2}));
  return res;
}

InequalityResult fig8_upper(const Grid& g) {
  InequalityResult res;
  res.name = "cr(a^i b^j, a^i' b^j') = 2(i+j'-1) for i<=i', j>=j'";
  for (int i = 1; i <= g.ea; ++i)
    for (int i2 = i; i2 <= g.ea; ++i2)
      for (int j = 1; j <= g.eb; ++j)
        for (int j2 = 1; j2 <= j; ++j2) {
          if (i == i2 && j == j2) continue;
          record_equal(res, word_crossing(syllable(i, j), syllable(i2, j2)), 2LL * (i + j2 - 1),
                       tuple_str({i, j, i2, j2}));
        }
  return res;
}

InequalityResult refined_block_bound(const Triple& t, const Grid& g) {
  InequalityResult res;
  res.name = "refined block bound with +2min(k,k') (proper powers skipped)";
  const Word block = syllable(t.p() - 1, 1);
  const long long cr_bb = word_crossing(block, block);
  for (int i = 1; i <= g.ea; ++i)
    for (int j = 1; j <= g.eb; ++j) {
      const Word s = syllable(i, j);
      const long long cr_bs = word_crossing(block, s);
      for (int k = 0; k <= g.k; ++k) {
        const Word w = blocks_then(block, k, s);
        if (!is_primitive(w)) continue;
        for (int i2 = 1; i2 <= g.ea; ++i2)
          for (int j2 = 1; j2 <= g.eb; ++j2) {
            const Word s2 = syllable(i2, j2);
            const long long cr_bs2 = word_crossing(block, s2);
            const long long cr_ss = word_crossing(s, s2);
            for (int k2 = 0; k2 <= g.k; ++k2) {
              const Word w2 = blocks_then(block, k2, s2);
              if (!is_primitive(w2)) continue;
              const long long bound =
                  1LL * k * k2 * cr_bb + 1LL * k * cr_bs2 + 1LL * k2 * cr_bs + cr_ss + 2LL * std::min(k, k2);
              record(res, word_crossing(w, w2) - bound, tuple_str({i, j, k, i2, j2, k2}));
            }
          }
      }
    }
  return res;
}

Word random_word(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::bernoulli_distribution coin(0.5);
  Word w(len(rng));
  for (auto& l : w) l = coin(rng) ? Letter::b : Letter::a;
  return w;
}

InequalityResult superadditivity(const LemmaGrid& grid) {
  InequalityResult res;
  res.name = "cr(uv, x) >= cr(u, x) + cr(v, x) over random cuts";
  std::mt19937_64 rng(grid.seed);
  std::size_t attempts = 0;
  while (res.checked < grid.superadditivity_samples && attempts < 100 * grid.superadditivity_samples + 100) {
    ++attempts;
    const Word raw = random_word(rng, 2, 14);
    const Canonical c = canonicalize(raw);
    if (c.power != 1 || c.root.size() < 2) continue;
    const auto cuts = enumerate_cuts(c.root);
    if (cuts.empty()) continue;
    const Cut& cut = cuts[std::uniform_int_distribution<std::size_t>(0, cuts.size() - 1)(rng)];
    const Word x = random_word(rng, 1, 12);
    Word uv = cut.u;
    uv.insert(uv.end(), cut.v.begin(), cut.v.end());
    const long long slack = word_crossing(uv, x) - word_crossing(cut.u, x) - word_crossing(cut.v, x);
    record(res, slack, c.root.str() + " = " + to_string(cut.u) + "|" + to_string(cut.v) + ", x = " + to_string(x));
  }
  return res;
}

// ---- printed closed forms ---------------------------------------------------

using Params = std::array<int, 4>;  // (i, j, i', j')
using PointFn = std::function<Params(long long, long long, long long)>;
using ValueFn = std::function<Rational(long long, long long, long long)>;
using GeneralValueFn = std::function<Rational(long long, long long, long long, const Params&)>;
using DomainFn = std::function<bool(int, int, const Params&)>;

struct PointCase {
  const char* name;
  PointFn params;
  ValueFn printed;
};

struct GeneralCase {
  const char* name;
  DomainFn domain;
  GeneralValueFn printed;
};

const std::vector<PointCase>& point_cases() {
  static const std::vector<PointCase> cases = {
      {"case 1.1 (expanded)", [](auto, auto, auto) { return Params{1, 1, 1, 1}; },
       [](auto p, auto q, auto r) { return Rational(-p * q * r + p * q + 2 * p * r + 2 * q * r - p - q - 4 * r); }},
      {"case 1.1 (factored)", [](auto, auto, auto) { return Params{1, 1, 1, 1}; },
       [](auto p, auto q, auto r) { return Rational(-(p - 2) * (q - 2) * (r - 2) - (p - 3) * (q - 3) + 1); }},
      {"case 1.2 (expanded)", [](auto p, auto, auto) { return Params{int(p) - 2, 1, int(p) - 2, 1}; },
       [](auto p, auto q, auto r) { return Rational(-p * q * r + 2 * p * q + p * r + 2 * q * r - p - 4 * q - r); }},
      {"case 1.2 (factored)", [](auto p, auto, auto) { return Params{int(p) - 2, 1, int(p) - 2, 1}; },
       [](auto p, auto q, auto r) { return Rational(-(p - 2) * (q - 2) * (r - 2) - (p - 3) * (r - 3) + 1); }},
      {"case 2.3 (expanded)", [](auto p, auto q, auto) { return Params{int(p) - 2, int(q) - 1, int(p) - 2, 1}; },
       [](auto p, auto q, auto r) { return Rational(-p * q * r + p * q + p * r + 3 * q * r + p - 4 * q - r); }},
      {"case 2.3 (factored)", [](auto p, auto q, auto) { return Params{int(p) - 2, int(q) - 1, int(p) - 2, 1}; },
       [](auto p, auto q, auto r) { return Rational(-(p - 3) * (q - 1) * (r - 2) - (p - 2) * (q - 3)); }},
      {"case 2.4 (expanded)", [](auto, auto q, auto) { return Params{2, int(q) - 1, 2, 1}; },
       [](auto p, auto q, auto r) { return Rational(-p * q * r + p * q + p * r + 3 * q * r + p - 4 * q - r); }},
      {"case 2.4 (factored)", [](auto, auto q, auto) { return Params{2, int(q) - 1, 2, 1}; },
       [](auto p, auto q, auto r) { return Rational(-(p - 3) * (q - 1) * (r - 2) - (p - 2) * (q - 3)); }},
      {"case 2.5 (expanded)", [](auto, auto q, auto) { return Params{1, int(q) - 1, 1, 1}; },
       [](auto p, auto q, auto r) { return Rational(p * r + 2 * p - q + 2 * r); }},
      {"case 2.5 (factored)", [](auto, auto q, auto) { return Params{1, int(q) - 1, 1, 1}; },
       [](auto p, auto q, auto r) { return Rational(-(p - 2) * (r - 2) - q + 4); }},
      {"case 3.2 (expanded)", [](auto p, auto q, auto) { return Params{1, int(q) - 2, int(p) - 2, 1}; },
       [](auto p, auto q, auto r) { return Rational(-p * q + 2 * p + 2 * q - r); }},
      {"case 3.2 (factored)", [](auto p, auto q, auto) { return Params{1, int(q) - 2, int(p) - 2, 1}; },
       [](auto p, auto q, auto r) { return Rational(-(p - 2) * (q - 2) - r + 4); }},
      {"case 3.3 (expanded)", [](auto p, auto q, auto) { return Params{2, int(q) - 1, int(p) - 2, 1}; },
       [](auto p, auto q, auto r) { return Rational(-p * q - q * r + p + 4 * q + r); }},
      {"case 3.3 (factored)", [](auto p, auto q, auto) { return Params{2, int(q) - 1, int(p) - 2, 1}; },
       [](auto p, auto q, auto r) { return Rational(-(q - 1) * (p + r - 4) + 4); }},
      {"case 3.4 (expanded)", [](auto p, auto q, auto) { return Params{int(p) - 1, int(q) - 1, int(p) - 2, 1}; },
       [](auto p, auto q, auto r) { return Rational(-p * q * r + p * q + p * r + 2 * q * r + p - 2 * q - 2 * r); }},
      {"case 3.4 (factored)", [](auto p, auto q, auto) { return Params{int(p) - 1, int(q) - 1, int(p) - 2, 1}; },
       [](auto p, auto q, auto r) { return Rational(-(p - 2) * (q - 1) * (r - 1) + 4); }},
      {"case 3.5 (expanded)", [](auto p, auto, auto) { return Params{int(p) - 1, 2, int(p) - 2, 1}; },
       [](auto p, auto q, auto r) { return Rational(-p * q * r + 2 * p * q + p * r + q * r - 2 * p - 2 * q + r); }},
      {"case 3.5 (factored)", [](auto p, auto, auto) { return Params{int(p) - 1, 2, int(p) - 2, 1}; },
       [](auto p, auto q, auto r) { return Rational(-(p - 1) * (q - 1) * (r - 2) + 4); }},
  };
  return cases;
}

const std::vector<GeneralCase>& general_cases() {
  static const std::vector<GeneralCase> cases = {
      {"easy case i<i', j<j' (printed, i/(jq))",
       [](int, int, const Params& x) { return x[0] < x[2] && x[1] < x[3]; },
       [](auto p, auto q, auto r, const Params& x) {
         const long long i = x[0], j = x[1], i2 = x[2], j2 = x[3];
         return Rational(-i * q * r) * (Rational(1) - Rational(1, q) - Rational(1, r) - Rational(j, i * q)) *
                    Rational(p - i2) -
                Rational(j * p * r) * (Rational(1) - Rational(1, p) - Rational(1, r) - Rational(i, j * q)) *
                    Rational(q - j2);
       }},
      {"easy case i<i', j<j' (with i/(jp))",
       [](int, int, const Params& x) { return x[0] < x[2] && x[1] < x[3]; },
       [](auto p, auto q, auto r, const Params& x) {
         const long long i = x[0], j = x[1], i2 = x[2], j2 = x[3];
         return Rational(-i * q * r) * (Rational(1) - Rational(1, q) - Rational(1, r) - Rational(j, i * q)) *
                    Rational(p - i2) -
                Rational(j * p * r) * (Rational(1) - Rational(1, p) - Rational(1, r) - Rational(i, j * p)) *
                    Rational(q - j2);
       }},
      {"hard case i<=i', j>=j'",
       [](int, int, const Params& x) { return x[0] <= x[2] && x[1] >= x[3] && (x[0] != x[2] || x[1] != x[3]); },
       [](auto p, auto q, auto r, const Params& x) {
         const long long i = x[0], j = x[1], i2 = x[2], j2 = x[3];
         const long long d = p * q * r - p * q - q * r - p * r;
         return Rational(-((q * r - q - r) * i - r * j2) * (p - i2) - ((p * r - p - r) * j2 - r * i) * (q - j) -
                         r * (i2 - i) * (j - j2) + d);
       }},
      {"case 1 general (i',j') = (i,j)", [](int, int, const Params& x) { return x[0] == x[2] && x[1] == x[3]; },
       [](auto p, auto q, auto r, const Params& x) {
         const long long i = x[0], j = x[1];
         const long long d = p * q * r - p * q - q * r - p * r;
         return Rational((q * r - q - r) * i * i + (p * r - p - r) * j * j - 2 * r * i * j - d * (i + j - 1));
       }},
      {"case 2 general (i',j') = (i,1)", [](int, int, const Params& x) { return x[2] == x[0] && x[3] == 1; },
       [](auto p, auto q, auto r, const Params& x) {
         const long long i = x[0], j = x[1];
         const long long d = p * q * r - p * q - q * r - p * r;
         return Rational((p * r - p - r) * i * i - d * i + (p * r - p - r) * j - r * i * (j + 1));
       }},
      {"case 3 general (i',j') = (p-2,1), i<=i'",
       [](int p, int, const Params& x) { return x[2] == p - 2 && x[3] == 1 && x[0] <= x[2]; },
       [](auto p, auto q, auto r, const Params& x) {
         const long long i = x[0], j = x[1];
         return Rational(-(q * r - 2 * q - r) * i + (r - p) * j);
       }},
      {"a^{p-1}b against a^i b^j: qi - pj", [](int p, int, const Params& x) { return x[0] == p - 1 && x[1] == 1; },
       [](auto p, auto q, auto, const Params& x) {
         if (x[2] == p - 1 && x[3] == 1) return Rational(p * q - p - q);
         return Rational(q * x[2] - p * x[3]);
       }},
  };
  return cases;
}

// Closed forms involving block words. `emit` receives the two formal words,
// the printed value and a parameter description.
using Emit = std::function<void(const Word&, const Word&, const Rational&, const std::string&)>;

struct BlockCase {
  const char* name;
  std::function<void(const Triple&, const Emit&)> run;
};

bool excluded(const Triple& t, int i, int j) { return (i == 1 && j == t.q() - 1) || (i == t.p() - 1 && j == 1); }

template <class F>
void for_syllables(const Triple& t, F f) {
  for (int i = 1; i < t.p(); ++i)
    for (int j = 1; j < t.q(); ++j)
      if (!excluded(t, i, j)) f(i, j);
}

Word blocks(const Word& block, int k) { return blocks_then(block, k, {}); }

Word concat(const Word& x, const Word& y) {
  Word w = x;
  w.insert(w.end(), y.begin(), y.end());
  return w;
}

const std::vector<BlockCase>& block_cases() {
  static const std::vector<BlockCase> cases = {
      {"block case 2 general, k=0, k'=(r-2)/2 (r even)",
       [](const Triple& t, const Emit& emit) {
         if (t.r() % 2) return;
         const long long p = t.p(), q = t.q(), m = (t.r() - 2) / 2;
         const Word B = syllable(t.p() - 1, 1);
         for_syllables(t, [&](int i, int j) {
           for_syllables(t, [&](int i2, int j2) {
             const Rational base = scaled_linking(t, syllable(i, j), syllable(i2, j2));
             emit(syllable(i, j), blocks_then(B, int(m), syllable(i2, j2)), Rational((i * q - j * p) * m) + base,
                  tuple_str({i, j, i2, j2}));
           });
         });
       }},
      {"block cases 2.1-2.4 (expanded, r even)",
       [](const Triple& t, const Emit& emit) {
         if (t.r() % 2) return;
         const long long p = t.p(), q = t.q(), r = t.r();
         const int m = (t.r() - 2) / 2;
         const Word B = syllable(t.p() - 1, 1);
         const int P = t.p();
         const auto half = [&](long long head, long long rest) { return Rational(head * (r - 2), 2) + Rational(rest); };
         emit(syllable(P - 1, 2), blocks_then(B, m, syllable(P - 1, 2)),
              half(p * q - 2 * p - q, -p * q * r + 2 * p * q + 2 * p * r + q * r - 4 * p - q - r), "2.1");
         emit(syllable(P - 1, 2), blocks_then(B, m, syllable(P - 2, 1)),
              half(p * q - 2 * p - q, -p * q * r + 2 * p * q + p * r + q * r - 2 * p - 2 * q + r), "2.2");
         emit(syllable(P - 2, 1), blocks_then(B, m, syllable(P - 1, 2)),
              half(p * q - p - 2 * q, -p * q * r + 2 * p * q + p * r + q * r - 2 * p - 2 * q + r), "2.3");
         emit(syllable(P - 2, 1), blocks_then(B, m, syllable(P - 2, 1)),
              half(p * q - p - 2 * q, -p * q * r + 2 * p * q + p * r + 2 * q * r - p - 4 * q - r), "2.4");
       }},
      {"block cases 2.1-2.4 (factored, r even)",
       [](const Triple& t, const Emit& emit) {
         if (t.r() % 2) return;
         const long long p = t.p(), q = t.q(), r = t.r();
         const int m = (t.r() - 2) / 2;
         const Word B = syllable(t.p() - 1, 1);
         const int P = t.p();
         emit(syllable(P - 1, 2), blocks_then(B, m, syllable(P - 1, 2)),
              Rational(-((p - 1) * (q - 2) * (r - 2) - 2 * (q - 2)), 2), "2.1");
         emit(syllable(P - 1, 2), blocks_then(B, m, syllable(P - 2, 1)),
              Rational(-((p - 1) * q * (r - 2) - 2 * r), 2), "2.2");
         emit(syllable(P - 2, 1), blocks_then(B, m, syllable(P - 1, 2)),
              Rational(-(p * (q - 1) * (r - 2) - 2 * r), 2), "2.3");
         emit(syllable(P - 2, 1), blocks_then(B, m, syllable(P - 2, 1)),
              Rational(-((p - 2) * q * (r - 2) + p + r), 2), "2.4");
       }},
      {"block case 3 general, k=k'=(r-2)/2 (r even)",
       [](const Triple& t, const Emit& emit) {
         if (t.r() % 2) return;
         const long long p = t.p(), q = t.q(), r = t.r();
         const int m = (t.r() - 2) / 2;
         const Word B = syllable(t.p() - 1, 1);
         for_syllables(t, [&](int i, int j) {
           for_syllables(t, [&](int i2, int j2) {
             const Rational base = scaled_linking(t, syllable(i, j), syllable(i2, j2));
             const long long head = -p * q * r + p * r + q * r + 2 * p + 2 * q + 2 * q * (i + i2) - 2 * p * (j + j2);
             emit(blocks_then(B, m, syllable(i, j)), blocks_then(B, m, syllable(i2, j2)),
                  Rational(head * (r - 2), 2) + base, tuple_str({i, j, i2, j2}));
           });
         });
       }},
      {"block expansion with k(-pqr+pq+pr+qr), k<=k'",
       [](const Triple& t, const Emit& emit) {
         const long long p = t.p(), q = t.q(), r = t.r();
         const int kmax = (t.r() - 2) / 2;
         const Word B = syllable(t.p() - 1, 1);
         for_syllables(t, [&](int i, int j) {
           for_syllables(t, [&](int i2, int j2) {
             const Rational base = scaled_linking(t, syllable(i, j), syllable(i2, j2));
             for (int k = 0; k <= kmax; ++k)
               for (int k2 = k; k2 <= kmax; ++k2) {
                 const long long lin = 1LL * k * k2 * (p * q - p - q) + k * (q * i2 - p * j2) + k2 * (q * i - j * p) +
                                       k * (-p * q * r + p * q + p * r + q * r);
                 emit(blocks_then(B, k, syllable(i, j)), blocks_then(B, k2, syllable(i2, j2)), Rational(lin) + base,
                      tuple_str({i, j, k, i2, j2, k2}));
               }
           });
         });
       }},
      {"oppose: a^{p-1}b against (ab^{q-1})^k'",
       [](const Triple& t, const Emit& emit) {
         const long long p = t.p(), q = t.q();
         for (int k2 = 1; k2 <= std::max(1, (t.r() - 2) / 2); ++k2)
           emit(syllable(t.p() - 1, 1), blocks(syllable(1, t.q() - 1), k2), Rational(k2 * (-p * q + p + q)),
                "k'=" + std::to_string(k2));
       }},
      {"mixed2, first factor read as (a^{p-1}b)^k (ab^{q-1})^l",
       [](const Triple& t, const Emit& emit) {
         const long long p = t.p(), q = t.q(), r = t.r();
         const int kmax = std::max(1, (t.r() - 2) / 2);
         const Word B = syllable(t.p() - 1, 1), C = syllable(1, t.q() - 1);
         for (int k = 1; k <= kmax; ++k)
           for (int l = 1; l <= kmax; ++l)
             for (int k2 = 1; k2 <= kmax; ++k2)
               for (int l2 = 1; l2 <= kmax; ++l2) {
                 const long long v = (p * q - p - q) * (k - l) * (k2 - l2) +
                                     (-p * q * r + p * q + q * r + p * r) * (std::min(k, k2) + std::min(l, l2) - 1);
                 emit(concat(blocks(B, k), blocks(C, l)), concat(blocks(B, k2), blocks(C, l2)), Rational(v),
                      tuple_str({k, l, k2, l2}));
               }
       }},
      {"mixed: (a^{p-1}b)^k a^i b^j against (a^{p-1}b)^k' (ab^{q-1})^l'",
       [](const Triple& t, const Emit& emit) {
         const long long p = t.p(), q = t.q(), d = t.delta();
         const int kmax = std::max(1, (t.r() - 2) / 2);
         const Word B = syllable(t.p() - 1, 1), C = syllable(1, t.q() - 1);
         for_syllables(t, [&](int i, int j) {
           for (int k = 0; k <= kmax; ++k)
             for (int k2 = 1; k2 <= kmax; ++k2)
               for (int l2 = 1; l2 <= kmax; ++l2) {
                 const long long v = (k2 - l2) * (k * (p * q - p - q) + q * i - p * j) - (k < k2 ? k + 1 : k2) * d;
                 emit(blocks_then(B, k, syllable(i, j)), concat(blocks(B, k2), blocks(C, l2)), Rational(v),
                      tuple_str({i, j, k, k2, l2}));
               }
         });
       }},
  };
  return cases;
}

std::string describe(const Params& x) { return tuple_str({x[0], x[1], x[2], x[3]}); }

void check_identity(IdentityResult& res, const Triple& t, const Params& x, const Rational& printed) {
  ++res.checked;
  const Rational got = scaled_linking(t, syllable(x[0], x[1]), syllable(x[2], x[3]));
  if (got == printed) {
    ++res.matched;
  } else if (res.first_discrepancy.empty()) {
    res.first_discrepancy =
        "(i,j,i',j')=" + describe(x) + ": pipeline " + got.str() + ", printed " + printed.str();
  }
}

}  // namespace

bool LemmaReport::inequalities_hold() const {
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [](const InequalityResult& r) { return r.violations == 0; });
}

LemmaReport check_lemma_inequalities(const Triple& t, const LemmaGrid& lemma_grid) {
  const Grid g = grid_for(t, lemma_grid);
  LemmaReport report{t, {}, {}};
  report.inequalities.push_back(fig8_lower(g));
  report.inequalities.push_back(fig8_upper(g));
  report.inequalities.push_back(refined_block_bound(t, g));
  if (lemma_grid.superadditivity_samples > 0) report.inequalities.push_back(superadditivity(lemma_grid));

  const long long p = t.p(), q = t.q(), r = t.r();
  const auto in_range = [&](const Params& x) {
    return x[0] >= 1 && x[2] >= 1 && x[1] >= 1 && x[3] >= 1 && x[0] <= p - 1 && x[2] <= p - 1 &&
           x[1] <= q - 1 && x[3] <= q - 1;
  };
  for (const auto& c : point_cases()) {
    IdentityResult res;
    res.name = c.name;
    const Params x = c.params(p, q, r);
    res.parameters = "(i,j,i',j')=" + describe(x);
    if (in_range(x)) check_identity(res, t, x, c.printed(p, q, r));
    report.identities.push_back(std::move(res));
  }
  for (const auto& c : general_cases()) {
    IdentityResult res;
    res.name = c.name;
    res.parameters = "all (i,j,i',j') in [1,p-1]x[1,q-1] in the case domain";
    for (int i = 1; i < t.p(); ++i)
      for (int j = 1; j < t.q(); ++j)
        for (int i2 = 1; i2 < t.p(); ++i2)
          for (int j2 = 1; j2 < t.q(); ++j2) {
            const Params x{i, j, i2, j2};
            if (c.domain(t.p(), t.q(), x)) check_identity(res, t, x, c.printed(p, q, r, x));
          }
    report.identities.push_back(std::move(res));
  }
  for (const auto& c : block_cases()) {
    IdentityResult res;
    res.name = c.name;
    res.parameters = "lemma parameter grid of the triple";
    c.run(t, [&](const Word& x, const Word& y, const Rational& printed, const std::string& where) {
      ++res.checked;
      const Rational got = scaled_linking(t, x, y);
      if (got == printed) {
        ++res.matched;
      } else if (res.first_discrepancy.empty()) {
        res.first_discrepancy = where + " " + to_string(x) + " vs " + to_string(y) + ": pipeline " + got.str() +
                                ", printed " + printed.str();
      }
    });
    if (res.checked > 0) report.identities.push_back(std::move(res));
  }
  return report;
}

}  // namespace templink
