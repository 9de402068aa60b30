#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "commands.hpp"

using namespace duval;

namespace {

const std::filesystem::path kFixtures = DUVAL_FIXTURE_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::set<std::string> failing;  // row-level failures, for comparison with the known list

  void fail(const std::string& what) {
    if (pass) detail = what;
    pass = false;
    failing.insert(what);
  }
};

struct Instance {
  const CorpusEntry* entry;
  Classification cls;
  std::vector<WeightVerdict> verdicts;
  bool consistent = true;
  std::string error;
};

// Colored entries whose specialization is empty in linear coordinates; see the decisions ledger.
const std::set<std::string> kKnownRedRows4 = {
    "D7 (1,3,5)", "D8 (1,2,3)", "D8 (1,3,4)", "D8 (1,3,5)", "D9 (1,2,3)", "D9 (1,3,4)", "D9 (1,3,5)", "D9 (1,4,5)",
    "D10 (1,2,3)", "D10 (1,3,4)", "D10 (1,3,5)", "D10 (1,4,5)", "E6 (1,3,4)", "E6 (1,3,5)", "E7 (1,3,4)", "E7 (1,3,5)",
    "E8 (1,2,3)", "E8 (1,3,4)", "E8 (1,3,5)", "E8 (1,4,5)"};
const std::set<std::string> kKnownRedRows5 = {"table2 E8"};

std::string wlabel(const Weight& w) { return "(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + ")"; }

void print_line(int n, const std::string& title, const Outcome& o) {
  std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title;
  if (!o.pass) std::cout << "  [" << o.failing.size() << " failing; first: " << o.detail << "]";
  std::cout << std::endl;
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  A19Fixture a19 = load_a19(kFixtures);

  // Corpus: three seeds per row and colored weight, the Kato-Naruki quartic, and extra generic draws.
  Corpus corp = corpus(0, 3, kFixtures);
  std::vector<CorpusEntry> extra;
  for (const TypeTag& t : supported_targets())
    for (std::uint64_t k = 3; k < 8; ++k) {
      GenSpec s{t, false, {1, 1, 1}, k};
      extra.push_back({s, "generated", generate(s)});
    }
  std::vector<Instance> inst;
  auto add = [&](const CorpusEntry& e) {
    Instance i{&e, {}, {}, true, ""};
    try {
      i.cls = classify(e.quartic);
      i.verdicts = enumerate_vp(e.quartic, {0, 12});
    } catch (const ConsistencyViolation& err) {
      i.consistent = false;
      i.error = err.what();
    } catch (const Error& err) {
      i.error = err.what();
    }
    inst.push_back(std::move(i));
  };
  for (const auto& e : corp.entries) add(e);
  for (const auto& e : extra) add(e);
  std::cout << "corpus: " << inst.size() << " instances, " << corp.failures.size() << " specialized specs not generated" << std::endl;

  int unexpected = 0;

  // 1
  {
    Outcome o;
    cli::Result r = cli::cmd_classify({read_text(kFixtures / "a19_affine.txt"), std::nullopt}, false);
    Classification c = classify(a19.quartic);
    if (r.code != 0 || r.out.rfind("type: A>=8\n", 0) != 0) o.fail("classify output: " + r.out.substr(0, 20) + r.err);
    if (!(c.tag.family == Family::A && c.tag.index == 8 && !c.tag.exact)) o.fail("tag " + c.tag.to_string());
    for (const auto& e : c.cert.entries)
      if (e.verdict.find("fails") != std::string::npos) o.fail("criterion " + e.name + " fails");
    print_line(1, "A19 fixture classifies as A>=8", o);
    unexpected += !o.pass;
  }
  // 2
  {
    Outcome o;
    WeightSet got = vp_set(enumerate_vp(a19.quartic, {4, 12}));
    WeightSet want{{1, 1, 1}, {1, 1, 2}};
    if (got != want) o.fail(format_weight_set(got));
    print_line(2, "A19 fixture vp weights with a <= 4, a+b <= 12 are {(1,1,1), (1,1,2)}", o);
    unexpected += !o.pass;
  }
  // 3
  {
    Outcome o;
    Polynomial mapped = substitute(a19.original, kato_naruki_change());
    if (format(mapped) != format(a19.affine)) o.fail("mapped equation differs: " + format(mapped - a19.affine));
    print_line(3, "coordinate change maps the Kato-Naruki equation to the A19 fixture", o);
    unexpected += !o.pass;
  }

  std::vector<CorpusAnalysis> an;
  for (const auto& i : inst)
    if (i.error.empty() && i.entry->source == "generated" &&
        std::find_if(corp.entries.begin(), corp.entries.end(), [&](const CorpusEntry& e) { return &e == i.entry; }) != corp.entries.end())
      an.push_back({i.entry, i.cls, vp_set(i.verdicts)});

  // 4
  {
    Outcome o;
    for (const auto& row : table_vp_weights()) {
      WeightSet black(row.black.begin(), row.black.end());
      int generic = 0;
      for (const auto& i : inst) {
        const GenSpec& s = i.entry->spec;
        if (i.entry->source != "generated" || s.target != row.type || s.specialize) continue;
        ++generic;
        if (!i.error.empty() || vp_set(i.verdicts) != black || i.cls.tag != row.type)
          o.fail(row.type.to_string() + " generic seed " + std::to_string(s.seed));
      }
      if (generic < 3) o.fail(row.type.to_string() + " generic has " + std::to_string(generic) + " seeds");
      for (const Weight& w : row.colored) {
        int seen = 0;
        bool ok = true;
        for (const auto& i : inst) {
          const GenSpec& s = i.entry->spec;
          if (s.target != row.type || !s.specialize || s.weight != w) continue;
          ++seen;
          ok = ok && i.error.empty() && i.cls.tag == row.type && vp_set(i.verdicts).count(w) > 0;
        }
        if (seen < 3 || !ok) o.fail(row.type.to_string() + " " + wlabel(w));
      }
    }
    TableText t3 = reproduce_table3(an), e3 = expected_table3();
    if (t3.lines != e3.lines) o.fail("table3 differs");
    print_line(4, "vp weights per type: black sets exact, colored weights realized (plus resolution counts)", o);
    if (o.failing != kKnownRedRows4) {
      ++unexpected;
      for (const auto& f : o.failing)
        if (!kKnownRedRows4.count(f)) std::cout << "  unexpected: " << f << std::endl;
      for (const auto& f : kKnownRedRows4)
        if (!o.failing.count(f)) std::cout << "  now passing: " << f << std::endl;
    } else {
      std::cout << "  failing rows are exactly the " << kKnownRedRows4.size() << " documented empty specializations" << std::endl;
    }
  }
  // 5
  {
    Outcome o;
    for (const auto& [got, want] : {std::pair{reproduce_table2(an), expected_table2()}, std::pair{reproduce_table4(an), expected_table4()}})
      for (std::size_t k = 0; k < want.lines.size(); ++k)
        if (k >= got.lines.size() || got.lines[k] != want.lines[k])
          o.fail(want.name + " " + want.lines[k].substr(0, want.lines[k].find(" |")));
    print_line(5, "link filter reproduces the Sarkisov link rows and the first-blowup descendants", o);
    if (o.failing != kKnownRedRows5) {
      ++unexpected;
      for (const auto& f : o.failing) std::cout << "  " << (kKnownRedRows5.count(f) ? "known: " : "unexpected: ") << f << std::endl;
    } else {
      std::cout << "  failing rows are exactly the documented E8 (1,2,3) gap" << std::endl;
    }
  }
  // 6
  {
    Outcome o;
    long checks = 0;
    int canonical = 0;
    for (const auto& i : inst) {
      if (!i.consistent) o.fail(i.entry->spec.to_string() + ": " + i.error);
      else if (!i.error.empty()) o.fail(i.entry->spec.to_string() + " errored: " + i.error);
      else ++canonical;
      for (const auto& v : i.verdicts) checks += static_cast<long>(v.results.size());
    }
    if (canonical < 200) o.fail("only " + std::to_string(canonical) + " instances");
    std::ostringstream title;
    title << "Key Lemma: stepwise vp <=> discrepancy 0 on " << canonical << " instances, " << checks << " assignments";
    print_line(6, title.str(), o);
    unexpected += !o.pass;
  }
  // 7
  {
    Outcome o;
    long weights = 0;
    for (const auto& i : inst) {
      for (const auto& v : i.verdicts)
        for (const auto& r : v.results)
          if (r.discrepancy < 0) o.fail(i.entry->spec.to_string() + " negative discrepancy at " + wlabel(v.weights()));
      if (i.cls.tag.family != Family::A || !i.cls.tag.exact) continue;
      long n = i.cls.tag.index;
      for (const auto& v : i.verdicts) {
        if (!v.vp) continue;
        ++weights;
        if (v.a > ceil_half(n) || v.a + v.b > n + 1) o.fail(i.entry->spec.to_string() + " weight " + wlabel(v.weights()));
      }
    }
    print_line(7, "bounds a <= ceil(n/2), a+b <= n+1 on " + std::to_string(weights) + " A_n vp weights; discrepancies >= 0", o);
    unexpected += !o.pass;
  }
  // 8
  {
    Outcome o;
    int trials = 0;
    for (bool de : {false, true}) {
      auto rows = de ? table_conditions_de() : table_conditions_a();
      for (const auto& row : rows) {
        SmallRationals rnd(1000 + 97 * static_cast<std::uint64_t>(row.ray[1]) + 13 * static_cast<std::uint64_t>(row.ray[2]) + de);
        for (int k = 0; k < 25; ++k, ++trials) {
          ToggleOutcome t = toggle_trial(rows, row, de, rnd);
          if (!t.ok) o.fail(std::string(de ? "DE " : "A ") + t.detail);
        }
      }
      if (reproduce_conditions(de, 0).lines != expected_conditions(de).lines) o.fail(std::string(de ? "DE" : "A") + " derived table differs");
    }
    print_line(8, "condition tables: " + std::to_string(trials) + " toggle trials, 25 per row", o);
    unexpected += !o.pass;
  }
  // 9
  {
    Outcome o;
    for (const auto& i : inst) {
      const GenSpec& s = i.entry->spec;
      if (i.entry->source != "generated" || s.specialize || !i.error.empty()) continue;
      const TypeTag& t = s.target;
      if (t.family == Family::A && t.exact) {
        if (i.cls.cert.steps != ceil_half(t.index)) o.fail(s.to_string() + " steps " + std::to_string(i.cls.cert.steps));
      } else if (t.family != Family::A && !table_first_descendant(t).empty()) {
        const auto& d = i.cls.cert.descent;
        if (d.size() < 2 || d[1] != table_first_descendant(t)) o.fail(s.to_string() + " descent");
      }
    }
    print_line(9, "A_n criteria steps equal ceil(n/2); D/E descent chains follow the first-blowup table", o);
    unexpected += !o.pass;
  }
  // 10
  {
    Outcome o;
    SmallRationals rnd(2024);
    const std::array<WeightVector, 6> ws{WeightVector(1, 1, 1), WeightVector(1, 1, 2), WeightVector(1, 2, 3),
                                         WeightVector(2, 1, 5), WeightVector(3, 4, 1), WeightVector(1, 3, 5)};
    for (int k = 0; k < 1000; ++k) {
      Polynomial f = cli::random_polynomial(rnd, 5, 4), g = cli::random_polynomial(rnd, 5, 4);
      if (f.is_zero() || g.is_zero()) continue;
      if (parse(format(f)) != f) o.fail("round trip " + format(f));
      const WeightVector& w = ws[k % ws.size()];
      if (weighted_order(f * g, w) != weighted_order(f, w) + weighted_order(g, w)) o.fail("additivity " + format(f));
    }
    for (int k = 0; k < 100; ++k) {
      Matrix M(4, 4);
      std::optional<Matrix> inv;
      while (!inv) {
        for (std::size_t r = 0; r < 4; ++r)
          for (std::size_t c = 0; c < 4; ++c) M(r, c) = rnd.uniform(0, 2) ? rnd.nonzero() : GR();
        inv = M.inverse();
      }
      Polynomial f = cli::random_polynomial(rnd, 6, 4);
      if (apply_linear(apply_linear(f, M), *inv) != f) o.fail("substitution inverse " + format(f));
    }
    print_line(10, "kernel: 1000 parse/format and valuation products, 100 substitution inverses", o);
    unexpected += !o.pass;
  }

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("acceptance finished in %.1f s; %d criteria deviate from the documented expectation\n", secs, unexpected);
  return unexpected == 0 ? 0 : 1;
}
