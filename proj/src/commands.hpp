#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "report.hpp"

namespace duval::cli {

enum Exit : int { kOk = 0, kFailure = 1, kParse = 2, kGeometry = 3, kField = 4, kConsistency = 5, kMismatch = 6 };

struct Result {
  int code = kOk;
  std::string out;
  std::string err;
};

inline int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse:
    case ErrorKind::Arithmetic: return kParse;
    case ErrorKind::Geometry:
    case ErrorKind::Reducible:
    case ErrorKind::NonNormal: return kGeometry;
    case ErrorKind::FieldExtension: return kField;
    case ErrorKind::Consistency: return kConsistency;
    case ErrorKind::Generation: return kFailure;
  }
  return kFailure;
}

struct Input {
  std::string text;
  std::optional<std::string> point;
};

inline std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::array<GR, 4> parse_point(const std::string& s) {
  std::array<GR, 4> p;
  std::size_t start = 0;
  for (int k = 0; k < 4; ++k) {
    std::size_t end = s.find(':', start);
    if ((k < 3) != (end != std::string::npos)) throw ParseError("point must have the form p0:p1:p2:p3", start);
    p[k] = parse_coeff(s.substr(start, end == std::string::npos ? std::string::npos : end - start));
    start = end + 1;
  }
  return p;
}

inline NormalizedQuartic load_quartic(const Input& in) {
  Polynomial F = as_projective_quartic(parse(in.text));
  return in.point ? normalize_at_point(F, parse_point(*in.point)) : normalize_at_point(F);
}

template <class F>
Result guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return {exit_code(e), "", std::string("error: ") + e.what() + "\n"};
  }
}

// ---------------------------------------------------------------------------

inline Result cmd_classify(const Input& in, bool json) {
  return guarded([&] {
    NormalizedQuartic q = load_quartic(in);
    NormalizedClassification nc = classify_full(q);
    std::ostringstream os;
    if (json) {
      os << report::classification_json(nc.result, nc.normal).dump(2) << "\n";
    } else {
      const auto& c = nc.result;
      os << "type: " << c.tag.to_string() << "\n";
      for (const auto& e : c.cert.entries) os << "  " << e.name << " = " << e.value << (e.verdict.empty() ? "" : "  [" + e.verdict + "]") << "\n";
      if (c.tag.family == Family::A) os << "criteria steps: " << c.cert.steps << "\n";
      if (c.cert.descent.size() > 1) {
        os << "descent:";
        for (const auto& d : c.cert.descent) os << " " << d;
        os << "\n";
      }
    }
    return Result{kOk, os.str(), ""};
  });
}

struct VpOptions {
  Bounds bounds;
  bool links_only = false;
  bool json = false;
  bool traces = false;
};

inline Result cmd_vp(const Input& in, const VpOptions& opt) {
  return guarded([&] {
    NormalizedQuartic q = load_quartic(in);
    Classification c = classify(q);
    std::vector<WeightVerdict> all = enumerate_vp(q, opt.bounds);
    std::vector<WeightVerdict> shown = opt.links_only ? sarkisov_filter(all) : all;
    WeightSet s = vp_set(shown);
    std::ostringstream os;
    if (opt.json) {
      report::Json j;
      j["type"] = c.tag.to_string();
      j["max_a"] = opt.bounds.max_a;
      j["max_b"] = opt.bounds.max_b;
      j["links_only"] = opt.links_only;
      j["vp_weights"] = report::weight_set_json(s);
      report::Json vs = report::Json::array();
      for (const auto& v : shown) vs.push_back(report::verdict_json(v, opt.traces));
      j["verdicts"] = vs;
      os << j.dump(2) << "\n";
    } else {
      os << "type: " << c.tag.to_string() << "\n";
      os << (opt.links_only ? "vp weights initiating links: " : "vp weights: ") << format_weight_set(s) << "\n";
      for (const auto& v : shown) {
        if (!v.vp) continue;
        os << "  (1," << v.a << "," << v.b << ")";
        for (const auto& r : v.results)
          if (r.discrepancy == 0) os << " [" << r.assignment[0] << "," << r.assignment[1] << "," << r.assignment[2] << "]";
        os << (v.initiates_link ? "  link" : "") << "\n";
      }
    }
    return Result{kOk, os.str(), ""};
  });
}

inline Result cmd_check(const Input& in, long a, long b, bool json) {
  return guarded([&] {
    NormalizedQuartic q = load_quartic(in);
    WeightVerdict v = analyze_weight(q, a, b);
    std::ostringstream os;
    if (json) {
      os << report::verdict_json(v, true).dump(2) << "\n";
    } else {
      os << "weights (1," << v.a << "," << v.b << "): " << (v.vp ? "volume preserving" : "not volume preserving") << "\n";
      for (const auto& r : v.results) {
        os << "  assignment (" << r.assignment[0] << "," << r.assignment[1] << "," << r.assignment[2]
           << "): discrepancy " << r.discrepancy << ", stepwise " << (r.stepwise_vp ? "vp" : "not vp") << "\n";
        for (const auto& s : r.trace.steps)
          os << "    ray (" << s.step.ray[0] << "," << s.step.ray[1] << "," << s.step.ray[2] << ") " << kind_name(s.step.kind)
             << " order " << s.verdict.order << " discrepancy " << s.verdict.discrepancy << "\n";
      }
    }
    return Result{kOk, os.str(), ""};
  });
}

struct GenerateOptions {
  std::string target;
  std::optional<std::array<long, 2>> weight;
  std::uint64_t seed = 0;
  bool corpus = false;
  bool json = false;
  std::filesystem::path fixtures;
};

inline Result cmd_generate(const GenerateOptions& opt) {
  return guarded([&] {
    std::ostringstream os;
    if (opt.corpus) {
      Corpus c = corpus(opt.seed, 3, opt.fixtures);
      for (const auto& e : c.entries) os << report::corpus_line(e).dump() << "\n";
      std::string err;
      for (const auto& f : c.failures) err += "failed: " + f.reason + "\n";
      return Result{kOk, os.str(), err};
    }
    GenSpec s;
    s.target = parse_type_tag(opt.target);
    s.seed = opt.seed;
    if (opt.weight) {
      s.specialize = true;
      s.weight = {1, (*opt.weight)[0], (*opt.weight)[1]};
    }
    NormalizedQuartic q = generate(s);
    if (opt.json) os << report::corpus_line({s, "generated", q}).dump() << "\n";
    else os << format(q.F()) << "\n";
    return Result{kOk, os.str(), ""};
  });
}

// ---------------------------------------------------------------------------

inline std::vector<TableText> reproduce_all(std::uint64_t seed, const std::filesystem::path& fixtures, int seeds_per_row = 3) {
  Corpus c = corpus(seed, seeds_per_row, fixtures);
  auto an = analyze_corpus(c);
  return {reproduce_table1(an), reproduce_table2(an),       reproduce_table3(an),
          reproduce_table4(an), reproduce_conditions(false, seed), reproduce_conditions(true, seed)};
}

inline std::vector<TableText> expected_all() {
  return {expected_table1(), expected_table2(), expected_table3(), expected_table4(), expected_conditions(false),
          expected_conditions(true)};
}

inline std::string table_file_text(const TableText& t) {
  std::string s;
  for (const auto& l : t.lines) s += l + "\n";
  return s;
}

inline std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);)
    if (!l.empty()) out.push_back(l);
  return out;
}

inline Result cmd_tables(std::uint64_t seed, const std::filesystem::path& fixtures, const std::filesystem::path& expected_dir,
                         const std::optional<std::filesystem::path>& out_dir) {
  return guarded([&] {
    std::vector<TableText> got = reproduce_all(seed, fixtures);
    std::ostringstream os, err;
    if (out_dir) std::filesystem::create_directories(*out_dir);
    int mismatched = 0;
    for (const auto& t : got) {
      if (out_dir) std::ofstream(*out_dir / (t.name + ".txt")) << table_file_text(t);
      std::vector<std::string> want = split_lines(read_text(expected_dir / (t.name + ".txt")));
      int bad = 0;
      std::size_t n = std::max(want.size(), t.lines.size());
      for (std::size_t k = 0; k < n; ++k) {
        std::string w = k < want.size() ? want[k] : "<missing>";
        std::string g = k < t.lines.size() ? t.lines[k] : "<missing>";
        if (w == g) continue;
        ++bad;
        err << t.name << ": expected  " << w << "\n" << t.name << ": computed  " << g << "\n";
      }
      os << t.name << ": " << (n - static_cast<std::size_t>(bad)) << "/" << n << " rows match\n";
      mismatched += bad > 0;
    }
    return Result{mismatched ? kMismatch : kOk, os.str(), err.str()};
  });
}

// ---------------------------------------------------------------------------
// selftest

struct Suite {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first_failure = what;
  }
};

inline Polynomial random_polynomial(SmallRationals& rnd, int terms, unsigned max_deg) {
  Polynomial p;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    unsigned d = static_cast<unsigned>(rnd.uniform(0, max_deg));
    for (unsigned j = 0; j < d; ++j) m[static_cast<int>(rnd.uniform(1, 3))] += 1;
    GR c = rnd.uniform(0, 3) == 0 ? rnd.nonzero() * GR::i() + rnd.nonzero() : rnd.nonzero();
    p.add_term(m, c);
  }
  return p;
}

inline Result cmd_selftest(std::uint64_t seed, const std::filesystem::path& fixtures) {
  return guarded([&] {
    std::vector<Suite> suites;
    SmallRationals rnd(seed ^ 0x5e1f7e57ull);

    Suite kernel{"kernel round trips"};
    for (int k = 0; k < 200; ++k) {
      Polynomial f = random_polynomial(rnd, 1 + static_cast<int>(rnd.uniform(0, 5)), 4);
      Polynomial g = random_polynomial(rnd, 1 + static_cast<int>(rnd.uniform(0, 5)), 4);
      kernel.check(parse(format(f)) == f, "parse(format(f)) != f for " + format(f));
      if (f.is_zero() || g.is_zero()) continue;
      WeightVector w(1, rnd.uniform(1, 5), rnd.uniform(1, 7));
      kernel.check(weighted_order(f * g, w) == weighted_order(f, w) + weighted_order(g, w), "weighted order not additive on " + format(f));
    }
    for (int k = 0; k < 50; ++k) {
      Matrix M = Matrix::identity(4);
      for (int i = 1; i < 4; ++i)
        for (int j = 1; j < 4; ++j) M(i, j) = GR(rnd.uniform(-3, 3));
      auto inv = M.inverse();
      if (!inv) continue;
      Polynomial f = random_polynomial(rnd, 4, 4);
      kernel.check(apply_linear(apply_linear(f, M), *inv) == f, "substitution inverse failed on " + format(f));
    }
    suites.push_back(kernel);

    Suite fixture{"Kato-Naruki fixture"};
    A19Fixture a19 = load_a19(fixtures);
    fixture.check(substitute(a19.original, kato_naruki_change()) == a19.affine, "coordinate change does not reproduce the affine equation");
    Classification c19 = classify(a19.quartic);
    fixture.check(c19.tag == TypeTag::A(8), "fixture classified as " + c19.tag.to_string());
    WeightSet v19 = vp_set(enumerate_vp(a19.quartic, {4, 12}));
    fixture.check(v19 == WeightSet{{1, 1, 1}, {1, 1, 2}}, "fixture vp set " + format_weight_set(v19));
    suites.push_back(fixture);

    Corpus corp = corpus(seed, 3, fixtures);
    Suite gen{"generation round trip"}, lemma{"Key Lemma equivalence"}, bounds{"bounds"}, steps{"A_n step counts"};
    for (const auto& e : corp.entries) {
      std::string who = e.spec.to_string() + ": " + format(e.quartic.F());
      Classification c = classify(e.quartic);
      if (e.source == "generated") gen.check(c.tag == e.spec.target, "classified as " + c.tag.to_string() + " for " + who);
      gen.check(replay_certificate(e.quartic, c), "certificate replay failed for " + who);
      gen.check(parse(format(e.quartic.F())) == e.quartic.F(), "round trip failed for " + who);
      std::vector<WeightVerdict> vs;
      try {
        vs = enumerate_vp(e.quartic, {});
        lemma.check(true, "");
      } catch (const Error& err) {
        lemma.check(false, std::string(err.what()));
        continue;
      }
      for (const auto& v : vs)
        for (const auto& r : v.results) bounds.check(r.discrepancy >= 0, "negative discrepancy for " + who);
      if (c.tag.family == Family::A && c.tag.exact) {
        long n = c.tag.index;
        for (const auto& w : vp_set(vs))
          bounds.check(w[1] <= ceil_half(n) && w[1] + w[2] <= n + 1, "weight bound violated for " + who);
        steps.check(c.cert.steps == ceil_half(n), "A_n step count " + std::to_string(c.cert.steps) + " for " + who);
      }
    }
    for (auto* s : {&gen, &lemma, &bounds, &steps}) suites.push_back(*s);

    std::ostringstream os, err;
    int failed = 0;
    for (const auto& s : suites) {
      os << s.name << ": " << s.checks - s.failures << "/" << s.checks << " passed\n";
      if (s.failures) {
        ++failed;
        err << s.name << ": " << s.first_failure << "\n";
      }
    }
    os << "corpus: " << corp.entries.size() << " instances, " << corp.failures.size() << " specs not generated\n";
    return Result{failed ? kConsistency : kOk, os.str(), err.str()};
  });
}

}  // namespace duval::cli
