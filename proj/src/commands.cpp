#include "gammafield/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "gammafield/compare.hpp"
#include "gammafield/errors.hpp"
#include "gammafield/report.hpp"
#include "gammafield/zfactor.hpp"

namespace gammafield {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

class ReducibleError : public InputError {
 public:
  ReducibleError(const std::string& what, ZFactorization f) : InputError(what), factorization(std::move(f)) {}
  ZFactorization factorization;
};

json error_document(const std::string& kind, const std::string& message) {
  return {{"schema_version", kSchemaVersion}, {"error", {{"kind", kind}, {"message", message}}}};
}

json factor_list(const ZFactorization& z) {
  json out = json::array();
  for (const auto& [g, m] : z.factors) out.push_back({{"factor", g.to_string()}, {"multiplicity", m}});
  return out;
}

// Shared error mapping for analyze/compare.
CommandResult fail(const std::exception& e) {
  CommandResult r;
  if (auto* red = dynamic_cast<const ReducibleError*>(&e)) {
    json doc = error_document("reducible", e.what());
    doc["error"]["factors"] = factor_list(red->factorization);
    r.exit_code = kExitInput;
    r.out = doc.dump(2) + "\n";
  } else if (dynamic_cast<const ParseError*>(&e)) {
    r.exit_code = kExitParse;
    r.out = error_document("parse", e.what()).dump(2) + "\n";
  } else {
    r.exit_code = kExitInput;
    r.out = error_document("input", e.what()).dump(2) + "\n";
  }
  r.err = std::string("error: ") + e.what() + "\n";
  return r;
}

json analysis_document(const FieldAnalysis& a, const std::string& input, const std::vector<std::string>& warnings) {
  json doc = to_json(a);
  doc["input"] = input;
  doc["warnings"] = warnings;
  return doc;
}

}  // namespace

IntPoly parse_field_poly(const std::string& text) {
  IntPoly f = parse_poly(text);
  if (f.degree() < 1) throw InputError("polynomial must have degree at least 1");
  if (!f.is_monic()) throw InputError("polynomial must be monic");
  ZFactorization z = factor_over_Z(f);
  if (z.factors.size() != 1 || z.factors[0].multiplicity != 1)
    throw ReducibleError("polynomial is reducible over Q", std::move(z));
  return f;
}

AnalysisCache make_cache(const CommandOptions& opts) {
  if (!opts.use_cache) return {};
  if (opts.cache_dir) return AnalysisCache(*opts.cache_dir);
  if (auto dir = default_cache_dir()) return AnalysisCache(*dir);
  return {};
}

FieldAnalysis analyze_with_cache(const IntPoly& f, const AnalysisCache& cache, std::vector<std::string>& warnings) {
  auto hit = cache.load(f);
  if (hit.status == AnalysisCache::Status::hit) {
    try {
      FieldAnalysis a = analysis_from_json(hit.document);
      if (a.f == f) return a;
    } catch (const ParseError&) {
    }
    hit.status = AnalysisCache::Status::corrupt;
  }
  if (hit.status == AnalysisCache::Status::corrupt)
    warnings.push_back("cache entry " + cache.entry_path(f).filename().string() + " was corrupt and has been recomputed");
  FieldAnalysis a = analyze_field(f);
  if (cache.enabled() && !cache.store(f, to_json(a)))
    warnings.push_back("cache directory is not writable; result not cached");
  return a;
}

std::vector<CorpusRecord> parse_corpus(const std::string& text) {
  std::vector<CorpusRecord> out;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++number;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (!seen_data && lower(t) == "label,polynomial") {
      seen_data = true;
      continue;
    }
    seen_data = true;
    CorpusRecord rec;
    rec.line = number;
    auto comma = t.find(',');
    if (comma == std::string::npos) {
      rec.poly = t;
    } else {
      rec.label = trim(std::string_view(t).substr(0, comma));
      rec.poly = trim(std::string_view(t).substr(comma + 1));
    }
    if (rec.poly.size() >= 2 && rec.poly.front() == '"' && rec.poly.back() == '"')
      rec.poly = rec.poly.substr(1, rec.poly.size() - 2);
    out.push_back(std::move(rec));
  }
  return out;
}

CommandResult cmd_analyze(const std::string& poly_text, const CommandOptions& opts) {
  CommandResult r;
  try {
    IntPoly f = parse_field_poly(poly_text);
    AnalysisCache cache = make_cache(opts);
    std::vector<std::string> warnings;
    FieldAnalysis a = analyze_with_cache(f, cache, warnings);
    for (const auto& w : warnings) r.err += "warning: " + w + "\n";
    r.out = opts.human ? render_human(a) : analysis_document(a, poly_text, warnings).dump(2) + "\n";
  } catch (const Error& e) {
    return fail(e);
  }
  return r;
}

CommandResult cmd_compare(const std::string& text_a, const std::string& text_b, const CommandOptions& opts) {
  CommandResult r;
  try {
    IntPoly fa = parse_field_poly(text_a);
    IntPoly fb = parse_field_poly(text_b);
    AnalysisCache cache = make_cache(opts);
    std::vector<std::string> wa, wb;
    FieldAnalysis a = analyze_with_cache(fa, cache, wa);
    FieldAnalysis b = analyze_with_cache(fb, cache, wb);
    SpinorReport report = compare_spinor_genus(a, b);
    TheoremPrediction prediction = predict_by_theorem(a, b);
    json cv = nullptr;
    if (prediction.applicable && report.verdict != Verdict::not_applicable) cv = to_json(cross_validate(a, b));
    for (const auto& w : wa) r.err += "warning: " + w + "\n";
    for (const auto& w : wb) r.err += "warning: " + w + "\n";
    if (opts.human) {
      r.out = render_human(report, prediction);
    } else {
      json doc{{"schema_version", kSchemaVersion},
               {"a", analysis_document(a, text_a, wa)},
               {"b", analysis_document(b, text_b, wb)},
               {"spinor_report", to_json(report)},
               {"theorem", to_json(prediction)},
               {"cross_validation", cv}};
      r.out = doc.dump(2) + "\n";
    }
    switch (report.verdict) {
      case Verdict::same:
        r.exit_code = kExitOk;
        break;
      case Verdict::different:
        r.exit_code = kExitDifferent;
        break;
      case Verdict::not_applicable:
        r.exit_code = kExitNotApplicable;
        break;
    }
  } catch (const Error& e) {
    return fail(e);
  }
  return r;
}

CommandResult cmd_scan_text(const std::string& corpus, const CommandOptions& opts) {
  const std::vector<CorpusRecord> records = parse_corpus(corpus);
  AnalysisCache cache = make_cache(opts);

  struct Slot {
    std::optional<FieldAnalysis> analysis;
    std::vector<std::string> warnings;
    std::string error_kind;
    std::string error;
  };
  std::vector<Slot> slots(records.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) {
      Slot& s = slots[i];
      try {
        IntPoly f = parse_field_poly(records[i].poly);
        s.analysis = analyze_with_cache(f, cache, s.warnings);
      } catch (const ParseError& e) {
        s.error_kind = "parse";
        s.error = e.what();
      } catch (const InputError& e) {
        s.error_kind = dynamic_cast<const ReducibleError*>(&e) ? "reducible" : "input";
        s.error = e.what();
      } catch (const Error& e) {
        s.error_kind = "analysis";
        s.error = e.what();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(records.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }

  CommandResult r;
  json recs = json::array();
  std::size_t analyzed = 0, gamma_fields = 0;
  std::map<std::string, unsigned> exceptional;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const Slot& s = slots[i];
    json rec{{"index", i}, {"line", records[i].line}, {"label", records[i].label}, {"input", records[i].poly}};
    if (s.analysis) {
      ++analyzed;
      rec["status"] = "ok";
      rec["analysis"] = analysis_document(*s.analysis, records[i].poly, s.warnings);
      if (s.analysis->gamma.is_gamma) ++gamma_fields;
      if (s.analysis->gamma.exceptional) ++exceptional[s.analysis->gamma.exceptional->get_str()];
      for (const auto& w : s.warnings) r.err += "warning: record " + std::to_string(i) + ": " + w + "\n";
    } else {
      rec["status"] = "error";
      rec["error"] = {{"kind", s.error_kind}, {"message", s.error}};
    }
    recs.push_back(std::move(rec));
  }
  json summary{{"records", records.size()},
               {"analyzed", analyzed},
               {"failures", records.size() - analyzed},
               {"gamma_fields", gamma_fields},
               {"exceptional_primes", exceptional}};
  json doc{{"schema_version", kSchemaVersion}, {"records", recs}};

  if (opts.pairs) {
    // Gamma fields bucketed by (disc, signature); cross-validate every applicable pair.
    std::map<std::tuple<Integer, unsigned, unsigned>, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const auto& a = slots[i].analysis;
      if (a && a->gamma.is_gamma) buckets[{a->disc, a->signature.r, a->signature.s}].push_back(i);
    }
    json pairs = json::array();
    std::size_t applicable = 0, failures = 0;
    for (const auto& [key, members] : buckets)
      for (std::size_t x = 0; x < members.size(); ++x)
        for (std::size_t y = x + 1; y < members.size(); ++y) {
          const FieldAnalysis& a = *slots[members[x]].analysis;
          const FieldAnalysis& b = *slots[members[y]].analysis;
          if (!predict_by_theorem(a, b).applicable) continue;
          if (compare_spinor_genus(a, b).verdict == Verdict::not_applicable) continue;
          CrossValidation cv = cross_validate(a, b);
          ++applicable;
          if (!cv.consistent) ++failures;
          json entry = to_json(cv);
          entry["a"] = members[x];
          entry["b"] = members[y];
          entry["isometry_claim"] = cv.prediction.isometry_claim;
          pairs.push_back(std::move(entry));
        }
    doc["pairs"] = pairs;
    summary["applicable_pairs"] = applicable;
    summary["consistency_failures"] = failures;
  }
  doc["summary"] = summary;

  if (opts.human) {
    std::ostringstream out;
    out << "records " << records.size() << ", analyzed " << analyzed << ", failures " << records.size() - analyzed
        << ", Gamma fields " << gamma_fields << "\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
      out << "  [" << i << "] " << (records[i].label.empty() ? "-" : records[i].label) << "  ";
      if (const auto& a = slots[i].analysis)
        out << "disc " << a->disc << "  sig (" << a->signature.r << "," << a->signature.s << ")  "
            << (a->gamma.is_gamma ? "Gamma" : "not Gamma")
            << (a->gamma.exceptional ? "  exceptional " + a->gamma.exceptional->get_str() : "") << "\n";
      else
        out << "error: " << slots[i].error << "\n";
    }
    if (opts.pairs)
      out << "applicable pairs " << summary["applicable_pairs"] << ", consistency failures "
          << summary["consistency_failures"] << "\n";
    r.out = out.str();
  } else {
    r.out = doc.dump(2) + "\n";
  }
  r.exit_code = (!records.empty() && analyzed == 0) ? kExitDifferent : kExitOk;
  return r;
}

CommandResult cmd_scan(const std::string& path, const CommandOptions& opts) {
  std::ifstream in(path);
  if (!in) {
    CommandResult r;
    r.exit_code = kExitParse;
    r.err = "error: cannot read corpus file " + path + "\n";
    r.out = error_document("io", "cannot read corpus file " + path).dump(2) + "\n";
    return r;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return cmd_scan_text(buf.str(), opts);
}

}  // namespace gammafield
