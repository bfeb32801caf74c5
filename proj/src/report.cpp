#include "gammafield/report.hpp"

#include <sstream>

#include "gammafield/errors.hpp"

namespace gammafield {

using nlohmann::json;

namespace {

json int_row(std::span<const Integer> row) {
  json out = json::array();
  for (const auto& x : row) out.push_back(x.get_str());
  return out;
}

json int_matrix(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(int_row(m.row(i)));
  return out;
}

Integer big(const json& j) {
  if (!j.is_string()) throw ParseError("expected a decimal string");
  Integer v;
  if (v.set_str(j.get<std::string>(), 10) != 0) throw ParseError("malformed integer '" + j.get<std::string>() + "'");
  return v;
}

IntMatrix matrix_from(const json& j) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j.at(0).size() : 0;
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j.at(i).size() != cols) throw ParseError("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = big(j.at(i).at(k));
  }
  return m;
}

json signature_pair(unsigned a, unsigned b) { return json::array({a, b}); }

}  // namespace

json to_json(const FieldAnalysis& a) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  json coeffs = json::array();
  for (const auto& c : a.f.coeffs()) coeffs.push_back(c.get_str());
  doc["polynomial"] = {{"coefficients", coeffs}, {"text", a.f.to_string()}};
  doc["degree"] = a.n;
  doc["signature"] = signature_pair(a.signature.r, a.signature.s);
  doc["polynomial_discriminant"] = a.poly_disc.get_str();
  doc["discriminant"] = a.disc.get_str();
  json factors = json::array();
  for (const auto& [p, e] : a.disc_factored().factors) factors.push_back(json::array({p.get_str(), e}));
  doc["discriminant_factorization"] = {{"sign", a.disc_factored().sign}, {"factors", factors}};
  doc["index"] = a.max_order.index.get_str();
  doc["integral_basis"] = {{"denominator", a.max_order.order.denom.get_str()},
                           {"numerators", int_matrix(a.max_order.order.basis)}};
  json splits = json::array();
  for (const auto& [p, s] : a.splittings) {
    json pairs = json::array();
    for (const auto& [e, f] : s.pairs) pairs.push_back(json::array({e, f}));
    splits.push_back({{"p", p.get_str()}, {"pairs", pairs}, {"g", s.g()}, {"F", s.F()}, {"tame", is_tame(s)}});
  }
  doc["splittings"] = splits;
  doc["trace_form"] = {{"gram", int_matrix(a.trace_form.gram)},
                       {"det", a.trace_form.det.get_str()},
                       {"signature", signature_pair(a.trace_form.signature.pos, a.trace_form.signature.neg)}};
  json alphas = json::array();
  for (const auto& [p, c] : a.alphas)
    alphas.push_back({{"p", p.get_str()}, {"legendre", c.legendre}, {"unit_rep", c.unit_rep.get_str()}});
  doc["alphas"] = alphas;
  json primes = json::array();
  for (const auto& [p, c] : a.gamma.per_prime)
    primes.push_back({{"p", p.get_str()},
                      {"eps_split", c.eps_split},
                      {"g_odd", c.g_odd},
                      {"n_over_e_odd", c.n_over_e_odd}});
  doc["gamma"] = {{"is_tame", a.gamma.is_tame},
                  {"is_gamma", a.gamma.is_gamma},
                  {"exceptional", a.gamma.exceptional ? json(a.gamma.exceptional->get_str()) : json(nullptr)},
                  {"primes", primes}};
  return doc;
}

FieldAnalysis analysis_from_json(const json& doc) {
  try {
    if (doc.at("schema_version").get<int>() != kSchemaVersion) throw ParseError("schema version mismatch");
    FieldAnalysis a;
    std::vector<Integer> coeffs;
    for (const auto& c : doc.at("polynomial").at("coefficients")) coeffs.push_back(big(c));
    a.f = IntPoly(std::move(coeffs));
    a.n = doc.at("degree").get<unsigned>();
    a.signature = {doc.at("signature").at(0).get<unsigned>(), doc.at("signature").at(1).get<unsigned>()};
    a.poly_disc = big(doc.at("polynomial_discriminant"));
    a.disc = big(doc.at("discriminant"));
    auto& mo = a.max_order;
    mo.order.defining_poly = a.f;
    mo.order.basis = matrix_from(doc.at("integral_basis").at("numerators"));
    mo.order.denom = big(doc.at("integral_basis").at("denominator"));
    mo.order.disc = a.disc;
    mo.index = big(doc.at("index"));
    mo.disc_factored.sign = doc.at("discriminant_factorization").at("sign").get<int>();
    for (const auto& pe : doc.at("discriminant_factorization").at("factors"))
      mo.disc_factored.factors[big(pe.at(0))] = pe.at(1).get<unsigned>();
    for (const auto& s : doc.at("splittings")) {
      std::vector<RamificationPair> pairs;
      for (const auto& ef : s.at("pairs")) pairs.push_back({ef.at(0).get<unsigned>(), ef.at(1).get<unsigned>()});
      Integer p = big(s.at("p"));
      a.splittings.emplace(p, SplittingType(p, std::move(pairs)));
    }
    const auto& tf = doc.at("trace_form");
    a.trace_form.gram = matrix_from(tf.at("gram"));
    a.trace_form.det = big(tf.at("det"));
    a.trace_form.signature = {tf.at("signature").at(0).get<unsigned>(), tf.at("signature").at(1).get<unsigned>()};
    for (const auto& c : doc.at("alphas")) {
      AlphaClass ac;
      ac.p = big(c.at("p"));
      ac.legendre = c.at("legendre").get<int>();
      ac.unit_rep = big(c.at("unit_rep"));
      a.alphas.emplace(ac.p, ac);
    }
    const auto& g = doc.at("gamma");
    a.gamma.is_tame = g.at("is_tame").get<bool>();
    a.gamma.is_gamma = g.at("is_gamma").get<bool>();
    if (!g.at("exceptional").is_null()) a.gamma.exceptional = big(g.at("exceptional"));
    for (const auto& c : g.at("primes"))
      a.gamma.per_prime[big(c.at("p"))] = {c.at("eps_split").get<bool>(), c.at("g_odd").get<bool>(),
                                           c.at("n_over_e_odd").get<bool>()};
    return a;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed analysis document: ") + e.what());
  }
}

json to_json(const SpinorReport& r) {
  json per_prime = json::array();
  for (const auto& [p, c] : r.per_prime)
    per_prime.push_back({{"p", p.get_str()},
                         {"legendre_a", c.legendre_a},
                         {"legendre_b", c.legendre_b},
                         {"equal", c.equal},
                         {"informational", c.informational}});
  return {{"disc_equal", r.disc_equal},
          {"signature_equal", r.signature_equal},
          {"per_prime", per_prime},
          {"verdict", to_string(r.verdict)},
          {"reason", r.reason.empty() ? json(nullptr) : json(r.reason)}};
}

json to_json(const TheoremPrediction& t) {
  json exc = json::array();
  for (const auto& p : t.exceptional_primes) exc.push_back(p.get_str());
  return {{"applicable", t.applicable},
          {"reason", t.reason.empty() ? json(nullptr) : json(t.reason)},
          {"predicted_equivalent", t.predicted_equivalent},
          {"isometry_claim", t.isometry_claim},
          {"exceptional_primes", exc}};
}

json to_json(const CrossValidation& c) {
  return {{"consistent", c.consistent},
          {"comparator_verdict", to_string(c.report.verdict)},
          {"theorem_verdict", to_string(c.prediction.predicted_equivalent ? Verdict::same : Verdict::different)}};
}

std::string render_human(const FieldAnalysis& a) {
  std::ostringstream out;
  out << "field        " << a.f.to_string() << "\n";
  out << "degree       " << a.n << "\n";
  out << "signature    (" << a.signature.r << ", " << a.signature.s << ")\n";
  out << "disc(f)      " << a.poly_disc << "\n";
  out << "disc(K)      " << a.disc;
  if (!a.disc_factored().factors.empty()) {
    out << " = " << (a.disc_factored().sign < 0 ? "-" : "");
    bool first = true;
    for (const auto& [p, e] : a.disc_factored().factors) {
      out << (first ? "" : " * ") << p;
      if (e > 1) out << "^" << e;
      first = false;
    }
  }
  out << "\nindex        " << a.max_order.index << "\n";
  out << "trace form   signature (" << a.trace_form.signature.pos << ", " << a.trace_form.signature.neg
      << "), det " << a.trace_form.det << "\n";
  out << "\n  p        splitting (e,f)          g  F  tame  alpha  eps  g_odd  n/e_odd\n";
  for (const auto& [p, s] : a.splittings) {
    std::ostringstream pairs;
    for (const auto& [e, f] : s.pairs) pairs << "(" << e << "," << f << ")";
    std::string alpha = "-";
    if (auto it = a.alphas.find(p); it != a.alphas.end()) alpha = it->second.legendre > 0 ? "+1" : "-1";
    std::string conds = "-      -      -";
    if (auto it = a.gamma.per_prime.find(p); it != a.gamma.per_prime.end())
      conds = std::string(it->second.eps_split ? "yes" : "no ") + "    " + (it->second.g_odd ? "yes" : "no ") +
              "    " + (it->second.n_over_e_odd ? "yes" : "no ");
    out << "  " << std::left;
    out.width(9);
    out << p.get_str();
    out.width(25);
    out << pairs.str();
    out.width(3);
    out << s.g();
    out.width(3);
    out << s.F();
    out.width(6);
    out << (is_tame(s) ? "yes" : "no");
    out.width(7);
    out << alpha << conds << "\n";
  }
  out << "\nGamma field  " << (a.gamma.is_gamma ? "yes" : "no") << (a.gamma.is_tame ? "" : " (wild)") << "\n";
  out << "exceptional  " << (a.gamma.exceptional ? a.gamma.exceptional->get_str() : "none") << "\n";
  return out.str();
}

std::string render_human(const SpinorReport& r, const TheoremPrediction& t) {
  std::ostringstream out;
  out << "verdict            " << to_string(r.verdict);
  if (!r.reason.empty()) out << " (" << r.reason << ")";
  out << "\ndisc equal         " << (r.disc_equal ? "yes" : "no") << "\n";
  out << "signature equal    " << (r.signature_equal ? "yes" : "no") << "\n";
  for (const auto& [p, c] : r.per_prime)
    out << "  alpha at " << p << ": " << c.legendre_a << " vs " << c.legendre_b << (c.equal ? "  match" : "  MISMATCH")
        << (c.informational ? " (informational)" : "") << "\n";
  out << "theorem            " << (t.applicable ? "applicable" : "not applicable");
  if (!t.reason.empty()) out << " (" << t.reason << ")";
  out << "\n";
  if (t.applicable)
    out << "predicted          " << (t.predicted_equivalent ? "same spinor genus" : "different")
        << (t.isometry_claim ? ", isometric" : "") << "\n";
  return out.str();
}

}  // namespace gammafield
