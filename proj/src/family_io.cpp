#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

#include "fplab/errors.hpp"
#include "fplab/json_io.hpp"

namespace fplab {

namespace {

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw FormatError(path.empty() ? "document must be an object" : path + ": must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError((path.empty() ? key : path + "." + key) + ": missing");
  return *it;
}

long long integer(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) throw FormatError(path + ": expected an integer");
  return v.get<long long>();
}

const Json& array(const Json& v, const std::string& path) {
  if (!v.is_array()) throw FormatError(path + ": expected an array");
  return v;
}

void reject_unknown(const Json& obj, std::initializer_list<const char*> known, const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) throw FormatError((path.empty() ? it.key() : path + "." + it.key()) + ": unknown field");
  }
}

Json subset_json(Subset s) { return Json(s.points()); }

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(source + ": invalid JSON (" + std::string(e.what()) + ")");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

SubsetFamily family_from_json(const Json& j) {
  const long long n = integer(field(j, "n", ""), "n");
  reject_unknown(j, {"n", "sets"}, "");
  if (n < 1 || n > kMaxPoints) throw FormatError("n: " + std::to_string(n) + " outside 1..64");
  const Json& sets = array(field(j, "sets", ""), "sets");
  std::vector<Subset> members;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string p = "sets[" + std::to_string(i) + "]";
    const Json& row = array(sets[i], p);
    Mask m = 0;
    for (std::size_t e = 0; e < row.size(); ++e) {
      const std::string pe = p + "[" + std::to_string(e) + "]";
      const long long v = integer(row[e], pe);
      if (v < 1 || v > n) throw FormatError(pe + ": point " + std::to_string(v) + " outside 1.." + std::to_string(n));
      const Mask bit = Mask{1} << (v - 1);
      if (m & bit) throw FormatError(pe + ": point " + std::to_string(v) + " repeated");
      m |= bit;
    }
    for (std::size_t prev = 0; prev < members.size(); ++prev) {
      if (members[prev].mask() == m) {
        throw FormatError(p + ": duplicates sets[" + std::to_string(prev) + "]");
      }
    }
    members.emplace_back(m);
  }
  return SubsetFamily::infer_uniform(GroundSet(static_cast<int>(n)), std::move(members));
}

Json family_to_json(const SubsetFamily& family) {
  Json j;
  j["n"] = family.n();
  Json sets = Json::array();
  for (const Subset& s : family.sets()) sets.push_back(subset_json(s));
  j["sets"] = std::move(sets);
  return j;
}

Code code_from_json(const Json& j) {
  const long long q = integer(field(j, "q", ""), "q");
  const long long n = integer(field(j, "n", ""), "n");
  reject_unknown(j, {"q", "n", "words"}, "");
  if (q < 2 || q > 65536) throw FormatError("q: " + std::to_string(q) + " outside 2..65536");
  if (n < 1 || n > kMaxPoints) throw FormatError("n: " + std::to_string(n) + " outside 1..64");
  const Json& words = array(field(j, "words", ""), "words");
  std::vector<Word> out;
  out.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string p = "words[" + std::to_string(i) + "]";
    const Json& row = array(words[i], p);
    if (static_cast<long long>(row.size()) != n) {
      throw FormatError(p + ": length " + std::to_string(row.size()) + " differs from n=" + std::to_string(n));
    }
    Word w;
    for (std::size_t e = 0; e < row.size(); ++e) {
      const std::string pe = p + "[" + std::to_string(e) + "]";
      const long long v = integer(row[e], pe);
      if (v < 1 || v > q) throw FormatError(pe + ": symbol " + std::to_string(v) + " outside 1.." + std::to_string(q));
      w.push_back(static_cast<int>(v));
    }
    out.push_back(std::move(w));
  }
  try {
    return Code(static_cast<int>(q), static_cast<int>(n), std::move(out));
  } catch (const ParameterError& e) {
    throw FormatError(std::string("words: ") + e.what());
  }
}

Json code_to_json(const Code& code) {
  Json j;
  j["q"] = code.q();
  j["n"] = code.n();
  Json words = Json::array();
  for (const Word& w : code.words()) words.push_back(Json(w));
  j["words"] = std::move(words);
  return j;
}

Json witness_to_json(const FocalWitness& w) {
  Json j;
  j["kind"] = w.kind == WitnessKind::hypergraph ? "hypergraph" : "code";
  j["critical"] = w.critical;
  j["focus"] = w.focus;
  Json co = Json::array();
  for (const auto& [index, mult] : w.coalition.counts()) {
    Json e;
    e["index"] = index;
    e["multiplicity"] = mult;
    co.push_back(std::move(e));
  }
  j["coalition"] = std::move(co);
  return j;
}

FocalWitness witness_from_json(const Json& j) {
  FocalWitness w;
  const Json& kind = field(j, "kind", "");
  if (kind == "hypergraph") {
    w.kind = WitnessKind::hypergraph;
  } else if (kind == "code") {
    w.kind = WitnessKind::code;
  } else {
    throw FormatError("kind: expected \"hypergraph\" or \"code\"");
  }
  const Json& crit = field(j, "critical", "");
  if (!crit.is_boolean()) throw FormatError("critical: expected a boolean");
  w.critical = crit.get<bool>();
  const long long focus = integer(field(j, "focus", ""), "focus");
  if (focus < 0) throw FormatError("focus: must be non-negative");
  w.focus = static_cast<std::size_t>(focus);
  reject_unknown(j, {"kind", "critical", "focus", "coalition"}, "");
  const Json& co = array(field(j, "coalition", ""), "coalition");
  for (std::size_t i = 0; i < co.size(); ++i) {
    const std::string p = "coalition[" + std::to_string(i) + "]";
    const long long idx = integer(field(co[i], "index", p), p + ".index");
    const long long mult = integer(field(co[i], "multiplicity", p), p + ".multiplicity");
    if (idx < 0) throw FormatError(p + ".index: must be non-negative");
    if (mult < 1) throw FormatError(p + ".multiplicity: must be positive");
    if (w.coalition.contains(static_cast<std::size_t>(idx))) throw FormatError(p + ".index: repeated");
    w.coalition.add(static_cast<std::size_t>(idx), static_cast<std::size_t>(mult));
  }
  return w;
}

Json certificate_to_json(const MatchingCertificate& cert) {
  Json j;
  j["value"] = cert.value;
  j["status"] = cert.status == CertificateStatus::exact ? "exact" : "lower-only";
  Json fam = Json::array();
  for (const Subset& s : cert.extremal_family.sets()) fam.push_back(subset_json(s));
  j["family"] = std::move(fam);
  j["explored"] = cert.explored;
  return j;
}

Json report_to_json(const BoundReport& report) {
  auto value_json = [](const Rational& r) -> Json {
    if (boost::multiprecision::denominator(r) == 1) {
      const BigInt v = boost::multiprecision::numerator(r);
      if (v >= 0 && v <= BigInt(std::numeric_limits<std::int64_t>::max())) {
        return Json(static_cast<std::int64_t>(v));
      }
    }
    return Json(rational_string(r));
  };
  Json j;
  j["quantity"] = report.quantity;
  Json entries = Json::array();
  for (const BoundEntry& e : report.entries) {
    Json je;
    je["value"] = value_json(e.value);
    je["direction"] = to_string(e.direction);
    je["source"] = e.source;
    je["applicable"] = e.applicable();
    Json hs = Json::array();
    for (const Hypothesis& h : e.hypotheses) {
      Json jh;
      jh["text"] = h.text;
      jh["ok"] = h.ok;
      hs.push_back(std::move(jh));
    }
    je["hypotheses"] = std::move(hs);
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  auto opt = [&](const std::optional<BigInt>& v) -> Json { return v ? value_json(Rational(*v)) : Json(nullptr); };
  j["best_upper"] = opt(report.best_upper());
  j["best_lower"] = opt(report.best_lower());
  j["pinned"] = opt(report.pinned_value());
  return j;
}

}  // namespace fplab
