#include "fplab/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "fplab/bounds.hpp"
#include "fplab/constructions.hpp"
#include "fplab/errors.hpp"
#include "fplab/focal.hpp"
#include "fplab/json_io.hpp"
#include "fplab/matching.hpp"

namespace fplab::cli {

namespace {

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string output_path;
  Guards guards;
};

int emit(Context& ctx, const Json& doc) {
  const std::string text = doc.dump(2) + "\n";
  if (ctx.output_path.empty()) {
    ctx.out << text;
    return kOk;
  }
  std::ofstream f(ctx.output_path, std::ios::binary);
  if (!f) throw FormatError("--output: cannot write " + ctx.output_path);
  f << text;
  return kOk;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto b = tok.find_first_not_of(' ');
    const auto e = tok.find_last_not_of(' ');
    if (b == std::string::npos) throw ParameterError(what + ": empty entry");
    tok = tok.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParameterError(what + ": \"" + tok + "\" is not an integer");
    out.push_back(v);
  }
  return out;
}

Subset parse_subset(const std::string& text, const std::string& what) {
  const std::vector<int> pts = parse_int_list(text, what);
  for (int p : pts) {
    if (p < 1 || p > kMaxPoints) throw ParameterError(what + ": point " + std::to_string(p) + " outside 1..64");
  }
  Subset s = Subset::from_points(pts);
  if (s.size() != static_cast<int>(pts.size())) throw ParameterError(what + ": repeated point");
  return s;
}

// "1,2;3,4" -> [{1,2},{3,4}]
std::vector<Subset> parse_subset_list(const std::string& text, const std::string& what) {
  std::vector<Subset> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string part;
  std::size_t i = 0;
  while (std::getline(ss, part, ';')) {
    out.push_back(parse_subset(part, what + "[" + std::to_string(i) + "]"));
    ++i;
  }
  return out;
}

// A construct artifact is {"artifact": ..., ...}; verify accepts it as well as a bare document.
Json unwrap_artifact(const Json& j, std::string& prefix) {
  if (j.is_object() && j.contains("artifact")) {
    prefix = "artifact.";
    return j.at("artifact");
  }
  prefix.clear();
  return j;
}

SubsetFamily load_family(const std::string& path) {
  std::string prefix;
  const Json j = unwrap_artifact(read_json_file(path), prefix);
  try {
    return family_from_json(j);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + prefix + e.what());
  } catch (const ParameterError& e) {
    throw FormatError(path + ": " + prefix + e.what());
  }
}

Code load_code(const std::string& path) {
  std::string prefix;
  const Json j = unwrap_artifact(read_json_file(path), prefix);
  try {
    return code_from_json(j);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + prefix + e.what());
  }
}

Json members_json(const SubsetFamily& family, const FocalWitness& w) {
  Json j;
  j["focus"] = family[w.focus].points();
  Json co = Json::array();
  for (std::size_t i : w.coalition.sorted_indices()) co.push_back(family[i].points());
  j["coalition"] = std::move(co);
  return j;
}

Json members_json(const Code& code, const FocalWitness& w) {
  Json j;
  j["focus"] = code[w.focus];
  Json co = Json::array();
  for (std::size_t i : w.coalition.sorted_indices()) co.push_back(code[i]);
  j["coalition"] = std::move(co);
  return j;
}

Json validation_json(const FrameproofValidation& v) {
  Json j;
  j["checked"] = v.checked;
  j["frameproof"] = v.checked ? Json(v.frameproof) : Json(nullptr);
  j["witness"] = v.witness ? witness_to_json(*v.witness) : Json(nullptr);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

int validation_exit(const FrameproofValidation& v) { return v.checked && !v.frameproof ? kRefuted : kOk; }

BigInt solve_m(int size, int c, int s, const Guards& guards) {
  const LambdaT lt = lambda_of(c, s, size);
  MatchingOptions mo;
  mo.cap = guards.matching_cap;
  const MatchingCertificate cert =
      matching_number_exact({size, lt.t, DisjointnessParams(s + 1, c - s + 1, lt.lambda)}, mo);
  if (cert.status != CertificateStatus::exact) throw GuardError("matching solver budget exhausted; pass --m");
  return BigInt(cert.value);
}

void add_output(CLI::App* sub, Context& ctx) {
  sub->add_option("--output", ctx.output_path, "Write the JSON result to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err, {}, {}};
  CLI::App app{"Exact tools for (c,s)-frameproof families, codes and generalized matching numbers", "fplab"};
  app.require_subcommand(1);
  std::function<int()> action;

  // verify --------------------------------------------------------------
  std::string family_path;
  std::string code_path;
  int c = 0;
  int s = 0;
  bool critical = false;
  unsigned threads = 1;
  auto* verify = app.add_subcommand("verify", "Decide (critical) frameproofness of a family or code");
  auto* fam_opt = verify->add_option("--family", family_path, "Family JSON file");
  auto* code_opt = verify->add_option("--code", code_path, "Code JSON file");
  fam_opt->excludes(code_opt);
  verify->add_option("--c", c, "Coalition size")->required();
  verify->add_option("--s", s, "Threshold")->required();
  verify->add_flag("--critical", critical, "Coalition members must be distinct");
  verify->add_option("--threads", threads, "Worker threads for the per-focus search")->check(CLI::Range(1u, 256u));
  add_output(verify, ctx);
  verify->callback([&] {
    action = [&]() -> int {
      if (family_path.empty() == code_path.empty()) throw ParameterError("verify: give exactly one of --family, --code");
      const FrameproofParams params(c, s);
      SearchOptions so{ctx.guards, threads};
      Json doc;
      doc["command"] = "verify";
      doc["c"] = c;
      doc["s"] = s;
      doc["critical"] = critical;
      std::optional<FocalWitness> w;
      if (!family_path.empty()) {
        const SubsetFamily fam = load_family(family_path);
        doc["input"] = "family";
        doc["members"] = fam.size();
        w = critical ? find_critical_focal(fam, params, so) : find_focal_hypergraph(fam, params, so);
        doc["frameproof"] = !w;
        doc["witness"] = w ? witness_to_json(*w) : Json(nullptr);
        doc["witness_members"] = w ? members_json(fam, *w) : Json(nullptr);
      } else {
        const Code code = load_code(code_path);
        doc["input"] = "code";
        doc["members"] = code.size();
        w = critical ? find_critical_focal(code, params, so) : find_focal_code(code, params, so);
        doc["frameproof"] = !w;
        doc["witness"] = w ? witness_to_json(*w) : Json(nullptr);
        doc["witness_members"] = w ? members_json(code, *w) : Json(nullptr);
        const DistanceCertificate dc = certify_frameproof_by_distance(code, params);
        doc["distance"] = {{"minimum_distance", dc.distance}, {"threshold", dc.threshold}, {"certified", dc.certified}};
      }
      emit(ctx, doc);
      return w ? kRefuted : kOk;
    };
  });

  // matching ------------------------------------------------------------
  int mn = 0;
  int mt = 0;
  int mlambda = 0;
  int k1 = 0;
  std::optional<int> k2;
  std::uint64_t budget = MatchingOptions{}.budget;
  auto* matching = app.add_subcommand("matching", "Exact generalized matching number m(n,t,lambda;k1,k2)");
  matching->add_option("--n", mn)->required();
  matching->add_option("--t", mt)->required();
  matching->add_option("--lambda", mlambda)->required();
  matching->add_option("--k1", k1)->required();
  matching->add_option("--k2", k2, "Omit to switch the covering clause off");
  matching->add_option("--budget", budget, "Branch-and-bound node limit");
  add_output(matching, ctx);
  matching->callback([&] {
    action = [&]() -> int {
      const DisjointnessParams p = k2 ? DisjointnessParams(k1, *k2, mlambda) : DisjointnessParams::disjoint_only(k1, mlambda);
      MatchingOptions mo;
      mo.budget = budget;
      mo.cap = ctx.guards.matching_cap;
      const MatchingCertificate cert = matching_number_exact({mn, mt, p}, mo);
      Json doc;
      doc["command"] = "matching";
      doc["instance"] = {{"n", mn}, {"t", mt}, {"lambda", mlambda}, {"k1", p.k1}, {"k2", k2 ? Json(*k2) : Json(nullptr)}};
      const Json body = certificate_to_json(cert);
      for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();
      emit(ctx, doc);
      return kOk;
    };
  });

  // construct -----------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "Build a partition, code, packing or family");
  construct->require_subcommand(1);
  std::optional<std::uint64_t> seed;
  std::uint64_t cbudget = 1'000'000;
  int cn = 0;
  int ck = 0;
  int ct = 0;
  int cq = 0;
  std::optional<int> vc;
  std::optional<int> vs;
  std::string a_text;
  std::string given_text;
  std::string design_path;

  auto* part = construct->add_subcommand("partition", "Complete lambda given t-sets to an s-fold partition of A");
  part->add_option("--a", a_text, "Points of A, e.g. 1,2,3,4")->required();
  part->add_option("--given", given_text, "Given sets, e.g. \"1,2;3,4\"")->required();
  part->add_option("--c", c)->required();
  part->add_option("--s", s)->required();
  add_output(part, ctx);
  part->callback([&] {
    action = [&]() -> int {
      const Subset a = parse_subset(a_text, "--a");
      const std::vector<Subset> given = parse_subset_list(given_text, "--given");
      const FrameproofParams params(c, s);
      std::vector<Subset> parts;
      try {
        parts = greedy_multiset_partition(a, given, params);
      } catch (const WitnessError& e) {
        err << "fplab: partition: " << e.what() << "\n";
        return kRefuted;
      }
      Json doc;
      doc["command"] = "construct partition";
      doc["a"] = a.points();
      Json g = Json::array();
      for (const Subset& x : given) g.push_back(x.points());
      doc["given"] = std::move(g);
      Json p = Json::array();
      for (const Subset& x : parts) p.push_back(x.points());
      doc["parts"] = std::move(p);
      return emit(ctx, doc);
    };
  });

  auto* rs = construct->add_subcommand("rs", "Reed-Solomon code of length n and dimension t over GF(q)");
  rs->add_option("--q", cq)->required();
  rs->add_option("--n", cn)->required();
  rs->add_option("--t", ct)->required();
  rs->add_option("--c", vc, "Also certify (c,s)-frameproofness");
  rs->add_option("--s", vs);
  add_output(rs, ctx);
  rs->callback([&] {
    action = [&]() -> int {
      const Code code = rs_code(cq, cn, ct, ctx.guards);
      Json doc;
      doc["command"] = "construct rs";
      doc["artifact"] = code_to_json(code);
      doc["words"] = code.size();
      doc["minimum_distance"] = minimum_distance(code);
      int rc = kOk;
      if (vc || vs) {
        if (!vc || !vs) throw ParameterError("construct rs: --c and --s go together");
        const FrameproofParams params(*vc, *vs);
        const DistanceCertificate dc = certify_frameproof_by_distance(code, params);
        doc["distance_certificate"] = {{"threshold", dc.threshold}, {"certified", dc.certified}};
        FrameproofValidation v;
        if (code.size() <= ctx.guards.max_members && params.c <= ctx.guards.max_c) {
          v.checked = true;
          v.witness = find_focal_code(code, params, SearchOptions{ctx.guards, 1});
          v.frameproof = !v.witness;
        } else {
          v.note = "exhaustive check skipped by size guards";
        }
        doc["validation"] = validation_json(v);
        rc = validation_exit(v);
      }
      emit(ctx, doc);
      return rc;
    };
  });

  auto* pack = construct->add_subcommand("packing", "Greedy (n,k,t)-packing");
  pack->add_option("--n", cn)->required();
  pack->add_option("--k", ck)->required();
  pack->add_option("--t", ct)->required();
  pack->add_option("--seed", seed, "Shuffle the candidate order with this seed");
  pack->add_option("--c", vc, "Also verify (c,s)-frameproofness");
  pack->add_option("--s", vs);
  add_output(pack, ctx);

  auto* design = construct->add_subcommand("design", "Load and validate a design file");
  design->add_option("--file", design_path, "Design text file")->required();
  design->add_option("--c", vc, "Also verify (c,s)-frameproofness");
  design->add_option("--s", vs);
  add_output(design, ctx);

  auto packing_action = [&](const Packing& packing, const std::string& name) -> int {
    Json doc;
    doc["command"] = name;
    doc["artifact"] = family_to_json(packing.family);
    doc["k"] = packing.family.uniform_k() ? Json(*packing.family.uniform_k()) : Json(nullptr);
    doc["t"] = packing.t;
    doc["blocks"] = packing.family.size();
    doc["design"] = packing.is_design;
    int rc = kOk;
    if (vc || vs) {
      if (!vc || !vs) throw ParameterError(name + ": --c and --s go together");
      const ValidatedFamily vf = packing_to_frameproof(packing, FrameproofParams(*vc, *vs), SearchOptions{ctx.guards, 1});
      doc["validation"] = validation_json(vf.validation);
      rc = validation_exit(vf.validation);
    }
    emit(ctx, doc);
    return rc;
  };
  pack->callback([&] {
    action = [&]() -> int { return packing_action(greedy_packing(cn, ck, ct, seed, ctx.guards), "construct packing"); };
  });
  design->callback([&] {
    action = [&]() -> int { return packing_action(load_design(design_path), "construct design"); };
  });

  auto* induced = construct->add_subcommand("induced", "Frameproof family from an induced packing of the avoiding pattern");
  induced->add_option("--k", ck)->required();
  induced->add_option("--c", c)->required();
  induced->add_option("--s", s)->required();
  induced->add_option("--n", cn)->required();
  induced->add_option("--seed", seed);
  induced->add_option("--budget", cbudget, "Candidate limit");
  add_output(induced, ctx);
  induced->callback([&] {
    action = [&]() -> int {
      const InducedFamilyResult r = induced_packing_family(ck, c, s, cn, seed, cbudget, SearchOptions{ctx.guards, 1});
      Json doc;
      doc["command"] = "construct induced";
      doc["artifact"] = family_to_json(r.family);
      doc["pattern"] = family_to_json(r.packing.pattern);
      doc["matching_value"] = r.matching_value;
      doc["copies"] = r.packing.copies.size();
      doc["budget_exhausted"] = r.budget_exhausted;
      doc["validation"] = validation_json(r.validation);
      emit(ctx, doc);
      return validation_exit(r.validation);
    };
  });

  auto* faithful = construct->add_subcommand("faithful", "Frameproof code from a faithful induced packing");
  faithful->add_option("--n", cn)->required();
  faithful->add_option("--c", c)->required();
  faithful->add_option("--s", s)->required();
  faithful->add_option("--q", cq)->required();
  faithful->add_option("--seed", seed);
  faithful->add_option("--budget", cbudget, "Candidate limit");
  add_output(faithful, ctx);
  faithful->callback([&] {
    action = [&]() -> int {
      const FaithfulCodeResult r = faithful_code_family(cn, c, s, cq, seed, cbudget, SearchOptions{ctx.guards, 1});
      Json doc;
      doc["command"] = "construct faithful";
      doc["artifact"] = code_to_json(r.code);
      doc["pattern"] = family_to_json(r.pattern);
      doc["matching_value"] = r.matching_value;
      doc["words"] = r.code.size();
      doc["budget_exhausted"] = r.budget_exhausted;
      doc["validation"] = validation_json(r.validation);
      emit(ctx, doc);
      return validation_exit(r.validation);
    };
  });

  // bounds --------------------------------------------------------------
  auto* bounds = app.add_subcommand("bounds", "Evaluate closed-form bounds");
  bounds->require_subcommand(1);
  std::optional<std::uint64_t> m_given;
  std::optional<std::uint64_t> packing_size;
  int s1 = 0;
  int s2 = 0;

  auto* bh = bounds->add_subcommand("hypergraph", "Bounds on f_{c,s}(n,k)");
  bh->add_option("--n", cn)->required();
  bh->add_option("--k", ck)->required();
  bh->add_option("--c", c)->required();
  bh->add_option("--s", s)->required();
  bh->add_option("--m", m_given, "m(k,t,lambda;s+1,c-s+1); solved exactly when omitted");
  bh->add_option("--packing-size", packing_size, "Size of a known (n,k,t)-packing");
  bh->add_option("--design", design_path, "Design file witnessing an (n,k,t)-design");
  add_output(bh, ctx);
  bh->callback([&] {
    action = [&]() -> int {
      const FrameproofParams params(c, s);
      const BigInt m = m_given ? BigInt(*m_given) : solve_m(ck, c, s, ctx.guards);
      bool design_ok = false;
      std::optional<std::uint64_t> lower = packing_size;
      if (!design_path.empty()) {
        const Packing d = load_design(design_path);
        const int t = lambda_of(c, s, ck).t;
        if (d.family.n() != cn || d.family.uniform_k() != ck || d.t != t) {
          throw ParameterError("--design: file is not an (n,k,t)=(" + std::to_string(cn) + "," + std::to_string(ck) +
                               "," + std::to_string(t) + ")-design");
        }
        design_ok = true;
        if (!lower || *lower < d.family.size()) lower = d.family.size();
      }
      Json doc = report_to_json(hypergraph_bounds(cn, ck, c, s, m, lower, design_ok));
      doc["m"] = m.str();
      emit(ctx, doc);
      return kOk;
    };
  });

  auto* bc = bounds->add_subcommand("code", "Bounds on f^q_{c,s}(n)");
  bc->add_option("--n", cn)->required();
  bc->add_option("--c", c)->required();
  bc->add_option("--s", s)->required();
  bc->add_option("--q", cq)->required();
  bc->add_option("--m", m_given, "m(n,t,lambda;s+1,c-s+1); solved exactly when omitted");
  add_output(bc, ctx);
  bc->callback([&] {
    action = [&]() -> int {
      const FrameproofParams params(c, s);
      if (cq < 2) throw ParameterError("--q: must be at least 2");
      const BigInt m = m_given ? BigInt(*m_given) : solve_m(cn, c, s, ctx.guards);
      Json doc = report_to_json(code_bounds(cn, c, s, cq, m));
      doc["m"] = m.str();
      emit(ctx, doc);
      return kOk;
    };
  });

  auto* bm = bounds->add_subcommand("matching", "Closed-form bounds on m(n,t,lambda;s1+1,s2+1)");
  bm->add_option("--n", cn)->required();
  bm->add_option("--t", ct)->required();
  bm->add_option("--lambda", mlambda)->required();
  bm->add_option("--s1", s1)->required();
  bm->add_option("--s2", s2)->required();
  bm->add_option("--c", vc, "Add the coalition specializations for (c,s)");
  bm->add_option("--s", vs);
  add_output(bm, ctx);
  bm->callback([&] {
    action = [&]() -> int {
      std::optional<FrameproofParams> co;
      if (vc || vs) {
        if (!vc || !vs) throw ParameterError("bounds matching: --c and --s go together");
        co = FrameproofParams(*vc, *vs);
      }
      emit(ctx, report_to_json(matching_closed_bounds(cn, ct, mlambda, s1, s2, co)));
      return kOk;
    };
  });

  // attack --------------------------------------------------------------
  std::string coalition_text;
  auto* attack = app.add_subcommand("attack", "Descendant alphabet of a coalition under the threshold-s rule");
  attack->add_option("--code", code_path, "Code JSON file")->required();
  attack->add_option("--coalition", coalition_text, "0-based word indices, repeats allowed, e.g. 0,0,3")->required();
  attack->add_option("--s", s)->required();
  add_output(attack, ctx);
  attack->callback([&] {
    action = [&]() -> int {
      const Code code = load_code(code_path);
      const std::vector<int> idx = parse_int_list(coalition_text, "--coalition");
      std::vector<std::size_t> indices;
      for (int i : idx) {
        if (i < 0 || static_cast<std::size_t>(i) >= code.size()) {
          throw ParameterError("--coalition: index " + std::to_string(i) + " outside 0.." + std::to_string(code.size() - 1));
        }
        indices.push_back(static_cast<std::size_t>(i));
      }
      if (indices.empty()) throw ParameterError("--coalition: empty");
      if (s < 1) throw ParameterError("--s: must be positive");
      const DescendantReport rep = descendant_alphabet(code, IndexMultiset::from_indices(indices), s);
      Json doc;
      doc["command"] = "attack";
      doc["coalition"] = idx;
      doc["s"] = s;
      doc["symbols"] = rep.symbols;
      doc["feasible_words"] = rep.feasible_words.str();
      bool framed = false;
      for (std::size_t i = 0; i < code.size() && !framed; ++i) {
        if (std::find(indices.begin(), indices.end(), i) != indices.end()) continue;
        bool all = true;
        for (int j = 0; j < code.n() && all; ++j) {
          const auto& col = rep.symbols[static_cast<std::size_t>(j)];
          all = std::find(col.begin(), col.end(), code[i][static_cast<std::size_t>(j)]) != col.end();
        }
        framed = all;
      }
      doc["can_frame_outsider"] = framed;
      emit(ctx, doc);
      return kOk;
    };
  });

  try {
    ctx.guards = Guards::from_env();
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "fplab: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "fplab: " << e.what() << "\n";
    return kInputError;
  }
  if (!action) {
    err << "fplab: no command given\n";
    return kInputError;
  }
  try {
    return action();
  } catch (const ParameterError& e) {
    err << "fplab: " << e.what() << "\n";
  } catch (const FormatError& e) {
    err << "fplab: " << e.what() << "\n";
  } catch (const WitnessError& e) {
    err << "fplab: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace fplab::cli
