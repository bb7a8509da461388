#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>

#include "fplab/constructions.hpp"
#include "fplab/errors.hpp"
#include "seeded_order.hpp"

namespace fplab {

namespace {

bool design_flag(const SubsetFamily& family, int t) {
  const auto k = family.uniform_k();
  if (!k || *k < t) return false;
  const std::uint64_t total = binomial(family.n(), t);
  const std::uint64_t per_block = binomial(*k, t);
  if (total % per_block != 0 || family.size() != total / per_block) return false;
  // Pairwise meets below t make every t-subset covered at most once, so the count settles it.
  return true;
}

}  // namespace

Packing make_packing(SubsetFamily family, int t) {
  if (t < 1) throw ParameterError("packing strength t must be positive");
  if (!family.empty() && !family.uniform_k()) throw ParameterError("packing members must have equal size");
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if ((family[i] & family[j]).size() >= t) {
        throw ParameterError("members " + family[i].to_string() + " and " + family[j].to_string() + " share " +
                             std::to_string((family[i] & family[j]).size()) + " >= t points");
      }
    }
  }
  const bool design = design_flag(family, t);
  return Packing{std::move(family), t, design};
}

Packing greedy_packing(int n, int k, int t, std::optional<std::uint64_t> seed, const Guards& guards) {
  if (!(n > k && k > t && t >= 1)) throw ParameterError("greedy packing needs n > k > t >= 1");
  if (binomial(n, k) > guards.max_words) {
    throw GuardError("C(n,k) exceeds guard max_words=" + std::to_string(guards.max_words));
  }
  std::vector<Subset> order = enumerate_subsets(n, k);
  if (seed) detail::seeded_shuffle(order, *seed);
  std::vector<Subset> kept;
  for (const Subset& cand : order) {
    bool ok = true;
    for (const Subset& b : kept) {
      if ((cand & b).size() >= t) {
        ok = false;
        break;
      }
    }
    if (ok) kept.push_back(cand);
  }
  return make_packing(SubsetFamily(GroundSet(n), std::move(kept), k), t);
}

ValidatedFamily packing_to_frameproof(const Packing& packing, const FrameproofParams& params,
                                      const SearchOptions& options) {
  const auto k = packing.family.uniform_k();
  if (!k) throw ParameterError("packing has no uniform member size");
  const int expected = static_cast<int>(ceil_div(static_cast<long long>(params.s) * *k, params.c));
  if (packing.t != expected) {
    throw ParameterError("packing strength t=" + std::to_string(packing.t) + " differs from ceil(sk/c)=" +
                         std::to_string(expected));
  }
  ValidatedFamily out{packing.family, {}};
  if (params.c > options.guards.max_c || packing.family.size() > options.guards.max_members) {
    out.validation.note = "exhaustive check skipped by size guards";
    return out;
  }
  out.validation.checked = true;
  out.validation.witness = find_focal_hypergraph(packing.family, params, options);
  out.validation.frameproof = !out.validation.witness.has_value();
  return out;
}

Packing parse_design(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      const auto first = out.find_first_not_of(" \t\r");
      if (first == std::string::npos || out[first] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line(line)) throw FormatError("design: missing header line \"n k t\"");
  int n = 0;
  int k = 0;
  int t = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> k >> t) || (hs >> extra)) {
      throw FormatError("design line " + std::to_string(line_no) + ": header must be \"n k t\"");
    }
  }
  if (n < 1 || n > kMaxPoints) throw FormatError("design header: n=" + std::to_string(n) + " outside 1..64");
  if (!(k >= t && t >= 1 && n >= k)) throw FormatError("design header: need n >= k >= t >= 1");

  std::vector<Subset> blocks;
  while (next_line(line)) {
    std::istringstream ls(line);
    std::vector<int> pts;
    std::string tok;
    while (ls >> tok) {
      int v = 0;
      try {
        std::size_t used = 0;
        v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw FormatError("design line " + std::to_string(line_no) + ": \"" + tok + "\" is not an integer");
      }
      if (v < 1 || v > n) {
        throw FormatError("design line " + std::to_string(line_no) + ": point " + std::to_string(v) +
                          " outside 1.." + std::to_string(n));
      }
      pts.push_back(v);
    }
    const Subset b = Subset::from_points(pts);
    if (static_cast<int>(pts.size()) != k || b.size() != k) {
      throw FormatError("design line " + std::to_string(line_no) + ": block must list " + std::to_string(k) +
                        " distinct points");
    }
    blocks.push_back(b);
  }

  std::map<Mask, int> cover;
  for (const Subset& b : blocks) {
    for (const Subset& sub : enumerate_subsets(k, t)) {
      // map the j-th point of sub (within [k]) to the j-th point of b
      const std::vector<int> bp = b.points();
      Mask m = 0;
      for (int j : sub.points()) m |= Mask{1} << (bp[static_cast<std::size_t>(j - 1)] - 1);
      if (++cover[m] > 1) throw FormatError("design: t-subset " + Subset(m).to_string() + " is covered twice");
    }
  }
  for (const Subset& ts : enumerate_subsets(n, t)) {
    if (!cover.contains(ts.mask())) throw FormatError("design: t-subset " + ts.to_string() + " is not covered");
  }
  const std::uint64_t expected = binomial(n, t) / binomial(k, t);
  if (blocks.size() != expected) {
    throw FormatError("design: " + std::to_string(blocks.size()) + " blocks, expected " + std::to_string(expected));
  }
  Packing p{SubsetFamily(GroundSet(n), std::move(blocks), k), t, true};
  if (!design_flag(p.family, t)) throw FormatError("design: block count does not match a design");
  return p;
}

Packing load_design(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open design file " + path.string());
  return parse_design(in);
}

}  // namespace fplab
