#include "binmat/classify.hpp"

#include <vector>

#include "binmat/canonical.hpp"

namespace binmat {

std::string class_name(MatroidClass c) {
  switch (c) {
    case MatroidClass::NotThreeConnected: return "not-3-connected";
    case MatroidClass::HasP9Minor: return "has-P9-minor";
    case MatroidClass::Regular: return "regular";
    case MatroidClass::Spike: return "spike";
    case MatroidClass::Y16Family: return "Y16-family";
    case MatroidClass::Starfish: return "starfish";
  }
  return "?";
}

std::optional<SpikeSpec> is_spike_family(const BinaryMatroid& m) {
  int n = m.size(), r = m.rank();
  std::vector<SpikeSpec> candidates;
  if (n % 2 == 1) {
    int k = (n - 1) / 2;
    if (k >= 4 && r == k) candidates.push_back({k, SpikeVariant::Z});
    if (k >= 4 && r == k + 1) candidates.push_back({k, SpikeVariant::Z_dual});
  } else {
    int k = n / 2;
    if (k >= 4 && r == k) {
      candidates.push_back({k, SpikeVariant::Z_minus_y});
      candidates.push_back({k, SpikeVariant::Z_minus_t});
    }
  }
  for (const auto& spec : candidates)
    if (are_isomorphic(m, spike(spec))) return spec;
  return std::nullopt;
}

std::optional<StarfishSpec> is_starfish(const BinaryMatroid& m) {
  int size = m.size(), r = m.rank();
  // |E| - rank = n + 2 pins n; then extra + t = |E| - 3n.
  int n = size - r - 2;
  if (n < 2) return std::nullopt;
  for (int extra = 0; extra <= 3; extra++) {
    int t = size - 3 * n - extra;
    StarfishSpec spec{extra, n, t};
    if (!starfish_spec_valid(spec)) continue;
    if (r != 2 * n + extra - 2 + t) continue;
    if (are_isomorphic(m, build_starfish(spec))) return spec;
  }
  return std::nullopt;
}

std::optional<std::string> y16_family_member(const BinaryMatroid& m) {
  for (const auto& name : y16_family_names()) {
    const BinaryMatroid& member = named(name);
    if (member.size() != m.size() || member.rank() != m.rank()) continue;
    if (are_isomorphic(m, member)) return name;
  }
  return std::nullopt;
}

Classification classify(const BinaryMatroid& m, const ClassifyOptions& opts) {
  Classification c;
  if (!is_three_connected(m)) {
    c.label = MatroidClass::NotThreeConnected;
    for (int k = 1; k <= 2; k++) {
      if (auto sep = find_k_separation(m, k)) {
        c.separation = sep;
        break;
      }
    }
    return c;
  }
  const BinaryMatroid& p9 = named("P9");
  if (has_minor(m, p9)) {
    c.label = MatroidClass::HasP9Minor;
    c.p9_witness = find_minor_witness(m, p9);
    return c;
  }

  // Theorem clauses, cheapest first; in exclusive mode all four are
  // evaluated and exactly one must hold.
  int matches = 0;
  bool regular = is_regular(m);
  if (regular) {
    matches++;
    c.label = MatroidClass::Regular;
    if (opts.refine_regular) {
      if (is_graphic(m))
        c.regular_kind = "graphic";
      else if (is_cographic(m))
        c.regular_kind = "cographic";
      else if (are_isomorphic(m, named("R10")))
        c.regular_kind = "R10";
      else
        c.regular_kind = "other";
    }
    if (!opts.exclusive_check) return c;
  }
  auto spike_spec = is_spike_family(m);
  if (spike_spec) {
    matches++;
    c.label = MatroidClass::Spike;
    c.spike = spike_spec;
    if (!opts.exclusive_check) return c;
  }
  auto member = y16_family_member(m);
  if (member) {
    matches++;
    c.label = MatroidClass::Y16Family;
    c.family_member = member;
    if (!opts.exclusive_check) return c;
  }
  auto star = is_starfish(m);
  if (star) {
    matches++;
    c.label = MatroidClass::Starfish;
    c.starfish = star;
    if (!opts.exclusive_check) return c;
  }

  if (matches == 0)
    throw ExhaustivenessViolation(
        "3-connected P9-free matroid matches no classification clause (|E|=" +
        std::to_string(m.size()) + ", r=" + std::to_string(m.rank()) + ")");
  if (opts.exclusive_check && matches > 1)
    throw ExhaustivenessViolation("matroid matches " + std::to_string(matches) +
                                  " classification clauses");
  if (opts.exclusive_check) {
    // report the unique match (label fields were filled in order; rebuild)
    if (regular) c.label = MatroidClass::Regular;
    if (spike_spec) { c.label = MatroidClass::Spike; c.spike = spike_spec; }
    if (member) { c.label = MatroidClass::Y16Family; c.family_member = member; }
    if (star) { c.label = MatroidClass::Starfish; c.starfish = star; }
  }
  return c;
}

bool verify_classification(const BinaryMatroid& m, const Classification& c) {
  switch (c.label) {
    case MatroidClass::NotThreeConnected:
      if (is_three_connected(m)) return false;
      return c.separation && verify_separation(m, *c.separation);
    case MatroidClass::HasP9Minor: {
      if (!c.p9_witness) return false;
      BinaryMatroid minor = replay_witness(m, *c.p9_witness);
      return are_isomorphic(minor, named("P9"));
    }
    case MatroidClass::Regular:
      return is_regular(m);
    case MatroidClass::Spike:
      return c.spike && are_isomorphic(m, spike(*c.spike));
    case MatroidClass::Y16Family:
      return c.family_member && are_isomorphic(m, named(*c.family_member));
    case MatroidClass::Starfish:
      return c.starfish && are_isomorphic(m, build_starfish(*c.starfish));
  }
  return false;
}

}  // namespace binmat
