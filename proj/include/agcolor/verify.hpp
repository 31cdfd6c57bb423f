#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "agcolor/coloring.hpp"

namespace agcolor {

struct PartitionCheck {
  bool ok = true;
  std::vector<LineId> missing;
  std::vector<LineId> duplicated;
  std::vector<std::string> empty_classes;
};

/// Two lines of one class sharing a point.
struct ProperWitness {
  std::size_t class_index = 0;
  LineId first = 0;
  LineId second = 0;
  PointId point = 0;
};

/// A pair of classes with no intersecting pair of lines.
struct CompleteWitness {
  std::size_t first = 0;
  std::size_t second = 0;
};

struct ProperResult {
  bool proper = true;
  std::optional<ProperWitness> witness;
};

struct CompleteResult {
  bool complete = true;
  std::optional<CompleteWitness> witness;
};

struct ChainCheck {
  std::uint64_t chromatic = 0;
  std::uint64_t psi_upper = 0;
  bool within_psi_upper = true;
  /// Only meaningful for proper colorings: class count >= chromatic index.
  bool at_least_chromatic = true;
};

struct VerificationReport {
  int n = 0;
  std::uint32_t q = 0;
  std::string construction;
  std::size_t class_count = 0;
  std::size_t line_count = 0;
  PartitionCheck partition;
  ProperResult proper;
  CompleteResult complete;
  std::map<std::size_t, std::size_t> size_histogram;  // class size -> number of classes
  ChainCheck chain;
};

PartitionCheck check_partition(const Coloring& c);
/// Witness is the lexicographically first offending (class, line, line).
ProperResult is_proper(const Coloring& c);
/// Pair coverage is accumulated over the pencils of lines through each point.
/// Witness is the lexicographically first unmet class pair.
CompleteResult is_complete(const Coloring& c);
VerificationReport verify(const Coloring& c);

Json report_to_json(const VerificationReport& r, const Coloring& c);

/// Number of lines meeting at least one member of `lines`; members themselves
/// are counted only when include_members is set. Throws on an empty set.
std::uint64_t count_meeting_lines(const AffineSpace& space, std::span<const LineId> lines, bool include_members = false);

}  // namespace agcolor
