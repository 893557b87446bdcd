#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hiccup/engine.hpp"
#include "hiccup/qfield.hpp"

namespace hiccup::oeis {

struct BFileRecord {
  std::int64_t index = 0;
  BigInt value;

  friend bool operator==(const BFileRecord&, const BFileRecord&) = default;
};

/// Parsed b-file. Indices are contiguous (step 1).
struct BFile {
  std::vector<BFileRecord> records;
  std::optional<std::string> source_id;
};

/// True for "A" followed by exactly six digits.
bool is_oeis_id(std::string_view id);

/// Parses "<index> <value>" lines; '#' comment lines and blank lines are
/// skipped, fields may be separated by any run of spaces or tabs, and CRLF
/// endings are accepted. Throws ParseError (with the 1-based line number) on a
/// malformed line or a gap in the indices.
BFile parse_bfile(std::string_view text);

/// Reads and parses a b-file; source_id is taken from a file name like
/// A000201.txt or b000201.txt.
BFile load_bfile(const std::filesystem::path& path);

/// "<index> <value>\n" per term, numbered from start_index.
std::string emit_bfile(std::span<const std::int64_t> values, std::int64_t start_index = 1);
std::string emit_bfile(const SequenceTrace& trace, std::int64_t start_index = 1);

struct CompendiumEntry {
  std::string_view oeis_id;
  SequenceParams params;
};

/// The 26 known hiccup sequences with their (j, x, y, z), in table order.
std::span<const CompendiumEntry> compendium();
std::optional<CompendiumEntry> find_entry(std::string_view oeis_id);

struct Divergence {
  std::int64_t index = 0;  // reference index
  BigInt expected;         // reference value
  std::int64_t actual = 0; // generated a(index + shift)
};

struct CrosscheckReport {
  bool matched = false;
  std::size_t compared_count = 0;
  int shift_applied = 0;
  std::optional<Divergence> first_divergence;
};

/// Compares reference record (i, v) with the generated a(i + shift) for every
/// shift in [-max_shift, max_shift], tried in order 0, -1, +1, -2, +2, ...
/// The first shift under which all overlapping pairs agree is reported as a
/// match; otherwise the shift with the longest agreeing prefix is reported
/// together with its first divergence. DomainError for an empty reference.
CrosscheckReport crosscheck(const SequenceParams& params, const BFile& reference, int max_shift = 2);

/// $HICCUP_FIXTURES if set, otherwise the fixture directory of the source tree.
std::filesystem::path fixture_directory();

/// <dir>/<id>.txt, falling back to <dir>/b<digits>.txt. RangeError if neither
/// exists.
std::filesystem::path fixture_path(std::string_view oeis_id, const std::filesystem::path& dir = fixture_directory());

/// https://oeis.org/A000201/b000201.txt for "A000201".
std::string bfile_url(std::string_view oeis_id);

}  // namespace hiccup::oeis
