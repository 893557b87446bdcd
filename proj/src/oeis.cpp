#include "hiccup/oeis.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "hiccup/error.hpp"

#ifndef HICCUP_DEFAULT_FIXTURES
#define HICCUP_DEFAULT_FIXTURES "fixtures"
#endif

namespace hiccup::oeis {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t'; }

bool is_integer_token(std::string_view token) {
  if (!token.empty() && (token.front() == '-' || token.front() == '+')) {
    token.remove_prefix(1);
  }
  return !token.empty() && std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_blank(line[i])) {
      ++i;
    }
    const std::size_t begin = i;
    while (i < line.size() && !is_blank(line[i])) {
      ++i;
    }
    if (i > begin) {
      fields.push_back(line.substr(begin, i - begin));
    }
  }
  return fields;
}

// The table of known hiccup sequences, as (id, j, x, y, z).
constexpr std::array<CompendiumEntry, 26> kCompendium{{
    {"A000201", {1, 1, 2, 1}}, {"A003156", {1, 1, 3, 1}}, {"A004956", {0, 2, 2, 1}}, {"A007066", {0, 1, 2, 3}},
    {"A026352", {1, 1, 2, 3}}, {"A026356", {0, 2, 2, 3}}, {"A045412", {0, 3, 1, 3}}, {"A064437", {0, 1, 3, 2}},
    {"A080578", {0, 1, 1, 3}}, {"A080579", {0, 1, 1, 4}}, {"A080580", {0, 1, 2, 4}}, {"A080590", {0, 1, 3, 4}},
    {"A080600", {0, 4, 4, 3}}, {"A080652", {0, 2, 3, 2}}, {"A080667", {0, 3, 4, 3}}, {"A080903", {0, 1, 4, 2}},
    {"A081834", {0, 1, 4, 3}}, {"A081835", {0, 1, 5, 4}}, {"A081839", {0, 0, 4, 5}}, {"A081840", {0, 0, 3, 4}},
    {"A081841", {0, 0, 3, 2}}, {"A081842", {0, 0, 4, 3}}, {"A081843", {0, 0, 5, 4}}, {"A086377", {1, 1, 3, 2}},
    {"A086398", {1, 1, 4, 2}}, {"A284753", {0, 2, 4, 2}},
}};

}  // namespace

bool is_oeis_id(std::string_view id) {
  return id.size() == 7 && id[0] == 'A' &&
         std::all_of(id.begin() + 1, id.end(), [](char c) { return c >= '0' && c <= '9'; });
}

BFile parse_bfile(std::string_view text) {
  BFile file;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }

    const auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') {
      continue;
    }
    if (fields.size() != 2) {
      throw ParseError(line_no, "expected '<index> <value>', found " + std::to_string(fields.size()) + " fields");
    }
    if (!is_integer_token(fields[0]) || !is_integer_token(fields[1])) {
      throw ParseError(line_no, "non-integer field in '" + std::string(line) + "'");
    }
    std::string_view index_text = fields[0];
    if (index_text.front() == '+') {
      index_text.remove_prefix(1);
    }
    std::int64_t index = 0;
    const auto [ptr, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
    if (ec != std::errc{} || ptr != index_text.data() + index_text.size()) {
      throw ParseError(line_no, "index out of range: " + std::string(fields[0]));
    }
    if (!file.records.empty() && index != file.records.back().index + 1) {
      throw ParseError(line_no, "index " + std::to_string(index) + " does not follow " +
                                    std::to_string(file.records.back().index));
    }
    std::string value_text(fields[1]);
    if (value_text.front() == '+') {
      value_text.erase(0, 1);
    }
    file.records.push_back({index, BigInt(value_text)});
  }
  return file;
}

BFile load_bfile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw RangeError("cannot open b-file " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  BFile file = parse_bfile(buffer.str());
  const std::string stem = path.stem().string();
  if (is_oeis_id(stem)) {
    file.source_id = stem;
  } else if (stem.size() == 7 && stem[0] == 'b' && is_oeis_id("A" + stem.substr(1))) {
    file.source_id = "A" + stem.substr(1);
  }
  return file;
}

std::string emit_bfile(std::span<const std::int64_t> values, std::int64_t start_index) {
  std::string out;
  out.reserve(values.size() * 12);
  std::int64_t index = start_index;
  for (const std::int64_t v : values) {
    out += std::to_string(index++);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

std::string emit_bfile(const SequenceTrace& trace, std::int64_t start_index) {
  return emit_bfile(trace.values(), start_index);
}

std::span<const CompendiumEntry> compendium() { return kCompendium; }

std::optional<CompendiumEntry> find_entry(std::string_view oeis_id) {
  const auto it = std::find_if(kCompendium.begin(), kCompendium.end(),
                               [&](const CompendiumEntry& e) { return e.oeis_id == oeis_id; });
  if (it == kCompendium.end()) {
    return std::nullopt;
  }
  return *it;
}

CrosscheckReport crosscheck(const SequenceParams& params, const BFile& reference, int max_shift) {
  if (reference.records.empty()) {
    throw DomainError("crosscheck: reference b-file is empty");
  }
  if (max_shift < 0) {
    throw DomainError("crosscheck: max_shift must be nonnegative");
  }
  const std::int64_t last_index = reference.records.back().index;
  const std::int64_t needed = last_index + max_shift;
  if (needed < 1) {
    throw DomainError("crosscheck: reference indices never reach the generated range");
  }
  const SequenceTrace trace = generate(params, static_cast<std::size_t>(needed));
  const auto n = static_cast<std::int64_t>(trace.size());

  std::optional<CrosscheckReport> best;
  std::size_t best_prefix = 0;
  for (int step = 0; step <= 2 * max_shift; ++step) {
    const int shift = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
    CrosscheckReport report;
    report.shift_applied = shift;
    std::size_t agreeing = 0;
    for (const BFileRecord& rec : reference.records) {
      const std::int64_t k = rec.index + shift;
      if (k < 1 || k > n) {
        continue;
      }
      ++report.compared_count;
      const std::int64_t actual = trace.value(static_cast<std::size_t>(k));
      if (!report.first_divergence && rec.value != actual) {
        report.first_divergence = Divergence{rec.index, rec.value, actual};
      }
      if (!report.first_divergence) {
        ++agreeing;
      }
    }
    report.matched = report.compared_count > 0 && !report.first_divergence;
    if (report.matched) {
      return report;
    }
    if (!best || agreeing > best_prefix) {
      best = report;
      best_prefix = agreeing;
    }
  }
  return *best;
}

std::filesystem::path fixture_directory() {
  if (const char* env = std::getenv("HICCUP_FIXTURES"); env != nullptr && *env != '\0') {
    return env;
  }
  return HICCUP_DEFAULT_FIXTURES;
}

std::filesystem::path fixture_path(std::string_view oeis_id, const std::filesystem::path& dir) {
  if (!is_oeis_id(oeis_id)) {
    throw DomainError("not an OEIS identifier: '" + std::string(oeis_id) + "'");
  }
  const std::string id(oeis_id);
  std::filesystem::path path = dir / (id + ".txt");
  if (std::filesystem::exists(path)) {
    return path;
  }
  path = dir / ("b" + id.substr(1) + ".txt");
  if (std::filesystem::exists(path)) {
    return path;
  }
  throw RangeError("no fixture for " + id + " in " + dir.string());
}

std::string bfile_url(std::string_view oeis_id) {
  if (!is_oeis_id(oeis_id)) {
    throw DomainError("not an OEIS identifier: '" + std::string(oeis_id) + "'");
  }
  const std::string id(oeis_id);
  return "https://oeis.org/" + id + "/b" + id.substr(1) + ".txt";
}

}  // namespace hiccup::oeis
