#include "hiccup/cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hiccup/analysis.hpp"
#include "hiccup/closedforms.hpp"
#include "hiccup/engine.hpp"
#include "hiccup/error.hpp"
#include "hiccup/oeis.hpp"
#include "hiccup/verify.hpp"
#include "json.hpp"

namespace hiccup::cli {

namespace {

using nlohmann::json;

enum class Format { plain, csv, bfile, json };

const std::map<std::string, Format> kFormats{
    {"plain", Format::plain}, {"csv", Format::csv}, {"bfile", Format::bfile}, {"json", Format::json}};

struct Options {
  std::int64_t j = 0;
  std::optional<std::int64_t> x, y, z;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> Z;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> horizon;
  std::optional<std::int64_t> max_start;
  std::optional<double> tolerance;
  std::int64_t start = 1;
  std::string family;
  std::string which = "all";
  std::string id;
  std::string bfile;
  bool fetch = false;
  bool range = false;
  int max_shift = 2;
  std::string rule0 = "01";
  std::string rule1 = "1101";
  std::optional<std::string> positions_of;
  std::string format_name = "plain";
  Format format = Format::plain;
};

std::int64_t need(const std::optional<std::int64_t>& v, const char* flag) {
  if (!v) {
    throw UsageError(std::string("missing required option ") + flag);
  }
  return *v;
}

SequenceParams sequence_params(const Options& o) {
  return SequenceParams{o.j, need(o.x, "--x"), need(o.y, "--y"), need(o.z, "--z")};
}

json params_json(const SequenceParams& p) { return json{{"j", p.j}, {"x", p.x}, {"y", p.y}, {"z", p.z}}; }

json witness_json(const verify::CheckResult& check) {
  const verify::Witness& w = *check.witness;
  return json{{"check", check.name}, {"index", w.index}, {"claimed", w.claimed}, {"observed", w.observed},
              {"note", w.note}};
}

void emit_json(std::ostream& out, const std::string& command, json params, json result, json witnesses) {
  json doc{{"command", command}, {"params", std::move(params)}, {"result", std::move(result)},
           {"witnesses", std::move(witnesses)}};
  out << doc.dump(2) << '\n';
}

BeattyFamily parse_family(const std::string& text) {
  if (text == "A" || text == "a") {
    return BeattyFamily::A;
  }
  if (text == "B" || text == "b") {
    return BeattyFamily::B;
  }
  throw UsageError("--family must be A or B, got '" + text + "'");
}

std::string join(const std::vector<std::int64_t>& values, const char* separator) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) {
      out += separator;
    }
    out += std::to_string(values[i]);
  }
  return out;
}

void print_values(std::ostream& out, const std::string& command, const json& params,
                  const std::vector<std::int64_t>& values, std::int64_t first_index, Format format) {
  switch (format) {
    case Format::plain:
      out << join(values, ", ") << '\n';
      break;
    case Format::csv:
      out << "n,value\n";
      for (std::size_t i = 0; i < values.size(); ++i) {
        out << first_index + static_cast<std::int64_t>(i) << ',' << values[i] << '\n';
      }
      break;
    case Format::bfile:
      out << oeis::emit_bfile(values, first_index);
      break;
    case Format::json:
      emit_json(out, command, params, json{{"first_index", first_index}, {"values", values}}, json::array());
      break;
  }
}

// ---- subcommands ----------------------------------------------------------

int cmd_gen(const Options& o, std::ostream& out) {
  const SequenceParams params = sequence_params(o);
  const std::int64_t n = need(o.n, "-n");
  if (n < 1) {
    throw UsageError("-n must be at least 1");
  }
  const SequenceTrace trace = generate(params, static_cast<std::size_t>(n));
  json pj = params_json(params);
  pj["n"] = n;
  switch (o.format) {
    case Format::plain: {
      const auto v = trace.values();
      out << join({v.begin(), v.end()}, ", ") << '\n';
      break;
    }
    case Format::csv:
      out << "n,value,hit,increment\n";
      for (std::size_t k = 1; k <= trace.size(); ++k) {
        out << k << ',' << trace.value(k) << ',';
        if (k >= 2) {
          out << (trace.hit(k) ? 1 : 0) << ',' << trace.increment(k);
        } else {
          out << ',';
        }
        out << '\n';
      }
      break;
    case Format::bfile:
      out << oeis::emit_bfile(trace, o.start);
      break;
    case Format::json: {
      const auto v = trace.values();
      const auto h = trace.hit_flags();
      std::vector<bool> hits(h.begin(), h.end());
      emit_json(out, "gen", pj,
                json{{"values", std::vector<std::int64_t>(v.begin(), v.end())},
                     {"hits", hits},
                     {"misses", miss_indices(trace)}},
                json::array());
      break;
    }
  }
  return kSuccess;
}

int cmd_closed_form(const Options& o, std::ostream& out) {
  const std::int64_t n = need(o.n, "-n");
  const std::string& family = o.family;
  json params{{"family", family}, {"n", n}};
  std::int64_t first = o.range ? 1 : n;
  std::vector<std::int64_t> values;
  json extra = json::object();

  if (family == "A" || family == "B") {
    const std::int64_t x = need(o.x, "--x");
    const std::int64_t Z = need(o.Z, "--Z");
    params["x"] = x;
    params["Z"] = Z;
    const BeattyForm form = beatty_form(parse_family(family), x, Z);
    extra = json{{"slope", form.slope().to_string()}, {"offset", form.offset().to_string()},
                 {"start_index", form.start_index()}};
    if (o.range) {
      first = form.start_index();
    }
    for (std::int64_t i = first; i <= n; ++i) {
      values.push_back(eval_beatty(form, i));
    }
  } else if (family == "ceil-A" || family == "ceil-B") {
    const std::int64_t Z = need(o.Z, "--Z");
    params["Z"] = Z;
    const QuadExt slope = family == "ceil-A" ? slope_family_a(Z) : slope_family_b(Z);
    extra = json{{"slope", slope.to_string()}};
    for (std::int64_t i = first; i <= n; ++i) {
      values.push_back(ceil_multiple(slope, i));
    }
  } else if (family == "ramsey" || family == "thumbtack" || family == "hex") {
    auto f = family == "ramsey" ? ramsey_form : family == "thumbtack" ? thumbtack_form : hex_form;
    for (std::int64_t i = first; i <= n; ++i) {
      values.push_back(f(i));
    }
  } else if (family == "metafib" || family == "leaf") {
    const std::int64_t k = need(o.k, "--k");
    params["k"] = k;
    const auto prefix = family == "metafib" ? metafib_prefix(k, n) : leaf_count_prefix(k, n);
    values.assign(prefix.begin() + (first - 1), prefix.end());
  } else {
    throw UsageError("--family must be one of A, B, ceil-A, ceil-B, ramsey, thumbtack, hex, metafib, leaf");
  }

  if (o.format == Format::json) {
    json result = extra;
    result["first_index"] = first;
    result["values"] = values;
    emit_json(out, "closed-form", params, result, json::array());
  } else {
    print_values(out, "closed-form", params, values, first, o.format);
  }
  return kSuccess;
}

int report_checks(const std::string& command, const json& params, const verify::SuiteReport& report, Format format,
                  std::ostream& out) {
  if (format == Format::json) {
    json checks = json::array();
    json witnesses = json::array();
    for (const auto& c : report.checks) {
      checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"summary", c.summary}});
      if (c.witness) {
        witnesses.push_back(witness_json(c));
      }
    }
    emit_json(out, command, params, json{{"passed", report.passed()}, {"checks", checks}}, witnesses);
  } else if (report.checks.size() == 1) {
    out << report.checks.front().summary << '\n';
  } else {
    std::size_t passed = 0;
    for (const auto& c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.summary << '\n';
      passed += c.passed ? 1 : 0;
    }
    out << passed << "/" << report.checks.size() << " checks passed\n";
  }
  return report.passed() ? kSuccess : kVerificationFailed;
}

int cmd_verify(const std::string& selector, const Options& o, std::ostream& out) {
  constexpr std::int64_t kDefaultHorizon = 10'000;
  const std::int64_t n = o.n.value_or(o.horizon.value_or(kDefaultHorizon));
  verify::SuiteReport report;
  json params = json::object();
  params["n"] = n;

  if (selector == "beatty") {
    const std::int64_t x = need(o.x, "--x");
    const std::int64_t Z = need(o.Z, "--Z");
    params.update(json{{"family", o.family}, {"x", x}, {"Z", Z}});
    report.checks.push_back(verify::beatty(parse_family(o.family), x, Z, n));
  } else if (selector == "ceiling") {
    const std::int64_t Z = need(o.Z, "--Z");
    params.update(json{{"family", o.family}, {"Z", Z}});
    report.checks.push_back(verify::ceiling(parse_family(o.family), Z, n));
  } else if (selector == "lattice") {
    params["which"] = o.which;
    if (o.which == "ramsey" || o.which == "all") {
      report.checks.push_back(verify::lattice(verify::Lattice::ramsey, n));
    }
    if (o.which == "thumbtack" || o.which == "all") {
      report.checks.push_back(verify::lattice(verify::Lattice::thumbtack, n));
    }
    if (o.which == "hex" || o.which == "all") {
      report.checks.push_back(verify::lattice(verify::Lattice::hex, n));
    }
    if (o.which == "misses" || o.which == "all") {
      report.checks.push_back(verify::miss_set(n));
    }
    if (report.checks.empty()) {
      throw UsageError("--which must be ramsey, thumbtack, hex, misses or all");
    }
  } else if (selector == "recurrence") {
    const std::int64_t x = need(o.x, "--x");
    const std::int64_t z = need(o.z, "--z");
    if (z < 2) {
      throw DomainError("recurrence checks need z >= 2");
    }
    const std::int64_t max_start = o.max_start.value_or(10 * z);
    params.update(json{{"x", x}, {"z", z}, {"max_start", max_start}});
    report.checks.push_back(verify::recurrence(x, z, n, max_start));
  } else if (selector == "hits") {
    SequenceParams p = sequence_params(o);
    if (p.j != 0) {
      throw DomainError("the hits identity is checked for j = 0 only");
    }
    params.update(params_json(p));
    report.checks.push_back(verify::hits(p, n));
  } else if (selector == "metafib") {
    const std::int64_t k = need(o.k, "--k");
    params["k"] = k;
    report.checks.push_back(verify::metafib(k, n));
  } else if (selector == "morphic") {
    report.checks.push_back(verify::morphic(n));
  } else if (selector == "all") {
    report = verify::all(verify::AllScope{n});
  } else {
    throw UsageError("unknown verify selector '" + selector + "'");
  }
  return report_checks("verify " + selector, params, report, o.format, out);
}

int cmd_density(const Options& o, std::ostream& out) {
  const SequenceParams p = sequence_params(o);
  const std::int64_t horizon = o.horizon.value_or(o.n.value_or(10'000));
  if (horizon < 1) {
    throw UsageError("--horizon must be positive");
  }
  const DensityReport report = density_report(p, static_cast<std::size_t>(horizon));
  const std::string gap = report.gap.str(30, std::ios_base::scientific);
  const std::string target_decimal = report.target.approximate<Decimal50>().str(30);
  const bool within = !o.tolerance || report.gap < Decimal50(*o.tolerance);
  if (o.format == Format::json) {
    json params = params_json(p);
    params["horizon"] = horizon;
    json result{{"ratio", report.ratio.str()}, {"target", report.target.to_string()},
                {"target_decimal", target_decimal}, {"gap", gap}};
    if (o.tolerance) {
      result["tolerance"] = *o.tolerance;
      result["within_tolerance"] = within;
    }
    json witnesses = json::array();
    if (!within) {
      witnesses.push_back(json{{"check", "density"}, {"index", horizon}, {"claimed", target_decimal},
                               {"observed", report.ratio.str()}, {"note", "gap " + gap}});
    }
    emit_json(out, "density", params, result, witnesses);
  } else {
    out << "ratio " << report.ratio.str() << '\n'
        << "target " << report.target.to_string() << " = " << target_decimal << '\n'
        << "gap " << gap << '\n';
    if (o.tolerance) {
      out << (within ? "WITHIN " : "OUTSIDE ") << *o.tolerance << '\n';
    }
  }
  return within ? kSuccess : kVerificationFailed;
}

int cmd_crosscheck(const Options& o, std::ostream& out, const Fetcher& fetch) {
  if (!oeis::is_oeis_id(o.id)) {
    throw UsageError("--id must look like A000201, got '" + o.id + "'");
  }
  SequenceParams params;
  if (o.x || o.y || o.z) {
    params = sequence_params(o);
  } else if (const auto entry = oeis::find_entry(o.id)) {
    params = entry->params;
  } else {
    throw UsageError(o.id + " is not in the compendium; pass --x --y --z (and --j)");
  }

  oeis::BFile reference;
  std::string source;
  if (o.fetch) {
    if (!fetch) {
      throw UsageError("--fetch is not available in this build");
    }
    source = oeis::bfile_url(o.id);
    reference = oeis::parse_bfile(fetch(source));
    reference.source_id = o.id;
  } else {
    const std::filesystem::path path = o.bfile.empty() ? oeis::fixture_path(o.id) : std::filesystem::path(o.bfile);
    source = path.string();
    reference = oeis::load_bfile(path);
  }

  const oeis::CrosscheckReport report = oeis::crosscheck(params, reference, o.max_shift);
  if (o.format == Format::json) {
    json pj = params_json(params);
    pj["id"] = o.id;
    pj["source"] = source;
    pj["max_shift"] = o.max_shift;
    json witnesses = json::array();
    if (report.first_divergence) {
      const auto& d = *report.first_divergence;
      witnesses.push_back(json{{"check", "crosscheck " + o.id},
                               {"index", d.index},
                               {"claimed", std::to_string(d.actual)},
                               {"observed", d.expected.str()},
                               {"note", "generated a(index + shift) vs reference value"}});
    }
    emit_json(out, "crosscheck", pj,
              json{{"matched", report.matched}, {"compared_count", report.compared_count},
                   {"shift_applied", report.shift_applied}},
              witnesses);
  } else {
    if (report.matched) {
      out << "MATCH " << o.id << " " << report.compared_count << " terms, shift " << report.shift_applied << '\n';
    } else {
      out << "MISMATCH " << o.id << " shift " << report.shift_applied;
      if (report.first_divergence) {
        const auto& d = *report.first_divergence;
        out << " at index " << d.index << ": reference " << d.expected.str() << ", generated " << d.actual;
      }
      out << '\n';
    }
  }
  return report.matched ? kSuccess : kVerificationFailed;
}

int cmd_morphic(const Options& o, std::ostream& out) {
  const std::int64_t n = need(o.n, "-n");
  if (n < 1) {
    throw UsageError("-n must be at least 1");
  }
  const MorphismRules rules{o.rule0, o.rule1};
  const std::string word = morphic_fixed_point(rules, static_cast<std::size_t>(n));
  json params{{"rule0", o.rule0}, {"rule1", o.rule1}, {"n", n}};
  if (o.positions_of) {
    if (*o.positions_of != "0" && *o.positions_of != "1") {
      throw UsageError("--positions-of must be 0 or 1");
    }
    params["positions_of"] = *o.positions_of;
    const auto positions = positions_of(word, o.positions_of->front());
    print_values(out, "morphic", params, positions, 1, o.format);
    return kSuccess;
  }
  if (o.format == Format::json) {
    emit_json(out, "morphic", params, json{{"word", word}}, json::array());
  } else {
    out << word << '\n';
  }
  return kSuccess;
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto rows = oeis::compendium();
  switch (o.format) {
    case Format::json: {
      json entries = json::array();
      for (const auto& e : rows) {
        json row = params_json(e.params);
        row["id"] = std::string(e.oeis_id);
        entries.push_back(row);
      }
      emit_json(out, "table", json::object(), json{{"entries", entries}}, json::array());
      break;
    }
    case Format::csv:
      out << "id,j,x,y,z\n";
      for (const auto& e : rows) {
        out << e.oeis_id << ',' << e.params.j << ',' << e.params.x << ',' << e.params.y << ',' << e.params.z << '\n';
      }
      break;
    default:
      for (const auto& e : rows) {
        out << e.oeis_id << "  j=" << e.params.j << " x=" << e.params.x << " y=" << e.params.y << " z=" << e.params.z
            << '\n';
      }
      break;
  }
  return kSuccess;
}

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format_name, "plain, csv, bfile or json")
      ->check(CLI::IsMember({"plain", "csv", "bfile", "json"}));
}

void add_xyz(CLI::App* sub, Options& o) {
  sub->add_option("--j", o.j, "Index shift j (default 0)");
  sub->add_option("--x", o.x, "Start value a(1)");
  sub->add_option("--y", o.y, "Increment on a hit");
  sub->add_option("--z", o.z, "Increment on a miss");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Fetcher& fetch) {
  CLI::App app{"Self-referential hiccup sequences: generation, closed forms and verification", "hiccup"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate a (j,x,y,z) hiccup sequence");
  add_xyz(gen, o);
  gen->add_option("-n", o.n, "Number of terms")->required();
  gen->add_option("--start", o.start, "First index for --format bfile");
  for (const char* flag : {"--x", "--y", "--z"}) {
    gen->get_option(flag)->required();
  }
  add_format(gen, o);

  auto* closed = app.add_subcommand("closed-form", "Evaluate a closed-form family at n");
  closed->add_option("--family", o.family, "A, B, ceil-A, ceil-B, ramsey, thumbtack, hex, metafib, leaf")->required();
  closed->add_option("--x", o.x, "Start value (families A and B)");
  closed->add_option("--Z", o.Z, "Family parameter Z >= 2");
  closed->add_option("--k", o.k, "Tree arity k >= 2 (metafib, leaf)");
  closed->add_option("-n", o.n, "Index")->required();
  closed->add_flag("--range", o.range, "Print every term up to n instead of a(n) alone");
  add_format(closed, o);

  auto* ver = app.add_subcommand("verify", "Check a family of claims against the generator");
  ver->require_subcommand(1);
  std::string selector;
  for (const char* name : {"beatty", "ceiling", "lattice", "recurrence", "hits", "metafib", "morphic", "all"}) {
    auto* sel = ver->add_subcommand(name);
    sel->callback([&selector, name] { selector = name; });
    sel->add_option("-n", o.n, "Horizon (default 10000)");
    sel->add_option("--horizon", o.horizon, "Same as -n");
    add_format(sel, o);
    const std::string s = name;
    if (s == "beatty" || s == "ceiling") {
      sel->add_option("--family", o.family, "A or B")->required();
      sel->add_option("--Z", o.Z, "Z >= 2")->required();
      if (s == "beatty") {
        sel->add_option("--x", o.x, "Start value")->required();
      }
    } else if (s == "lattice") {
      sel->add_option("--which", o.which, "ramsey, thumbtack, hex, misses or all");
    } else if (s == "recurrence") {
      sel->add_option("--x", o.x, "Start value")->required();
      sel->add_option("--z", o.z, "Miss increment z >= 2")->required();
      sel->add_option("--max-start", o.max_start, "Largest acceptable recurrence start (default 10z)");
    } else if (s == "hits") {
      add_xyz(sel, o);
    } else if (s == "metafib") {
      sel->add_option("--k", o.k, "Tree arity k >= 2")->required();
    }
  }

  auto* dens = app.add_subcommand("density", "Compare a(n)/n with the characteristic root r0");
  add_xyz(dens, o);
  dens->add_option("--horizon", o.horizon, "Horizon n (default 10000)");
  dens->add_option("-n", o.n, "Same as --horizon");
  dens->add_option("--tolerance", o.tolerance, "Exit 1 when the gap is not below this");
  add_format(dens, o);

  auto* cross = app.add_subcommand("crosscheck", "Compare a generated sequence with an OEIS b-file");
  cross->add_option("--id", o.id, "OEIS identifier, e.g. A000201")->required();
  auto* bfile_opt = cross->add_option("--bfile", o.bfile, "Path of the b-file (default: fixture directory)");
  cross->add_flag("--fetch", o.fetch, "Download the b-file from oeis.org")->excludes(bfile_opt);
  cross->add_option("--max-shift", o.max_shift, "Largest index shift tried (default 2)");
  add_xyz(cross, o);
  add_format(cross, o);

  auto* morph = app.add_subcommand("morphic", "Prefix of the fixed point of a binary morphism");
  morph->add_option("--rule0", o.rule0, "Image of 0 (default 01)");
  morph->add_option("--rule1", o.rule1, "Image of 1 (default 1101)");
  morph->add_option("-n", o.n, "Number of letters")->required();
  morph->add_option("--positions-of", o.positions_of, "Print the positions of this letter instead");
  add_format(morph, o);

  auto* table = app.add_subcommand("table", "Print the compendium of known hiccup sequences");
  add_format(table, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  o.format = kFormats.at(o.format_name);
  try {
    if (gen->parsed()) {
      return cmd_gen(o, out);
    }
    if (closed->parsed()) {
      return cmd_closed_form(o, out);
    }
    if (ver->parsed()) {
      return cmd_verify(selector, o, out);
    }
    if (dens->parsed()) {
      return cmd_density(o, out);
    }
    if (cross->parsed()) {
      return cmd_crosscheck(o, out, fetch);
    }
    if (morph->parsed()) {
      return cmd_morphic(o, out);
    }
    if (table->parsed()) {
      return cmd_table(o, out);
    }
  } catch (const IdentityViolation& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace hiccup::cli
