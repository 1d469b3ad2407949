#include "derange/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "derange/actions.hpp"
#include "derange/classify.hpp"
#include "derange/simplex.hpp"

namespace derange::cli {

namespace {

using nlohmann::ordered_json;

// Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { plain, json, bfile };

Format parse_format(const std::string& name, bool allow_bfile) {
  if (name == "plain") return Format::plain;
  if (name == "json") return Format::json;
  if (name == "bfile" && allow_bfile) return Format::bfile;
  throw UsageError("unknown format '" + name + "'");
}

SequenceId parse_sequence_id(const std::string& name) {
  // Canonical ASCII names plus the accented spellings of the hatted
  // sequences, in both precomposed and combining-mark encodings.
  static const std::map<std::string, SequenceId> table = {
      {"d", SequenceId::ordinary_derangements},
      {"e", SequenceId::even_derangements},
      {"o", SequenceId::odd_derangements},
      {"dhat", SequenceId::facet_derangements},
      {"d\xcc\x82", SequenceId::facet_derangements},
      {"ehat", SequenceId::direct_facet_derangements},
      {"\xc3\xaa", SequenceId::direct_facet_derangements},
      {"e\xcc\x82", SequenceId::direct_facet_derangements},
      {"ohat", SequenceId::indirect_facet_derangements},
      {"\xc3\xb4", SequenceId::indirect_facet_derangements},
      {"o\xcc\x82", SequenceId::indirect_facet_derangements},
      {"vfix", SequenceId::vertex_fixing},
  };
  const auto found = table.find(name);
  if (found == table.end())
    throw UsageError("unknown sequence id '" + name +
                     "' (expected d, e, o, dhat, ehat, ohat, or vfix)");
  return found->second;
}

int parse_int(std::string_view text, const std::string& what) {
  if (text.empty()) throw UsageError(what + ": expected an integer");
  size_t pos = text[0] == '-' ? 1 : 0;
  if (pos == text.size()) throw UsageError(what + ": expected an integer");
  for (size_t i = pos; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw UsageError(what + ": '" + std::string(text) + "' is not an integer");
  try {
    return std::stoi(std::string(text));
  } catch (const std::out_of_range&) {
    throw UsageError(what + ": '" + std::string(text) + "' is out of range");
  }
}

// "a..b" inclusive, or a bare index meaning a one-element range.
std::pair<int, int> parse_range(const std::string& text) {
  const size_t dots = text.find("..");
  if (dots == std::string::npos) {
    const int single = parse_int(text, "range");
    return {single, single};
  }
  const int from = parse_int(std::string_view(text).substr(0, dots), "range start");
  const int to = parse_int(std::string_view(text).substr(dots + 2), "range end");
  if (to < from)
    throw UsageError("range start " + std::to_string(from) + " exceeds range end " +
                     std::to_string(to));
  return {from, to};
}

Method parse_method(const std::string& name) {
  if (name == "formula") return Method::formula;
  if (name == "recursion") return Method::recursion;
  if (name == "oracle") return Method::oracle;
  throw UsageError("unknown method '" + name + "' (expected formula, recursion, or oracle)");
}

// Exhaustive-count value for one index. n = 0 needs no enumeration: the
// trivial group's identity has no facet to fix, so the count is 1.
BigInt oracle_value(SequenceId id, int n, int b_ceiling, int s_ceiling) {
  if (n == 0) return 1;
  switch (id) {
    case SequenceId::ordinary_derangements:
      return count_derangements_oracle(n, s_ceiling);
    case SequenceId::even_derangements:
      return count_even_odd_oracle(n, s_ceiling).first;
    case SequenceId::odd_derangements:
      return count_even_odd_oracle(n, s_ceiling).second;
    case SequenceId::facet_derangements:
      return count_facet_derangements_oracle(n, b_ceiling);
    case SequenceId::direct_facet_derangements:
      return count_facet_derangements_by_orientation_oracle(n, b_ceiling).first;
    case SequenceId::indirect_facet_derangements:
      return count_facet_derangements_by_orientation_oracle(n, b_ceiling).second;
    case SequenceId::vertex_fixing:
      return count_vertex_fixing_oracle(n, b_ceiling);
  }
  throw std::logic_error("unknown sequence id");
}

ordered_json table_to_json(const SequenceTable& table) {
  ordered_json j;
  j["id"] = to_string(table.id);
  j["start"] = table.start;
  j["method"] = to_string(table.method);
  ordered_json values = ordered_json::array();
  for (const BigInt& v : table.values) values.push_back(v.str());
  j["values"] = std::move(values);
  return j;
}

struct SeqOptions {
  std::string id;
  std::string range;
  std::string method = "formula";
  std::string format = "plain";
};

int cmd_seq(const SeqOptions& opt, int b_ceiling, int s_ceiling, std::ostream& out) {
  const SequenceId id = parse_sequence_id(opt.id);
  const auto [from, to] = parse_range(opt.range);
  const Method method = parse_method(opt.method);
  const Format format = parse_format(opt.format, /*allow_bfile=*/true);
  if (from < sequence_min_index(id))
    throw UsageError(std::string(to_string(id)) + " is defined from n = " +
                     std::to_string(sequence_min_index(id)) + ", got " + std::to_string(from));

  SequenceTable table;
  table.id = id;
  table.start = from;
  table.method = method;
  for (int n = from; n <= to; ++n)
    table.values.push_back(method == Method::oracle
                               ? oracle_value(id, n, b_ceiling, s_ceiling)
                               : sequence_value(id, n, method));

  switch (format) {
    case Format::plain: {
      for (size_t i = 0; i < table.values.size(); ++i) {
        if (i > 0) out << ' ';
        out << table.values[i].str();
      }
      out << '\n';
      break;
    }
    case Format::json:
      out << table_to_json(table).dump() << '\n';
      break;
    case Format::bfile:
      out << render_bfile(table);
      break;
  }
  return kExitOk;
}

// One census row: element count and how many of them are facet derangements.
struct ClassCount {
  int count = 0;
  int derangements = 0;
};

void render_census_plain(const std::string& solid, int elements,
                         const std::vector<std::pair<std::string, ClassCount>>& rows,
                         const std::vector<std::pair<std::string, int>>& subtypes,
                         int total, int direct, int indirect, std::ostream& out) {
  out << solid << " isometries: " << elements << '\n';
  for (const auto& [name, counts] : rows) {
    out << name << ": " << counts.count << " (facet derangements: " << counts.derangements
        << ")\n";
    if (name == "rotary_reflection")
      for (const auto& [subtype, count] : subtypes)
        out << "  " << subtype << ": " << count << '\n';
  }
  out << "facet derangements: " << total << " (direct: " << direct
      << ", indirect: " << indirect << ")\n";
}

ordered_json census_to_json(const std::string& solid, int elements,
                            const std::vector<std::pair<std::string, ClassCount>>& rows,
                            const std::vector<std::pair<std::string, int>>& subtypes,
                            int total, int direct, int indirect) {
  ordered_json j;
  j["solid"] = solid;
  j["elements"] = elements;
  ordered_json classes = ordered_json::array();
  for (const auto& [name, counts] : rows) {
    ordered_json row;
    row["class"] = name;
    row["count"] = counts.count;
    row["facet_derangements"] = counts.derangements;
    if (name == "rotary_reflection" && !subtypes.empty()) {
      ordered_json sub;
      for (const auto& [subtype, count] : subtypes) sub[subtype] = count;
      row["subtypes"] = std::move(sub);
    }
    classes.push_back(std::move(row));
  }
  j["classes"] = std::move(classes);
  j["facet_derangements"] =
      ordered_json{{"total", total}, {"direct", direct}, {"indirect", indirect}};
  return j;
}

int cmd_census(const std::string& solid, const std::string& format_name, std::ostream& out) {
  const Format format = parse_format(format_name, /*allow_bfile=*/false);

  std::vector<std::pair<std::string, ClassCount>> rows;
  std::vector<std::pair<std::string, int>> subtypes;
  int elements = 0, total = 0, direct = 0, indirect = 0;

  if (solid == "cube") {
    const CubeCensus census = cube_census();
    std::map<Class3D, ClassCount> by_class;
    std::map<RotarySubtype, int> by_subtype;
    for (const auto& [key, count] : census) {
      const auto& [cls, is_derangement] = key;
      elements += count;
      by_class[cls.cls].count += count;
      if (cls.subtype) by_subtype[*cls.subtype] += count;
      if (!is_derangement) continue;
      by_class[cls.cls].derangements += count;
      total += count;
      // In dimension 3 the class determines the orientation.
      if (cls.cls == Class3D::rotation || cls.cls == Class3D::identity)
        direct += count;
      else
        indirect += count;
    }
    for (Class3D cls : {Class3D::identity, Class3D::rotation, Class3D::reflection,
                        Class3D::rotary_reflection})
      rows.emplace_back(to_string(cls), by_class[cls]);
    for (RotarySubtype sub : {RotarySubtype::central_inversion, RotarySubtype::reducible,
                              RotarySubtype::irreducible})
      subtypes.emplace_back(to_string(sub), by_subtype[sub]);
  } else if (solid == "tetrahedron") {
    std::map<TetraClass, ClassCount> by_class;
    SymmetricGroupEnumeration(4).for_each([&](const PlainPermutation& p) {
      ClassCount& row = by_class[classify_tetrahedron(p)];
      ++row.count;
      if (is_derangement(p)) ++row.derangements;
    });
    const TetraCensus census = tetra_census();
    elements = 24;
    total = census.derangements;
    direct = census.direct_derangements;
    indirect = census.indirect_derangements;
    for (TetraClass cls : {TetraClass::identity, TetraClass::vertex_rotation,
                           TetraClass::edge_rotation, TetraClass::reflection,
                           TetraClass::rotary_reflection})
      rows.emplace_back(to_string(cls), by_class[cls]);
  } else if (solid == "square") {
    ClassCount identity_row, rotation_row, reflection_row;
    GroupEnumeration(2).for_each([&](const SignedPermutation& a) {
      ++elements;
      const bool deranged = is_facet_derangement(a);
      ClassCount* row = nullptr;
      if (a == SignedPermutation::identity(2))
        row = &identity_row;
      else if (orientation(a) == Orientation::direct)
        row = &rotation_row;
      else
        row = &reflection_row;
      ++row->count;
      if (!deranged) return;
      ++row->derangements;
      ++total;
      if (orientation(a) == Orientation::direct)
        ++direct;
      else
        ++indirect;
    });
    rows.emplace_back("identity", identity_row);
    rows.emplace_back("rotation", rotation_row);
    rows.emplace_back("reflection", reflection_row);
  } else {
    throw UsageError("unknown solid '" + solid + "' (expected cube, tetrahedron, or square)");
  }

  if (format == Format::plain)
    render_census_plain(solid, elements, rows, subtypes, total, direct, indirect, out);
  else
    out << census_to_json(solid, elements, rows, subtypes, total, direct, indirect).dump()
        << '\n';
  return kExitOk;
}

struct VerifyCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

void check_equal_all(std::vector<VerifyCheck>& checks, const std::string& name,
                     const std::vector<std::pair<std::string, BigInt>>& routes) {
  bool ok = true;
  std::string detail;
  for (size_t i = 0; i < routes.size(); ++i) {
    if (i > 0) {
      detail += ", ";
      if (routes[i].second != routes[0].second) ok = false;
    }
    detail += routes[i].first + " " + routes[i].second.str();
  }
  checks.push_back({name, ok, detail});
}

struct VerifyOptions {
  int max_n = 6;
  std::vector<std::string> bfile_checks;
  std::string format = "plain";
};

int cmd_verify(const VerifyOptions& opt, int b_ceiling, int s_ceiling, std::ostream& out) {
  const Format format = parse_format(opt.format, /*allow_bfile=*/false);
  if (opt.max_n < 0) throw UsageError("max_n must be nonnegative");
  if (opt.max_n > b_ceiling || opt.max_n > s_ceiling)
    throw UsageError("max_n " + std::to_string(opt.max_n) +
                     " is above the enumeration ceiling; raise --ceiling/--sn-ceiling");

  std::vector<VerifyCheck> checks;
  for (int n = 0; n <= opt.max_n; ++n) {
    check_equal_all(checks, "d(" + std::to_string(n) + ")",
                    {{"formula", derangements(n)},
                     {"recursion", derangements_recursive(n)},
                     {"oracle", oracle_value(SequenceId::ordinary_derangements, n,
                                             b_ceiling, s_ceiling)}});
    check_equal_all(checks, "dhat(" + std::to_string(n) + ")",
                    {{"inclusion-exclusion", facet_derangements_ie(n)},
                     {"transform", facet_derangements_transform(n)},
                     {"recursion", facet_derangements_recursive(n)},
                     {"oracle", oracle_value(SequenceId::facet_derangements, n,
                                             b_ceiling, s_ceiling)}});
  }

  for (int n = 1; n <= opt.max_n; ++n) {
    {
      const auto [even, odd] = even_odd_derangements(n);
      const auto [even_scan, odd_scan] = count_even_odd_oracle(n, s_ceiling);
      const BigInt gap = (n % 2 == 1) ? BigInt(n - 1) : BigInt(1 - n);
      const bool ok = even == BigInt(even_scan) && odd == BigInt(odd_scan) &&
                      even - odd == gap && even + odd == derangements(n);
      checks.push_back({"e/o(" + std::to_string(n) + ")", ok,
                        "formula (" + even.str() + ", " + odd.str() + "), oracle (" +
                            std::to_string(even_scan) + ", " + std::to_string(odd_scan) +
                            "), e-o " + gap.str() + ", e+o d(" + std::to_string(n) + ")"});
    }
    {
      const auto [fwd, rev] = even_odd_facet_derangements(n);
      const auto scan = count_facet_derangements_by_orientation_oracle(n, b_ceiling);
      const BigInt gap = (n % 2 == 0) ? BigInt(1) : BigInt(-1);
      const bool ok = fwd == BigInt(scan.first) && rev == BigInt(scan.second) &&
                      fwd - rev == gap && fwd + rev == facet_derangements_ie(n);
      checks.push_back({"ehat/ohat(" + std::to_string(n) + ")", ok,
                        "formula (" + fwd.str() + ", " + rev.str() + "), oracle (" +
                            std::to_string(scan.first) + ", " + std::to_string(scan.second) +
                            "), ehat-ohat " + gap.str() + ", ehat+ohat dhat(" +
                            std::to_string(n) + ")"});
    }
    check_equal_all(checks, "vfix(" + std::to_string(n) + ")",
                    {{"formula", vertex_fixing_count(n)},
                     {"oracle", oracle_value(SequenceId::vertex_fixing, n, b_ceiling,
                                             s_ceiling)}});
  }

  for (const std::string& spec : opt.bfile_checks) {
    const size_t eq = spec.find('=');
    if (eq == std::string::npos)
      throw UsageError("--check-bfile expects id=path, got '" + spec + "'");
    const SequenceId id = parse_sequence_id(spec.substr(0, eq));
    const std::string path = spec.substr(eq + 1);
    const std::string name = "bfile " + std::string(to_string(id));
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open '" + path + "'");
    int start = 0;
    std::vector<BigInt> values;
    try {
      std::tie(start, values) = parse_bfile(file);
    } catch (const std::invalid_argument& e) {
      throw UsageError(path + ": " + e.what());
    }
    bool ok = true;
    std::string detail = std::to_string(values.size()) + " values from " + path;
    for (size_t i = 0; i < values.size(); ++i) {
      const int n = start + static_cast<int>(i);
      BigInt computed;
      try {
        computed = sequence_value(id, n, Method::formula);
      } catch (const std::invalid_argument& e) {
        ok = false;
        detail = "index " + std::to_string(n) + ": " + e.what();
        break;
      }
      if (computed != values[i]) {
        ok = false;
        detail = std::string(to_string(id)) + "(" + std::to_string(n) + ") computed " +
                 computed.str() + ", file says " + values[i].str();
        break;
      }
    }
    checks.push_back({name, ok, detail});
  }

  int failed = 0;
  for (const VerifyCheck& check : checks)
    if (!check.ok) ++failed;

  if (format == Format::plain) {
    for (const VerifyCheck& check : checks)
      out << (check.ok ? "ok   " : "FAIL ") << check.name << ": " << check.detail << '\n';
    out << "verify: " << checks.size() << " checks, " << (checks.size() - failed)
        << " passed, " << failed << " failed (max_n " << opt.max_n << ")\n";
  } else {
    ordered_json j;
    j["max_n"] = opt.max_n;
    ordered_json rows = ordered_json::array();
    for (const VerifyCheck& check : checks)
      rows.push_back(ordered_json{{"name", check.name}, {"ok", check.ok},
                                  {"detail", check.detail}});
    j["checks"] = std::move(rows);
    j["passed"] = checks.size() - failed;
    j["failed"] = failed;
    out << j.dump() << '\n';
  }
  return failed == 0 ? kExitOk : kExitMismatch;
}

int cmd_bijection(const std::string& window_text, const std::string& format_name,
                  std::ostream& out) {
  const Format format = parse_format(format_name, /*allow_bfile=*/false);
  const SignedPermutation input = parse_window(window_text);
  const SignedPermutation partner = parity_bijection(input);
  const bool involution = parity_bijection(partner) == input;

  if (format == Format::plain) {
    out << "input:   " << format_window(input) << " (" << to_string(orientation(input))
        << ")\n";
    out << "partner: " << format_window(partner) << " (" << to_string(orientation(partner))
        << ")\n";
    out << "involution: " << (involution ? "ok" : "FAILED") << '\n';
  } else {
    ordered_json j;
    j["input"] = ordered_json{{"window", format_window(input)},
                              {"classification", to_json(classify(input))}};
    j["partner"] = ordered_json{{"window", format_window(partner)},
                                {"classification", to_json(classify(partner))}};
    j["involution"] = involution;
    out << j.dump() << '\n';
  }
  return involution ? kExitOk : kExitMismatch;
}

struct ConvergenceOptions {
  std::string id;
  int max_n = 7;
  int precision = 6;
  std::string format = "plain";
};

int cmd_convergence(const ConvergenceOptions& opt, std::ostream& out) {
  const Format format = parse_format(opt.format, /*allow_bfile=*/false);
  const SequenceId id = parse_sequence_id(opt.id);
  if (id != SequenceId::ordinary_derangements && id != SequenceId::facet_derangements)
    throw UsageError("convergence is defined for d and dhat only");
  if (opt.max_n < 0) throw UsageError("max_n must be nonnegative");
  if (opt.precision < 1 || opt.precision > 75)
    throw UsageError("precision must be between 1 and 75");

  const BigRat limit = limit_constant(id);
  const bool ordinary = id == SequenceId::ordinary_derangements;
  const std::string ratio_label = ordinary ? "d(n)/n!" : "dhat(n)/(2^n n!)";

  if (format == Format::plain) {
    out << "sequence " << to_string(id) << ": ratio " << ratio_label << ", limit "
        << format_decimal(limit, opt.precision) << '\n';
    for (int n = 0; n <= opt.max_n; ++n) {
      const BigRat ratio = limit_ratio(n, id);
      out << "n=" << n << " ratio " << format_decimal(ratio, opt.precision) << " error "
          << format_decimal(boost::multiprecision::abs(BigRat(ratio - limit)), opt.precision)
          << '\n';
    }
  } else {
    ordered_json j;
    j["id"] = to_string(id);
    j["ratio"] = ratio_label;
    j["precision"] = opt.precision;
    j["limit"] = format_decimal(limit, opt.precision);
    ordered_json rows = ordered_json::array();
    for (int n = 0; n <= opt.max_n; ++n) {
      const BigRat ratio = limit_ratio(n, id);
      rows.push_back(ordered_json{
          {"n", n},
          {"ratio", format_decimal(ratio, opt.precision)},
          {"error",
           format_decimal(boost::multiprecision::abs(BigRat(ratio - limit)), opt.precision)}});
    }
    j["rows"] = std::move(rows);
    out << j.dump() << '\n';
  }
  return kExitOk;
}

int cmd_enumerate(int n, int ceiling, std::ostream& out) {
  GroupEnumeration group(n, ceiling);
  group.for_each([&](const SignedPermutation& a) { out << format_window(a) << '\n'; });
  return kExitOk;
}

}  // namespace

std::string render_bfile(const SequenceTable& table) {
  std::string out;
  for (size_t i = 0; i < table.values.size(); ++i) {
    out += std::to_string(table.start + static_cast<int>(i));
    out += ' ';
    out += table.values[i].str();
    out += '\n';
  }
  return out;
}

std::pair<int, std::vector<BigInt>> parse_bfile(std::istream& in) {
  std::string line;
  std::optional<int> start;
  long long expected = 0;
  std::vector<BigInt> values;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto fail = [&](const std::string& what) {
      throw std::invalid_argument("b-file line " + std::to_string(lineno) + ": " + what);
    };
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;  // blank
    if (line[first] == '#') continue;          // comment
    std::istringstream fields(line);
    long long index = 0;
    std::string value_text, extra;
    if (!(fields >> index >> value_text)) fail("expected 'n value'");
    if (fields >> extra) fail("trailing data '" + extra + "'");
    size_t digit_start = value_text[0] == '-' ? 1 : 0;
    if (digit_start == value_text.size()) fail("malformed value '" + value_text + "'");
    for (size_t i = digit_start; i < value_text.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(value_text[i])))
        fail("malformed value '" + value_text + "'");
    if (!start) {
      if (index < -1000000 || index > 1000000) fail("index out of range");
      start = static_cast<int>(index);
      expected = index;
    }
    if (index != expected)
      fail("index " + std::to_string(index) + ", expected " + std::to_string(expected));
    ++expected;
    values.push_back(BigInt(value_text));
  }
  if (!start) throw std::invalid_argument("b-file has no data lines");
  return {*start, std::move(values)};
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"facet derangement counts and isometry classification for the n-cube "
               "and the (n-1)-simplex"};
  app.name("derange");
  app.require_subcommand(1);

  int b_ceiling = kDefaultGroupCeiling;
  int s_ceiling = kDefaultSymmetricCeiling;

  SeqOptions seq_options;
  auto* seq = app.add_subcommand("seq", "print one counting sequence over an index range");
  seq->add_option("id", seq_options.id, "sequence: d, e, o, dhat, ehat, ohat, or vfix")
      ->required();
  seq->add_option("range", seq_options.range, "inclusive index range like 0..7")->required();
  seq->add_option("method,--method", seq_options.method,
                  "formula (default), recursion, or oracle");
  seq->add_option("--format", seq_options.format, "plain (default), json, or bfile");
  seq->add_option("--ceiling", b_ceiling, "cube-group enumeration ceiling (default 9)");
  seq->add_option("--sn-ceiling", s_ceiling, "symmetric-group enumeration ceiling (default 10)");

  std::string census_solid;
  std::string census_format = "plain";
  auto* census = app.add_subcommand("census", "isometry class census of one solid");
  census->add_option("solid", census_solid, "cube, tetrahedron, or square")->required();
  census->add_option("--format", census_format, "plain (default) or json");

  VerifyOptions verify_options;
  auto* verify = app.add_subcommand(
      "verify", "cross-check every formula against its enumeration oracle");
  verify->add_option("max_n", verify_options.max_n, "largest index to check (default 6)");
  verify->add_option("--max-n", verify_options.max_n, "largest index to check (default 6)");
  verify->add_option("--check-bfile", verify_options.bfile_checks,
                     "id=path: compare computed values against an OEIS b-file")
      ->type_size(1);
  verify->add_option("--format", verify_options.format, "plain (default) or json");
  verify->add_option("--ceiling", b_ceiling, "cube-group enumeration ceiling (default 9)");
  verify->add_option("--sn-ceiling", s_ceiling,
                     "symmetric-group enumeration ceiling (default 10)");

  std::string bijection_window;
  std::string bijection_format = "plain";
  auto* bijection = app.add_subcommand(
      "bijection", "orientation-flipping partner of a facet derangement");
  bijection->add_option("window", bijection_window, "window notation, e.g. \"[2,1,-3]\"")
      ->required();
  bijection->add_option("--format", bijection_format, "plain (default) or json");

  ConvergenceOptions convergence_options;
  auto* convergence = app.add_subcommand(
      "convergence", "derangement ratios against their exponential limits");
  convergence->add_option("id", convergence_options.id, "d or dhat")->required();
  convergence->add_option("--max-n", convergence_options.max_n,
                          "largest index to print (default 7)");
  convergence->add_option("--precision", convergence_options.precision,
                          "decimal places, 1 to 75 (default 6)");
  convergence->add_option("--format", convergence_options.format, "plain (default) or json");

  int enumerate_n = 0;
  auto* enumerate = app.add_subcommand(
      "enumerate", "stream the signed permutations of one cube group, one per line");
  enumerate->add_option("n", enumerate_n, "dimension")->required();
  enumerate->add_option("--ceiling", b_ceiling, "cube-group enumeration ceiling (default 9)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (seq->parsed()) return cmd_seq(seq_options, b_ceiling, s_ceiling, out);
    if (census->parsed()) return cmd_census(census_solid, census_format, out);
    if (verify->parsed()) return cmd_verify(verify_options, b_ceiling, s_ceiling, out);
    if (bijection->parsed()) return cmd_bijection(bijection_window, bijection_format, out);
    if (convergence->parsed()) return cmd_convergence(convergence_options, out);
    if (enumerate->parsed()) return cmd_enumerate(enumerate_n, b_ceiling, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no command given\n";
  return kExitUsage;
}

}  // namespace derange::cli
