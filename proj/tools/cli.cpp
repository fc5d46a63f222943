#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nikulin/chow.hpp"
#include "nikulin/detvar.hpp"
#include "nikulin/errors.hpp"
#include "nikulin/lattice.hpp"
#include "nikulin/positivity.hpp"
#include "nikulin/serialize.hpp"

namespace nikulin::cli {

namespace {

using serialize::json;
using lattice::DivisorClass;
namespace pos = positivity;

enum class Format { json, tsv };

struct RunConfig {
  long long g_min = 0;
  long long g_max = 0;
  std::optional<std::vector<long long>> m_list;  // empty optional means all m
  pos::SearchBounds bounds;
  Format format = Format::tsv;
  std::string out_path;
};

long long parse_int(std::string_view text, std::string_view what) {
  long long value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::invalid_argument,
                std::string(what) + " must be an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string> split(std::string_view text, std::string_view sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + sep.size();
  }
}

pos::SearchBounds parse_bounds(const std::string& text) {
  const auto parts = split(text, ",");
  if (parts.size() != 2) {
    throw Error(ErrorKind::invalid_bounds, "--bounds expects A,T, got '" + text + "'");
  }
  pos::SearchBounds b{parse_int(parts[0], "a_max"), parse_int(parts[1], "t_max")};
  b.validate();
  return b;
}

void parse_genus_range(const std::string& text, RunConfig& config) {
  const auto parts = split(text, "..");
  if (parts.size() > 2) {
    throw Error(ErrorKind::invalid_argument, "--genus expects G or A..B, got '" + text + "'");
  }
  config.g_min = parse_int(parts.front(), "genus");
  config.g_max = parse_int(parts.back(), "genus");
  if (config.g_min < 2) {
    throw Error(ErrorKind::invalid_genus, "genus must be >= 2, got " + std::to_string(config.g_min));
  }
  if (config.g_max < config.g_min) {
    throw Error(ErrorKind::invalid_argument, "empty genus range '" + text + "'");
  }
}

void parse_m_selection(const std::string& text, RunConfig& config) {
  if (text == "all") {
    config.m_list.reset();
    return;
  }
  std::vector<long long> ms;
  for (const auto& part : split(text, ",")) {
    const long long m = parse_int(part, "m");
    if (m < 0) throw Error(ErrorKind::invalid_argument, "m must be >= 0, got " + part);
    ms.push_back(m);
  }
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  config.m_list = ms;
}

std::string cell(const DivisorClass& d) { return serialize::to_json(d).dump(); }

std::string join(const std::vector<std::string>& xs, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += xs[i];
  }
  return s;
}

void tsv_row(std::ostream& os, const std::vector<std::string>& cells) { os << join(cells, "\t") << '\n'; }

std::string str(long long x) { return std::to_string(x); }

// m = 0 is big and nef; at m = k a failing L_k is described by its linear system.
std::string verdict_label(long long g, long long m) {
  const auto prof = lattice::decompose_profile(g);
  if (m == 0) return "big-and-nef";
  const auto v = pos::very_ample_check(g, m);
  if (v.status == pos::Status::obstructed && m == prof.k) {
    return std::string(pos::to_string(pos::lk_system_analysis(g).kind));
  }
  return std::string(pos::to_string(v.status));
}

std::string class_tuple(const chow::GammaCoefficients& c) {
  std::vector<std::string> xs;
  for (const auto& x : c.gamma) xs.push_back(nikulin::to_string(x));
  xs.push_back(nikulin::to_string(c.hodge));
  return join(xs, ",");
}

void require_twist(long long g, long long m) {
  const auto prof = lattice::decompose_profile(g);
  if (m < 0 || m > prof.k) {
    throw Error(ErrorKind::out_of_range, "twist m must satisfy 0 <= m <= k (g = " + str(g) +
                                             ", k = " + str(prof.k) + ", m = " + str(m) + ")");
  }
}

// Each command renders into a string; the caller decides where it goes.
using Renderer = std::function<std::string(Format)>;

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

std::string cmd_profile(long long g, Format format) {
  const auto prof = lattice::decompose_profile(g);
  std::ostringstream os;
  json rows = json::array();
  if (format == Format::tsv) tsv_row(os, {"g", "k", "p", "m", "g_m", "L_m^2", "verdict"});
  for (long long m = 0; m <= prof.k; ++m) {
    const auto lm = DivisorClass::twisted_polarization(m);
    const long long sq = lattice::self_intersection(lm, g);
    const auto verdict = verdict_label(g, m);
    if (format == Format::tsv) {
      tsv_row(os, {str(g), str(prof.k), str(prof.p), str(m), str(prof.twisted_genus(m)), str(sq),
                   verdict});
    } else {
      rows.push_back({{"m", m}, {"g_m", prof.twisted_genus(m)}, {"L_m_sq", sq}, {"verdict", verdict}});
    }
  }
  if (format == Format::tsv) return os.str();
  return render_json({{"g", g}, {"k", prof.k}, {"p", prof.p}, {"rows", rows}});
}

std::string cmd_gram(long long g, Format format) {
  const auto gram = lattice::gram_matrix(g);
  if (format == Format::json) return render_json({{"g", g}, {"gram", serialize::to_json(gram)}});
  static const std::vector<std::string> names{"L", "e", "R1", "R2", "R3", "R4", "R5", "R6", "R7"};
  std::ostringstream os;
  std::vector<std::string> header{"basis"};
  header.insert(header.end(), names.begin(), names.end());
  tsv_row(os, header);
  for (std::size_t i = 0; i < lattice::kRank; ++i) {
    std::vector<std::string> row{names[i]};
    for (std::size_t j = 0; j < lattice::kRank; ++j) row.push_back(str(gram(i, j)));
    tsv_row(os, row);
  }
  return os.str();
}

std::string cmd_intersect(long long g, const std::string& x, const std::string& y, Format format) {
  const auto d1 = serialize::parse_divisor(x);
  const auto d2 = serialize::parse_divisor(y);
  const long long value = lattice::intersect(d1, d2, g);
  if (format == Format::json) {
    return render_json({{"g", g},
                        {"d1", serialize::to_json(d1)},
                        {"d2", serialize::to_json(d2)},
                        {"intersection", value}});
  }
  std::ostringstream os;
  tsv_row(os, {"g", "d1", "d2", "intersection"});
  tsv_row(os, {str(g), cell(d1), cell(d2), str(value)});
  return os.str();
}

std::string cmd_check_ample(long long g, long long m, Format format) {
  const bool ample = pos::ampleness_analytic_check(g, m);
  const auto quantity = nikulin::to_string(pos::ampleness_quantity(g, m));
  if (format == Format::json) {
    return render_json({{"g", g}, {"m", m}, {"quantity", quantity}, {"ample", ample}});
  }
  std::ostringstream os;
  tsv_row(os, {"g", "m", "quantity", "ample"});
  tsv_row(os, {str(g), str(m), quantity, ample ? "true" : "false"});
  return os.str();
}

std::string cmd_check_very_ample(long long g, long long m, Format format) {
  const auto v = pos::very_ample_check(g, m);
  if (v.status == pos::Status::out_of_range) {
    const auto prof = lattice::decompose_profile(g);
    throw Error(ErrorKind::out_of_range, "very ampleness is decided for 1 <= m <= k only (g = " +
                                             str(g) + ", k = " + str(prof.k) + ", m = " + str(m) +
                                             ")");
  }
  if (format == Format::json) {
    json j = serialize::to_json(v);
    j["g"] = g;
    j["m"] = m;
    return render_json(j);
  }
  std::ostringstream os;
  tsv_row(os, {"g", "m", "status", "witness", "rationale"});
  tsv_row(os, {str(g), str(m), std::string(pos::to_string(v.status)),
               v.witness ? cell(*v.witness) : "none", v.rationale});
  return os.str();
}

json bounds_json(const pos::SearchBounds& b) { return json::array({b.a_max, b.t_max}); }

std::string cmd_search_obstruction(long long g, long long m, const pos::SearchBounds& b, bool all,
                                   Format format) {
  std::vector<DivisorClass> found;
  if (all) {
    found = pos::rational_obstruction_witnesses(g, m, b);
  } else if (auto w = pos::rational_obstruction_search(g, m, b)) {
    found.push_back(*w);
  }
  if (format == Format::json) {
    json j{{"g", g}, {"m", m}, {"bounds", bounds_json(b)}};
    if (all) {
      j["witnesses"] = json::array();
      for (const auto& d : found) j["witnesses"].push_back(serialize::to_json(d));
    } else {
      j["witness"] = found.empty() ? json(nullptr) : serialize::to_json(found.front());
    }
    return render_json(j);
  }
  std::ostringstream os;
  tsv_row(os, {"g", "m", "a_max", "t_max", "witness"});
  if (found.empty()) tsv_row(os, {str(g), str(m), str(b.a_max), str(b.t_max), "none"});
  for (const auto& d : found) tsv_row(os, {str(g), str(m), str(b.a_max), str(b.t_max), cell(d)});
  return os.str();
}

std::string cmd_search_decomposition(long long g, const std::string& target_text,
                                     const pos::SearchBounds& b, Format format) {
  const auto target = serialize::parse_divisor(target_text);
  const auto pairs = pos::movable_decomposition_search(g, target, b);
  if (format == Format::json) {
    json list = json::array();
    for (const auto& [d1, d2] : pairs) {
      list.push_back(json::array({serialize::to_json(d1), serialize::to_json(d2)}));
    }
    return render_json(
        {{"g", g}, {"target", serialize::to_json(target)}, {"bounds", bounds_json(b)}, {"pairs", list}});
  }
  std::ostringstream os;
  tsv_row(os, {"g", "target", "a_max", "t_max", "d1", "d2"});
  if (pairs.empty()) tsv_row(os, {str(g), cell(target), str(b.a_max), str(b.t_max), "none", "none"});
  for (const auto& [d1, d2] : pairs) {
    tsv_row(os, {str(g), cell(target), str(b.a_max), str(b.t_max), cell(d1), cell(d2)});
  }
  return os.str();
}

std::string cmd_search_nl(long long g, long long m, const std::string& condition,
                          const pos::SearchBounds& b, Format format) {
  const auto cond = pos::parse_nl_condition(condition);
  const auto w = pos::noether_lefschetz_condition_search(g, m, cond, b);
  if (format == Format::json) {
    return render_json({{"g", g},
                        {"m", m},
                        {"condition", std::string(pos::to_string(cond))},
                        {"bounds", bounds_json(b)},
                        {"witness", w ? serialize::to_json(*w) : json(nullptr)}});
  }
  std::ostringstream os;
  tsv_row(os, {"g", "m", "condition", "a_max", "t_max", "witness"});
  tsv_row(os, {str(g), str(m), std::string(pos::to_string(cond)), str(b.a_max), str(b.t_max),
               w ? cell(*w) : "none"});
  return os.str();
}

std::string cmd_grr(long long n, long long m, long long g, Format format) {
  const auto c1 = chow::c1_pushforward_bundle(n, m, g);
  const long long rank = chow::bundle_rank(n, m, g);
  if (format == Format::json) {
    return render_json({{"n", n}, {"m", m}, {"g", g}, {"rank", rank}, {"c1", serialize::to_json(c1)}});
  }
  std::ostringstream os;
  tsv_row(os, {"symbol", "coefficient"});
  tsv_row(os, {"rank", str(rank)});
  for (std::size_t i = 0; i < chow::kSymbols; ++i) {
    const auto s = static_cast<chow::Symbol>(i);
    tsv_row(os, {std::string(chow::to_string(s)), nikulin::to_string(c1[s])});
  }
  return os.str();
}

std::string cmd_class(long long g, long long m, Format format) {
  const auto r = chow::divisor_class(g, m);
  if (format == Format::json) return render_json(serialize::to_json(r));
  std::ostringstream os;
  tsv_row(os, {"key", "value"});
  tsv_row(os, {"g", str(r.g)});
  tsv_row(os, {"m", str(r.m)});
  tsv_row(os, {"g_m", str(r.twisted_genus)});
  tsv_row(os, {"A", nikulin::to_string(r.scale)});
  const auto& c = r.normalized;
  for (int i = 0; i < 4; ++i) tsv_row(os, {"gamma_" + str(i), nikulin::to_string(c.gamma[i])});
  tsv_row(os, {"lambda", nikulin::to_string(c.hodge)});
  const auto scaled = r.scaled();
  for (int i = 0; i < 4; ++i) tsv_row(os, {"A*gamma_" + str(i), nikulin::to_string(scaled[i])});
  tsv_row(os, {"A*lambda", nikulin::to_string(scaled[4])});
  for (std::size_t i = 0; i < chow::kSymbols; ++i) {
    const auto s = static_cast<chow::Symbol>(i);
    tsv_row(os, {"kappa_form." + std::string(chow::to_string(s)), nikulin::to_string(r.kappa_form[s])});
  }
  return os.str();
}

std::string cmd_detdeg(long long r, long long e, Format format) {
  const auto a = detvar::det_degree(r, e);
  if (format == Format::json) return render_json({{"r", r}, {"e", e}, {"degree", a.get_str()}});
  return a.get_str() + "\n";
}

std::string cmd_expdim(long long gm, long long k, Format format) {
  const auto dims = detvar::quadric_space_dims(gm);
  const long long codim = detvar::rank_locus_codim(gm, k);
  const long long expected = detvar::expected_rank_ideal_dim(gm, k);
  if (format == Format::json) {
    return render_json({{"g_m", gm},
                        {"k", k},
                        {"sym2_dim", dims.sym2_dim},
                        {"ideal_dim", dims.ideal_dim},
                        {"codim_ideal", dims.codim_ideal},
                        {"rank_locus_codim", codim},
                        {"expected_dim", expected}});
  }
  std::ostringstream os;
  tsv_row(os, {"g_m", "k", "sym2_dim", "ideal_dim", "codim_ideal", "rank_locus_codim", "expected_dim"});
  tsv_row(os, {str(gm), str(k), str(dims.sym2_dim), str(dims.ideal_dim), str(dims.codim_ideal),
               str(codim), str(expected)});
  return os.str();
}

json sweep_record(long long g, long long m, const pos::SearchBounds& b) {
  const auto prof = lattice::decompose_profile(g);
  const auto lm = DivisorClass::twisted_polarization(m);
  json row{{"g", g},
           {"k", prof.k},
           {"p", prof.p},
           {"m", m},
           {"g_m", prof.twisted_genus(m)},
           {"verdict", verdict_label(g, m)},
           {"L_m_sq", lattice::self_intersection(lm, g)}};
  const auto w = pos::rational_obstruction_search(g, m, b);
  row["obstruction"] = w ? serialize::to_json(*w) : json(nullptr);
  row["decompositions"] = pos::movable_decomposition_search(g, lm, b).size();
  if (chow::divisor_class_admissible(g, m)) {
    const auto r = chow::divisor_class(g, m);
    row["A"] = nikulin::to_string(r.scale);
    row["coefficients"] = class_tuple(r.normalized);
  } else {
    row["A"] = nullptr;
    row["coefficients"] = nullptr;
  }
  return row;
}

std::string cmd_sweep(const RunConfig& config) {
  std::vector<json> records;
  for (long long g = config.g_min; g <= config.g_max; ++g) {
    const auto prof = lattice::decompose_profile(g);
    for (long long m = 0; m <= prof.k; ++m) {
      if (config.m_list && !std::binary_search(config.m_list->begin(), config.m_list->end(), m)) {
        continue;
      }
      records.push_back(sweep_record(g, m, config.bounds));
    }
  }
  if (config.format == Format::json) {
    return render_json({{"genus", json::array({config.g_min, config.g_max})},
                        {"bounds", bounds_json(config.bounds)},
                        {"rows", records}});
  }
  std::ostringstream os;
  tsv_row(os, {"g", "k", "p", "m", "g_m", "verdict", "L_m^2", "obstruction", "decompositions", "A",
               "coefficients"});
  auto or_none = [](const json& j) { return j.is_null() ? std::string("none") : j.is_string() ? j.get<std::string>() : j.dump(); };
  for (const auto& r : records) {
    tsv_row(os, {r["g"].dump(), r["k"].dump(), r["p"].dump(), r["m"].dump(), r["g_m"].dump(),
                 r["verdict"].get<std::string>(), r["L_m_sq"].dump(), or_none(r["obstruction"]),
                 r["decompositions"].dump(), or_none(r["A"]), or_none(r["coefficients"])});
  }
  return os.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::io_error, "cannot open '" + out_path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw Error(ErrorKind::io_error, "failed writing '" + out_path + "'");
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_genus:
    case ErrorKind::invalid_class:
    case ErrorKind::invalid_bounds:
    case ErrorKind::invalid_argument: return 2;
    case ErrorKind::out_of_range: return 3;
    case ErrorKind::io_error: return 4;
    default: return 1;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice, positivity and intersection computations for Nikulin surfaces",
               "nikulin"};
  app.require_subcommand(1);

  std::string format_flag, bounds_flag = "2,10", out_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_flag, "Output format")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--bounds", bounds_flag, "Search window a_max,t_max")->capture_default_str();
    sub->add_option("--out", out_path, "Write the result to PATH instead of stdout");
  };
  add_common(&app);

  // Positional arguments are kept as strings so that negative values reach
  // the validation in the library instead of the option parser.
  std::vector<std::string> pos_args;
  Renderer renderer;
  Format default_format = Format::json;
  auto numbers = [&](std::size_t from, std::size_t count) {
    std::vector<long long> xs;
    for (std::size_t i = from; i < from + count; ++i) xs.push_back(parse_int(pos_args.at(i), "argument"));
    return xs;
  };
  auto positional = [&](CLI::App* sub, const std::string& names, std::size_t count) {
    sub->add_option("args", pos_args, names)->expected(static_cast<int>(count))->required();
    add_common(sub);
  };

  auto* profile = app.add_subcommand("profile", "Genus profile (k, p) and the L_m table");
  positional(profile, "g", 1);
  profile->callback([&] {
    renderer = [&](Format f) { return cmd_profile(numbers(0, 1)[0], f); };
  });

  auto* gram = app.add_subcommand("gram", "Gram matrix in the basis (L, e, R1..R7)");
  positional(gram, "g", 1);
  gram->callback([&] { renderer = [&](Format f) { return cmd_gram(numbers(0, 1)[0], f); }; });

  auto* inter = app.add_subcommand("intersect", "Intersection number D1.D2 in genus g");
  positional(inter, "g D1 D2", 3);
  inter->callback([&] {
    renderer = [&](Format f) { return cmd_intersect(numbers(0, 1)[0], pos_args[1], pos_args[2], f); };
  });

  auto* check = app.add_subcommand("check", "Ampleness or very ampleness of L_m");
  check->require_subcommand(1);
  auto* ample = check->add_subcommand("ample", "Analytic ampleness inequality");
  positional(ample, "g m", 2);
  ample->callback([&] {
    renderer = [&](Format f) {
      const auto xs = numbers(0, 2);
      return cmd_check_ample(xs[0], xs[1], f);
    };
  });
  auto* very = check->add_subcommand("very-ample", "Very ampleness verdict");
  positional(very, "g m", 2);
  very->callback([&] {
    renderer = [&](Format f) {
      const auto xs = numbers(0, 2);
      return cmd_check_very_ample(xs[0], xs[1], f);
    };
  });

  auto* search = app.add_subcommand("search", "Bounded lattice searches");
  search->require_subcommand(1);
  bool all_witnesses = false;
  auto* obstruction = search->add_subcommand("obstruction", "Rational-curve obstruction to ampleness");
  positional(obstruction, "g m", 2);
  obstruction->add_flag("--all", all_witnesses, "List every witness in the window");
  obstruction->callback([&] {
    renderer = [&](Format f) {
      const auto xs = numbers(0, 2);
      return cmd_search_obstruction(xs[0], xs[1], parse_bounds(bounds_flag), all_witnesses, f);
    };
  });
  auto* decomposition = search->add_subcommand("decomposition", "Splittings into movable classes");
  positional(decomposition, "g D", 2);
  decomposition->callback([&] {
    renderer = [&](Format f) {
      return cmd_search_decomposition(numbers(0, 1)[0], pos_args[1], parse_bounds(bounds_flag), f);
    };
  });
  auto* nl = search->add_subcommand("nl", "Noether-Lefschetz condition a, b or c");
  positional(nl, "g m condition", 3);
  nl->callback([&] {
    renderer = [&](Format f) {
      const auto xs = numbers(0, 2);
      return cmd_search_nl(xs[0], xs[1], pos_args[2], parse_bounds(bounds_flag), f);
    };
  });

  auto* grr = app.add_subcommand("grr", "c1 of the pushforward of L_m^n");
  positional(grr, "n m g", 3);
  grr->callback([&] {
    renderer = [&](Format f) {
      const auto xs = numbers(0, 3);
      return cmd_grr(xs[0], xs[1], xs[2], f);
    };
  });

  auto* klass = app.add_subcommand("class", "Class of the rank-4 quadric divisor");
  positional(klass, "g m", 2);
  klass->callback([&] {
    renderer = [&](Format f) {
      const auto xs = numbers(0, 2);
      require_twist(xs[0], xs[1]);
      return cmd_class(xs[0], xs[1], f);
    };
  });

  auto* detdeg = app.add_subcommand("detdeg", "Degree of the corank >= r symmetric locus");
  positional(detdeg, "r e", 2);
  detdeg->callback([&] {
    default_format = Format::tsv;
    renderer = [&](Format f) {
      const auto xs = numbers(0, 2);
      return cmd_detdeg(xs[0], xs[1], f);
    };
  });

  auto* expdim = app.add_subcommand("expdim", "Expected dimension of rank <= k quadrics");
  positional(expdim, "g_m k", 2);
  expdim->callback([&] {
    default_format = Format::tsv;
    renderer = [&](Format f) {
      const auto xs = numbers(0, 2);
      return cmd_expdim(xs[0], xs[1], f);
    };
  });

  RunConfig config;
  std::string genus_flag, m_flag = "all";
  auto* sweep = app.add_subcommand("sweep", "Table of verdicts, searches and classes over a genus range");
  add_common(sweep);
  sweep->add_option("--genus", genus_flag, "G or A..B (inclusive)")->required();
  sweep->add_option("--m", m_flag, "all, or a comma-separated list")->capture_default_str();
  sweep->callback([&] {
    default_format = Format::tsv;
    renderer = [&](Format f) {
      parse_genus_range(genus_flag, config);
      parse_m_selection(m_flag, config);
      config.bounds = parse_bounds(bounds_flag);
      config.format = f;
      config.out_path = out_path;
      return cmd_sweep(config);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    Format format = default_format;
    if (!format_flag.empty()) format = format_flag == "json" ? Format::json : Format::tsv;
    emit(renderer(format), out_path, out);
  } catch (const Error& e) {
    err << "nikulin: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "nikulin: internal-inconsistency: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace nikulin::cli
