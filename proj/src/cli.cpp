#include "transvect/cli.hpp"

#include "transvect/characters.hpp"
#include "transvect/covariants.hpp"
#include "transvect/hypergeometric.hpp"
#include "transvect/lemmas.hpp"
#include "transvect/parallel.hpp"
#include "transvect/ternary.hpp"
#include "transvect/z_series.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace transvect::cli {

using json = nlohmann::ordered_json;

namespace {

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json:
      return "json";
    case OutputFormat::Csv:
      return "csv";
    case OutputFormat::Text:
      return "text";
  }
  return "";
}

Normalization parse_normalization(const std::string& s) {
  if (s == "classical") {
    return Normalization::Classical;
  }
  if (s == "raw") {
    return Normalization::Raw;
  }
  throw std::invalid_argument("normalization must be 'classical' or 'raw'");
}

std::string cell_text(const json& v) {
  if (v.is_string()) {
    return v.get<std::string>();
  }
  if (v.is_null()) {
    return "-";
  }
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    out += c == '"' ? std::string("\"\"") : std::string(1, c);
  }
  return out + "\"";
}

Table make_table_for(const RunConfig& cfg, std::vector<std::string> columns) {
  Table t;
  t.command = cfg.command;
  t.config = cfg.to_json();
  t.columns = std::move(columns);
  return t;
}

} // namespace

json RunConfig::to_json() const {
  json j;
  if (command == "lemma-a") {
    j["e_max"] = e_max;
  } else if (command == "lemma-b") {
    j["r_max"] = r_max;
    j["e_max"] = e_max;
  } else if (command == "z-series") {
    j["r"] = r;
    j["e"] = e;
    j["order"] = order;
  } else if (command == "characters") {
    j["r"] = r;
    j["d"] = d;
  } else if (command == "covariants") {
    j["suite"] = suite;
    j["trials"] = trials;
    j["seed"] = seed;
    if (suite == "octavic") {
      j["normalization"] = normalization;
    }
  }
  j["format"] = format_name(format);
  j["jobs"] = jobs;
  return j;
}

void validate(const RunConfig& cfg) {
  if (cfg.jobs < 1) {
    throw std::invalid_argument("--jobs must be positive");
  }
  if (cfg.e_max < 1) {
    throw std::invalid_argument("--e-max must be at least 1");
  }
  if (cfg.r_max < 2) {
    throw std::invalid_argument("--r-max must be at least 2");
  }
  if (!cfg.unbounded && (cfg.e_max > 8 || cfg.r_max > 4 || cfg.e > 8 || cfg.r > 4)) {
    throw std::invalid_argument("ranges exceed e <= 8, r <= 4; pass --unbounded to lift the bound");
  }
  if (cfg.trials < 0) {
    throw std::invalid_argument("--trials must be nonnegative");
  }
}

Table cmd_lemma_a(const RunConfig& cfg) {
  validate(cfg);
  Table t = make_table_for(cfg, {"e", "p", "n1_direct", "n1_graphs", "n1_dixon", "n1_closed",
                                 "generic_q", "agree"});
  std::vector<std::pair<int, int>> cells;
  for (int e = 1; e <= cfg.e_max; ++e) {
    for (int p = 0; p <= e; ++p) {
      cells.emplace_back(e, p);
    }
  }
  std::vector<LemmaAReport> reps(cells.size());
  parallel_for(cells.size(), cfg.jobs, [&](std::size_t i) {
    reps[i] = lemma_a_report(cells[i].first, cells[i].second);
  });
  t.pass = true;
  for (const auto& r : reps) {
    json row;
    row["e"] = r.e;
    row["p"] = r.p;
    row["n1_direct"] = to_display_string(r.n_direct_special);
    row["n1_graphs"] = to_display_string(r.n_graphs);
    row["n1_dixon"] = to_display_string(r.n_dixon);
    row["n1_closed"] = to_display_string(r.n_closed);
    row["generic_q"] = r.proportionality_ok ? json(*r.proportionality_ok) : json("skipped");
    row["agree"] = r.agree();
    t.pass = t.pass && r.agree();
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table cmd_lemma_b(const RunConfig& cfg) {
  validate(cfg);
  Table t = make_table_for(cfg, {"kind", "r", "e", "p_prime", "p", "n2_direct", "n2_closed", "ok"});
  using Key = std::tuple<int, int, int, int>;
  std::vector<Key> cells;
  for (int r = 2; r <= cfg.r_max; ++r) {
    for (int e = 1; e <= cfg.e_max; ++e) {
      for (int pp = 0; 2 * pp <= (r + 1) * e; ++pp) {
        for (int p = 0; 2 * p <= r * e; ++p) {
          cells.emplace_back(r, e, pp, p);
        }
      }
    }
  }
  std::vector<std::pair<Rational, Rational>> values(cells.size());
  parallel_for(cells.size(), cfg.jobs, [&](std::size_t i) {
    auto [r, e, pp, p] = cells[i];
    values[i] = {lemma_b_direct(r, e, pp, p), n2_closed(r, e, pp, p)};
  });
  std::map<Key, std::size_t> index;
  t.pass = true;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto [r, e, pp, p] = cells[i];
    index[cells[i]] = i;
    bool agree = values[i].first == values[i].second;
    t.pass = t.pass && agree;
    t.rows.push_back(json{{"kind", "cell"},
                          {"r", r},
                          {"e", e},
                          {"p_prime", pp},
                          {"p", p},
                          {"n2_direct", to_display_string(values[i].first)},
                          {"n2_closed", to_display_string(values[i].second)},
                          {"ok", agree}});
  }
  for (int r = 2; r <= cfg.r_max; ++r) {
    for (int e = 1; e <= cfg.e_max; ++e) {
      for (int pp = 0; 2 * pp <= (r + 1) * e; ++pp) {
        int p = existence_choice(r, e, pp);
        const auto& v = values[index.at({r, e, pp, p})];
        bool ok = v.second != 0 && v.first == v.second;
        t.pass = t.pass && ok;
        t.rows.push_back(json{{"kind", "existence"},
                              {"r", r},
                              {"e", e},
                              {"p_prime", pp},
                              {"p", p},
                              {"n2_direct", to_display_string(v.first)},
                              {"n2_closed", to_display_string(v.second)},
                              {"ok", ok}});
      }
    }
  }
  return t;
}

Table cmd_z_series(const RunConfig& cfg) {
  validate(cfg);
  Table t = make_table_for(cfg, {"r", "e", "order", "terms_compared", "series_match",
                                 "links_checked", "links_match"});
  auto rep = z_series_report(cfg.r, cfg.e, cfg.order);
  t.rows.push_back(json{{"r", cfg.r},
                        {"e", cfg.e},
                        {"order", rep.order},
                        {"terms_compared", rep.terms_compared},
                        {"series_match", rep.series_match},
                        {"links_checked", rep.links_checked},
                        {"links_match", rep.links_match}});
  t.pass = rep.pass();
  return t;
}

Table cmd_characters(const RunConfig& cfg) {
  validate(cfg);
  if (cfg.d < 0 || cfg.d % 2 != 0 || cfg.r < 0) {
    throw std::invalid_argument("characters needs r >= 0 and even d >= 0");
  }
  Table t = make_table_for(cfg, {"m", "multiplicity"});
  IrrDecomp ideal = ideal_char(cfg.r, cfg.d);
  for (auto it = ideal.rbegin(); it != ideal.rend(); ++it) {
    t.rows.push_back(json{{"m", it->first}, {"multiplicity", it->second.get_str()}});
  }
  Integer dim_pleth = dimension(decompose(plethysm_weights(cfg.r, cfg.d)));
  Integer dim_ox = dimension(ox_char(cfg.r, cfg.d / 2));
  Integer dim_ideal = dimension(ideal);
  t.summary["decomposition"] = to_string(ideal);
  json irreducibles = json::array();
  for (const auto& [m, mult] : ideal) {
    irreducibles.push_back(json::array({m, mult.get_str()}));
  }
  t.summary["irreducibles"] = irreducibles;
  t.summary["dim_plethysm"] = dim_pleth.get_str();
  t.summary["dim_ox"] = dim_ox.get_str();
  t.summary["dim_ideal"] = dim_ideal.get_str();
  t.pass = dim_pleth == dim_ox + dim_ideal;
  return t;
}

Table cmd_dims(const RunConfig& cfg) {
  validate(cfg);
  Table t = make_table_for(cfg, {"quantity", "dimension"});
  auto rep = ternary_dim_report();
  t.rows.push_back(json{{"quantity", "S_3(S_4) over 3 variables"}, {"dimension", rep.plethysm.get_str()}});
  t.rows.push_back(json{{"quantity", "sum_p S_(12-2p,2p)"}, {"dimension", rep.ox_part.get_str()}});
  t.rows.push_back(json{{"quantity", "S_(9,3)+S_(6)+S_(6,3)+S_(4,2)+S_(0)"}, {"dimension", rep.ideal_part.get_str()}});
  t.pass = rep.pass();
  return t;
}

Table cmd_covariants(const RunConfig& cfg) {
  validate(cfg);
  if (cfg.suite == "octavic") {
    Table t = make_table_for(cfg, {"expression", "specialization", "is_zero", "derived_ratio"});
    auto rep = octavic_suite(cfg.trials, cfg.seed, parse_normalization(cfg.normalization));
    for (const auto& r : rep.rows) {
      t.rows.push_back(json{{"expression", r.expression},
                            {"specialization", r.specialization},
                            {"is_zero", r.is_zero},
                            {"derived_ratio", r.derived_ratio.empty() ? json(nullptr) : json(r.derived_ratio)}});
    }
    t.summary["convention_mismatch"] = rep.convention_mismatch;
    t.summary["display_combo_vanishes"] = rep.display_combo_vanishes;
    std::string orders;
    for (int o : rep.orders) {
      orders += (orders.empty() ? "" : " ") + std::to_string(o);
    }
    t.summary["orders"] = orders;
    t.summary["symbolic_vanish"] = rep.symbolic_vanish;
    t.summary["coincident_vanish"] = rep.coincident_vanish;
    t.summary["random_vanish"] = rep.random_vanish;
    t.summary["generic_nonzero"] = rep.generic_nonzero;
    t.summary["independence"] = rep.independence_ok;
    t.pass = rep.pass();
    return t;
  }
  if (cfg.suite == "ternary") {
    Table t = make_table_for(cfg, {"expression", "specialization", "is_zero"});
    auto rep = ternary_suite(cfg.trials, cfg.seed, cfg.jobs);
    for (const auto& r : rep.rows) {
      t.rows.push_back(json{{"expression", r.expression}, {"specialization", r.specialization}, {"is_zero", r.is_zero}});
    }
    t.summary["random_vanish"] = rep.random_vanish;
    t.summary["symbolic_vanish"] = rep.symbolic_vanish;
    t.summary["generic_nonzero"] = rep.generic_nonzero;
    t.pass = rep.pass();
    return t;
  }
  throw std::invalid_argument("--suite must be 'octavic' or 'ternary'");
}

std::string render(const Table& table, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json: {
      json j;
      j["command"] = table.command;
      j["config"] = table.config;
      j["rows"] = table.rows;
      if (!table.summary.empty()) {
        j["summary"] = table.summary;
      }
      j["pass"] = table.pass;
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv: {
      for (std::size_t i = 0; i < table.columns.size(); ++i) {
        os << (i ? "," : "") << table.columns[i];
      }
      os << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
          os << (i ? "," : "") << csv_escape(cell_text(row.value(table.columns[i], json(nullptr))));
        }
        os << '\n';
      }
      break;
    }
    case OutputFormat::Text: {
      std::vector<std::size_t> width;
      for (const auto& c : table.columns) {
        width.push_back(c.size());
      }
      std::vector<std::vector<std::string>> cells;
      for (const auto& row : table.rows) {
        std::vector<std::string> line;
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
          line.push_back(cell_text(row.value(table.columns[i], json(nullptr))));
          width[i] = std::max(width[i], line.back().size());
        }
        cells.push_back(std::move(line));
      }
      auto emit = [&](const std::vector<std::string>& line) {
        std::string s;
        for (std::size_t i = 0; i < line.size(); ++i) {
          s += line[i];
          if (i + 1 < line.size()) {
            s += std::string(width[i] - line[i].size() + 2, ' ');
          }
        }
        os << s << '\n';
      };
      emit(table.columns);
      for (const auto& line : cells) {
        emit(line);
      }
      for (const auto& [k, v] : table.summary.items()) {
        os << k << ": " << cell_text(v) << '\n';
      }
      os << (table.pass ? "PASS" : "FAIL") << '\n';
      break;
    }
  }
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of transvectant constants, plethysm characters and covariants"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}, {"text", OutputFormat::Text}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--unbounded", cfg.unbounded, "Allow e > 8 or r > 4");
  };

  auto* la = app.add_subcommand("lemma-a", "Four routes to the Lemma A constant for 1 <= e <= e-max");
  la->add_option("--e-max", cfg.e_max, "Largest e")->capture_default_str();
  common(la);

  auto* lb = app.add_subcommand("lemma-b", "Lemma B constants and the existence choice");
  lb->add_option("--r-max", cfg.r_max, "Largest r (>= 2)");
  lb->add_option("--e-max", cfg.e_max, "Largest e");
  common(lb);

  auto* zs = app.add_subcommand("z-series", "Generating function versus its closed form");
  zs->add_option("--r", cfg.r, "r (default 2)");
  zs->add_option("--e", cfg.e, "e")->capture_default_str();
  zs->add_option("--order", cfg.order, "Truncation order in h, u, v, w (at most 6)")->capture_default_str();
  common(zs);

  auto* ch = app.add_subcommand("characters", "Decomposition of the degree-r piece of the ideal");
  ch->add_option("--r", cfg.r, "Degree r")->capture_default_str();
  ch->add_option("--d", cfg.d, "Even form order d")->capture_default_str();
  common(ch);

  auto* dm = app.add_subcommand("dims", "Dimension count for the ternary quartic example");
  common(dm);

  auto* cv = app.add_subcommand("covariants", "Octavic or ternary vanishing suite");
  cv->add_option("--suite", cfg.suite, "octavic or ternary")
      ->check(CLI::IsMember({"octavic", "ternary"}))
      ->capture_default_str();
  cv->add_option("--trials", cfg.trials, "Random specializations")->capture_default_str();
  cv->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  cv->add_option("--normalization", cfg.normalization, "Transvectant normalization (octavic)")
      ->check(CLI::IsMember({"classical", "raw"}))
      ->capture_default_str();
  common(cv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostream& stream = e.get_exit_code() == 0 ? out : err;
    stream << (e.get_exit_code() == 0 ? app.help() : std::string(e.what()) + "\n");
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  Table table;
  try {
    if (la->parsed()) {
      cfg.command = "lemma-a";
      table = cmd_lemma_a(cfg);
    } else if (lb->parsed()) {
      cfg.command = "lemma-b";
      if (lb->count("--e-max") == 0) {
        cfg.e_max = 2;
      }
      table = cmd_lemma_b(cfg);
    } else if (zs->parsed()) {
      cfg.command = "z-series";
      if (zs->count("--r") == 0) {
        cfg.r = 2;
      }
      table = cmd_z_series(cfg);
    } else if (ch->parsed()) {
      cfg.command = "characters";
      table = cmd_characters(cfg);
    } else if (dm->parsed()) {
      cfg.command = "dims";
      table = cmd_dims(cfg);
    } else {
      cfg.command = "covariants";
      table = cmd_covariants(cfg);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << '\n';
    return 1;
  }
  out << render(table, cfg.format);
  if (!table.pass) {
    for (const auto& row : table.rows) {
      for (const char* key : {"agree", "ok"}) {
        if (row.contains(key) && row[key] == false) {
          err << "disagreement: " << row.dump() << '\n';
        }
      }
    }
  }
  return table.pass ? 0 : 1;
}

} // namespace transvect::cli
