#include "jetdiff/cli.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <optional>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "jetdiff/morse.hpp"
#include "jetdiff/schur.hpp"
#include "json.hpp"

namespace jetdiff::cli {

namespace {

enum class Format { Text, Json };

struct CliConfig {
  unsigned n = 0;
  unsigned k = 0;
  unsigned m = 0;
  unsigned max_n = 5;
  unsigned max_k = 5;
  std::optional<unsigned> ambient;
  std::string partition;
  Format format = Format::Text;
  unsigned parallel = 1;
  std::size_t max_terms = kDefaultMaxTerms;
};

struct TableCell {
  unsigned n = 0;
  unsigned k = 0;
  std::optional<MorseResult> result;
  std::string error;
};

std::string bound_text(const std::optional<std::uint64_t>& bound) {
  return bound ? std::to_string(*bound) : std::string("-");
}

std::string join_weights(const std::vector<std::int64_t>& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + std::to_string(a[i]);
  return out;
}

int cmd_bound(const CliConfig& cfg, std::ostream& out) {
  MorseOptions opts;
  opts.max_terms = cfg.max_terms;
  const MorseResult r = compute_bound(cfg.n, cfg.k, opts);
  if (cfg.format == Format::Json) {
    out << r.to_json().dump() << '\n';
    return kExitOk;
  }
  out << "order " << r.k << " jets on a " << r.n << "-fold in P^" << r.n + 1 << " (N = " << r.total_dim << ")\n";
  out << "weights: " << join_weights(r.weights.a) << "  twist: " << r.weights.twist << '\n';
  out << "class: " << r.class_in_chern << '\n';
  out << "poly_d: " << r.poly_in_d << '\n';
  if (r.bound)
    out << "bound: d >= " << *r.bound << '\n';
  else
    out << "bound: none\n";
  return kExitOk;
}

int cmd_class(const CliConfig& cfg, std::ostream& out) {
  MorseOptions opts;
  opts.max_terms = cfg.max_terms;
  const Polynomial c = morse_class(cfg.n, cfg.k, opts);
  if (cfg.format == Format::Json)
    out << nlohmann::json{{"n", cfg.n}, {"k", cfg.k}, {"class", c.to_string()}}.dump() << '\n';
  else
    out << c << '\n';
  return kExitOk;
}

std::vector<TableCell> compute_table(const CliConfig& cfg) {
  std::vector<TableCell> cells;
  for (unsigned n = 2; n <= cfg.max_n; ++n)
    for (unsigned k = 1; k <= cfg.max_k; ++k) cells.push_back({n, k, std::nullopt, {}});

  MorseOptions opts;
  opts.max_terms = cfg.max_terms;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        cells[i].result = compute_bound(cells[i].n, cells[i].k, opts);
      } catch (const std::exception& e) {
        cells[i].error = e.what();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.parallel, static_cast<unsigned>(cells.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return cells;
}

int cmd_table(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.max_n < 2) throw DomainError("--max-n must be >= 2");
  if (cfg.max_k < 1) throw DomainError("--max-k must be >= 1");
  const auto cells = compute_table(cfg);
  bool failed = false;
  for (const auto& c : cells)
    if (!c.result) {
      failed = true;
      err << "cell (" << c.n << "," << c.k << ") failed: " << c.error << '\n';
    }

  if (cfg.format == Format::Json) {
    nlohmann::json j;
    j["max_n"] = cfg.max_n;
    j["max_k"] = cfg.max_k;
    j["cells"] = nlohmann::json::array();
    for (const auto& c : cells) {
      if (c.result) {
        j["cells"].push_back(c.result->to_json());
      } else {
        j["cells"].push_back({{"n", c.n}, {"k", c.k}, {"error", c.error}});
      }
    }
    out << j.dump() << '\n';
  } else {
    constexpr int w = 7;
    out << std::left << std::setw(w) << "n\\k" << std::right;
    for (unsigned k = 1; k <= cfg.max_k; ++k) out << std::setw(w) << k;
    out << '\n';
    std::size_t i = 0;
    for (unsigned n = 2; n <= cfg.max_n; ++n) {
      out << std::left << std::setw(w) << n << std::right;
      for (unsigned k = 1; k <= cfg.max_k; ++k, ++i) {
        const auto& c = cells[i];
        out << std::setw(w) << (c.result ? bound_text(c.result->bound) : std::string("!"));
      }
      out << '\n';
    }
  }
  return failed ? kExitComputation : kExitOk;
}

void print_components(std::ostream& out, const char* label, const std::vector<VanishingComponent>& list) {
  for (const auto& v : list)
    out << label << ": (" << v.partition.to_string() << ") x" << v.multiplicity << " from " << v.piece.to_string()
        << ", t = " << v.t << '\n';
}

int cmd_vanishing(const CliConfig& cfg, std::ostream& out) {
  const unsigned big_n = cfg.ambient.value_or(cfg.n + 1);
  const VanishingReport r = verify_theorem1(cfg.n, cfg.k, cfg.m, big_n);
  if (cfg.format == Format::Json) {
    out << r.to_json().dump() << '\n';
    return kExitOk;
  }
  out << "n = " << r.n << ", k = " << r.k << ", m = " << r.m << ", N = " << r.big_n << '\n';
  out << "pieces: " << r.pieces << '\n';
  out << "components: " << r.components << '\n';
  out << "all_vanish: " << (r.all_vanish ? "true" : "false") << '\n';
  print_components(out, "violation", r.violations);
  print_components(out, "not guaranteed", r.not_guaranteed);
  return kExitOk;
}

int cmd_pieri(const CliConfig& cfg, std::ostream& out) {
  const Partition lambda = Partition::parse(cfg.partition);
  const PartitionMultiset result = pieri(lambda, cfg.m, cfg.n);
  if (cfg.format == Format::Json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [mu, mult] : result) j.push_back({{"partition", mu.to_string()}, {"multiplicity", mult}});
    out << j.dump() << '\n';
    return kExitOk;
  }
  for (const auto& [mu, mult] : result) out << mult << " x (" << mu.to_string() << ")\n";
  return kExitOk;
}

int cmd_graded(const CliConfig& cfg, std::ostream& out) {
  const auto pieces = graded_pieces(cfg.k, cfg.m);
  if (cfg.format == Format::Json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : pieces) j.push_back(p.ell);
    out << j.dump() << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) out << (i ? " " : "") << pieces[i].to_string();
  out << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Chern-class intersection numbers on jet towers of projective hypersurfaces"};
  app.name("jetdiff");
  app.require_subcommand(1);
  app.fallthrough();

  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};
  app.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--parallel", cfg.parallel, "Worker threads for table cells")->check(CLI::Range(1u, 1024u));
  app.add_option("--max-terms", cfg.max_terms, "Ceiling on live polynomial terms")
      ->envname(kMaxTermsEnv)
      ->check(CLI::PositiveNumber);

  auto add_nk = [&cfg](CLI::App* sub) {
    sub->add_option("-n,--dim", cfg.n, "Dimension of the hypersurface")->required();
    sub->add_option("-k,--order", cfg.k, "Jet order")->required();
  };

  auto* bound = app.add_subcommand("bound", "Morse polynomial in d and the effective degree bound");
  add_nk(bound);
  auto* cls = app.add_subcommand("class", "Intersection class in c and h");
  add_nk(cls);

  auto* table = app.add_subcommand("table", "Degree bounds for 2 <= n <= max-n, 1 <= k <= max-k");
  table->add_option("--max-n", cfg.max_n, "Largest dimension")->required();
  table->add_option("--max-k", cfg.max_k, "Largest jet order")->capture_default_str();

  auto* vanishing = app.add_subcommand("vanishing", "Check vanishing of every Schur component of E^GG_{k,m}");
  add_nk(vanishing);
  vanishing->add_option("-m,--m", cfg.m, "Weighted degree")->required();
  vanishing->add_option("--ambient", cfg.ambient, "Ambient projective dimension N (default n + 1)");

  auto* pieri_cmd = app.add_subcommand("pieri", "Pieri rule: Gamma^lambda (x) S^m");
  pieri_cmd->add_option("lambda", cfg.partition, "Partition, e.g. 2,1")->required();
  pieri_cmd->add_option("-m,--m", cfg.m, "Symmetric power")->required();
  pieri_cmd->add_option("-n,--dim", cfg.n, "Rank")->required();

  auto* graded = app.add_subcommand("graded", "Graded pieces l with |l|_k = m");
  graded->add_option("-k,--order", cfg.k, "Jet order")->required();
  graded->add_option("-m,--m", cfg.m, "Weighted degree")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bound->parsed()) return cmd_bound(cfg, out);
    if (cls->parsed()) return cmd_class(cfg, out);
    if (table->parsed()) return cmd_table(cfg, out, err);
    if (vanishing->parsed()) return cmd_vanishing(cfg, out);
    if (pieri_cmd->parsed()) return cmd_pieri(cfg, out);
    if (graded->parsed()) return cmd_graded(cfg, out);
  } catch (const ComputationTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace jetdiff::cli
