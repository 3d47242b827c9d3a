#include "ramsey/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey/bounds.hpp"
#include "ramsey/chi.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/conjecture.hpp"
#include "ramsey/patterns.hpp"

namespace ramsey::cli {

namespace {

using nlohmann::json;

SeedTable load_seeds(const std::string& flag_path) {
  if (!flag_path.empty()) return SeedTable::load_file(flag_path);
  if (const char* env = std::getenv("RAMSEY_SEED_FILE"); env && *env)
    return SeedTable::load_file(env);
  return SeedTable::table1();
}

json read_json_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    json j;
    in >> j;
    return j;
  }
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  json j;
  f >> j;
  return j;
}

void write_output(const std::string& path, std::ostream& fallback, const std::string& text) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

struct BoundArgs {
  std::string patterns;
  std::string seeds;
  std::string method = "auto";
  std::string format = "json";
};

int run_bound(const BoundArgs& a, std::ostream& out) {
  PatternList pats = PatternList::parse(a.patterns);
  SeedTable seeds = load_seeds(a.seeds);
  BoundResult result;
  if (a.method == "auto") {
    result = best_bound(pats, seeds);
  } else if (a.method == "explicit") {
    result = explicit_bound(pats);
  } else if (a.method == "recursive") {
    result = recursive_bound(pats, seeds);
  } else if (a.method == "chi") {
    result = chi_based_bound(pats);
  } else if (a.method == "poly") {
    if (pats.r() != 2) throw std::invalid_argument("poly method needs exactly two patterns");
    PatternList c = pats.canonical();
    std::optional<BoundResult> r;
    auto try_family = [&](const Pattern& first, const Pattern& second) {
      if (r || first.t != 2 || (second.t != 1 && second.t != 2)) return;
      r = polynomial_bound(second.t == 1 ? PolyFamily::kClique : PolyFamily::kDropped, first.k,
                           second.k);
    };
    try_family(c[0], c[1]);
    try_family(c[1], c[0]);
    if (!r) throw std::invalid_argument("no polynomial family covers " + pats.key());
    result = *r;
  } else {
    throw std::invalid_argument("unknown method " + a.method);
  }

  std::string method = "?";
  if (!result.trace.empty()) {
    const TraceStep& head = result.trace.back();
    method = head.method;
    if (head.method == "best" && head.params.rfind("winner=", 0) == 0)
      method = head.params.substr(7);
  }
  if (a.format == "json") {
    json j = result.to_json();
    j["patterns"] = pats.to_json();
    j["method"] = method;
    out << j.dump(1) << '\n';
  } else if (a.format == "csv") {
    out << "patterns,value,kind,lower,method\n";
    out << pats.key() << ',' << result.value.get_str() << ',' << to_string(result.kind) << ','
        << (result.lower ? result.lower->get_str() : "") << ',' << method << '\n';
  } else if (a.format == "plain") {
    out << "R(" << pats.key() << ")";
    if (result.kind == BoundKind::kExact)
      out << " = " << result.value.get_str();
    else if (result.lower)
      out << " in [" << result.lower->get_str() << ", " << result.value.get_str() << "]";
    else
      out << " <= " << result.value.get_str();
    out << "  (" << method << ")\n";
  } else {
    throw std::invalid_argument("unknown format " + a.format);
  }
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramsey bounds and chi-colorings for complete graphs with dropped cliques"};
  app.require_subcommand(1);

  // bound
  auto bound_args = std::make_shared<BoundArgs>();
  CLI::App* bound = app.add_subcommand("bound", "Compute bounds for R([k1,t1],...,[kr,tr])");
  bound->add_option("--patterns", bound_args->patterns, "Targets as \"k1,t1;k2,t2;...\"")->required();
  bound->add_option("--seeds", bound_args->seeds, "Seed table JSON (default: bundled table)");
  bound->add_option("--method", bound_args->method, "auto|explicit|recursive|chi|poly")
      ->check(CLI::IsMember({"auto", "explicit", "recursive", "chi", "poly"}));
  bound->add_option("--format", bound_args->format, "json|csv|plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}));

  // chi recognize / chi search
  CLI::App* chi = app.add_subcommand("chi", "Ordered-coloring recognition and search");
  chi->require_subcommand(1);
  auto chi_file = std::make_shared<std::string>();
  auto chi_format = std::make_shared<std::string>("json");
  CLI::App* chi_rec = chi->add_subcommand("recognize", "Recognize a chi-coloring from JSON");
  chi_rec->add_option("file", *chi_file, "Coloring JSON file (- for stdin)");
  chi_rec->add_option("--format", *chi_format, "json|plain")->check(CLI::IsMember({"json", "plain"}));

  struct ChiSearchArgs {
    int r = 0, k = 0, n_max = 0, workers = 1;
    std::uint64_t budget = 100'000'000;
    bool surjective = false;
    std::string format = "json";
  };
  auto cs = std::make_shared<ChiSearchArgs>();
  CLI::App* chi_search_cmd = chi->add_subcommand("search", "Exhaustive search for chi_r(k)");
  chi_search_cmd->add_option("--r", cs->r, "Number of colors")->required();
  chi_search_cmd->add_option("--k", cs->k, "Clique order")->required();
  chi_search_cmd->add_option("--n-max", cs->n_max, "Largest host size to search")->required();
  chi_search_cmd->add_flag("--surjective", cs->surjective, "Quantify over surjective colorings only");
  chi_search_cmd->add_option("--budget", cs->budget, "Assignment budget (default 1e8)");
  chi_search_cmd->add_option("--workers", cs->workers, "Worker threads");
  chi_search_cmd->add_option("--format", cs->format, "json|plain")->check(CLI::IsMember({"json", "plain"}));

  // witness make / verify
  CLI::App* witness = app.add_subcommand("witness", "Lower-bound witness colorings");
  witness->require_subcommand(1);
  struct MakeArgs {
    int matching = 0;
    std::string out_path;
  };
  auto mk = std::make_shared<MakeArgs>();
  CLI::App* wmake = witness->add_subcommand("make", "Construct a witness coloring");
  wmake->add_option("--matching", mk->matching, "Matching witness for [3,2] vs [k,2]: host K_{2(k-2)}")
      ->required();
  wmake->add_option("--out", mk->out_path, "Output file (default stdout)");

  struct VerifyArgs {
    std::string patterns;
    std::string file;
    std::string format = "json";
  };
  auto vf = std::make_shared<VerifyArgs>();
  CLI::App* wverify = witness->add_subcommand("verify", "Check a coloring avoids every target");
  wverify->add_option("--patterns", vf->patterns, "Targets as \"k1,t1;...\"")->required();
  wverify->add_option("file", vf->file, "Coloring JSON file (- for stdin)");
  wverify->add_option("--format", vf->format, "json|plain")->check(CLI::IsMember({"json", "plain"}));

  // scan conjecture / question
  CLI::App* scan = app.add_subcommand("scan", "Inequality scans");
  scan->require_subcommand(1);
  struct ConjArgs {
    int r_lo = 3, r_hi = 150, workers = 1, sample_permille = 10;
    bool exact_only = false;
    std::string out_path, format = "json";
  };
  auto cj = std::make_shared<ConjArgs>();
  CLI::App* sconj = scan->add_subcommand("conjecture", "g(r(k-2)+2,r) vs (rk-r)!/((k-1)!)^r");
  sconj->add_option("--r-lo", cj->r_lo, "Smallest r (>= 3)");
  sconj->add_option("--r-hi", cj->r_hi, "Largest r");
  sconj->add_flag("--exact-only", cj->exact_only, "Resolve every comparison with big integers");
  sconj->add_option("--workers", cj->workers, "Worker threads");
  sconj->add_option("--sample-permille", cj->sample_permille, "Exact spot-check rate (per mille)");
  sconj->add_option("--out", cj->out_path, "Write JSON report here (default stdout)");
  sconj->add_option("--format", cj->format, "json|plain")->check(CLI::IsMember({"json", "plain"}));

  struct QuestArgs {
    int t = 2, r = 3;
    long long k_cap = 1000;
    bool exact_only = false;
  };
  auto qa = std::make_shared<QuestArgs>();
  CLI::App* squest = scan->add_subcommand("question", "Interval where the chi-based bound wins for R_r([k,t])");
  squest->add_option("--t", qa->t, "Dropped-clique order t")->required();
  squest->add_option("--r", qa->r, "Number of colors")->required();
  squest->add_option("--k-cap", qa->k_cap, "Largest k to test");
  squest->add_flag("--exact-only", qa->exact_only, "Resolve every comparison with big integers");

  // emit f-table
  CLI::App* emit = app.add_subcommand("emit", "Data emission");
  emit->require_subcommand(1);
  struct EmitArgs {
    int r = 4;
    long long k_lo = 3, k_hi = 20;
    std::string out_path;
  };
  auto ea = std::make_shared<EmitArgs>();
  CLI::App* etable = emit->add_subcommand("f-table", "CSV of exact f(k,r) values");
  etable->add_option("--r", ea->r, "Number of colors")->required();
  etable->add_option("--k-lo", ea->k_lo, "First k");
  etable->add_option("--k-hi", ea->k_hi, "Last k");
  etable->add_option("--out", ea->out_path, "Output CSV path (- for stdout)")->required();

  std::vector<const char*> argv;
  argv.push_back("ramsey");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (bound->parsed()) return run_bound(*bound_args, out);

    if (chi_rec->parsed()) {
      CompleteColoring c = CompleteColoring::from_json(read_json_input(*chi_file, in));
      auto cert = recognize_chi(c);
      if (*chi_format == "plain") {
        out << (cert ? "chi" : "not-chi") << '\n';
      } else {
        json j{{"is_chi", cert.has_value()}};
        if (cert) j["certificate"] = {{"ordering", cert->ordering}, {"phi", cert->phi}};
        out << j.dump(1) << '\n';
      }
      return 0;
    }
    if (chi_search_cmd->parsed()) {
      ChiSearchOptions opts;
      opts.surjective_only = cs->surjective;
      opts.budget = cs->budget;
      opts.workers = cs->workers;
      ChiSearchReport rep = chi_search(cs->r, cs->k, cs->n_max, opts);
      if (cs->format == "plain") {
        out << "chi_" << rep.r << "(" << rep.k << ") " << (rep.exact ? "= " : ">= ") << rep.value
            << (rep.budget_exhausted ? "  [budget exhausted]" : "") << '\n';
      } else {
        out << rep.to_json().dump(1) << '\n';
      }
      return 0;
    }

    if (wmake->parsed()) {
      CompleteColoring c = matching_witness(mk->matching);
      write_output(mk->out_path, out, c.to_json().dump(1) + "\n");
      return 0;
    }
    if (wverify->parsed()) {
      PatternList pats = PatternList::parse(vf->patterns);
      CompleteColoring c = CompleteColoring::from_json(read_json_input(vf->file, in));
      bool ok = verify_lower_bound(c, pats);
      if (vf->format == "plain") {
        out << (ok ? "true" : "false") << '\n';
      } else {
        json j{{"valid", ok}, {"n", c.n()}, {"patterns", pats.to_json()}};
        if (ok) j["certifies"] = "R(" + pats.key() + ") > " + std::to_string(c.n());
        out << j.dump(1) << '\n';
      }
      return 0;
    }

    if (sconj->parsed()) {
      ScanOptions opts;
      opts.exact_only = cj->exact_only;
      opts.workers = cj->workers;
      opts.sample_permille = cj->sample_permille;
      ScanResult res = conjecture_scan(cj->r_lo, cj->r_hi, opts);
      if (cj->format == "plain") {
        std::ostringstream text;
        for (const ConjectureReport& rep : res.reports) {
          text << "r=" << rep.r << " k_max=" << rep.k_max << " all_pass="
               << (rep.all_pass ? "true" : "false");
          if (!rep.all_pass) {
            text << " failing_k=";
            bool first = true;
            for (const KVerdict& v : rep.verdicts)
              if (!v.pass) {
                text << (first ? "" : ",") << v.k;
                first = false;
              }
          }
          text << '\n';
        }
        write_output(cj->out_path, out, text.str());
      } else {
        write_output(cj->out_path, out, res.to_json().dump(1) + "\n");
      }
      return 0;
    }
    if (squest->parsed()) {
      IntervalResult res = interval_search(qa->t, qa->r, qa->k_cap, qa->exact_only);
      out << res.to_json().dump(1) << '\n';
      return 0;
    }

    if (etable->parsed()) {
      if (ea->out_path == "-") {
        emit_f_table(ea->r, ea->k_lo, ea->k_hi, out);
      } else {
        emit_f_table_file(ea->r, ea->k_lo, ea->k_hi, ea->out_path);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "usage error: no subcommand handled\n";
  return 2;
}

}  // namespace ramsey::cli
