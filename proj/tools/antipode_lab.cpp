// antipode_lab: face counts, cover constructions, cover verification and
// exhaustive cover search on the d-cube.
//
// Exit status: 0 on success, 1 on usage errors, 2 when a cover or a
// construction fails its contract.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "antipode/acceptance.hpp"
#include "antipode/antipode.hpp"
#include "antipode/report_json.hpp"

namespace {

using namespace antipode;
using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kContractFailure = 2;

struct Args {
  int d = 3;
  int k = 0;
  int codim = 2;
  int sets = 0;
  int forbid_k = 0;
  int size = 1;
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = acceptance::kDefaultSeed;
  unsigned threads = 1;
  bool forward_check = false;
  std::string format = "text";
  std::string input;
  std::string construction;
  std::optional<int> verify_forbid_k;
};

bool json_out(const Args& a) { return a.format == "json"; }

void print_json(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_count(const Args& a) {
  const auto n = count_faces(a.d, a.k);
  if (json_out(a))
    print_json({{"schema", kSchema}, {"kind", "count"}, {"d", a.d}, {"k", a.k}, {"count", n}});
  else
    std::cout << n << '\n';
  return kOk;
}

int cmd_faces(const Args& a) {
  const auto faces = enumerate_faces(a.d, a.k);
  if (json_out(a)) {
    print_json({{"schema", kSchema}, {"kind", "faces"}, {"d", a.d}, {"k", a.k}, {"faces", faces_to_json(faces)}});
  } else {
    for (const Face& f : faces) std::cout << format_face(f) << '\n';
  }
  return kOk;
}

int cmd_construct(const Args& a) {
  std::optional<ConstructionReport> built;
  bool contract = false;
  if (a.construction == "facet") {
    Cover c = sharp_facet_cover(a.d);
    const auto rep = cover_report(c);
    contract = rep.is_complete;
    for (int k : rep.per_set_self_antipodality) contract = contract && k == a.d - 2;
    built = ConstructionReport{std::move(c), static_cast<std::size_t>(a.d), 0, 0, true};
  } else if (a.construction == "pair-split") {
    Cover c = pair_split_ridge_cover(a.d);
    const auto rep = cover_report(c);
    contract = rep.is_complete && rep.max_self_antipodality <= a.d - 3;
    const std::size_t nonempty = c.nonempty_sets();
    built = ConstructionReport{std::move(c), nonempty, 0, 0, true};
  } else {
    built = asterisk_ridge_cover(a.d);
    const auto rep = cover_report(built->cover);
    contract = rep.is_complete && rep.max_self_antipodality <= a.d - 4;
  }

  if (json_out(a)) {
    auto j = to_json(*built);
    j["construction"] = a.construction;
    j["contract_holds"] = contract;
    print_json(j);
  } else {
    write_cover(std::cout, built->cover);
  }
  if (!contract) std::cerr << "construction '" << a.construction << "' failed its contract at d=" << a.d << '\n';
  return contract ? kOk : kContractFailure;
}

int cmd_verify(const Args& a) {
  std::optional<Cover> cover;
  if (a.input.empty() || a.input == "-") {
    cover = read_cover(std::cin);
  } else {
    std::ifstream in(a.input);
    if (!in) throw CLI::ValidationError("--input", "cannot open '" + a.input + "'");
    cover = read_cover(in);
  }
  const auto rep = cover_report(*cover);
  bool ok = rep.is_complete;
  if (a.verify_forbid_k) ok = ok && rep.max_self_antipodality < *a.verify_forbid_k;

  if (json_out(a)) {
    auto j = to_json(rep);
    if (a.verify_forbid_k) j["forbid_k"] = *a.verify_forbid_k;
    j["ok"] = ok;
    print_json(j);
  } else {
    std::cout << "complete: " << (rep.is_complete ? "yes" : "no") << '\n';
    for (const Face& f : rep.uncovered) std::cout << "uncovered: " << format_face(f) << '\n';
    std::cout << "per-set self-antipodality:";
    for (int k : rep.per_set_self_antipodality) std::cout << ' ' << k;
    std::cout << "\nmax self-antipodality: " << rep.max_self_antipodality << '\n';
    if (rep.expected_k) std::cout << "guaranteed for " << rep.d << "-set covers: " << *rep.expected_k << '\n';
    if (rep.witness) {
      const auto& w = *rep.witness;
      std::cout << "witness: set " << w.set_index + 1 << ' ' << format_face(w.face_a) << " / " << format_face(w.face_b)
                << " contain antipodal " << w.k << "-faces " << format_face(w.sub_a) << " / " << format_face(w.sub_b)
                << '\n';
    }
    std::cout << (ok ? "OK" : "FAIL") << '\n';
  }
  return ok ? kOk : kContractFailure;
}

int report_search(const Args& a, const SearchResult& r) {
  if (json_out(a)) {
    print_json(to_json(r));
  } else {
    std::cout << to_string(r.outcome) << '\n';
    std::cout << "nodes_expanded=" << r.nodes_expanded << " budget=" << r.budget << '\n';
    if (r.witness) write_cover(std::cout, *r.witness);
  }
  if (r.witness) {
    const auto rep = cover_report(*r.witness);
    if (!rep.is_complete || rep.max_self_antipodality >= r.problem.forbid_k) {
      std::cerr << "search witness failed re-verification\n";
      return kContractFailure;
    }
  }
  return kOk;
}

int cmd_search(const Args& a) {
  const SearchProblem p{a.d, a.sets == 0 ? a.d : a.sets, a.codim, a.forbid_k};
  return report_search(a, exists_cover(p, a.budget, SearchOptions{a.threads, a.forward_check}));
}

int cmd_probe_d5(const Args& a) { return report_search(a, probe_d5(a.budget, SearchOptions{a.threads, a.forward_check})); }

int cmd_enumerate(const Args& a) {
  const auto sets = enumerate_antipode_free_sets(a.d, a.codim, a.forbid_k, a.size);
  const bool classify = a.d == 4 && a.codim == 2 && a.size == 6;
  if (json_out(a)) {
    auto arr = ordered_json::array();
    for (const CoverSet& s : sets) {
      ordered_json item = {{"faces", faces_to_json(s.faces())}};
      if (classify) {
        const auto shape = classify_six_ridge_set(s);
        item["shape"] = to_string(shape.kind);
        item["anchor"] = format_face(shape.anchor);
      }
      arr.push_back(item);
    }
    print_json({{"schema", kSchema},
                {"kind", "enumeration"},
                {"d", a.d},
                {"codim", a.codim},
                {"forbid_k", a.forbid_k},
                {"size", a.size},
                {"count", sets.size()},
                {"sets", arr}});
  } else {
    for (const CoverSet& s : sets) {
      std::cout << format_cover_set(s);
      if (classify) {
        const auto shape = classify_six_ridge_set(s);
        std::cout << "  " << to_string(shape.kind) << ' ' << format_face(shape.anchor);
      }
      std::cout << '\n';
    }
    std::cout << "count=" << sets.size() << '\n';
  }
  return kOk;
}

int cmd_selftest(const Args& a) {
  acceptance::Options opts;
  opts.seed = a.seed;
  const auto results = acceptance::run_all(opts);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (json_out(a)) {
    auto arr = ordered_json::array();
    for (const auto& r : results)
      arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"seconds", r.seconds},
                     {"limit_seconds", r.limit_seconds}, {"detail", r.detail}});
    print_json({{"schema", kSchema}, {"kind", "selftest"}, {"passed", all}, {"criteria", arr}});
  } else {
    for (const auto& r : results) std::cout << acceptance::format_line(r) << '\n';
    std::cout << (all ? "ALL PASS" : "FAILURES") << '\n';
  }
  return all ? kOk : kContractFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Antipodal faces and ridge covers of the d-cube"};
  app.require_subcommand(1);
  Args a;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", a.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  };
  const auto add_search_flags = [&](CLI::App* sub) {
    sub->add_option("--budget", a.budget, "Maximum number of search nodes")->capture_default_str();
    sub->add_option("--threads", a.threads, "Worker threads (results do not depend on this)")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    sub->add_flag("--forward-check", a.forward_check, "Also prune faces that no set can accept (changes node counts)");
    add_format(sub);
  };

  auto* count = app.add_subcommand("count", "Number of k-faces of C^d");
  count->add_option("--d", a.d, "Cube dimension")->required();
  count->add_option("--k", a.k, "Face dimension")->required();
  add_format(count);

  auto* faces = app.add_subcommand("faces", "List the k-faces of C^d in canonical order");
  faces->add_option("--d", a.d, "Cube dimension")->required();
  faces->add_option("--k", a.k, "Face dimension")->required();
  add_format(faces);

  auto* construct = app.add_subcommand("construct", "Emit an explicit cover");
  construct->add_option("kind", a.construction, "facet | pair-split | asterisk")
      ->required()
      ->check(CLI::IsMember({"facet", "pair-split", "asterisk"}));
  construct->add_option("--d", a.d, "Cube dimension")->required();
  add_format(construct);

  auto* verify = app.add_subcommand("verify", "Check completeness and self-antipodality of a cover file");
  verify->add_option("--input", a.input, "Cover file, or - for stdin")->capture_default_str();
  verify->add_option("--forbid-k", a.verify_forbid_k, "Fail if some set contains antipodal k-faces");
  add_format(verify);

  auto* search = app.add_subcommand("search", "Exhaustive search for a cover avoiding antipodal k-faces");
  search->add_option("--d", a.d, "Cube dimension")->required();
  search->add_option("--sets", a.sets, "Number of sets (default: d)");
  search->add_option("--codim", a.codim, "Codimension of the covered faces")->capture_default_str();
  search->add_option("--forbid-k", a.forbid_k, "No set may contain antipodal k-faces")->required();
  add_search_flags(search);

  auto* enumerate = app.add_subcommand("enumerate", "All face sets of a given size without antipodal k-faces");
  enumerate->add_option("--d", a.d, "Cube dimension")->required();
  enumerate->add_option("--codim", a.codim, "Codimension of the faces")->capture_default_str();
  enumerate->add_option("--forbid-k", a.forbid_k, "No set may contain antipodal k-faces")->required();
  enumerate->add_option("--size", a.size, "Set size")->required();
  add_format(enumerate);

  auto* probe = app.add_subcommand("probe-d5", "Budgeted search: 5 sets, ridges of C^5, no antipodal 2-faces");
  add_search_flags(probe);

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance checks");
  selftest->add_option("--seed", a.seed, "Seed for randomized checks")->capture_default_str();
  add_format(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*count) return cmd_count(a);
    if (*faces) return cmd_faces(a);
    if (*construct) return cmd_construct(a);
    if (*verify) return cmd_verify(a);
    if (*search) return cmd_search(a);
    if (*enumerate) return cmd_enumerate(a);
    if (*probe) return cmd_probe_d5(a);
    if (*selftest) return cmd_selftest(a);
  } catch (const CoverFormatError& e) {
    std::cerr << "error: malformed cover: " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
