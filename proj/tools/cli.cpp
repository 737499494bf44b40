#include "acg/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "acg/analysis.hpp"
#include "acg/anticentral.hpp"
#include "acg/chartab.hpp"
#include "acg/config.hpp"
#include "acg/errors.hpp"
#include "acg/gset.hpp"
#include "acg/structure.hpp"

namespace acg::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool starts_with_key(std::string_view line, std::string_view key) {
  return line.size() >= key.size() && line.substr(0, key.size()) == key;
}

}  // namespace

GroupFile parse_group_text(std::string_view text) {
  std::optional<std::string> name;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (starts_with_key(line, "name:")) {
      if (name) throw FormatError("duplicate 'name:' line", line_no);
      if (degree) throw FormatError("'name:' must precede 'degree:'", line_no);
      name = std::string(trim(line.substr(5)));
      if (name->empty()) throw FormatError("empty group name", line_no);
      continue;
    }
    if (starts_with_key(line, "degree:")) {
      if (degree) throw FormatError("duplicate 'degree:' line", line_no);
      if (!name) throw FormatError("expected 'name:' before 'degree:'", line_no);
      auto value = trim(line.substr(7));
      std::size_t n = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
      if (ec != std::errc() || ptr != value.data() + value.size() || n == 0) {
        throw FormatError("degree must be a positive integer", line_no);
      }
      degree = n;
      continue;
    }
    if (!name) throw FormatError("expected 'name:'", line_no);
    if (!degree) throw FormatError("expected 'degree:'", line_no);
    try {
      gens.push_back(parse_permutation(line, *degree));
    } catch (const ParseError& e) {
      throw FormatError(e.what(), line_no);
    } catch (const DegreeMismatch& e) {
      throw FormatError(e.what(), line_no);
    }
  }
  if (!name) throw FormatError("missing 'name:' line", line_no);
  if (!degree) throw FormatError("missing 'degree:' line", line_no);
  return {*name, PermGroup(*degree, std::move(gens))};
}

GroupFile parse_group_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_text(buf.str());
}

std::string serialize_group(const GroupFile& file) {
  std::string out = "name: " + file.name + "\ndegree: " + std::to_string(file.group.degree()) + "\n";
  for (const auto& g : file.group.generators()) out += g.to_string() + "\n";
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"equivalences", "supplements", "carter",     "sylow-hall",
                                              "p-complement", "normal-sylow", "invcls",    "charaz",
                                              "solvability",  "hereditary",   "chartab"};
  return names;
}

std::vector<std::string> parse_suite_selection(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "all") return suite_names();
  std::vector<std::string> picked;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = std::min(text.find(',', pos), text.size());
    std::string id(trim(text.substr(pos, end - pos)));
    pos = end + 1;
    const auto& known = suite_names();
    if (std::find(known.begin(), known.end(), id) == known.end()) {
      throw PreconditionError("unknown suite '" + id + "'");
    }
    if (std::find(picked.begin(), picked.end(), id) == picked.end()) picked.push_back(id);
  }
  // Canonical order keeps reports independent of how the list was typed.
  std::vector<std::string> ordered;
  for (const auto& s : suite_names()) {
    if (std::find(picked.begin(), picked.end(), s) != picked.end()) ordered.push_back(s);
  }
  return ordered;
}

bool is_character_suite(const std::string& suite) { return suite == "chartab"; }

namespace {

std::vector<Permutation> anticentral_representatives(const GroupAnalysis& ga) {
  std::vector<Permutation> reps;
  for (const auto& c : find_anticentral_classes(ga)) reps.push_back(c.representative);
  return reps;
}

std::vector<Permutation> class_representatives(const GroupAnalysis& ga) {
  std::vector<Permutation> reps;
  for (const auto& c : ga.classes()) reps.push_back(c.representative);
  return reps;
}

// Runs `body`, turning a violation or capacity failure into a record so the
// remaining checks of the suite still run.
void guarded(VerificationReport& r, const std::string& id, const std::function<void()>& body) {
  try {
    body();
  } catch (const TheoremViolation& e) {
    r.fail(id, e.claim(), e.witness());
  } catch (const CapacityError& e) {
    r.skip_capacity(id, "computation fits the configured capacity", e.what());
  }
}

// The distinct conjugates of P, as subgroups of G.
std::vector<PermGroup> sylow_conjugates(const GroupAnalysis& ga, const PermGroup& p) {
  ElementSet base = ga.set_of(p);
  std::vector<ElementSet> seen{base};
  for (std::uint32_t g = 0; g < ga.order(); ++g) {
    ElementSet c = ga.conjugate(base, g);
    if (std::find(seen.begin(), seen.end(), c) == seen.end()) seen.push_back(c);
  }
  std::vector<PermGroup> out;
  for (const auto& s : seen) out.push_back(ga.subgroup(s));
  return out;
}

bool is_cyclic(const PermGroup& g) {
  for (const auto& x : g.elements()) {
    if (x.order() == g.order()) return true;
  }
  return false;
}

void suite_equivalences(const GroupAnalysis& ga, const Limits& limits, VerificationReport& r) {
  const bool characters = ga.order() <= limits.character;
  if (characters) r.engine.dixon_prime = ga.character_table().dixon_prime;
  for (const auto& x : class_representatives(ga)) {
    const std::string id = "equiv." + x.to_string();
    guarded(r, id, [&] {
      auto cert = equivalence_report(ga, x, characters);
      std::string detail = cert.cond_i ? "anticentral" : "not anticentral";
      detail += "; |C_G(a)|=" + std::to_string(cert.centralizer_order) +
                " |G:G'|=" + std::to_string(cert.commutator_index);
      if (!characters) detail += "; character condition not evaluated above order " + std::to_string(limits.character);
      r.pass(id, "|C_G(a)| = |G:G'| iff a^G = aG' iff [a,G] = G' iff nonlinear characters vanish at a", detail);
    });
  }
}

void suite_supplements(const GroupAnalysis& ga, VerificationReport& r) {
  const PermGroup& g = ga.group();
  for (const auto& a : anticentral_representatives(ga)) {
    const std::string tag = a.to_string();
    guarded(r, "supplements." + tag, [&] {
      PermGroup d = c_chain(ga, a).limit;
      r.append(supplement_properties(ga, d, a));
      // G' is transitive on G/D because DG' = G.
      CosetAction cosets = coset_action(g, d);
      std::size_t fixed = fixed_point_analysis(cosets.gset, a);
      r.pass("gset.cosets." + tag, "a fixes a unique point when G' is transitive",
             "coset " + std::to_string(fixed) + " of " + std::to_string(cosets.gset.size()));
      for (auto p : prime_divisors(g.order())) {
        auto sylows = sylow_conjugates(ga, sylow_subgroup(g, p));
        std::size_t point = fixed_point_analysis(GSet::conjugation_on_subgroups(g, sylows), a);
        r.pass("gset.sylow" + std::to_string(p) + "." + tag, "a normalizes a unique Sylow p-subgroup",
               "Sylow " + std::to_string(point) + " of " + std::to_string(sylows.size()));
      }
    });
  }
}

void suite_sylow_hall(const GroupAnalysis& ga, VerificationReport& r) {
  const PermGroup& g = ga.group();
  for (const auto& a : anticentral_representatives(ga)) {
    const std::string tag = a.to_string();
    guarded(r, "sylow-hall." + tag, [&] {
      r.append(sylow_normalizer_identity(ga, a));
      PermGroup d = c_chain(ga, a).limit;
      for (auto p : prime_divisors(g.order())) r.append(sylow_meet_supplement(ga, d, a, p));
      if (ga.solvable()) {
        HallSystem hs = hall_system(ga, g, a);
        const std::size_t primes = prime_divisors(g.order()).size();
        r.check("hall.count." + tag, "one a-invariant Hall pi-subgroup for every set of primes pi",
                hs.subgroups.size() == (std::size_t{1} << primes),
                [&] { return std::to_string(hs.subgroups.size()) + " Hall subgroups for " + std::to_string(primes) +
                             " primes"; });
      }
    });
  }
}

void suite_p_complement(const GroupAnalysis& ga, VerificationReport& r) {
  if (!ga.solvable()) return;
  const auto reps = anticentral_representatives(ga);
  if (reps.empty()) return;
  std::vector<PermGroup> normals;
  for (const auto& term : ga.chief().terms) {
    if (term.order() > 1 && ga.set_of(term).is_subset_of(ga.derived_set())) normals.push_back(term);
  }
  for (const auto& a : reps) {
    for (const auto& n : normals) {
      for (auto p : prime_divisors(n.order())) {
        if (!is_cyclic(sylow_subgroup(n, p))) continue;
        guarded(r, "p-complement." + a.to_string(), [&] { r.append(cyclic_sylow_complement_check(ga, a, n, p)); });
      }
    }
  }
}

void suite_normal_sylow(const GroupAnalysis& ga, VerificationReport& r) {
  const PermGroup& g = ga.group();
  for (auto p : prime_divisors(g.order())) {
    if (!is_normal(g, sylow_subgroup(g, p))) continue;
    for (const auto& x : class_representatives(ga)) {
      guarded(r, "normal-sylow." + x.to_string(), [&] { r.append(normal_sylow_criteria(ga, p, x)); });
    }
  }
}

void suite_per_anticentral(const GroupAnalysis& ga, VerificationReport& r, const std::string& suite,
                           const std::function<VerificationReport(const Permutation&)>& op) {
  for (const auto& a : anticentral_representatives(ga)) {
    guarded(r, suite + "." + a.to_string(), [&] { r.append(op(a)); });
  }
}

void suite_charaz(const GroupAnalysis& ga, VerificationReport& r) {
  if (!ga.solvable()) return;
  for (const auto& x : class_representatives(ga)) {
    guarded(r, "charaz." + x.to_string(), [&] { r.append(chief_factor_criterion(ga, x)); });
  }
}

void suite_chartab(const GroupAnalysis& ga, VerificationReport& r) {
  const CharacterTable& t = ga.character_table();
  r.engine.dixon_prime = t.dixon_prime;
  std::uint64_t degree_sum = 0;
  for (auto d : t.degrees) degree_sum += d * d;
  r.check("chartab.degrees", "sum of squared degrees equals |G|", degree_sum == ga.order(),
          [&] { return std::to_string(degree_sum); });
  r.check("chartab.linear", "number of linear characters equals |G:G'|", t.linear_count == ga.abelian_index(),
          [&] { return std::to_string(t.linear_count); });
  for (std::size_t i = 0; i < t.class_count(); ++i) {
    for (std::size_t j = 0; j < t.class_count(); ++j) {
      const auto expected = i == j ? static_cast<std::int64_t>(ga.order() / t.classes[i].size) : 0;
      const auto value = orthogonality_check(t, i, j);
      if (value != expected) {
        r.fail("chartab.orthogonality", "column orthogonality",
               t.classes[i].representative.to_string() + " vs " + t.classes[j].representative.to_string() + ": " +
                   std::to_string(value));
        return;
      }
    }
  }
  r.pass("chartab.orthogonality", "column orthogonality", std::to_string(t.class_count()) + " classes");

  const auto reps = anticentral_representatives(ga);
  if (reps.empty()) return;
  const PermGroup& derived = ga.derived();
  for (std::size_t chi = t.linear_count; chi < t.character_count(); ++chi) {
    Rational norm = restriction_norm(t, ga.group(), derived, chi);
    r.check("chartab.reducible." + std::to_string(chi),
            "with anticentral elements present, every nonlinear character restricts reducibly to G'", norm > 1,
            [&] { return "character " + std::to_string(chi) + " has restriction norm " +
                         std::to_string(norm.numerator()) + "/" + std::to_string(norm.denominator()); });
    for (const auto& a : reps) {
      const std::size_t cls = t.class_of(a);
      r.check("chartab.vanish." + std::to_string(chi) + "." + a.to_string(),
              "nonlinear characters vanish at anticentral elements", is_zero_at(t, chi, cls),
              [&] { return "character " + std::to_string(chi) + " at " + a.to_string(); });
    }
  }
}

void run_suite_on(const std::string& suite, const GroupAnalysis& ga, const Limits& limits, VerificationReport& r) {
  if (suite == "equivalences") return suite_equivalences(ga, limits, r);
  if (suite == "supplements") return suite_supplements(ga, r);
  if (suite == "carter") {
    return suite_per_anticentral(ga, r, suite, [&](const Permutation& a) { return carter_verify(ga, a); });
  }
  if (suite == "sylow-hall") return suite_sylow_hall(ga, r);
  if (suite == "p-complement") return suite_p_complement(ga, r);
  if (suite == "normal-sylow") return suite_normal_sylow(ga, r);
  if (suite == "invcls") {
    return suite_per_anticentral(ga, r, suite,
                                 [&](const Permutation& a) { return invariant_class_bijection(ga, a); });
  }
  if (suite == "charaz") return suite_charaz(ga, r);
  if (suite == "solvability") {
    return guarded(r, suite, [&] {
      r.append(solvability_contrapositive(ga));
      if (ga.solvable() && derived_is_minimal_normal(ga)) {
        r.append(minimal_derived_dichotomy(ga, ga.order() <= limits.character));
      }
    });
  }
  if (suite == "hereditary") {
    return suite_per_anticentral(ga, r, suite, [&](const Permutation& a) { return hereditary_checks(ga, a); });
  }
  if (suite == "chartab") return guarded(r, suite, [&] { suite_chartab(ga, r); });
  throw PreconditionError("unknown suite '" + suite + "'");
}

VerificationReport new_report(const std::string& suite, const std::string& name) {
  VerificationReport r;
  r.group = name;
  r.suite = suite;
  r.engine.enumeration_bound = enumeration_bound();
  return r;
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

VerificationReport timed_suite(const std::string& suite, const std::string& name, const GroupAnalysis& ga,
                               const Limits& limits) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport r = new_report(suite, name);
  guarded(r, suite, [&] { run_suite_on(suite, ga, limits, r); });
  r.elapsed_ms = elapsed_since(start);
  return r;
}

GroupResult run_group(const CorpusEntry& entry, const std::vector<std::string>& suites, const Limits& limits) {
  GroupResult result;
  result.name = entry.name;
  std::vector<std::string> selected;
  try {
    result.order = entry.group.order();
  } catch (const CapacityError&) {
    result.order = 0;
  }
  if (entry.manifest) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport r = new_report("manifest", entry.name);
    try {
      verify_manifest(ZooGroup{entry.group, *entry.manifest});
      r.pass("manifest.expected", "recorded properties of the constructed group hold",
             std::to_string(entry.manifest->expected.size()) + " entries");
    } catch (const InternalError& e) {
      r.fail("manifest.expected", "recorded properties of the constructed group hold", e.what());
    } catch (const CapacityError& e) {
      r.skip_capacity("manifest.expected", "recorded properties of the constructed group hold", e.what());
    }
    r.elapsed_ms = elapsed_since(start);
    result.reports.push_back(std::move(r));
  }
  for (const auto& s : suites) {
    const std::uint64_t limit = is_character_suite(s) ? limits.character : limits.structural;
    if (result.order == 0 || result.order > limit) {
      result.excluded.push_back(s);
    } else {
      selected.push_back(s);
    }
  }
  if (selected.empty()) return result;
  std::optional<GroupAnalysis> ga;
  try {
    ga.emplace(entry.group);
  } catch (const CapacityError& e) {
    for (const auto& s : selected) {
      VerificationReport r = new_report(s, entry.name);
      r.skip_capacity(s, "group fits the enumeration bound", e.what());
      result.reports.push_back(std::move(r));
    }
    return result;
  }
  for (const auto& s : selected) result.reports.push_back(timed_suite(s, entry.name, *ga, limits));
  return result;
}

}  // namespace

VerificationReport run_suite(const std::string& suite, const std::string& name, const PermGroup& group,
                             const Limits& limits) {
  const auto& known = suite_names();
  if (std::find(known.begin(), known.end(), suite) == known.end()) {
    throw PreconditionError("unknown suite '" + suite + "'");
  }
  try {
    GroupAnalysis ga(group);
    return timed_suite(suite, name, ga, limits);
  } catch (const CapacityError& e) {
    VerificationReport r = new_report(suite, name);
    r.skip_capacity(suite, "group fits the enumeration bound", e.what());
    return r;
  }
}

std::size_t AggregateReport::count(CheckStatus status) const {
  std::size_t n = 0;
  for (const auto& g : groups) {
    for (const auto& r : g.reports) n += r.count(status);
  }
  return n;
}

int AggregateReport::exit_code() const {
  if (count(CheckStatus::fail) > 0) return exit_violation;
  if (!input_errors.empty()) return exit_input;
  if (count(CheckStatus::skipped_capacity) > 0) return exit_capacity;
  return exit_pass;
}

nlohmann::json to_json(const AggregateReport& report) {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : report.groups) {
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& r : g.reports) reports.push_back(acg::to_json(r));
    groups.push_back({{"name", g.name}, {"order", g.order}, {"excluded", g.excluded}, {"reports", reports}});
  }
  nlohmann::json errors = nlohmann::json::array();
  for (const auto& e : report.input_errors) errors.push_back({{"source", e.source}, {"message", e.message}});
  return {{"schema_version", kSchemaVersion},
          {"suites", report.suites},
          {"limits", {{"structural", report.limits.structural}, {"character", report.limits.character}}},
          {"groups", groups},
          {"input_errors", errors},
          {"summary",
           {{"pass", report.count(CheckStatus::pass)},
            {"fail", report.count(CheckStatus::fail)},
            {"skipped_capacity", report.count(CheckStatus::skipped_capacity)}}},
          {"exit_code", report.exit_code()}};
}

std::vector<CorpusEntry> load_directory(const std::filesystem::path& dir, std::vector<InputError>& errors) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& de : std::filesystem::directory_iterator(dir, ec)) {
    if (de.is_regular_file() && de.path().extension() == ".grp") files.push_back(de.path());
  }
  if (ec) {
    errors.push_back({dir.string(), ec.message()});
    return {};
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) {
    try {
      GroupFile gf = parse_group_file(f);
      CorpusEntry entry{gf.name, gf.group, std::nullopt};
      auto sidecar = f;
      sidecar.replace_extension(".manifest.json");
      if (std::filesystem::exists(sidecar)) {
        std::ifstream in(sidecar);
        nlohmann::json j;
        try {
          in >> j;
        } catch (const nlohmann::json::exception& e) {
          throw FormatError(std::string("manifest: ") + e.what(), 0);
        }
        entry.manifest = manifest_from_json(j, gf.group.degree());
      }
      out.push_back(std::move(entry));
    } catch (const Error& e) {
      errors.push_back({f.string(), e.what()});
    }
  }
  return out;
}

std::vector<CorpusEntry> builtin_entries() {
  std::vector<CorpusEntry> out;
  for (auto& z : builtin_corpus()) out.push_back({z.manifest.name, std::move(z.group), std::move(z.manifest)});
  return out;
}

AggregateReport verify(const std::vector<CorpusEntry>& corpus, const std::vector<std::string>& suites,
                       const Limits& limits, unsigned jobs) {
  AggregateReport agg;
  agg.suites = suites;
  agg.limits = limits;
  agg.groups.resize(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) agg.groups[i] = run_group(corpus[i], suites, limits);
  };
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(corpus.size(), 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::stable_sort(agg.groups.begin(), agg.groups.end(),
                   [](const GroupResult& a, const GroupResult& b) { return a.name < b.name; });
  return agg;
}

namespace {

std::string join_u64(const std::vector<std::uint64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i > 0 ? "," : "") + std::to_string(xs[i]);
  return s;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

void describe_anticentral(const GroupAnalysis& ga, const Permutation& a, std::ostream& out) {
  const PermGroup& g = ga.group();
  out << "  " << a.to_string() << "\n";
  out << "    |C_G(a)| = " << ga.centralizer_order(ga.index(a)) << "\n";
  PermGroup d = c_chain(ga, a).limit;
  auto cls = series_report(d, SeriesKind::lower_central).nilpotency_class;
  out << "    D = C^inf(a): order " << d.order() << ", nilpotency class "
      << (cls ? std::to_string(*cls) : std::string("-")) << "\n";
  if (ga.solvable()) {
    HallSystem hs = hall_system(ga, g, a);
    out << "    Hall system:";
    for (const auto& [primes, h] : hs.subgroups) {
      if (primes.empty() || h.order() == g.order()) continue;
      out << " {" << join_u64(primes) << "}:" << h.order();
    }
    out << "\n";
  }
}

int analyze_command(const std::string& file, const std::optional<std::string>& element, bool emit_chartab,
                    const std::optional<std::string>& out_path, std::ostream& out, std::ostream& err) {
  GroupFile gf;
  std::optional<Permutation> only;
  try {
    gf = parse_group_file(file);
    if (element) only = parse_permutation(*element, gf.group.degree());
  } catch (const Error& e) {
    err << file << ": " << e.what() << "\n";
    return exit_input;
  }
  auto start = std::chrono::steady_clock::now();
  VerificationReport r = new_report("analyze", gf.name);
  try {
    GroupAnalysis ga(gf.group);
    const PermGroup& g = ga.group();
    if (only && !g.contains(*only)) {
      err << "element " << only->to_string() << " is not in " << gf.name << "\n";
      return exit_input;
    }
    out << "group: " << gf.name << "\n";
    out << "degree: " << g.degree() << "\n";
    out << "order: " << g.order() << "\n";
    out << "|G'|: " << ga.derived().order() << "\n";
    out << "|G:G'|: " << ga.abelian_index() << "\n";
    out << "solvable: " << (ga.solvable() ? "true" : "false") << "\n";
    const bool characters = g.order() <= Limits{}.character;
    std::vector<Permutation> reps;
    if (only) {
      if (is_anticentral(g, *only)) reps.push_back(*only);
      out << "element " << only->to_string() << ": " << (reps.empty() ? "not anticentral" : "anticentral")
          << " (|C_G(a)| = " << ga.centralizer_order(ga.index(*only)) << ")\n";
      guarded(r, "analyze.equivalence", [&] {
        equivalence_report(ga, *only, characters);
        r.pass("analyze.equivalence." + only->to_string(), "the anticentrality conditions agree");
      });
    } else {
      for (const auto& c : find_anticentral_classes(ga)) reps.push_back(c.representative);
      if (reps.empty()) {
        out << "anticentral classes: 0\nno anticentral elements\n";
      } else {
        out << "anticentral classes: " << reps.size() << "\n";
      }
      for (const auto& a : reps) {
        guarded(r, "analyze.equivalence." + a.to_string(), [&] {
          equivalence_report(ga, a, characters);
          r.pass("analyze.equivalence." + a.to_string(), "the anticentrality conditions agree");
        });
      }
    }
    for (const auto& a : reps) describe_anticentral(ga, a, out);
    if (emit_chartab) {
      guarded(r, "analyze.chartab", [&] {
        const auto& t = ga.character_table();
        r.engine.dixon_prime = t.dixon_prime;
        out << export_character_table(t);
      });
    }
  } catch (const CapacityError& e) {
    r.skip_capacity("analyze", "group fits the enumeration bound", e.what());
    err << "capacity exceeded: " << e.what() << "\n";
  }
  r.elapsed_ms = elapsed_since(start);
  if (out_path) {
    nlohmann::json j = to_json(r);
    j["schema_version"] = kSchemaVersion;
    write_json(*out_path, j);
  }
  for (const auto& c : r.checks) {
    if (c.status == CheckStatus::fail) err << "violation " << c.id << ": " << c.anchor << "\n  " << *c.witness << "\n";
  }
  if (!r.passed()) return exit_violation;
  if (r.count(CheckStatus::skipped_capacity) > 0) return exit_capacity;
  return exit_pass;
}

int verify_command(const std::optional<std::string>& dir, bool builtin, const std::string& suite_text, unsigned jobs,
                   const std::optional<std::uint64_t>& max_order, const std::optional<std::uint64_t>& max_char_order,
                   const std::optional<std::string>& out_path, std::ostream& out, std::ostream& err) {
  std::vector<std::string> suites;
  try {
    suites = parse_suite_selection(suite_text);
  } catch (const PreconditionError& e) {
    err << e.what() << "\n";
    return exit_input;
  }
  if (!dir && !builtin) {
    err << "verify: give a corpus directory and/or --builtin\n";
    return exit_input;
  }
  Limits limits;
  if (max_order) limits.structural = *max_order;
  if (max_char_order) limits.character = *max_char_order;
  std::vector<InputError> errors;
  std::vector<CorpusEntry> corpus;
  if (dir) corpus = load_directory(*dir, errors);
  if (builtin) {
    auto b = builtin_entries();
    corpus.insert(corpus.end(), b.begin(), b.end());
  }
  AggregateReport agg = verify(corpus, suites, limits, jobs);
  agg.input_errors = errors;
  for (const auto& e : errors) err << "skipped " << e.source << ": " << e.message << "\n";
  for (const auto& g : agg.groups) {
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto& r : g.reports) {
      pass += r.count(CheckStatus::pass);
      fail += r.count(CheckStatus::fail);
      skip += r.count(CheckStatus::skipped_capacity);
      for (const auto& c : r.checks) {
        if (c.status == CheckStatus::fail) {
          err << "violation " << g.name << " " << r.suite << " " << c.id << ": " << c.anchor << "\n  witness: "
              << *c.witness << "\n";
        }
      }
    }
    out << g.name << " (order " << g.order << "): " << pass << " pass, " << fail << " fail, " << skip
        << " skipped";
    if (!g.excluded.empty()) out << ", " << g.excluded.size() << " suites above order limit";
    out << "\n";
  }
  out << "total: " << agg.count(CheckStatus::pass) << " pass, " << agg.count(CheckStatus::fail) << " fail, "
      << agg.count(CheckStatus::skipped_capacity) << " skipped-capacity\n";
  if (out_path) write_json(*out_path, to_json(agg));
  return agg.exit_code();
}

int construct_command(const std::string& family, const ConstructParams& params, const std::string& path,
                      std::ostream& out, std::ostream& err) {
  ZooGroup z;
  try {
    z = construct(family, params);
  } catch (const Error& e) {
    err << "construct: " << e.what() << "\n"
        << "families: abelian --factors, dihedral|quaternion|semidihedral --order, extraspecial --p --order "
           "[--exponent], unitriangular --n --q, sl23 --kind D8|Q8, fpf --factors, classical --kind "
           "symmetric|alternating --n | frobenius --p --d | wreath_pp --p | psl27\n";
    return exit_input;
  }
  std::ofstream file(path);
  if (!file) {
    err << "cannot write " << path << "\n";
    return exit_input;
  }
  file << serialize_group({z.manifest.name, z.group});
  std::filesystem::path sidecar(path);
  sidecar.replace_extension(".manifest.json");
  write_json(sidecar.string(), manifest_to_json(z.manifest));
  out << "wrote " << path << " and " << sidecar.string() << "\n";
  out << z.manifest.name << ": degree " << z.group.degree() << ", order " << z.group.order() << "\n";
  if (z.manifest.designated) out << "designated a = " << z.manifest.designated->to_string() << "\n";
  for (const auto& [k, v] : z.manifest.expected) out << "expects " << k << " = " << v << "\n";
  return exit_pass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Anticentral element toolkit for finite permutation groups", "acg"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Analyze one group file");
  std::string analyze_file;
  std::optional<std::string> element, analyze_out;
  bool emit_chartab = false;
  analyze->add_option("file", analyze_file, "Group file")->required();
  analyze->add_option("--element", element, "Restrict to one element, in cycle notation");
  analyze->add_flag("--emit-chartab", emit_chartab, "Append the character table");
  analyze->add_option("--out", analyze_out, "Write the JSON report here");

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites over a corpus");
  std::optional<std::string> dir, verify_out;
  bool builtin = false;
  std::string suite_text = "all";
  unsigned jobs = 1;
  std::optional<std::uint64_t> max_order, max_char_order;
  verify_cmd->add_option("dir", dir, "Directory of .grp files");
  verify_cmd->add_flag("--builtin", builtin, "Include the built-in corpus");
  verify_cmd->add_option("--suite", suite_text, "Comma separated suites, or all");
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-order", max_order, "Order limit for structural suites (default 2000)");
  verify_cmd->add_option("--max-char-order", max_char_order, "Order limit for character suites (default 300)");
  verify_cmd->add_option("--out", verify_out, "Write the aggregate JSON report here");

  auto* construct_cmd = app.add_subcommand("construct", "Build a group from a family");
  std::string family, construct_out;
  ConstructParams params;
  construct_cmd->add_option("family", family, "Family name")->required();
  construct_cmd->add_option("--n", params.n);
  construct_cmd->add_option("--q", params.q);
  construct_cmd->add_option("--p", params.p);
  construct_cmd->add_option("--order", params.order);
  construct_cmd->add_option("--d", params.d);
  construct_cmd->add_option("--kind", params.kind);
  construct_cmd->add_option("--exponent", params.exponent);
  construct_cmd->add_option("--factors", params.factors)->delimiter(',');
  construct_cmd->add_option("-o,--out", construct_out, "Output group file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_pass : exit_input;
  }
  try {
    if (*analyze) return analyze_command(analyze_file, element, emit_chartab, analyze_out, out, err);
    if (*verify_cmd) {
      return verify_command(dir, builtin, suite_text, jobs, max_order, max_char_order, verify_out, out, err);
    }
    return construct_command(family, params, construct_out, out, err);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_input;
  }
}

}  // namespace acg::cli
