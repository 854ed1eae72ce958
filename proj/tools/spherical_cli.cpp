// Command-line surface: classification, expansion, poset export, witness
// construction, and the verification harness. All numeric output is exact.
//
// Exit codes: 0 success / verified; 1 a verification found a disagreement;
// 2 usage or precondition error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "spherical/classify.hpp"
#include "spherical/io.hpp"
#include "spherical/key_polynomial.hpp"
#include "spherical/poset.hpp"
#include "spherical/split_schur.hpp"
#include "spherical/verify.hpp"

using namespace spherical;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;

struct BlockArgs {
  std::string I_text;
  std::string D_text;
  bool I_set = false;
  bool D_set = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--I", I_text, "index set I (comma separated, empty for none)");
    cmd->add_option("--D", D_text, "divider set D (comma separated, sentinel n allowed)");
  }

  void finalize(const CLI::App* cmd) {
    I_set = cmd->count("--I") > 0;
    D_set = cmd->count("--D") > 0;
    if (I_set == D_set)
      throw CLI::ValidationError("exactly one of --I / --D must be given");
  }

  BlockStructure blocks(int n) const {
    return I_set ? BlockStructure::from_I(parse_index_set(I_text), n)
                 : BlockStructure::from_D(parse_index_set(D_text), n);
  }
};

/// Optional on-disk memo of key polynomials, keyed by the composition text.
/// Content-addressed and safe to delete at any time.
class KeyCache {
public:
  KeyCache() {
    if (const char* dir = std::getenv("SPHERICAL_CACHE_DIR")) dir_ = dir;
  }

  SparsePoly get(const Composition& alpha, bool use_kohnert) const {
    if (dir_.empty()) return compute(alpha, use_kohnert);
    const std::filesystem::path path =
        std::filesystem::path(dir_) / (format_composition(alpha) + ".json");
    if (std::filesystem::exists(path)) {
      std::ifstream in(path);
      json j;
      in >> j;
      return poly_from_json(j, static_cast<int>(alpha.size()));
    }
    SparsePoly f = compute(alpha, use_kohnert);
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    std::ofstream out(path);
    out << poly_to_json(f) << "\n";
    return f;
  }

private:
  static SparsePoly compute(const Composition& alpha, bool use_kohnert) {
    return use_kohnert ? key_kohnert(alpha) : key_demazure(alpha);
  }

  std::string dir_;
};

DSchurExpansion expand_via_cache(const KeyCache& cache, const Permutation& w,
                                 const std::vector<int>& I, const Composition& lambda,
                                 bool use_kohnert) {
  const BlockStructure bs = BlockStructure::from_I(I, w.n());
  const Permutation u = longest_element(I, w.n()) * w;
  return dschur_expand(cache.get(act(u, lambda), use_kohnert), bs);
}

bool sampled_mult_free(const KeyCache& cache, const Permutation& w, const std::vector<int>& I,
                       int bound) {
  for (const auto& lambda : partitions_bounded(w.n(), bound))
    if (!is_multiplicity_free(expand_via_cache(cache, w, I, lambda, false))) return false;
  return true;
}

int check_I_subset_of_descents(const Permutation& w, const std::vector<int>& I) {
  const auto J = left_descents(w);
  for (int i : I) {
    if (std::find(J.begin(), J.end(), i) == J.end()) {
      std::cerr << "error: I must lie inside the left descent set J(w) = {"
                << format_index_set(J) << "}\n";
      return kExitUsage;
    }
  }
  return kExitOk;
}

int cmd_classify(const std::string& w_text, const BlockArgs& ba, int bound) {
  const Permutation w = parse_permutation(w_text);
  const BlockStructure bs = ba.blocks(w.n());
  const std::vector<int> I = bs.I();
  if (int rc = check_I_subset_of_descents(w, I)) return rc;

  const bool coxeter = is_spherical_coxeter(w, I);
  const auto witness = find_witness(w, I);
  const KeyCache cache;
  const bool mult_free = sampled_mult_free(cache, w, I, bound);

  json out;
  out["w"] = to_string(w);
  out["I"] = format_index_set(I);
  out["D"] = format_blocks(bs);
  out["spherical"] = coxeter;
  out["spherical_by_witness"] = witness.has_value();
  if (witness) {
    out["witness"] = format_word(*witness);
    const int prefix = length(longest_element(I, w.n()));
    out["witness_suffix"] =
        format_word(Word(witness->begin() + prefix, witness->end()));
  } else {
    out["witness"] = nullptr;
    out["witness_suffix"] = nullptr;
  }
  out["mult_free_sample"] = mult_free;
  out["lambda_set_descriptor"] =
      "all partitions with at most " + std::to_string(w.n()) + " parts, each part at most " +
      std::to_string(bound);
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_expand(const std::string& w_text, const std::string& lambda_text, const BlockArgs& ba,
               const std::string& engine, const std::string& coeff_of, bool mult_free_only) {
  const Permutation w = parse_permutation(w_text);
  const Composition lambda = parse_composition(lambda_text);
  if (static_cast<int>(lambda.size()) != w.n() || !is_partition(lambda)) {
    std::cerr << "error: --lambda must be a partition with " << w.n() << " parts\n";
    return kExitUsage;
  }
  if (engine != "demazure" && engine != "kohnert") {
    std::cerr << "error: --engine must be demazure or kohnert\n";
    return kExitUsage;
  }
  const BlockStructure bs = ba.blocks(w.n());
  const std::vector<int> I = bs.I();
  if (int rc = check_I_subset_of_descents(w, I)) return rc;

  const KeyCache cache;
  const DSchurExpansion e = expand_via_cache(cache, w, I, lambda, engine == "kohnert");

  if (!coeff_of.empty()) {
    const SplitPartition gamma = parse_split_partition(coeff_of);
    if (static_cast<int>(gamma.blocks.size()) != bs.block_count()) {
      std::cerr << "error: --coeff-of has " << gamma.blocks.size() << " blocks, expected "
                << bs.block_count() << "\n";
      return kExitUsage;
    }
    for (int t = 1; t <= bs.block_count(); ++t) {
      if (static_cast<int>(gamma.blocks[static_cast<size_t>(t - 1)].size()) != bs.block_size(t)) {
        std::cerr << "error: --coeff-of block " << t << " must have " << bs.block_size(t)
                  << " parts\n";
        return kExitUsage;
      }
    }
    const auto it = e.coeffs.find(gamma);
    const Coeff c = it == e.coeffs.end() ? Coeff(0) : it->second;
    std::cout << c << "\n";
    return kExitOk;
  }
  if (mult_free_only) {
    std::cout << (is_multiplicity_free(e) ? "true" : "false") << "\n";
    return kExitOk;
  }
  json out;
  out["w"] = to_string(w);
  out["lambda"] = format_composition(lambda);
  out["D"] = format_blocks(bs);
  out["mult_free"] = is_multiplicity_free(e);
  out["expansion"] = expansion_to_json(e);
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_poset(const std::string& c_text, const std::string& lambda_text,
              const std::string& gamma_text, const BlockArgs& ba, const std::string& format,
              bool orbit) {
  const SplitPartition gamma = parse_split_partition(gamma_text);
  const Composition gflat = gamma.flatten();
  const int n = static_cast<int>(gflat.size());
  const BlockStructure bs = ba.blocks(n);
  // validate the block shapes against gamma
  SplitPartition::from_composition(gflat, bs);

  std::optional<SphericalPoset> P;
  if (orbit) {
    P = build_orbit_poset(gamma, bs);
  } else {
    const Permutation c = parse_permutation(c_text);
    if (c.n() != n) {
      std::cerr << "error: sizes of --c and --gamma disagree\n";
      return kExitUsage;
    }
    if (!is_standard_coxeter(c)) {
      std::cerr << "error: --c is not a standard Coxeter element\n";
      return kExitUsage;
    }
    const Composition lambda = parse_composition(lambda_text);
    if (static_cast<int>(lambda.size()) != n || !is_partition(lambda)) {
      std::cerr << "error: --lambda must be a partition with " << n << " parts\n";
      return kExitUsage;
    }
    const KeyCache cache;
    const Composition clam = act(c, lambda);
    P = build_support_poset(clam, gamma, bs, cache.get(clam, false));
  }

  if (format == "dot") {
    std::cout << to_dot(*P);
    return kExitOk;
  }
  if (format != "json") {
    std::cerr << "error: --format must be dot or json\n";
    return kExitUsage;
  }
  json out = poset_to_json(*P);
  out["diamond"] = check_diamond(*P);
  const IntervalCheck ic = check_interval(*P);
  json jic;
  jic["ok"] = ic.ok;
  jic["unique_max"] = ic.unique_max;
  if (ic.unique_max) {
    jic["max"] = format_composition(ic.max_node);
    jic["interval_top_word"] = format_word_s(ic.interval_word);
  }
  if (!ic.message.empty()) jic["message"] = ic.message;
  out["interval"] = std::move(jic);
  out["mobius_sum"] = coeff_to_json(mobius_sum(*P));
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_witness(const std::string& w_text, const BlockArgs& ba) {
  const Permutation w = parse_permutation(w_text);
  const BlockStructure bs = ba.blocks(w.n());
  const std::vector<int> I = bs.I();
  if (int rc = check_I_subset_of_descents(w, I)) return rc;
  if (is_spherical_coxeter(w, I)) {
    std::cerr << "error: w is I-spherical; no multiplicity witness exists\n";
    return kExitUsage;
  }
  const auto cw = construct_witness(w, I);
  const KeyCache cache;
  const DSchurExpansion e = expand_via_cache(cache, w, I, cw.lambda, false);
  const auto it = e.coeffs.find(cw.gamma);
  const Coeff coeff = it == e.coeffs.end() ? Coeff(0) : it->second;
  if (coeff < 2) {
    std::cerr << "error: constructed witness failed re-verification\n";
    return kExitDisagreement;
  }
  json out;
  out["w"] = to_string(w);
  out["I"] = format_index_set(I);
  out["case"] = cw.pattern_case;
  out["lambda"] = format_composition(cw.lambda);
  out["gamma"] = format_split_partition(cw.gamma);
  out["coefficient"] = coeff_to_json(coeff);
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(int n, int bound, const std::string& suite, int jobs, bool force, int instances,
               unsigned seed) {
  if (n > 7 && !force) {
    std::cerr << "error: n > 7 is guarded; pass --force to run anyway\n";
    return kExitUsage;
  }
  if (suite != "equivalence" && suite != "maintheorem" && suite != "posets" &&
      suite != "section6" && suite != "all") {
    std::cerr << "error: unknown suite '" << suite << "'\n";
    return kExitUsage;
  }
  VerifyReport total;
  total.n = n;
  total.bound = bound;
  auto merge = [&](const VerifyReport& r) {
    total.cases += r.cases;
    total.elapsed_ms += r.elapsed_ms;
    total.disagreements.insert(total.disagreements.end(), r.disagreements.begin(),
                               r.disagreements.end());
  };
  if (suite == "equivalence" || suite == "all") merge(verify_equivalence(n));
  if (suite == "maintheorem" || suite == "all") merge(verify_main_theorem(n, bound, jobs));
  if (suite == "posets" || suite == "all") merge(verify_posets(instances, seed, n, jobs));
  if (suite == "section6" || suite == "all") merge(verify_section6(instances, seed + 1, n, jobs));
  std::cout << report_to_json(total).dump(2) << "\n";
  return total.disagreements.empty() ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial classification of Levi-spherical Schubert varieties"};
  app.require_subcommand(1);

  std::string w_text, c_text, lambda_text, gamma_text, engine = "demazure", coeff_of;
  std::string format = "json", suite = "all";
  int bound = 3, n = 4, jobs = 1, instances = 200;
  unsigned seed = 12345;
  bool mult_free_only = false, orbit = false, force = false;

  auto* classify = app.add_subcommand("classify", "both sphericality classifiers plus sampling");
  classify->add_option("--w", w_text, "permutation in one-line notation")->required();
  BlockArgs classify_blocks;
  classify_blocks.attach(classify);
  classify->add_option("--bound", bound, "largest lambda part for the sampled verdict");

  auto* expand = app.add_subcommand("expand", "D-Schur expansion of a key polynomial");
  expand->add_option("--w", w_text, "permutation in one-line notation")->required();
  expand->add_option("--lambda", lambda_text, "partition")->required();
  BlockArgs expand_blocks;
  expand_blocks.attach(expand);
  expand->add_option("--engine", engine, "demazure | kohnert");
  expand->add_option("--coeff-of", coeff_of, "print one coefficient, by split partition");
  expand->add_flag("--mult-free", mult_free_only, "print only the multiplicity-freeness verdict");

  auto* poset = app.add_subcommand("poset", "support or orbit poset with structural checks");
  poset->add_option("--c", c_text, "standard Coxeter element, one-line notation");
  poset->add_option("--lambda", lambda_text, "partition");
  poset->add_option("--gamma", gamma_text, "split partition")->required();
  BlockArgs poset_blocks;
  poset_blocks.attach(poset);
  poset->add_option("--format", format, "dot | json");
  poset->add_flag("--orbit", orbit, "full orbit poset instead of the support poset");

  auto* witness = app.add_subcommand("witness", "multiplicity witness for a non-spherical pair");
  witness->add_option("--w", w_text, "permutation in one-line notation")->required();
  BlockArgs witness_blocks;
  witness_blocks.attach(witness);

  auto* verify = app.add_subcommand("verify", "desk-scale verification suites");
  verify->add_option("--n", n, "symmetric group size")->required();
  verify->add_option("--bound", bound, "largest lambda part (maintheorem suite)");
  verify->add_option("--suite", suite, "equivalence | maintheorem | posets | section6 | all");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--instances", instances, "random instances per poset suite");
  verify->add_option("--seed", seed, "random seed for the poset suites");
  verify->add_flag("--force", force, "allow n > 7");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify->parsed()) {
      classify_blocks.finalize(classify);
      return cmd_classify(w_text, classify_blocks, bound);
    }
    if (expand->parsed()) {
      expand_blocks.finalize(expand);
      return cmd_expand(w_text, lambda_text, expand_blocks, engine, coeff_of, mult_free_only);
    }
    if (poset->parsed()) {
      poset_blocks.finalize(poset);
      return cmd_poset(c_text, lambda_text, gamma_text, poset_blocks, format, orbit);
    }
    if (witness->parsed()) {
      witness_blocks.finalize(witness);
      return cmd_witness(w_text, witness_blocks);
    }
    if (verify->parsed()) return cmd_verify(n, bound, suite, jobs, force, instances, seed);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
