#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "nsla/nsla.h"

// exit codes: 0 success / all laws hold, 1 validation or conformance failure,
// 2 bad input or parameters
namespace {

struct OutStr {
  char* p = nullptr;
  ~OutStr() { nsla_string_free(p); }
};

struct AlgebraHandle {
  nsla_algebra* a = nullptr;
  ~AlgebraHandle() { nsla_algebra_free(a); }
};

int fail_api(int rc) {
  std::fprintf(stderr, "error: %s (%s)\n", nsla_last_error(), nsla_status_name(rc));
  return 2;
}

int load(const std::string& path, AlgebraHandle& h) {
  if (int rc = nsla_algebra_load(path.c_str(), &h.a)) return fail_api(rc);
  return 0;
}

struct EnumSink {
  std::string dir;
  std::string error;
  uint64_t written = 0;
};

extern "C" void enum_writer(const char* text, uint64_t index, void* user) {
  auto* sink = static_cast<EnumSink*>(user);
  if (!sink->error.empty()) return;
  std::ostringstream name;
  name << "algebra_" << std::setw(8) << std::setfill('0') << index << ".nsla";
  std::filesystem::path p = std::filesystem::path(sink->dir) / name.str();
  std::ofstream f(p);
  f << text;
  if (!f) {
    sink->error = "cannot write " + p.string();
    return;
  }
  ++sink->written;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure-constant calculator for n-Lie superalgebras"};
  app.set_version_flag("--version", nsla_version());
  app.fallthrough();
  app.require_subcommand(1);

  std::string report_mode = "text";
  uint64_t budget_cap = 0, seed = 0;
  bool seed_set = false;
  app.add_option("--report", report_mode, "report style")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  app.add_option("--budget", budget_cap, "cap on enumerated subspaces / tuples / assignments");
  app.add_option("--seed", seed, "seed for sampled scans")->each([&](const std::string&) {
    seed_set = true;
  });

  std::string val_file;
  CLI::App* c_validate = app.add_subcommand("validate", "check the defining identities");
  c_validate->add_option("file", val_file, "algebra file")->required();

  std::string ana_file;
  CLI::App* c_analyze = app.add_subcommand("analyze", "full structural survey");
  c_analyze->add_option("file", ana_file, "algebra file")->required();

  std::string lat_file;
  CLI::App* c_lattice = app.add_subcommand("lattice", "graded subspace lattice with flags");
  c_lattice->add_option("file", lat_file, "algebra file")->required();

  std::string conf_file, corpus_dir;
  CLI::App* c_conf = app.add_subcommand("conformance", "check every structural law");
  c_conf->add_option("file", conf_file, "algebra file");
  c_conf->add_option("--corpus", corpus_dir, "directory of .nsla files");

  std::string cat_name, cat_field = "Q", cat_out;
  std::vector<long long> cat_params;
  CLI::App* c_catalog = app.add_subcommand("catalog", "emit a built-in family member");
  c_catalog->add_option("name", cat_name, "family name (see --list)");
  c_catalog->add_option("params", cat_params, "family parameters");
  c_catalog->add_option("--field", cat_field, "Q or F<p>")->capture_default_str();
  c_catalog->add_option("--out", cat_out, "output file (stdout when absent)");
  bool cat_list = false;
  c_catalog->add_flag("--list", cat_list, "list family names");

  uint64_t en_even = 0, en_odd = 0;
  int en_arity = 0;
  unsigned en_prime = 0;
  std::string en_out;
  CLI::App* c_enum = app.add_subcommand("enumerate", "all valid algebras of a given shape");
  c_enum->add_option("--dim-even", en_even, "even dimension")->required();
  c_enum->add_option("--dim-odd", en_odd, "odd dimension")->required();
  c_enum->add_option("--arity", en_arity, "bracket arity")->required();
  c_enum->add_option("--prime", en_prime, "field characteristic")->required();
  c_enum->add_option("--out", en_out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  nsla_budget budget;
  nsla_budget_default(&budget);
  if (budget_cap != 0) {
    budget.max_subspaces = budget_cap;
    budget.max_tuples = budget_cap;
    budget.max_assignments = budget_cap;
  }
  if (seed_set) budget.seed = seed;
  const int machine = report_mode == "machine" ? 1 : 0;

  if (*c_validate) {
    AlgebraHandle h;
    if (int rc = load(val_file, h)) return rc;
    OutStr rep;
    int ok = 0;
    if (int rc = nsla_validate(h.a, machine, &rep.p, &ok)) return fail_api(rc);
    std::fputs(rep.p, stdout);
    return ok ? 0 : 1;
  }

  if (*c_analyze) {
    AlgebraHandle h;
    if (int rc = load(ana_file, h)) return rc;
    OutStr rep;
    if (int rc = nsla_analyze(h.a, &budget, machine, &rep.p)) return fail_api(rc);
    std::fputs(rep.p, stdout);
    OutStr vrep;
    int ok = 0;
    if (int rc = nsla_validate(h.a, 1, &vrep.p, &ok)) return fail_api(rc);
    return ok ? 0 : 1;
  }

  if (*c_lattice) {
    AlgebraHandle h;
    if (int rc = load(lat_file, h)) return rc;
    OutStr vrep;
    int ok = 0;
    if (int rc = nsla_validate(h.a, machine, &vrep.p, &ok)) return fail_api(rc);
    if (!ok) {
      std::fputs(vrep.p, stdout);
      return 1;
    }
    OutStr rep;
    if (int rc = nsla_lattice(h.a, &budget, machine, &rep.p)) return fail_api(rc);
    std::fputs(rep.p, stdout);
    return 0;
  }

  if (*c_conf) {
    if (conf_file.empty() == corpus_dir.empty()) {
      std::fprintf(stderr, "error: give exactly one of FILE or --corpus DIR\n");
      return 2;
    }
    OutStr rep;
    int all_ok = 0;
    if (!conf_file.empty()) {
      AlgebraHandle h;
      if (int rc = load(conf_file, h)) return rc;
      if (int rc = nsla_conformance(h.a, &budget, machine, &rep.p, &all_ok)) return fail_api(rc);
    } else {
      if (int rc = nsla_conformance_corpus(corpus_dir.c_str(), &budget, machine, &rep.p, &all_ok))
        return fail_api(rc);
    }
    std::fputs(rep.p, stdout);
    return all_ok ? 0 : 1;
  }

  if (*c_catalog) {
    if (cat_list) {
      OutStr names;
      if (int rc = nsla_catalog_names(&names.p)) return fail_api(rc);
      std::fputs(names.p, stdout);
      return 0;
    }
    if (cat_name.empty()) {
      std::fprintf(stderr, "error: a family name is required (or --list)\n");
      return 2;
    }
    AlgebraHandle h;
    if (int rc = nsla_catalog_build(cat_name.c_str(), cat_params.data(), cat_params.size(),
                                    cat_field.c_str(), &h.a))
      return fail_api(rc);
    if (cat_out.empty()) {
      OutStr text;
      if (int rc = nsla_algebra_serialize(h.a, &text.p)) return fail_api(rc);
      std::fputs(text.p, stdout);
    } else {
      if (int rc = nsla_algebra_save(h.a, cat_out.c_str())) return fail_api(rc);
    }
    return 0;
  }

  if (*c_enum) {
    std::error_code ec;
    std::filesystem::create_directories(en_out, ec);
    if (ec) {
      std::fprintf(stderr, "error: cannot create %s\n", en_out.c_str());
      return 2;
    }
    EnumSink sink{en_out, "", 0};
    uint64_t constants = 0, assignments = 0, valid = 0;
    if (int rc = nsla_enumerate(en_even, en_odd, en_arity, en_prime, &budget, enum_writer, &sink,
                                &constants, &assignments, &valid))
      return fail_api(rc);
    if (!sink.error.empty()) {
      std::fprintf(stderr, "error: %s\n", sink.error.c_str());
      return 2;
    }
    if (machine)
      std::printf(
          "{\n  \"format\": \"nsla-enumeration-v1\",\n  \"constants\": %llu,\n"
          "  \"assignments\": %llu,\n  \"valid\": %llu\n}\n",
          static_cast<unsigned long long>(constants), static_cast<unsigned long long>(assignments),
          static_cast<unsigned long long>(valid));
    else
      std::printf("free constants: %llu\nassignments tried: %llu\nvalid algebras: %llu\n",
                  static_cast<unsigned long long>(constants),
                  static_cast<unsigned long long>(assignments),
                  static_cast<unsigned long long>(valid));
    return 0;
  }

  return 2;
}
