// kahlerobs: command-line front end.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kahlerobs.hpp"

namespace {

  using namespace kahlerobs;

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  Document read_document(std::string const& text) {
    Document doc = parse_document(text);
    if (doc.groups.empty() && doc.homs.empty()) {
      doc.groups.push_back(parse_group(text));
    }
    return doc;
  }

  GroupDecl const& pick_group(Document const& doc, std::string const& name) {
    if (!name.empty()) {
      return doc.group(name);
    }
    if (doc.groups.empty()) {
      throw InputError("file declares no group");
    }
    return doc.groups.back();
  }

  std::vector<std::string> split_list(std::string const& s) {
    std::vector<std::string> out;
    std::string              item;
    std::istringstream       in(s);
    while (std::getline(in, item, ',')) {
      if (!item.empty()) {
        out.push_back(item);
      }
    }
    return out;
  }

  struct Common {
    std::string   file;
    std::size_t   max_degree = 3;
    std::size_t   dim_budget = QuotientAlgebra::default_budget;
    std::string   format     = "json";
    std::uint64_t seed       = 0;
    bool          maximal    = false;

    AnalysisOptions options() const {
      return {max_degree, dim_budget, seed, maximal};
    }
    ReportFormat report_format() const {
      return format == "text" ? ReportFormat::text : ReportFormat::json;
    }
  };

  void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("file", c.file, "input file")->required();
    cmd->add_option("--max-degree", c.max_degree, "truncation degree")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--dim-budget", c.dim_budget,
                    "largest truncated algebra dimension");
    cmd->add_option("--format", c.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--seed", c.seed, "seed for randomized steps");
    cmd->add_flag("--maximal", c.maximal,
                  "assert that the surjection onto the surface group is "
                  "maximal");
  }

  Json section_json(std::optional<Section> const& s, long n) {
    Json j;
    j["n"]     = n;
    j["found"] = s.has_value();
    j["w"]     = s ? to_json(s->w) : Json(nullptr);
    return j;
  }

  int run_ext(Common const& c, std::string const& central, long scan_n) {
    std::string text = read_file(c.file);
    GroupDecl   g    = pick_group(read_document(text), "");
    if (!central.empty()) {
      g.central = split_list(central);
    }
    if (g.central.empty()) {
      throw InputError("no central generators given");
    }
    CentralExtension e   = recognize_extension(g.presentation, g.central,
                                             c.dim_budget);
    ExtensionClass   cls = class_and_torsion(e);
    mpz_class        bound = section_scan_bound(e);
    long             upto  = scan_n > 0 ? scan_n
                             : bound.fits_slong_p() ? std::min(bound.get_si(), 64L)
                                                    : 64L;
    Json out;
    out["input"]["file"] = c.file;
    out["input"]["hash"] = fnv1a_hex(text);
    out["input"]["seed"] = c.seed;
    out["central"]       = g.central;
    out["base"]          = to_text(e.base);
    out["base_exponent_matrix"] = to_json(e.base_exponent_matrix());
    out["lifts"]                = to_json(e.lifts);
    out["kernel_hypothesis"]    = e.kernel_hypothesis;
    out["class"]                = to_string(cls.verdict);
    out["order"]                = to_json(cls.order);
    out["certificate"] = cls.certificate ? to_json(*cls.certificate) : Json(nullptr);
    out["caveats"]     = cls.caveats;
    out["scan_bound"]  = to_json(bound);
    Json sections      = Json::array();
    for (long n = 1; n <= upto; ++n) {
      sections.push_back(section_json(section_search(e, n, c.dim_budget), n));
    }
    out["sections"] = std::move(sections);
    if (auto genus = surface_genus(e.base); genus && *genus >= 2) {
      auto s = surface_extension_test(*projection_to_surface(e), c.maximal,
                                      c.dim_budget);
      out["surface"]["genus"]      = s.genus;
      out["surface"]["verdict"]    = to_string(s.verdict);
      out["surface"]["maximality"] = s.maximality;
      out["surface"]["reason"]     = s.reason;
    }
    if (c.report_format() == ReportFormat::json) {
      std::cout << out.dump(2) << "\n";
    } else {
      for (auto const& [k, v] : out.items()) {
        std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                  << "\n";
      }
    }
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Obstructions to Kahler groups and homomorphisms"};
  app.require_subcommand(1);

  Common analyze_opts, hom_opts, ext_opts;
  std::string group_name, hom_name, central;
  long        scan_n = 0;

  auto* analyze = app.add_subcommand("analyze", "run the group battery");
  add_common(analyze, analyze_opts);
  analyze->add_option("--group", group_name, "group to analyze (default: last)");

  auto* hom = app.add_subcommand("hom", "run the homomorphism battery");
  add_common(hom, hom_opts);
  hom->add_option("--name", hom_name, "homomorphism (default: last)");

  auto* ext = app.add_subcommand("ext", "extension class and section search");
  add_common(ext, ext_opts);
  ext->add_option("--central", central, "central generators, comma separated");
  ext->add_option("--scan-n", scan_n, "largest n for the section scan");

  auto* surface = app.add_subcommand("surface", "surface group utilities");
  surface->require_subcommand(1);
  std::size_t genus = 0;
  std::string orders, word;
  auto* gamma = surface->add_subcommand("gamma", "print the genus-g surface group");
  gamma->add_option("g", genus)->required();
  auto* orbifold = surface->add_subcommand("orbifold", "print an orbifold group");
  orbifold->add_option("g", genus)->required();
  orbifold->add_option("orders", orders, "m1,m2,...")->required();
  auto* wordtest = surface->add_subcommand("wordtest", "decide a word in Gamma_g");
  wordtest->add_option("g", genus)->required();
  wordtest->add_option("word", word)->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (analyze->parsed()) {
      std::string text = read_file(analyze_opts.file);
      Document         doc  = read_document(text);
      GroupDecl const& g    = pick_group(doc, group_name);
      std::cout << emit_report(
          kahlerobs::analyze(g, analyze_opts.file, text, analyze_opts.options()),
          analyze_opts.report_format());
    } else if (hom->parsed()) {
      std::string text = read_file(hom_opts.file);
      Document    doc  = read_document(text);
      if (doc.homs.empty()) {
        throw InputError("file declares no homomorphism");
      }
      GroupHom const& h = hom_name.empty() ? doc.homs.back() : doc.hom(hom_name);
      std::cout << emit_report(
          analyze_hom(h, hom_opts.file, text, hom_opts.options()),
          hom_opts.report_format());
    } else if (ext->parsed()) {
      return run_ext(ext_opts, central, scan_n);
    } else if (gamma->parsed()) {
      std::cout << to_text(surface_group(genus));
    } else if (orbifold->parsed()) {
      std::vector<long> ms;
      for (auto const& m : split_list(orders)) {
        try {
          ms.push_back(std::stol(m));
        } catch (std::exception const&) {
          throw InputError("bad orbifold order '" + m + "'");
        }
      }
      OrbifoldSurfaceGroup o = orbifold_group(genus, ms);
      OrbifoldH1Report     r = orbifold_kernel_h1_check(o);
      std::cout << to_text(o.presentation) << "# H1 = " << r.h1.to_string()
                << "\n# kernel of H1 -> H1(Gamma" << genus
                << ") = " << r.kernel.to_string() << "\n";
    } else if (wordtest->parsed()) {
      Presentation p = surface_group(genus);
      Word         w = parse_word(word, p.generators());
      DehnSolver   d(p);
      Word         r = d.reduce(w);
      std::cout << (r.empty() ? "trivial" : "nontrivial") << "\n"
                << "reduced: " << to_string(r, p.generators()) << "\n";
    }
  } catch (kahlerobs::Error const& e) {
    std::cerr << "kahlerobs: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
