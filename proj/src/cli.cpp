#include "kirk/cli.hpp"

#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "kirk/report.hpp"

namespace kirk {

namespace {

struct Options {
  std::string format = "text";
  bool verbose = false;

  int n = 0;
  int excluded = 0;
  std::string word;

  std::string file;
  std::string file_b;
  std::optional<int> component;
  std::string sequence;
  bool all = false;

  std::string catalog_name;
  std::optional<int> catalog_n;
  std::optional<int> reversed;
};

bool structured(const Options& o) { return o.format == "structured"; }

int cmd_expand(const Options& o, std::ostream& out) {
  validate_ring(o.n, o.excluded);
  const Word w = parse_word(o.word, o.n, o.excluded).flatten(o.n, o.excluded);
  const Polynomial e = magnus_expand(w);
  if (structured(o)) {
    const Normalized norm = positive_normalize(w);
    Json j = {{"word", w.to_string()},
              {"n", o.n},
              {"component", o.excluded},
              {"expansion", e.to_string()},
              {"terms", to_json(e)},
              {"positive", is_positive(w)}};
    if (o.verbose) j["positive_form"] = {{"word", norm.word.to_string()}, {"inverted", norm.inverted}};
    out << j.dump(2) << "\n";
  } else {
    out << e.to_string() << "\n";
    if (o.verbose) {
      const Normalized norm = positive_normalize(w);
      out << "positive form: " << norm.word.to_string() << (norm.inverted ? " (inverted)" : "")
          << "\n";
    }
  }
  return kExitOk;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const Json j = read_json_file(o.file);
  const LinkMapPresentation p = presentation_from_json(j);
  ReportOptions ro;
  ro.component = o.component;
  if (!o.sequence.empty()) ro.sequence = parse_sequence(o.sequence);
  ro.all = o.all;
  ro.verbose = o.verbose;
  ro.source = o.file;
  const Json expected = j.contains("expected") ? j.at("expected") : Json();
  const Json r = build_report(p, ro, expected);
  if (structured(o))
    out << r.dump(2) << "\n";
  else
    out << render_report_text(r);
  return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const LinkMapPresentation a = presentation_from_json(read_json_file(o.file));
  const LinkMapPresentation b = presentation_from_json(read_json_file(o.file_b));
  const Comparison c = compare(a, b);
  if (structured(o))
    out << to_json(c).dump(2) << "\n";
  else
    out << render_comparison_text(c);
  return kExitOk;
}

int cmd_from_diagram(const Options& o, std::ostream& out, std::ostream& err) {
  const CrossSection cs = cross_section_from_json(read_json_file(o.file));
  if (o.verbose)
    for (const auto& [i, sings] : cs.singularities) {
      if (sings.empty()) continue;
      const ConjugatorWords cw = conjugator_words(cs.diagram, i);
      err << "component " << i << ": stable after " << cw.sweeps << " changing sweeps\n";
      for (const auto& [arc, w] : cw.words)
        err << "  " << arc << ": " << w.to_string() << "\n";
    }
  out << to_json(presentation_from_cross_section(cs)).dump(2) << "\n";
  return kExitOk;
}

int cmd_catalog_list(const Options& o, std::ostream& out) {
  if (structured(o)) {
    Json j = Json::array();
    for (const auto& c : catalog_names())
      j.push_back({{"name", c.name}, {"parameters", c.parameters}, {"description", c.description}});
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& c : catalog_names()) {
    out << c.name;
    if (!c.parameters.empty()) out << " " << c.parameters;
    out << "\n    " << c.description << "\n";
  }
  return kExitOk;
}

int cmd_catalog_emit(const Options& o, std::ostream& out) {
  const CatalogEntry e = build_catalog_entry(o.catalog_name, o.catalog_n, o.reversed);
  Json j = to_json(e.presentation);
  Json cat = {{"name", e.name}, {"authoritative_component", e.authoritative_component}};
  if (e.reversed) cat["reversed"] = *e.reversed;
  j["catalog"] = cat;
  j["expected"] = expectations_to_json(e.expected);
  out << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Link-homotopy invariants of link maps from reduced-group words", "kirk"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_flag("--verbose", o.verbose, "Show normalization and aggregation details");
  app.set_version_flag("--version", kEngineVersion);

  auto* expand = app.add_subcommand("expand", "Reduced Magnus expansion of a word");
  expand->add_option("-n", o.n, "Number of components")->required();
  expand->add_option("-i", o.excluded, "Component whose generator is omitted")->required();
  expand->add_option("word", o.word, "Word such as \"x2 x1 x2^-1\" or \"[x1,[x2,x3]]\"")
      ->required()
      ->allow_extra_args(false);

  auto* inv = app.add_subcommand("invariants", "Invariant report for a presentation file");
  inv->add_option("file", o.file, "Presentation JSON")->required();
  inv->add_option("-i,--component", o.component, "Only this component");
  inv->add_option("--sequence", o.sequence, "Only this sequence, e.g. 12 or 1,2");
  inv->add_flag("--all", o.all, "List every sequence, including zero rows");

  auto* cmp = app.add_subcommand("compare", "Compare the invariants of two presentations");
  cmp->add_option("a", o.file, "First presentation JSON")->required();
  cmp->add_option("b", o.file_b, "Second presentation JSON")->required();

  auto* fd = app.add_subcommand("from-diagram", "Presentation from cross-section data");
  fd->add_option("file", o.file, "Cross-section JSON")->required();

  auto* cat = app.add_subcommand("catalog", "Link maps with known invariants");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "List catalog entries");
  auto* emit = cat->add_subcommand("emit", "Emit a catalog entry as a presentation file");
  emit->add_option("name", o.catalog_name, "Entry name")->required();
  emit->add_option("--n", o.catalog_n, "Number of components");
  emit->add_option("--reversed", o.reversed, "Reversed component for stirling");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << kEngineVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (expand->parsed()) return cmd_expand(o, out);
    if (inv->parsed()) return cmd_invariants(o, out);
    if (cmp->parsed()) return cmd_compare(o, out);
    if (fd->parsed()) return cmd_from_diagram(o, out, err);
    if (list->parsed()) return cmd_catalog_list(o, out);
    if (emit->parsed()) return cmd_catalog_emit(o, out);
  } catch (const ArityMismatch& e) {
    err << "error: " << e.what() << "\n";
    return cmp->parsed() ? kExitArity : kExitInvalid;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const NonStabilizing& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const CoefficientOverflow& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  err << "error: no command\n";
  return kExitInvalid;
}

}  // namespace kirk
