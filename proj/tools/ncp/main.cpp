#include "app.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>

int main(int argc, char** argv) {
  using ncp::cli::Format;
  ncp::cli::RunConfig config;

  CLI::App app{"Neighborly cubical polytopes: construction, enumeration and checks"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand help for all subcommands");

  const std::map<std::string, Format> formats{
      {"json", Format::Json}, {"signvector", Format::SignVector}, {"signed", Format::Signed}, {"off", Format::Off}};
  std::size_t r = 0;
  bool no_oracle = false;

  auto add_nd = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "cube dimension")->required();
    sub->add_option("--d", config.d, "target dimension")->required();
  };
  auto add_output = [&](CLI::App* sub, std::vector<std::string> allowed) {
    std::map<std::string, Format> subset;
    std::string names;
    for (const auto& name : allowed) {
      subset.emplace(name, formats.at(name));
      names += (names.empty() ? "" : "|") + name;
    }
    sub->add_option("--format", config.format, "output format (default json)")
        ->transform(CLI::CheckedTransformer(subset, CLI::ignore_case).description(""))
        ->option_text(names);
    sub->add_option("-o,--output", config.output, "write to this file instead of stdout");
  };

  auto* construct = app.add_subcommand("construct", "deformed cube, certified epsilon and projection");
  add_nd(construct);
  construct->add_option("--epsilon", config.epsilon, "use this epsilon (p/q) instead of choosing one");
  add_output(construct, {"json", "signvector", "off"});

  auto* facets = app.add_subcommand("facets", "facets by the cubical evenness criterion");
  add_nd(facets);
  add_output(facets, {"json", "signed", "signvector"});

  auto* fvector = app.add_subcommand("fvector", "f-vector from the facet list");
  add_nd(fvector);
  add_output(fvector, {"json", "signvector"});

  auto* verify = app.add_subcommand("verify", "skeleton, cubicality, Dehn-Sommerville and oracle checks");
  add_nd(verify);
  auto* r_opt = verify->add_option("--r", r, "skeleton dimension (default floor(d/2)-1)");
  verify->add_option("--epsilon", config.epsilon, "use this epsilon (p/q)");
  verify->add_flag("--no-oracle", no_oracle, "skip the convex hull oracle");
  add_output(verify, {"json"});

  auto* classify = app.add_subcommand("classify", "the n = d+1 family P(k,l,m) and its upper bound");
  classify->add_option("--d", config.d, "dimension")->required();
  add_output(classify, {"json"});

  auto* surgery = app.add_subcommand("surgery", "local surgery on C_4^6");
  add_output(surgery, {"json"});

  auto* examples = app.add_subcommand("examples", "two 4-polytopes with the graph of the 5-cube");
  add_output(examples, {"json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ncp::cli::kUsage;
  }

  config.command = app.get_subcommands().front()->get_name();
  if (*r_opt) config.r = r;
  config.oracle = !no_oracle;
  return ncp::cli::run(config, std::cout, std::cerr);
}
