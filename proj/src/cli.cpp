#include <ostream>

#include "CLI11.hpp"
#include "bdcoh/report.hpp"

namespace bdcoh {

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CommandRequest q;
  std::string format = "text";
  std::vector<std::string> compare;

  CLI::App app{"Belavin-Drinfeld r-matrices and their twisted cohomology", "bdcoh"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", q.seed, "Seed for sampling-based checks");

  auto* triples = app.add_subcommand("triples", "List admissible triples for sl(n)");
  triples->add_option("--n", q.n, "Rank + 1")->required();
  triples->add_flag("--twistable", q.twistable_only, "Only triples with s(G1)=G2 and s tau = tau^-1 s");

  auto* rmatrix = app.add_subcommand("rmatrix", "Build the r-matrix of a triple");
  rmatrix->add_option("--triple", q.triple, "Triple, e.g. n=3;g1=1;g2=2;tau=1>2")->required();
  rmatrix->add_flag("--verify", q.verify, "Check r + r21 = Omega and CYB(r) = 0");

  auto* cohomology = app.add_subcommand("cohomology", "Twisted cohomology over F(sqrt d)");
  cohomology->add_option("--triple", q.triple, "Triple spec")->required();
  cohomology->add_option("--field", q.field, "Base field")->check(CLI::IsMember({"Q", "R", "Laurent"}));
  cohomology->add_option("--d", q.d, "Nonsquare d (Laurent: hbar, the default)");
  cohomology->add_option("--classes", q.classes, "Classes to construct when infinitely many");

  auto* total = app.add_subcommand("total", "Twisted cohomology over all nonsquare d");
  total->add_option("--triple", q.triple, "Triple spec")->required();
  total->add_option("--field", q.field, "Base field")->check(CLI::IsMember({"Q", "R", "Laurent"}));
  total->add_option("--d-bound", q.d_bound, "Bound on |d| over Q");
  total->add_option("--classes", q.classes, "Classes to construct per d over Q");

  auto* brauer = app.add_subcommand("brauer", "Brauer class of the quaternion algebra (d,b)");
  brauer->add_option("--d", q.d, "d")->required();
  brauer->add_option("--b", q.b, "b")->required();
  brauer->add_option("--field", q.field, "Base field")->check(CLI::IsMember({"Q", "R", "Laurent"}));
  brauer->add_option("--compare", compare, "Second pair (m,k)")->expected(2);


  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) q.subcommand = sub->get_name();
  q.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  if (compare.size() == 2) q.compare = std::make_pair(compare[0], compare[1]);

  try {
    const Report rep = run(q);
    out << rep.render(q.format);
    return rep.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace bdcoh
