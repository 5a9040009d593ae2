#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "pw/parallel.hpp"

int main(int argc, char** argv) {
  pwcli::Globals g;
  for (int i = 0; i < argc; ++i) g.command_line += (i ? " " : "") + std::string(argv[i]);

  CLI::App app{"pw: permutation- and unitary-invariant entanglement witnesses"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--cache-dir", g.cache_dir, "projector cache directory");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--threads", g.threads, "worker threads (0 = all cores)");
  app.add_option("--format", g.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", g.out, "write the report here instead of stdout");

  int status = 0;
  pwcli::add_commands(app, g, status);
  app.parse_complete_callback([&] { pw::set_thread_limit(g.threads); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const pwcli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
