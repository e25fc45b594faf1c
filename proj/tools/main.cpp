#include <iostream>

#include "commands.hpp"
#include "fwcs/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Fox-Wright functions, bicomplex extension and coherent states"};
  app.require_subcommand(1);
  int exit_code = cli::kExitOk;
  cli::register_fw(app, exit_code);
  cli::register_bcfw(app, exit_code);
  cli::register_cs(app, exit_code);
  cli::register_nu(app, exit_code);
  cli::register_measure(app, exit_code);
  cli::register_selftest(app, exit_code);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitBadInput;
  } catch (const fwcs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.category()) {
      case fwcs::Error::Category::BadInput: return cli::kExitBadInput;
      case fwcs::Error::Category::Domain: return cli::kExitDomain;
      default: return cli::kExitNumeric;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitNumeric;
  }
  return exit_code;
}
