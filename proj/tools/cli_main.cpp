#include <exception>
#include <iostream>

#include "cli_common.hpp"
#include "regimefactor/errors.hpp"

#ifndef REGIMEFACTOR_VERSION
#define REGIMEFACTOR_VERSION "0.0.0"
#endif

namespace {

int fail(const char* type, const std::string& message, int code) {
  std::cerr << rfcli::json{{"error", {{"type", type}, {"message", message}}}}.dump()
            << "\n";
  return code;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"regime-switching factor models for core inflation"};
  app.set_version_flag("--version", REGIMEFACTOR_VERSION);
  app.require_subcommand(1);

  rfcli::register_ingest(app);
  rfcli::register_factors(app);
  rfcli::register_breaks(app);
  rfcli::register_msfit(app);
  rfcli::register_indicator(app);
  rfcli::register_evaluate(app);
  rfcli::register_simulate(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("validation", e.what(), 1);
  } catch (const regimefactor::ValidationError& e) {
    return fail("validation", e.what(), 1);
  } catch (const regimefactor::NumericError& e) {
    return fail("numeric", e.what(), 2);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), 2);
  }
  return 0;
}
