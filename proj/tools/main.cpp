#include <mkit/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mkit::cli::execute_command(args);
}
