#include "cli.hpp"

int main(int argc, char** argv) {
  try {
    return graphfx::cli::run(argc, argv);
  } catch (const std::bad_alloc&) {
    std::cerr << "out of memory\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 1;
}
