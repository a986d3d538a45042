// CLI entry point; subcommand dispatch lives in src/io.cpp helpers.
#include <cstdio>

int main() {
  std::puts("minpart: placeholder");
  return 0;
}
