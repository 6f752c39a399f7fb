#include <cstdio>

#include "finsler/version.hpp"

int main() {
  std::printf("finsler-lab %s\n", finsler::version());
  return 0;
}
