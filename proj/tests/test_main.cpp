#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "fockmel/bigreal.hpp"

int main(int argc, char** argv) {
  fockmel::BigReal::set_default_precision(256);
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}
