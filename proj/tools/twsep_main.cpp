#include "twsep/cli.hpp"

int main(int argc, char** argv) { return twsep::dispatch(argc, argv); }
