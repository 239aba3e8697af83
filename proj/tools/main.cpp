#include "commands.hpp"

int main(int argc, char** argv) { return pommiez::cli::run(argc, argv); }
