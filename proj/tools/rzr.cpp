#include "rzr/cli.hpp"

int main(int argc, char** argv) { return rzr::cli::main_entry(argc, argv); }
