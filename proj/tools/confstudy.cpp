#include <iostream>

#include "confstudy/cli.hpp"

int main(int argc, char** argv) { return confstudy::run_cli(argc, argv, std::cout, std::cerr); }
