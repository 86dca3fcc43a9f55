#include <iostream>

#include "cobschur/cli.hpp"

int main(int argc, char** argv) {
	return cobschur::run_cli(argc, argv, std::cout, std::cerr);
}
