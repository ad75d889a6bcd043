#include "freegp/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv)
{
	std::vector<std::string> args(argv + 1, argv + argc);
	const auto res = freegp::cli::run(args, std::cin);
	std::cout << res.out;
	std::cerr << res.err;
	return static_cast<int>(res.code);
}
