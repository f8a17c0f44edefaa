#include <iostream>

#include "poly/acceptance.hpp"

int main() { return poly::print_acceptance_report(std::cout, false); }
