// Writes the transcribed reference tables to <dir>/tableN.txt.
#include <fstream>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: write_expected DIR\n";
    return 2;
  }
  for (const auto& t : duval::cli::expected_all()) {
    std::filesystem::path p = std::filesystem::path(argv[1]) / (t.name + ".txt");
    std::ofstream(p) << duval::cli::table_file_text(t);
    std::cout << p.string() << "\n";
  }
}
