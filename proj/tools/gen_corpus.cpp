// Regenerates the bundled data files from the corpus builders.
#include <iostream>

#include "brauer/corpus.hpp"

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "data";
  try {
    brauer::corpus::write_data_files(dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cout << "wrote data files to " << dir << "\n";
  return 0;
}
