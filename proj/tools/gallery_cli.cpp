#include <iostream>

int main() {
  std::cout << "gallery cli placeholder\n";
  return 0;
}
