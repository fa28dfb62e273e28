#include <iostream>

int main() {
  std::cout << "signedlab (work in progress)\n";
  return 0;
}
