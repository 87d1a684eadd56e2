#include "hlm_app.hpp"

int main(int argc, char** argv) {
  return hlm::app::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
