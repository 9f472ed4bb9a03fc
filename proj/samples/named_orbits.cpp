// Lyapunov sums of a few square-tiled surfaces, read as "name|origami" lines
// from stdin (or the built-in list when stdin is a terminal or empty).

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <flatlyap/flatlyap.hpp>
#include <flatlyap/io.hpp>

int main(int argc, char** argv) {
  using namespace flatlyap;
  std::vector<std::string> lines;
  for (int i = 1; i < argc; ++i) lines.push_back(argv[i]);
  if (lines.empty()) {
    lines = {"fig1|r=(1234)(5); u=(15); d=5",
             "wollmilchsau|r=(1234)(5678); u=(1836)(2745); d=8",
             "411|r=(12)(3)(4)(5)(6 7)(8)(9 10); u=(132456879)(10); d=10"};
  }
  for (const auto& line : lines) {
    auto bar = line.find('|');
    std::string name = line.substr(0, bar), text = line.substr(bar + 1);
    auto t0 = std::chrono::steady_clock::now();
    Origami o = parse_origami(text);
    auto sum = lyapunov_sum(o);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << name << " " << to_string(sum.stratum) << " N=" << sum.orbit_size << " cusps=" << *sum.cusp_count
              << " L=" << pretty(sum.L) << " (" << secs << " s)\n";
  }
}
