// Generates a table of nontrivial zeta zero ordinates by scanning the
// critical line. Writes one ordinate per line, preceded by a comment header
// describing how the table was produced.
//
// Usage: zero_tablegen OUT_PATH [T_MAX] [COUNT]

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <string>

#include "ximon/zeros.hpp"

int main(int argc, char** argv) {
  if (argc < 2 || argc > 4) {
    std::fprintf(stderr, "usage: %s OUT_PATH [T_MAX] [COUNT]\n", argv[0]);
    return 2;
  }
  const std::string out_path = argv[1];
  const double t_max = argc > 2 ? std::atof(argv[2]) : 9878.5;
  const std::size_t count = argc > 3
      ? static_cast<std::size_t>(std::atoll(argv[3]))
      : static_cast<std::size_t>(10000);

  try {
    ximon::ZeroTable table = ximon::find_zeros_on_critical_line(t_max, count);
    std::ofstream out(out_path);
    if (!out) {
      std::fprintf(stderr, "error: cannot open %s for writing\n",
                   out_path.c_str());
      return 2;
    }
    out << "# Ordinates of the first " << table.zeros.size()
        << " nontrivial zeros of the Riemann zeta function.\n";
    out << "# " << table.source << "\n";
    char buf[64];
    for (const ximon::ZetaZero& z : table.zeros) {
      std::snprintf(buf, sizeof buf, "%.9f", z.gamma);
      out << buf << "\n";
    }
    std::fprintf(stderr, "wrote %zu ordinates to %s (last %.9f)\n",
                 table.zeros.size(), out_path.c_str(),
                 table.zeros.back().gamma);
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
