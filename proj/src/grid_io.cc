#include "fsx/grid_io.h"

#include <vector>

#include "fsx/errors.h"
#include "fsx/lattice.h"

namespace fsx {

void write_csv(const MembershipGrid& grid, std::ostream& out) {
  for (std::size_t i = 0; i < grid.k; ++i) out << 'p' << i + 1 << ',';
  out << "member\n";
  std::vector<std::uint64_t> coords(grid.k, 1);
  for (std::uint8_t m : grid.member) {
    for (std::uint64_t c : coords) out << c << ',';
    out << int(m) << '\n';
    for (std::size_t i = grid.k; i-- > 0;) {
      if (++coords[i] <= grid.n) break;
      coords[i] = 1;
    }
  }
}

void write_pgm(const MembershipGrid& grid, std::ostream& out, bool exceptional_overlay) {
  if (grid.k != 2) throw ContractViolation("PGM output needs a 2-dimensional grid");
  const std::uint64_t n = grid.n;
  out << "P5\n" << n << ' ' << n << "\n255\n";
  std::vector<char> row(n);
  for (std::uint64_t p2 = n; p2 >= 1; --p2) {
    for (std::uint64_t p1 = 1; p1 <= n; ++p1) {
      const std::uint64_t coords[] = {p1, p2};
      unsigned char pixel = 0;
      if (grid.at(coords)) {
        pixel = 255;
      } else if (exceptional_overlay && in_exceptional_set(BigInt(p1), BigInt(p2))) {
        pixel = 128;
      }
      row[p1 - 1] = static_cast<char>(pixel);
    }
    out.write(row.data(), static_cast<std::streamsize>(n));
  }
}

}  // namespace fsx
