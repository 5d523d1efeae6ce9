#ifndef FSX_GRID_IO_H_
#define FSX_GRID_IO_H_

#include <ostream>

#include "fsx/membership.h"

namespace fsx {

// "p1,p2,member" rows (one coordinate column per dimension), first
// coordinate slowest.
void write_csv(const MembershipGrid& grid, std::ostream& out);

// Binary P5, N x N, one pixel per point of B(N): column = p1 - 1,
// row = N - p2 (so p2 grows upward). 255 = member, 0 = non-member; with
// the overlay, non-members in the exceptional set are 128. k must be 2.
void write_pgm(const MembershipGrid& grid, std::ostream& out,
               bool exceptional_overlay = false);

}  // namespace fsx

#endif  // FSX_GRID_IO_H_
