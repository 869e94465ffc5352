#include "emwrc/separation.hpp"

namespace emwrc {

SeparationResult separate(const ReceivedMatrix& received, int destination,
                          gf2::Symbol own_packet) {
  const auto n = static_cast<std::size_t>(received.n_users);
  gf2::LinearSystem sys;
  sys.n_vars = n;
  sys.rows.reserve(received.rows.size() + 1);
  sys.rows.push_back(gf2::BinaryRow::unit(
      n, static_cast<std::size_t>(destination), own_packet));
  for (const auto& row : received.rows)
    if (!row.erased()) sys.rows.push_back(row);

  SeparationResult result;
  result.destination = destination;
  result.values = gf2::solve_unique(sys, {});
  return result;
}

bool feasibility_check(const TransmissionMatrix& A) {
  return A.slot_count() >= A.n_users - 1;
}

}  // namespace emwrc
