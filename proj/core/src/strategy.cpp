#include "emwrc/strategy.hpp"

#include <numeric>

namespace emwrc {

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::Owr:
      return "owr";
    case Scheme::Mpwr:
      return "mpwr";
    case Scheme::Oppwr:
      return "oppwr";
  }
  return "?";
}

Scheme parse_scheme(const std::string& name) {
  if (name == "owr") return Scheme::Owr;
  if (name == "mpwr") return Scheme::Mpwr;
  if (name == "oppwr") return Scheme::Oppwr;
  throw ConfigError("unknown scheme: " + name);
}

int slots_per_round(Scheme s, int n_users) {
  return s == Scheme::Mpwr ? n_users - 1 : n_users;
}

bool Schedule::is_identity() const {
  for (std::size_t k = 0; k < permutation.size(); ++k)
    if (permutation[k] != static_cast<int>(k)) return false;
  return true;
}

TransmissionMatrix build_matrix(Scheme scheme, int n_users) {
  if (n_users < 2) throw TooFewUsers("transmission matrix needs >= 2 users");
  TransmissionMatrix A;
  A.scheme = scheme;
  A.n_users = n_users;
  const int L = slots_per_round(scheme, n_users);
  A.rows.reserve(static_cast<std::size_t>(L));
  const auto n = static_cast<std::size_t>(n_users);
  switch (scheme) {
    case Scheme::Owr:
      for (int l = 0; l < L; ++l) {
        BitVector row(n);
        row.set(static_cast<std::size_t>(l));
        A.rows.push_back(std::move(row));
      }
      break;
    case Scheme::Mpwr:
    case Scheme::Oppwr:
      for (int l = 0; l + 1 < n_users; ++l) {
        BitVector row(n);
        row.set(static_cast<std::size_t>(l));
        row.set(static_cast<std::size_t>(l + 1));
        A.rows.push_back(std::move(row));
      }
      if (scheme == Scheme::Oppwr) {
        BitVector row(n);
        row.set(n - 1);
        row.set(0);
        A.rows.push_back(std::move(row));
      }
      break;
  }
  return A;
}

Schedule next_schedule(StreamKey seed, std::uint64_t round_index, int n_users,
                       bool shuffled) {
  Schedule s;
  s.round_index = round_index;
  s.permutation.resize(static_cast<std::size_t>(n_users));
  std::iota(s.permutation.begin(), s.permutation.end(), 0);
  if (!shuffled) return s;
  const StreamKey k = stage_key(seed, Stage::Schedule).child(round_index);
  for (int i = n_users - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(k.uniform_below(
        static_cast<std::uint64_t>(i) + 1, static_cast<std::uint64_t>(i)));
    std::swap(s.permutation[static_cast<std::size_t>(i)], s.permutation[j]);
  }
  return s;
}

TransmissionMatrix apply_schedule(const TransmissionMatrix& matrix,
                                  const Schedule& sched) {
  if (matrix.scheme == Scheme::Owr) {
    if (!sched.is_identity())
      throw SchemeMismatch("OWR rows are user-symmetric; scheduling applies "
                           "to pairwise schemes only");
    return matrix;
  }
  if (sched.is_identity()) return matrix;
  TransmissionMatrix out;
  out.scheme = matrix.scheme;
  out.n_users = matrix.n_users;
  const auto n = static_cast<std::size_t>(matrix.n_users);
  const std::size_t L = matrix.rows.size();
  out.rows.reserve(L);
  for (std::size_t l = 0; l < L; ++l) {
    BitVector row(n);
    row.set(static_cast<std::size_t>(sched.permutation[l % n]));
    row.set(static_cast<std::size_t>(sched.permutation[(l + 1) % n]));
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace emwrc
