#include "gprc/spin.hpp"

#include <algorithm>

#include "gprc/rauzy.hpp"
#include "gprc/surface.hpp"

namespace gprc {

IntersectionForm omega_matrix(const GenPerm& p) {
  if (!is_true_permutation(p)) throw Error(ErrorKind::NotTruePermutation, format(p));
  if (!has_dense_labels(p)) throw Error(ErrorKind::UnknownSymbol, "symbols must be 0..n-1: " + format(p));
  const std::size_t n = p.top.size();
  std::vector<std::size_t> top_at(n), bot_at(n);
  for (std::size_t k = 0; k < n; ++k) {
    top_at[p.top[k]] = k;
    bot_at[p.bottom[k]] = k;
  }
  IntersectionForm f;
  f.omega.assign(n, std::vector<std::uint8_t>(n, 0));
  f.phi.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (top_at[i] < top_at[j]) != (bot_at[i] < bot_at[j])) f.omega[i][j] = 1;
  return f;
}

SpinTrace spin_reduce(const IntersectionForm& form, unsigned pivot_seed) {
  const std::size_t n = form.phi.size();
  auto omega = form.omega;
  auto phi = form.phi;
  // each current vector as a combination of the original cycles
  std::vector<std::vector<std::uint8_t>> comb(n, std::vector<std::uint8_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) comb[i][i] = 1;
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  auto phi_from_scratch = [&](const std::vector<std::uint8_t>& s) {
    unsigned v = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (!s[k]) continue;
      v += form.phi[k];
      for (std::size_t l = k + 1; l < n; ++l)
        if (s[l]) v += form.omega[k][l];
    }
    return static_cast<std::uint8_t>(v & 1);
  };

  SpinTrace tr;
  unsigned rng = pivot_seed * 2654435761u + 12345u;
  while (true) {
    std::erase_if(active, [&](std::size_t i) {
      return std::none_of(active.begin(), active.end(), [&](std::size_t j) { return omega[i][j] != 0; });
    });
    if (active.empty()) break;
    const std::size_t a = active[0];
    std::vector<std::size_t> partners;
    for (std::size_t j : active)
      if (omega[a][j]) partners.push_back(j);
    std::size_t b = partners[0];
    if (pivot_seed) {
      rng = rng * 1103515245u + 12345u;
      b = partners[(rng >> 8) % partners.size()];
    }
    tr.parity ^= phi[a] & phi[b];
    ++tr.pairs;

    std::vector<std::size_t> rest;
    for (std::size_t i : active)
      if (i != a && i != b) rest.push_back(i);
    auto old = omega;
    for (std::size_t i : rest) {
      phi[i] ^= (old[i][b] & phi[a]) ^ (old[i][a] & phi[b]) ^ (old[i][a] & old[i][b]);
      for (std::size_t k = 0; k < n; ++k)
        comb[i][k] ^= (old[i][b] & comb[a][k]) ^ (old[i][a] & comb[b][k]);
    }
    for (std::size_t k : rest)
      for (std::size_t l : rest)
        omega[k][l] = old[k][l] ^ (old[k][a] & old[l][b]) ^ (old[k][b] & old[l][a]);
    for (std::size_t i : rest)
      if (phi_from_scratch(comb[i]) != phi[i]) tr.phi_consistent = false;
    active = std::move(rest);
  }
  return tr;
}

int spin_parity(const GenPerm& raw) {
  const GenPerm p = canonicalize(raw);
  if (!is_true_permutation(p)) throw Error(ErrorKind::NotTruePermutation, format(p));
  if (!is_irreducible(p)) throw Error(ErrorKind::Reducible, format(p));
  auto prof = stratum_of(p);
  if (prof.marked_points) throw Error(ErrorKind::DegenerateInput, format(p));
  if (std::any_of(prof.degrees.begin(), prof.degrees.end(), [](int d) { return d % 2 != 0; }))
    throw Error(ErrorKind::OddDegrees, format(p));
  auto tr = spin_reduce(omega_matrix(p));
  if (tr.pairs != prof.genus)
    throw Error(ErrorKind::DegenerateInput, "symplectic basis size differs from the genus");
  return tr.parity;
}

}  // namespace gprc
