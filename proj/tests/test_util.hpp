#pragma once

#include <functional>
#include <vector>

#include "gprc/genperm.hpp"

// Calls f on every canonical generalized permutation over n symbols.
inline void for_each_perm(int n, const std::function<void(const gprc::GenPerm&)>& f) {
  std::vector<int> word(2 * n), used(n, 0);
  std::function<void(int, int)> fill = [&](int pos, int fresh) {
    if (pos == 2 * n) {
      for (int cut = 1; cut < 2 * n; ++cut) {
        gprc::GenPerm p{gprc::Word(word.begin(), word.begin() + cut), gprc::Word(word.begin() + cut, word.end())};
        f(p);
      }
      return;
    }
    for (int s = 0; s < fresh; ++s)
      if (used[s] < 2) {
        ++used[s];
        word[pos] = s;
        fill(pos + 1, fresh);
        --used[s];
      }
    if (fresh < n) {
      ++used[fresh];
      word[pos] = fresh;
      fill(pos + 1, fresh + 1);
      --used[fresh];
    }
  };
  fill(0, 0);
}
