#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "core/monad.hpp"
#include "core/oracle.hpp"

namespace testutil {

using namespace catlaw;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string data_path(const std::string& name) {
  return std::string(TEST_DATA_DIR) + "/" + name;
}

inline CatPtr z2_category() { return monoid_category({{0, 1}, {1, 0}}); }

// {1, a} with aa = a.
inline CatPtr absorb2_category() { return monoid_category({{0, 1}, {1, 1}}); }

// e identity, a and b left-absorbing: ab = a, ba = b.  The smallest
// noncommutative monoid; a and b are not central, which is what the
// non-natural-family tests need.
inline CatPtr left_zero3_category() {
  return monoid_category({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}});
}

// The monad (T = Id, eta = m1, mu = m1) on the two-element group.
inline Monad sigma_monad() {
  CatPtr c = z2_category();
  MonadMonoidal m;
  m.base = c;
  m.T = identity_functor(c);
  m.eta = identity_nattrans(m.T);
  m.eta.components = {1};
  m.mu.src = compose_functors(m.T, m.T);
  m.mu.dst = m.T;
  m.mu.components = {1};
  return make_monad(m);
}

inline Monad identity_monad(const CatPtr& c) {
  MonadMonoidal m;
  m.base = c;
  m.T = identity_functor(c);
  m.eta = identity_nattrans(m.T);
  m.mu.src = compose_functors(m.T, m.T);
  m.mu.dst = m.T;
  m.mu.components = m.eta.components;
  return make_monad(m);
}

// Constant-to-top closure monad on chain_category(n).
inline Monad top_monad(int n) {
  CatPtr c = chain_category(n);
  std::vector<int> cl(n, n - 1);
  return make_monad(monad_from_closure(c, cl));
}

}  // namespace testutil
