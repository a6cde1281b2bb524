// Copyright 2026 The stabspec developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stabspec/phase_space.hpp"

#include <map>
#include <set>

#include "doctest.h"
#include "stabspec/errors.hpp"

using namespace stabspec;

namespace {

SymplecticVector sv(int d, std::vector<int> z, std::vector<int> x) {
  const int n = static_cast<int>(z.size());
  return SymplecticVector(d, n, std::move(z), std::move(x));
}

}  // namespace

TEST_CASE("symplectic form on anticommuting qubit pair") {
  CHECK(symplectic_form(sv(2, {1}, {0}), sv(2, {0}, {1})) == 1);
}

TEST_CASE("symplectic form vanishes on the diagonal") {
  for (int d : {2, 3, 5})
    for (const auto& u : all_vectors(d, 1)) CHECK(symplectic_form(u, u) == 0);
}

TEST_CASE("qutrit symplectic form value") {
  // (1*1 - 1*2) mod 3 = 2
  CHECK(symplectic_form(sv(3, {1}, {1}), sv(3, {2}, {1})) == 2);
}

TEST_CASE("symplectic form rejects mismatched spaces") {
  CHECK_THROWS_AS(symplectic_form(sv(2, {1}, {0}), sv(3, {1}, {0})), std::invalid_argument);
}

TEST_CASE("bilinearity and antisymmetry, exhaustive for small spaces") {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}}) {
    const auto pts = all_vectors(d, n);
    for (const auto& u : pts)
      for (const auto& v : pts) {
        CHECK(symplectic_form(u, v) == (d - symplectic_form(v, u)) % d);
        for (const auto& w : pts)
          CHECK(symplectic_form(u + v, w) ==
                (symplectic_form(u, w) + symplectic_form(v, w)) % d);
      }
  }
}

TEST_CASE("index round trip and ordering") {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {5, 1}}) {
    const auto pts = all_vectors(d, n);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(pts[i].index() == static_cast<std::int64_t>(i));
      CHECK(SymplecticVector::from_index(d, n, static_cast<std::int64_t>(i)) == pts[i]);
    }
  }
}

TEST_CASE("scalar arithmetic stays reduced") {
  const auto u = sv(3, {2}, {1});
  CHECK((u + u) == sv(3, {1}, {2}));
  CHECK((-u) == sv(3, {1}, {2}));
  CHECK(scale(0, u).is_zero());
}

// Independent oracle: count subspaces by the set of their elements, with no
// canonicalization involved.
namespace {

std::set<std::set<std::int64_t>> subspace_span_sets(int d, int n, int dim) {
  const auto pts = all_vectors(d, n);
  std::set<std::set<std::int64_t>> spans;
  std::vector<SymplecticVector> tuple;
  auto grow = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(tuple.size()) == dim) {
      // Close under addition/scaling; reject non-isotropic or wrong size.
      std::set<std::int64_t> span{SymplecticVector::zero(d, n).index()};
      std::vector<SymplecticVector> elems{SymplecticVector::zero(d, n)};
      for (const auto& b : tuple) {
        std::vector<SymplecticVector> next;
        for (int c = 0; c < d; ++c)
          for (const auto& e : elems) next.push_back(e + scale(c, b));
        elems = next;
      }
      for (const auto& e : elems) span.insert(e.index());
      std::int64_t expect = 1;
      for (int i = 0; i < dim; ++i) expect *= d;
      if (static_cast<std::int64_t>(span.size()) != expect) return;  // dependent tuple
      for (const auto& a : elems)
        for (const auto& b : elems)
          if (symplectic_form(a, b) != 0) return;
      spans.insert(span);
      return;
    }
    for (std::size_t i = start; i < pts.size(); ++i) {
      if (pts[i].is_zero()) continue;
      tuple.push_back(pts[i]);
      self(self, i + 1);
      tuple.pop_back();
    }
  };
  grow(grow, 0);
  return spans;
}

}  // namespace

TEST_CASE("isotropic enumeration counts") {
  CHECK(enumerate_isotropic(2, 1, 1).size() == 3);
  CHECK(enumerate_isotropic(2, 2, 2).size() == 15);
  CHECK(enumerate_isotropic(3, 1, 1).size() == 4);
  CHECK(enumerate_isotropic(2, 2, 1).size() == 15);
  CHECK(enumerate_isotropic(2, 1, 0).size() == 1);
}

TEST_CASE("isotropic enumeration agrees with the span-set oracle") {
  for (auto [d, n, dim] : std::vector<std::tuple<int, int, int>>{
           {2, 1, 1}, {2, 2, 1}, {2, 2, 2}, {3, 1, 1}, {3, 2, 1}}) {
    const auto oracle = subspace_span_sets(d, n, dim);
    const auto enumerated = enumerate_isotropic(d, n, dim);
    CHECK(enumerated.size() == oracle.size());
    for (const auto& s : enumerated) {
      std::set<std::int64_t> span;
      for (const auto& e : s.elements()) span.insert(e.index());
      CHECK(oracle.count(span) == 1);
    }
  }
}

TEST_CASE("Lagrangian count matches prod (d^k + 1)") {
  for (auto [d, n] : std::vector<std::pair<int, int>>{
           {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
    CAPTURE(d);
    CAPTURE(n);
    CHECK(static_cast<std::int64_t>(enumerate_isotropic(d, n, n).size()) ==
          expected_lagrangian_count(d, n));
  }
}

TEST_CASE("canonical basis is unique per subspace") {
  for (const auto& s : enumerate_isotropic(2, 2, 2)) {
    // Rebuild from a different generating set: all nonzero elements.
    std::vector<SymplecticVector> gens;
    for (const auto& e : s.elements())
      if (!e.is_zero()) gens.push_back(e);
    const auto rebuilt = make_isotropic_subspace(2, 2, gens);
    CHECK(rebuilt.basis == s.basis);
  }
}

TEST_CASE("contains() agrees with element list") {
  for (const auto& s : enumerate_isotropic(3, 2, 1)) {
    std::set<std::int64_t> span;
    for (const auto& e : s.elements()) span.insert(e.index());
    for (const auto& v : all_vectors(3, 2))
      CHECK(s.contains(v) == (span.count(v.index()) == 1));
  }
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(enumerate_isotropic(2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_isotropic(2, 8, 1), guard_error);
  const std::vector<SymplecticVector> bad = {sv(2, {1, 0}, {0, 0}), sv(2, {0, 0}, {1, 0})};
  CHECK_THROWS_AS(make_isotropic_subspace(2, 2, bad), contract_error);
}
