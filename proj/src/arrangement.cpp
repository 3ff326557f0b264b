// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rescert/arrangement.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "rescert/error.hpp"

namespace rescert {

std::optional<RationalVector> normalize_projective(RationalVector v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
  if (it == v.end()) return std::nullopt;
  Rational inv = 1 / *it;
  for (auto& x : v) x *= inv;
  return v;
}

Hyperplane::Hyperplane(RationalVector coeffs) {
  auto normalized = normalize_projective(std::move(coeffs));
  if (!normalized) throw InputError("hyperplane form is identically zero");
  coeffs_ = std::move(*normalized);
}

Arrangement::Arrangement(std::size_t ambient_dim, std::vector<Hyperplane> hyperplanes,
                         std::vector<std::string> labels)
    : ambient_dim_(ambient_dim),
      hyperplanes_(std::move(hyperplanes)),
      labels_(std::move(labels)) {
  if (hyperplanes_.size() > kMaxHyperplanes) {
    throw InputError("at most " + std::to_string(kMaxHyperplanes) +
                     " hyperplanes are supported");
  }
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
    if (hyperplanes_[i].ambient_size() != ambient_dim_ + 1) {
      throw InputError("hyperplane " + std::to_string(i + 1) + " has " +
                       std::to_string(hyperplanes_[i].ambient_size()) +
                       " coefficients, expected " + std::to_string(ambient_dim_ + 1));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (hyperplanes_[i] == hyperplanes_[j]) {
        throw InputError("hyperplanes " + std::to_string(j + 1) + " and " +
                         std::to_string(i + 1) + " coincide");
      }
    }
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
      labels_.push_back("H" + std::to_string(i + 1));
    }
  }
  if (labels_.size() != hyperplanes_.size()) {
    throw InputError("label count does not match hyperplane count");
  }
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InputError("empty hyperplane label");
    if (!seen.insert(l).second) throw InputError("duplicate label \"" + l + "\"");
  }
}

std::size_t Arrangement::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("unknown hyperplane label \"" + label + "\"");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::optional<std::size_t> Arrangement::find(const Hyperplane& h) const {
  auto it = std::find(hyperplanes_.begin(), hyperplanes_.end(), h);
  if (it == hyperplanes_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - hyperplanes_.begin());
}

RatMatrix Arrangement::forms(IndexSet members) const {
  RatMatrix m(0, ambient_dim_ + 1);
  for (auto i : members.members()) m.append_row(hyperplane(i).coeffs());
  return m;
}

std::size_t Arrangement::rank(IndexSet members) const {
  if (members.empty()) return 0;
  return rat_rank(forms(members));
}

}  // namespace rescert
