// Copyright 2026 The Dueling Algorithms Authors
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


#ifndef DUELING_ERRORS_H_
#define DUELING_ERRORS_H_

#include <stdexcept>
#include <string>

namespace dueling {

// Base class for every error the library raises.
class DuelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vector or matrix shapes disagree.
class DimensionError : public DuelError {
 public:
  using DuelError::DuelError;
};

// An input violates a documented invariant (not a distribution, not doubly
// stochastic, infeasible point, ...).
class DomainError : public DuelError {
 public:
  using DuelError::DuelError;
};

// An instance exceeds a configured desk-scale cap.
class SizeError : public DuelError {
 public:
  using DuelError::DuelError;
};

// LP or knapsack has an empty feasible region.
class InfeasibleError : public DuelError {
 public:
  using DuelError::DuelError;
};

class UnboundedError : public DuelError {
 public:
  using DuelError::DuelError;
};

// A best-response oracle returned a point outside its polytope.
class ContractViolation : public DuelError {
 public:
  using DuelError::DuelError;
};

}  // namespace dueling

#endif  // DUELING_ERRORS_H_
