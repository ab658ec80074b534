/*
   Copyright 2026 The omegacub Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef OMEGACUB_ERRORS_HPP
#define OMEGACUB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace omegacub {

/* Malformed or incompatible input: modulus/dimension mismatch, bad files. */
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/* An operation was called outside its documented precondition. */
class PreconditionError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/* (D, Span(S)) is not a correct pair: X_{D,S} is not square and nonsingular. */
class IncorrectPairError : public std::domain_error {
   public:
    IncorrectPairError(std::size_t nodes, std::size_t basis_size, std::size_t rank)
        : std::domain_error(describe(nodes, basis_size, rank)),
          nodes_(nodes),
          basis_size_(basis_size),
          rank_(rank) {}

    std::size_t nodes() const noexcept { return nodes_; }
    std::size_t basis_size() const noexcept { return basis_size_; }
    std::size_t rank() const noexcept { return rank_; }
    std::size_t rank_defect() const noexcept { return nodes_ - rank_; }

   private:
    static std::string describe(std::size_t n, std::size_t s, std::size_t r) {
        std::string msg = "incorrect pair: " + std::to_string(n) + " nodes, " + std::to_string(s) +
                          " basis monomials, evaluation matrix rank " + std::to_string(r);
        if (r < n) msg += " (rank defect " + std::to_string(n - r) + ")";
        return msg;
    }

    std::size_t nodes_, basis_size_, rank_;
};

/* An internal consistency check failed (e.g. exact re-substitution of weights). */
class InvariantError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace omegacub

#endif
