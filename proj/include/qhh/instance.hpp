#pragma once

// The line-oriented `.qa` instance format:
//
//   field Q                      # or a prime, e.g. `field 7`
//   [vertices] f x y e
//   [arrows] b2: f -> x ; b3: x -> y ; b4: y -> e
//   [relations] 1 b4.b3 ; 1 b3.b2
//   [bound] 3                    # empty or `auto` searches for one
//   [new_arrows] a: e -> f
//
// Section bodies may continue on the following lines and may be empty, but
// every section must appear. Paths are arrow ids joined by '.', written
// target-to-source; a relation is a '+'-separated list of `coeff path` terms.

#include <optional>
#include <string>

#include "qhh/algebra.hpp"
#include "qhh/extension.hpp"

namespace qhh {

struct InstanceFile
{
    /// nullopt for the rationals.
    std::optional<long long> prime;
    BoundQuiverPresentation presentation;
    NewArrowSet new_arrows;

    friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

/// Throws ParseError carrying the line and column of the offending token.
InstanceFile parse_instance(const std::string& text);

InstanceFile read_instance(const std::string& path);

std::string serialize_instance(const InstanceFile& instance);

}  // namespace qhh
