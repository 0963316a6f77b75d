#pragma once

#include <stdexcept>
#include <string>

namespace chiralmap {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// perm_core
struct OutOfRange : Error { using Error::Error; };
struct RepeatedPoint : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// group_analysis
struct NotTransitive : Error { using Error::Error; };
struct DegreeTooLarge : Error { using Error::Error; };

// constructions
struct BadParams : Error { using Error::Error; };
struct NotInTable : Error { using Error::Error; };
struct PlanUnsupported : Error { using Error::Error; };
struct NotHyperbolic : Error { using Error::Error; };

// chirality
struct SearchTooLarge : Error { using Error::Error; };
struct GroupTooLarge : Error { using Error::Error; };
struct CrossOracleDisagreement : Error { using Error::Error; };
struct Cancelled : Error { using Error::Error; };

// map_model
struct DivisibilityViolation : Error { using Error::Error; };

}  // namespace chiralmap
