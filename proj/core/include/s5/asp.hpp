// Answer-set programming text for the relational encoding of an S5NF: ground
// facts describing the formula plus one of the rule programs. Nothing here
// runs a grounder; the output is meant for an external one.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "s5/encoder.hpp"
#include "s5/s5nf.hpp"

namespace s5 {

enum class AspVariant : std::uint8_t {
  full,
  reach,
  reach_conflicts,
  reach_boxes,
  reach_diamonds,
  reach_all,
};

std::string to_string(AspVariant v);
std::optional<AspVariant> asp_variant_from_string(std::string_view name);

/// Program matching a CNF configuration. Enrichments are only defined on
/// top of reach; he has no program.
std::optional<AspVariant> asp_variant_for(EncodingKind kind, const Enrichments& e);

/// Rule numbers (0..29) making up the variant's program, ascending.
std::vector<int> asp_rule_numbers(AspVariant v);
/// Text of rule n, possibly spanning several lines, ending in '.'.
std::string_view asp_rule(int n);

/// Constant naming an atom: the name itself when it is a plain lowercase
/// constant that cannot be mistaken for a box, diamond or clause identifier,
/// otherwise a quoted string.
std::string asp_constant(std::string_view atom_name);

/// One fact per line. Blocks in order: atoms (sorted by name), boxes,
/// diamonds, clauses (each by id), then the variant's enrichment facts.
/// Throws std::invalid_argument for a trivially false normal form.
std::string emit_facts(const S5NF& f, AspVariant v);

/// Each rule is preceded by a "% r<n>" comment line.
std::string emit_program(AspVariant v);

}  // namespace s5
