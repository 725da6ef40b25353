#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smashlab/gps_ring.hpp"
#include "smashlab/homology.hpp"
#include "smashlab/ideal_cuts.hpp"
#include "smashlab/smashing.hpp"
#include "smashlab/spectrum.hpp"

// Readers for the literal grammars of docs/dsl.md.  Syntax errors raise
// Error(ParseError) with a column; semantic problems (unknown prime, element
// outside the group) raise the corresponding domain error.
namespace smashlab {

GroupDescriptor parse_descriptor(std::string_view text);
GroupElement parse_group_element(const Group& g, std::string_view text);
Cut parse_cut(const GroupHandle& g, std::string_view text);
std::vector<PrimeSlot> parse_flags(std::string_view text);
IntervalChain parse_chain(const ValuationSpectrum& spec, std::string_view text);

Series parse_series(const Group& g, std::string_view text, std::uint32_t p = 0);
RingElement parse_ring_element(const GroupHandle& g, std::string_view text, std::uint32_t p = 0);
FieldElement parse_field_element(const GroupHandle& g, std::string_view text,
                                 std::uint32_t p = 0);

StdModule parse_module(const ValuationSpectrum& spec, std::string_view text);
FormalComplex parse_complex(const ValuationSpectrum& spec, std::string_view text);

// A row of ';'-separated ring elements.
std::vector<RingElement> parse_row(const GroupHandle& g, std::string_view text);

// "group: <descriptor>" followed by one ';'-separated row per line.
std::pair<GroupHandle, ValMatrix> parse_matrix_file(std::string_view text);

}  // namespace smashlab
