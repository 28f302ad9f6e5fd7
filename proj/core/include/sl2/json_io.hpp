#pragma once

#include <string>
#include <vector>

#include "sl2/band.hpp"
#include "sl2/dynkin.hpp"
#include "sl2/numeric.hpp"
#include "sl2/quiver.hpp"

namespace sl2 {

// JSON wire formats. Big integers travel as decimal strings; readers accept
// plain JSON numbers as well. Malformed input raises DomainError("BadJson").

// {"vertices":["1",...],"arrows":[["u","v",mult],...]}
std::string quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const std::string& text);

// {"vertices":[...],"edges":[["u","v"],...]}
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// {"first_row":n,"col_offset":c,"sequences":[["1","2",...],...]}
std::string band_to_json(const Band& b);
Band band_from_json(const std::string& text);

// ["1","1","2","3",...]
std::string sequence_to_json(const IntSeq& seq);
IntSeq sequence_from_json(const std::string& text);

// {"origin":[x,y],"rows":[["...",...],...]}
std::string window_to_json(long long x0, long long y0,
                           const std::vector<IntSeq>& rows);
std::string window_to_tsv(const std::vector<IntSeq>& rows);
std::string window_to_ascii(const std::vector<IntSeq>& rows);

} // namespace sl2
