#pragma once

#include <iosfwd>
#include <vector>

#include "cvnet/freq_grid.hpp"
#include "cvnet/hebb_sync.hpp"
#include "cvnet/ontology.hpp"

namespace cvnet {

// Presentation log: iteration,source_pattern,node_ids,noise_link
// node ids joined by ';', noise link as "a-b" or empty.
void write_presentations_csv(std::ostream& out, const std::vector<Presentation>& log);
std::vector<Presentation> read_presentations_csv(std::istream& in);

/// Count matrix with node ids as header row and first column.
void write_grid_csv(std::ostream& out, const FrequencyGrid& grid);

// Event trace: step,neuron
void write_events_csv(std::ostream& out, const std::vector<FiringEvent>& events);

}  // namespace cvnet
