#include "cvnet/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cvnet {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream ss(s);
    while (std::getline(ss, part, sep)) parts.push_back(part);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

NodeId parse_id(const std::string& s) {
    std::size_t used = 0;
    const auto v = std::stoul(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad node id '" + s + "'");
    return static_cast<NodeId>(v);
}

}  // namespace

void write_presentations_csv(std::ostream& out, const std::vector<Presentation>& log) {
    out << "iteration,source_pattern,node_ids,noise_link\n";
    for (std::size_t i = 0; i < log.size(); ++i) {
        const auto& p = log[i];
        out << i << ',' << p.source_pattern << ',';
        for (std::size_t k = 0; k < p.nodes.size(); ++k) out << (k ? ";" : "") << p.nodes[k];
        out << ',';
        if (p.used_noise_link) out << p.used_noise_link->first << '-' << p.used_noise_link->second;
        out << '\n';
    }
}

std::vector<Presentation> read_presentations_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "iteration,source_pattern,node_ids,noise_link")
        throw std::runtime_error("presentation log: missing or unexpected header");
    std::vector<Presentation> log;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cols = split(line, ',');
        if (cols.size() != 4) throw std::runtime_error("presentation log: expected 4 columns in '" + line + "'");
        if (std::stoul(cols[0]) != log.size()) throw std::runtime_error("presentation log: iterations out of order");
        Presentation p;
        p.source_pattern = std::stoul(cols[1]);
        for (const auto& id : split(cols[2], ';')) p.nodes.push_back(parse_id(id));
        if (!cols[3].empty()) {
            const auto ends = split(cols[3], '-');
            if (ends.size() != 2) throw std::runtime_error("presentation log: bad noise link '" + cols[3] + "'");
            p.used_noise_link = NodePair(parse_id(ends[0]), parse_id(ends[1]));
        }
        log.push_back(std::move(p));
    }
    return log;
}

void write_grid_csv(std::ostream& out, const FrequencyGrid& grid) {
    const auto n = static_cast<NodeId>(grid.node_count());
    out << "node";
    for (NodeId j = 0; j < n; ++j) out << ',' << j;
    out << '\n';
    for (NodeId i = 0; i < n; ++i) {
        out << i;
        for (NodeId j = 0; j < n; ++j) out << ',' << grid.count(i, j);
        out << '\n';
    }
}

void write_events_csv(std::ostream& out, const std::vector<FiringEvent>& events) {
    out << "step,neuron\n";
    for (const auto& e : events) out << e.time << ',' << e.neuron << '\n';
}

}  // namespace cvnet
