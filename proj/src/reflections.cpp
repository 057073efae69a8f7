#include "kgwell/solver.hpp"

namespace kgwell {

std::vector<ReflectionEvent> detect_reflections(const EvolutionRecord& rec, double widths) {
  const auto& d = rec.diagnostics;
  auto near_wall = [&](const DiagnosticSample& s) {
    return s.wall_position - s.centroid < widths * s.width;
  };

  struct Run {
    std::size_t begin;
    std::size_t end;  // one past the last sample
  };
  std::vector<Run> runs;
  for (std::size_t i = 0; i < d.size();) {
    if (!near_wall(d[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < d.size() && near_wall(d[j])) ++j;
    runs.push_back({i, j});
    i = j;
  }

  // Energies are read in the middle of the free-flight plateaus on either side.
  std::vector<ReflectionEvent> events;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const Run& run = runs[r];
    if (run.begin == 0 || run.end == d.size()) continue;
    const std::size_t prev_end = r > 0 ? runs[r - 1].end : 0;
    const std::size_t next_begin = r + 1 < runs.size() ? runs[r + 1].begin : d.size();
    const std::size_t before = (prev_end + run.begin - 1) / 2;
    const std::size_t after = (run.end + next_begin - 1) / 2;
    events.push_back({d[run.begin].time, d[run.end - 1].time, d[before].energy, d[after].energy});
  }
  return events;
}

}  // namespace kgwell
