#pragma once

#include <string>
#include <vector>

#include "cqsres/components.hpp"
#include "cqsres/quiver.hpp"

namespace cqsres {

enum class Color { Auto, Always, Never };

// Resolve Color::Auto against the CQSRES_COLOR environment variable and
// whether stdout is a terminal.
bool use_color(Color mode);

std::string format_components_text(const Fraction& f,
                                   const std::vector<ComponentReport>& reports,
                                   bool color = false);
std::string format_component_text(const ComponentReport& report, std::size_t index,
                                  bool color = false);

std::string format_quiver_text(const Quiver& q);
std::string format_dolgachev_text(const DolgachevReport& report, bool color = false);

// JSON documents; keys are documented in the README.
std::string components_to_json(const Fraction& f,
                               const std::vector<ComponentReport>& reports);
std::string quiver_to_json(const Quiver& q);
std::string dolgachev_to_json(const DolgachevReport& report);

// Graphviz rendering of the arrow quiver. Multiplicities up to 6 are drawn
// as parallel edges, larger ones as a single labelled edge.
std::string quiver_to_dot(const Quiver& q);

}  // namespace cqsres
