#pragma once

#include <string>
#include <vector>

#include "stackbook/bounds.hpp"
#include "stackbook/io.hpp"

namespace stackbook::render {

// Stacked-book renderings use the figure layout: one column per page, one row
// per branch, with the center row (branch 1) marked.

std::string text(const StackedBook& g, const Labeling& labeling);
std::string dot(const StackedBook& g, const Labeling& labeling);
std::string tikz(const StackedBook& g, const Labeling& labeling);

std::string text(const GeneralGraph& g, const Labeling& labeling);
std::string dot(const GeneralGraph& g, const Labeling& labeling);

/// Dispatches on format "json", "text", "dot" or "tikz"; throws
/// std::invalid_argument for anything else (tikz needs a stacked book).
std::string labeling(const io::GraphSpec& g, const Labeling& labeling, const std::string& format);

std::string report_text(const io::GraphSpec& g, const Labeling& labeling,
                        const VerificationReport& report);

std::string bounds_text(const std::vector<bounds::BoundReport>& rows);

}  // namespace stackbook::render
