#pragma once

#include <string>
#include <vector>

#include "veer/braid.hpp"

namespace veer {

// X[c], O[c]: row of the marking in column c, rows counted from the bottom.
struct GridDiagram {
    int n = 0;
    std::vector<int> X;
    std::vector<int> O;

    bool operator==(const GridDiagram&) const = default;
};

enum class GridLayout {
    // One row per letter, plus one row per strand to close up.
    Standard,
    // Runs of letters moved by one strand share a row; strands may land on their
    // closing column directly.
    Compact,
};

void validate(const GridDiagram& g);

BraidWord grid_to_braid(const GridDiagram& g);
// Literal model words (see model_braid) get the helix layout in either mode.
GridDiagram braid_to_grid(const BraidWord& w, GridLayout layout = GridLayout::Standard);

// Closed-form toroidal grid whose braid reading is exactly model_braid(k, n), n >= 3, k >= 1.
GridDiagram helix_grid(int k, int n);
bool is_model_word(const BraidWord& w, int* k = nullptr);

int grid_components(const GridDiagram& g);
int grid_writhe(const GridDiagram& g);
int wrapped_columns(const GridDiagram& g);

// Cyclic translation of the torus: row r becomes row r + dr, column c becomes c + dc.
GridDiagram translate(const GridDiagram& g, int dc, int dr);

std::string to_json(const GridDiagram& g);
GridDiagram from_json(const std::string& text);
std::string render_ascii(const GridDiagram& g);

}  // namespace veer
