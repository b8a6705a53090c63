#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "decomp/complex.hpp"
#include "decomp/decomposition.hpp"
#include "decomp/matroid.hpp"
#include "decomp/poset.hpp"
#include "decomp/realization.hpp"

namespace decomp {

// All emitters use nlohmann's ordered_json and two-space indentation, so
// identical inputs always serialize to identical bytes.

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// {"elements": [names], "relations": [[a, b], ...]} with a <= b.
Poset poset_from_json_text(const std::string& text);
std::string poset_to_json_text(const Poset& p);
// Accepts inline JSON (leading '{') or a file path.
Poset poset_from_source(const std::string& source);

// {"triples": [[x, z, y], ...]} by element name.  The trivial
// decompositions are always included; listed triples must admit a witness.
DecompositionSet decomposition_set_from_json_text(const Poset& p, const std::string& text);
std::string decomposition_set_to_json_text(const DecompositionSet& g);

// Selector grammar: "min" | "max" | "file:PATH" | inline JSON |
// "product:POSET1;GSEL1;POSET2;GSEL2" (posets inline or paths; the product
// set is transported onto `p` through a searched order isomorphism).
DecompositionSet decomposition_set_from_selector(const Poset& p, const std::string& selector);

// {"faces": [{"members": [names], "generator": [names]}, ...],
//  "covers": [[i, j], ...]}
std::string face_poset_to_json_text(const FacePoset& fp, const Poset& ground);
FacePoset face_poset_from_json_text(const Poset& ground, const std::string& text);

// {"n": int, "vertices": [[0/1, ...], ...],
//  "cells": [{"face": [names], "vertex_ids": [ids]}, ...]}
std::string geometry_to_json_text(const PseudoComplex& pc, const Poset& ground);
// Vertex list plus a vertex-id table for every cell of affine dimension 2
// or 3; coordinates beyond the third are dropped for viewing.
std::string geometry_to_off_text(const PseudoComplex& pc, const Poset& ground);

// {"members": [names]}
std::vector<int> building_from_json_text(const Poset& p, const std::string& text);
// "all" | "atoms" | "file:PATH" | inline JSON
std::vector<int> building_from_selector(const Poset& p, const std::string& selector);

// {"type":"uniform","r":..,"n":..} | {"type":"graphic","vertices":..,
// "edges":[[u,v]...]} (0-based vertices) | {"type":"bases","n":..,
// "bases":[[elements 1..n]...]}
Matroid matroid_from_json_text(const std::string& text);
Matroid matroid_from_source(const std::string& source);

std::string fan_to_json_text(const BergmanFan& fan, const FlatLattice& l);

// {"n": int, "phi": {"name": [coordinates 1..n], ...}}
Realization realization_from_json_text(const Poset& p, const std::string& text);
std::string realization_to_json_text(const Realization& r, const Poset& p);
// "canonical" | "atoms" | "identity" | "file:PATH" | inline JSON
Realization realization_from_selector(const Poset& p, const std::string& selector);

// Verb-level entry points shared by the CLI and the python module.  Each
// takes textual inputs and returns the output document.
std::string run_complex(const std::string& poset_source, const std::string& gset_selector,
                        std::size_t max_chains = 1000000);
std::string run_realize(const std::string& poset_source, const std::string& gset_selector,
                        const std::string& phi_selector, const std::string& format,
                        std::size_t max_chains = 1000000);
std::string run_product(const std::string& poset1_source, const std::string& gset1_selector,
                        const std::string& poset2_source, const std::string& gset2_selector,
                        std::size_t max_chains = 1000000);
std::string run_coproduct(const std::string& poset1_source, const std::string& gset1_selector,
                          const std::string& poset2_source, const std::string& gset2_selector,
                          std::size_t max_chains = 1000000);
std::string run_nested(const std::string& poset_source, const std::string& building_selector,
                       std::size_t max_chains = 1000000);
std::string run_bergman(const std::string& matroid_source, std::size_t max_chains = 1000000);

} // namespace decomp
