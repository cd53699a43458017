// Copyright 2026 The ramseylab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ramseylab/coloring.hpp"
#include "ramseylab/construction.hpp"
#include "ramseylab/forcing.hpp"
#include "ramseylab/functional.hpp"
#include "ramseylab/halting.hpp"
#include "ramseylab/tree.hpp"

namespace ramseylab {

/// All loaders throw Error(kParseError) on malformed input.

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// {"horizon": N, "entries": [[x,y,c],...], "limits": [[x,i,z],...]}.
/// Missing entries are 0; duplicates and out-of-range entries are rejected.
Json to_json(const Coloring& f);
Coloring coloring_from_json(const Json& j);

/// {"n": n, "sigma": [[x,y,c],...], "l": [[x,i,z],...]}.
Json to_json(const Condition& p);
Condition condition_from_json(const Json& j, LimitMode mode = LimitMode::kTotal);

/// {"axioms": [{"n": input, "pos": [...], "neg": [...], "out": 0|1}, ...], "monotone": bool}
/// or the bare axiom list. Axioms may also be written [n, [pos], [neg], out].
Json to_json(const OracleFunctional& fn);
OracleFunctional functional_from_json(const Json& j);

/// {"kind": "identity"|"constant"|"flip"|"button"|"axioms", ...}.
ColoringTransformer transformer_from_json(const Json& j, Nat horizon);

/// {"domain": D, "stages": [[...], ...]}.
Json to_json(const CEApproximation& a);
CEApproximation approximation_from_json(const Json& j);

Json to_json(const NatSet& s);
NatSet natset_from_json(const Json& j);

std::vector<ButtonTriple> buttons_from_json(const Json& j);
Json to_json(const std::vector<ButtonTriple>& buttons);

Json to_json(const Label& label);
Json to_json(const Witness& w);
Json to_json(const LabeledTree& tree);

Schedule schedule_from_json(const Json& j);

}  // namespace ramseylab
