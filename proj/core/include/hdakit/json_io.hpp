#pragma once

#include "json.hpp"

#include "hdakit/hda.hpp"
#include "hdakit/ipomset.hpp"
#include "hdakit/myhill_nerode.hpp"
#include "hdakit/steps.hpp"

namespace hdakit {

/// {"size", "labels", "source", "target", "prec", "evord", "text"}; the two
/// orders are n×n 0/1 matrices, "text" is the shorthand or block form.
nlohmann::json to_json(const Ipomset& p);
nlohmann::json to_json(const Loset& u);
/// {"initial": loset, "steps": [{"kind", "loset", "active"}]}, 0-based positions.
nlohmann::json to_json(const StepSequence& seq);
nlohmann::json to_json(const std::vector<Ipomset>& set);
/// {"name", "cells": [{"id", "loset", "d0", "d1"}], "start", "accept"}.
nlohmann::json to_json(const Hda& x);
/// {"start", "end", "steps": [{"up", "positions", "labels", "cell"}], "text"}.
nlohmann::json path_to_json(const Hda& x, const Path& p);
/// Class table of a Myhill-Nerode automaton, one object per cell.
nlohmann::json class_table(const MnAutomaton& m);

}  // namespace hdakit
