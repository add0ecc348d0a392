#pragma once

#include "proprep/model.hpp"
#include "proprep/reduction.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace proprep {

/// Largest header counts the parsers accept; larger files are rejected
/// with a ParseError rather than allocated.
inline constexpr std::size_t max_file_voters = std::size_t{1} << 24;
inline constexpr std::size_t max_file_candidates = std::size_t{1} << 20;
inline constexpr std::size_t max_file_ballot_words = std::size_t{1} << 27;

struct ProfileDocument {
    Instance instance;
    std::optional<Committee> committee;
};

/// Profile file:
///
///     # comment
///     p <n> <m> <k>
///     v <i> <c> <c> ...    (n lines, voters in order, possibly no candidates)
///     w <c> ... <c>        (optional, exactly k candidates)
///
/// Tokens are separated by spaces or tabs; blank and `#` lines are ignored.
/// Throws ParseError carrying the 1-based line number.
ProfileDocument parse_profile(std::string_view text);

/// Canonical text: no comments, ascending indices, single spaces, LF endings.
std::string serialize_profile(const Instance& instance, const std::optional<Committee>& committee = std::nullopt);

/// Graph file: `g <left> <right>` then one `e <l> <r>` line per edge.
BipartiteGraph parse_graph(std::string_view text);

/// Canonical text with edges sorted by (left, right).
std::string serialize_graph(const BipartiteGraph& graph);

/// Report file: `verdict`, `axiom`, `strategy`, `elapsed_ms`, and for a
/// violation `ell`, `voters`, `common`, `represented`, one field per line.
std::string render_report(const Verdict& verdict, Axiom axiom);

/// Replaces the elapsed_ms value with `*` so reports can be compared byte for byte.
std::string normalize_report(std::string_view report);

} // namespace proprep
