#include "proprep/io.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <set>
#include <sstream>
#include <vector>

namespace proprep {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

/// Non-blank, non-comment lines split on spaces and tabs.
std::vector<Line> records(std::string_view text, std::size_t& last_line)
{
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++number;

        Line rec{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
                ++i;
            auto start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t')
                ++i;
            if (i > start)
                rec.tokens.push_back(line.substr(start, i - start));
        }
        if (rec.tokens.empty() || rec.tokens.front().front() == '#')
            continue;
        out.push_back(std::move(rec));
    }
    last_line = std::max<std::size_t>(number, 1);
    return out;
}

std::size_t number(const Line& line, std::string_view token, const char* what)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw ParseError(line.number, std::string(what) + " '" + std::string(token) + "' is too large");
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line.number, "malformed " + std::string(what) + " '" + std::string(token) + "'");
    return value;
}

void expect_fields(const Line& line, std::size_t count, const char* form)
{
    if (line.tokens.size() != count)
        throw ParseError(line.number, std::string("expected `") + form + "`");
}

/// Candidate indices from tokens[first..], range- and duplicate-checked.
CandidateSet candidate_list(const Line& line, std::size_t first, std::size_t m)
{
    CandidateSet out(m);
    for (std::size_t t = first; t < line.tokens.size(); ++t) {
        auto c = number(line, line.tokens[t], "candidate index");
        if (c >= m)
            throw ParseError(line.number, "candidate " + std::to_string(c) + " out of range 0.." + std::to_string(m - 1));
        if (out.test(c))
            throw ParseError(line.number, "duplicate candidate " + std::to_string(c));
        out.set(c);
    }
    return out;
}

void append_indices(std::string& out, std::string_view key, const auto& set)
{
    out += key;
    set.for_each([&](std::size_t i) {
        out += ' ';
        out += std::to_string(i);
    });
    out += '\n';
}

} // namespace

ProfileDocument parse_profile(std::string_view text)
{
    std::size_t last_line = 1;
    auto lines = records(text, last_line);
    if (lines.empty())
        throw ParseError(last_line, "missing header `p <n> <m> <k>`");

    const auto& header = lines.front();
    if (header.tokens.front() != "p")
        throw ParseError(header.number, "expected header `p <n> <m> <k>`");
    expect_fields(header, 4, "p <n> <m> <k>");
    const auto n = number(header, header.tokens[1], "voter count");
    const auto m = number(header, header.tokens[2], "candidate count");
    const auto k = number(header, header.tokens[3], "committee size");
    if (n == 0 || m == 0)
        throw ParseError(header.number, "voter and candidate counts must be positive");
    if (n > max_file_voters || m > max_file_candidates || n * ((m + 63) / 64) > max_file_ballot_words)
        throw ParseError(header.number, "profile dimensions exceed supported limits");
    if (k < 1 || k > m)
        throw ParseError(header.number, "committee size " + std::to_string(k) + " outside 1.." + std::to_string(m));

    std::vector<CandidateSet> ballots;
    std::optional<Committee> committee;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto& line = lines[r];
        const auto kind = line.tokens.front();
        if (kind == "v") {
            if (committee)
                throw ParseError(line.number, "voter line after committee line");
            if (ballots.size() == n)
                throw ParseError(line.number, "more than " + std::to_string(n) + " voter lines");
            if (line.tokens.size() < 2)
                throw ParseError(line.number, "expected `v <voter> <candidates...>`");
            auto voter = number(line, line.tokens[1], "voter index");
            if (voter != ballots.size())
                throw ParseError(line.number, "expected voter " + std::to_string(ballots.size()) + ", found " + std::to_string(voter));
            ballots.push_back(candidate_list(line, 2, m));
        } else if (kind == "w") {
            if (committee)
                throw ParseError(line.number, "second committee line");
            if (ballots.size() != n)
                throw ParseError(line.number, "committee line before all " + std::to_string(n) + " voter lines");
            auto members = candidate_list(line, 1, m);
            if (members.count() != k)
                throw ParseError(line.number,
                    "committee has " + std::to_string(members.count()) + " members, header says k=" + std::to_string(k));
            committee = Committee{std::move(members)};
        } else {
            throw ParseError(line.number, "unknown record '" + std::string(kind) + "'");
        }
    }
    if (ballots.size() != n)
        throw ParseError(last_line,
            "header declares " + std::to_string(n) + " voters, found " + std::to_string(ballots.size()));

    return ProfileDocument{Instance(Profile(n, m, std::move(ballots)), k), std::move(committee)};
}

std::string serialize_profile(const Instance& instance, const std::optional<Committee>& committee)
{
    std::string out = "p " + std::to_string(instance.n()) + ' ' + std::to_string(instance.m()) + ' ' + std::to_string(instance.k()) + '\n';
    const auto& ballots = instance.profile().ballots();
    for (std::size_t i = 0; i < ballots.size(); ++i)
        append_indices(out, "v " + std::to_string(i), ballots[i]);
    if (committee)
        append_indices(out, "w", committee->members);
    return out;
}

BipartiteGraph parse_graph(std::string_view text)
{
    std::size_t last_line = 1;
    auto lines = records(text, last_line);
    if (lines.empty())
        throw ParseError(last_line, "missing header `g <left> <right>`");

    const auto& header = lines.front();
    if (header.tokens.front() != "g")
        throw ParseError(header.number, "expected header `g <left> <right>`");
    expect_fields(header, 3, "g <left> <right>");
    const auto left = number(header, header.tokens[1], "left size");
    const auto right = number(header, header.tokens[2], "right size");
    if (left > max_file_candidates || right > max_file_candidates)
        throw ParseError(header.number, "graph dimensions exceed supported limits");

    std::set<BipartiteGraph::Edge> edges;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto& line = lines[r];
        if (line.tokens.front() != "e")
            throw ParseError(line.number, "unknown record '" + std::string(line.tokens.front()) + "'");
        expect_fields(line, 3, "e <left> <right>");
        auto l = number(line, line.tokens[1], "left vertex");
        auto rv = number(line, line.tokens[2], "right vertex");
        if (l >= left || rv >= right)
            throw ParseError(line.number, "edge (" + std::to_string(l) + ", " + std::to_string(rv) + ") out of range");
        if (!edges.emplace(l, rv).second)
            throw ParseError(line.number, "duplicate edge (" + std::to_string(l) + ", " + std::to_string(rv) + ")");
    }
    return BipartiteGraph(left, right, {edges.begin(), edges.end()});
}

std::string serialize_graph(const BipartiteGraph& graph)
{
    std::string out = "g " + std::to_string(graph.left_size()) + ' ' + std::to_string(graph.right_size()) + '\n';
    for (auto [l, r] : graph.edges())
        out += "e " + std::to_string(l) + ' ' + std::to_string(r) + '\n';
    return out;
}

std::string render_report(const Verdict& verdict, Axiom axiom)
{
    std::string out;
    out += verdict.satisfied ? "verdict satisfied\n" : "verdict violated\n";
    out += "axiom " + std::string(to_string(axiom)) + '\n';
    out += "strategy " + std::string(to_string(verdict.strategy_used)) + '\n';
    out += "elapsed_ms " + std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(verdict.elapsed).count()) + '\n';
    if (!verdict.satisfied && verdict.witness) {
        const auto& w = *verdict.witness;
        out += "ell " + std::to_string(w.ell) + '\n';
        append_indices(out, "voters", w.voters);
        append_indices(out, "common", w.common);
        append_indices(out, "represented", w.represented);
    }
    return out;
}

std::string normalize_report(std::string_view report)
{
    std::string out;
    std::size_t pos = 0;
    while (pos < report.size()) {
        auto end = report.find('\n', pos);
        auto stop = end == std::string_view::npos ? report.size() : end;
        auto line = report.substr(pos, stop - pos);
        if (line.starts_with("elapsed_ms "))
            out += "elapsed_ms *";
        else
            out += line;
        if (end != std::string_view::npos)
            out += '\n';
        pos = stop + 1;
    }
    return out;
}

} // namespace proprep
